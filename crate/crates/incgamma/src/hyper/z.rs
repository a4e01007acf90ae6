use alloc::format;
use alloc::vec::Vec;

use super::{check_index, even_coeffs, gamma_int, rotated, HyperEvaluation, HyperIndices};
use crate::error::{Error, Result};
use crate::expansions::z_series_terms;
use crate::gamma::SheetPoint;
use crate::late::gamma_half_integers;
use crate::numerics::{zeta_real, Complex, PrecisionContext, Real};
use crate::terminant::terminant;

use core::f64::consts::{FRAC_PI_2, PI};

/// `N = M = round(2π|z|)`.
pub fn optimal_nm_z(abs_z: f64) -> usize {
    libm::round(2.0 * PI * abs_z) as usize
}

/// `±2πiz` on their continued sheets, `e^{±2πiz}` and `a_{2k}/z^k` for
/// `k < count`.
pub(super) struct Exponentials {
    pub w_plus: SheetPoint,
    pub w_minus: SheetPoint,
    pub e_plus: Complex,
    pub e_minus: Complex,
    pub coeffs_over_z: Vec<Complex>,
}

pub(super) fn exponentials(z: &SheetPoint, count: usize, ctx: &PrecisionContext) -> Exponentials {
    let zv = &z.value;
    let two_pi_iz = zv.scale(&ctx.pi().ldexp(1)).mul_i();
    let zinv = zv.recip();
    let mut coeffs_over_z = Vec::with_capacity(count);
    let mut zpow = ctx.cone();
    for c in even_coeffs(count, ctx) {
        coeffs_over_z.push(zpow.scale(&c));
        zpow = &zpow * &zinv;
    }
    Exponentials {
        w_plus: rotated(z, two_pi_iz.clone(), 1, ctx),
        w_minus: rotated(z, -&two_pi_iz, -1, ctx),
        e_plus: two_pi_iz.exp(ctx),
        e_minus: (-&two_pi_iz).exp(ctx),
        coeffs_over_z,
    }
}

/// `T̂_p(w)` for integer or half-integer `p`, split into
/// `e^{−2πimp} T̂_p(w₀)` on the principal sheet and the integer monodromy sum,
/// so that the sums of several orders cancel exactly.
fn lifted(p: &Real, half_integer: bool, w: &SheetPoint, ctx: &PrecisionContext) -> Result<(Complex, i64)> {
    let base = terminant(p, &SheetPoint::new(w.value.clone(), 0), ctx)?.value;
    let m = w.m;
    if !half_integer {
        return Ok((base, m));
    }
    let odd = m.rem_euclid(2) == 1;
    Ok((if odd { -base } else { base }, odd as i64))
}

/// Base sum and the two halves of the terminant layer: the parts multiplied
/// by `e^{2πiz}` and by `e^{−2πiz}`, prefactors included.
struct ZLayer {
    base_sum: Complex,
    plus: Complex,
    minus: Complex,
    ex: Exponentials,
}

fn z_layer(z: &SheetPoint, n: usize, m: usize, k: usize, l: usize, ctx: &PrecisionContext) -> Result<ZLayer> {
    check_index("K", k, n, "N")?;
    check_index("L", l, m, "M")?;
    let theta = z.arg_f64();
    if theta.abs() >= 3.0 * PI {
        return Err(Error::Sector(format!("|arg z| = {theta} must stay below 3π")));
    }
    let terms = z_series_terms(z, (2 * n).max(2 * m), ctx);
    let mut base_sum = ctx.czero();
    for j in 0..n {
        base_sum += &terms[2 * j];
    }
    for j in 0..m {
        base_sum += &terms[2 * j + 1];
    }
    let ex = exponentials(z, k.max(l), ctx);
    let half = ctx.frac(1, 2);
    let mut plus = ctx.czero();
    let mut minus = ctx.czero();
    for (j, c) in ex.coeffs_over_z.iter().enumerate() {
        let mut weight_plus = 0;
        let mut weight_minus = 0;
        if j < k {
            let p = ctx.int((n - j) as i64);
            let (tp, sp) = lifted(&p, false, &ex.w_plus, ctx)?;
            let (tm, sm) = lifted(&p, false, &ex.w_minus, ctx)?;
            plus += c * &tp;
            minus -= c * &tm;
            weight_plus += sp;
            weight_minus -= sm;
        }
        if j < l {
            let p = &ctx.int((m - j) as i64) + &half;
            let (tp, sp) = lifted(&p, true, &ex.w_plus, ctx)?;
            let (tm, sm) = lifted(&p, true, &ex.w_minus, ctx)?;
            plus -= c * &tp;
            minus -= c * &tm;
            weight_plus -= sp;
            weight_minus -= sm;
        }
        plus += c * weight_plus;
        minus += c * weight_minus;
    }
    Ok(ZLayer { plus: &ex.e_plus * &plus, minus: &ex.e_minus * &minus, base_sum, ex })
}

/// Re-expansion of the remainder `R_{N,M}(z)` of the even/odd split
///
/// `Γ(z,z) = √(π/2) z^{z−½} e^{−z} (Σ_{n<N} a_{2n} z^{−n} + Σ_{m<M} a_{2m+1} z^{−m−½} + R_{N,M})`
///
/// into four terminant sums with arguments `±2πiz`, for `|arg z| < 3π`.
///
/// `residual_bound` is the explicit bound when `2 ≤ K < N`, `2 ≤ L ≤ M` and
/// `|arg z| ≤ π/2`; elsewhere it is the order scale of the remainder with
/// `certified = false`.
pub fn hyper_z(z: &SheetPoint, n: usize, m: usize, k: usize, l: usize, ctx: &PrecisionContext) -> Result<HyperEvaluation> {
    let layer = z_layer(z, n, m, k, l, ctx)?;
    let theta = z.arg_f64();
    let abs_z = z.value.abs();
    let two_pi = ctx.pi().ldexp(1);
    let certified = theta.abs() <= FRAC_PI_2 && k >= 2 && k < n && l >= 2 && l <= m;
    let residual_bound = if certified {
        let half = ctx.frac(1, 2);
        let part = |idx: usize, p: Real, tail: &Real, tail_pow: &Real| -> Result<Real> {
            let kk = ctx.int(idx as i64);
            let zeta = zeta_real(&kk, ctx)?;
            let base = &zeta * &gamma_int(idx, ctx);
            let tp = (&layer.ex.e_plus * &terminant(&p, &layer.ex.w_plus, ctx)?.value).abs();
            let tm = (&layer.ex.e_minus * &terminant(&p, &layer.ex.w_minus, ctx)?.value).abs();
            let root_k = &(&kk.sqrt() * 2) + 1;
            let first = &(&(&root_k * &(&tp + &tm)) * &base) / &(&two_pi.powi(idx as i64 + 1) * &abs_z.powi(idx as i64));
            let second = &(&(&ctx.int(6 * idx as i64 + 2) * tail) * &base) / tail_pow;
            Ok(&first + &second)
        };
        let ln_2pi = two_pi.ln(ctx);
        let ln_z = abs_z.ln(ctx);
        let even_tail = gamma_int(n - k, ctx);
        let even_pow = &(&ln_2pi * &ctx.int(n as i64 + 2)).exp(ctx) * &abs_z.powi(n as i64);
        let odd_tail = gamma_half_integers(m - l, ctx)[m - l].clone();
        let odd_pow = &(&(&ln_2pi * &(&ctx.int(m as i64 + 2) + &half)) + &(&ln_z * &(&ctx.int(m as i64) + &half))).exp(ctx);
        let even = part(k, ctx.int((n - k) as i64), &even_tail, &even_pow)?;
        let odd = part(l, &ctx.int((m - l) as i64) + &half, &odd_tail, &odd_pow)?;
        &even + &odd
    } else {
        order_scale(z, k, l, ctx)
    };
    Ok(HyperEvaluation {
        base_sum: layer.base_sum,
        terminant_layer: &layer.plus + &layer.minus,
        residual_bound,
        certified,
        indices: HyperIndices { n, m: Some(m), k, l: Some(l) },
        sector: z.sector(),
    })
}

/// Order of `R_{N,M,K,L}` away from the certified sector.
fn order_scale(z: &SheetPoint, k: usize, l: usize, ctx: &PrecisionContext) -> Real {
    let theta = z.arg_f64();
    let zv = &z.value;
    let abs_z = zv.abs();
    let two_pi = ctx.pi().ldexp(1);
    let zk = abs_z.powi(k as i64);
    let zl = abs_z.powi(l as i64);
    let (fk, fl) = if theta.abs() <= FRAC_PI_2 || (k == l && theta.abs() <= 1.5 * PI) {
        let e = (-(&two_pi * &abs_z)).exp(ctx);
        (e.clone(), e)
    } else if theta.abs() <= 1.5 * PI || k == l {
        let s = match (theta > 0.0, theta.abs() <= 1.5 * PI) {
            (true, true) | (false, false) => -1,
            _ => 1,
        };
        let e = (&(&two_pi * &zv.im) * s).exp(ctx);
        (e.clone(), e)
    } else {
        let arg = zv.scale(&two_pi);
        let i_arg = arg.mul_i();
        let ep = i_arg.exp(ctx);
        let em = (-&i_arg).exp(ctx);
        let sin = (&ep - &em).abs().ldexp(-1);
        let cos = (&ep + &em).abs().ldexp(-1);
        (sin, cos)
    };
    &(&fk / &zk) + &(&fl / &zl)
}
