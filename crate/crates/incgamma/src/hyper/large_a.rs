use alloc::format;

use super::{check_index, even_coeffs, gamma_int, HyperEvaluation, HyperIndices};
use crate::error::{Error, Result};
use crate::expansions::large_a_terms;
use crate::gamma::SheetPoint;
use crate::late::gamma_half_integers;
use crate::numerics::{zeta_real, Complex, PrecisionContext, Real};
use crate::terminant::terminant;

use core::f64::consts::PI;

/// `round(|a|(λ − log λ − 1))`.
pub fn optimal_n_large_a(abs_a: f64, lambda: f64) -> usize {
    libm::round(abs_a * (lambda - libm::log(lambda) - 1.0)).max(0.0) as usize
}

/// Re-expansion of the remainder of the large-`a` series,
///
/// `R_N = e^{aκ} √(2π/a) Σ_{k<K} a_{2k} a^{−k} T̂_{N−k+½}(aκ) + R_{N,K}`,
/// `κ = λ − log λ − 1`, for `|arg a| < 2π`.
///
/// `residual_bound` is the explicit bound on `R_{N,K}` when `2 ≤ K ≤ N` and
/// `|arg a| ≤ π`; elsewhere it is the order scale `e^{−|a|κ}/|a|^{K+½}`
/// (or `e^{Re a·κ}/|a|^{K+½}` past the Stokes lines) with
/// `certified = false`.
pub fn hyper_large_a(a: &SheetPoint, lambda: &Real, n: usize, k: usize, ctx: &PrecisionContext) -> Result<HyperEvaluation> {
    if *lambda <= ctx.one() {
        return Err(Error::Domain(format!("λ must exceed 1, got {:.10}", lambda)));
    }
    check_index("K", k, n, "N")?;
    let theta = a.arg_f64();
    if theta.abs() >= 2.0 * PI {
        return Err(Error::Sector(format!("|arg a| = {theta} must stay below 2π")));
    }
    let av = &a.value;
    let base_sum = large_a_terms(av, lambda, n, ctx).iter().fold(ctx.czero(), |s, t| &s + t);

    let kappa = &(lambda - &lambda.ln(ctx)) - 1;
    let w = SheetPoint::new(av.scale(&kappa), a.m);
    let root = &Complex::from_real(ctx.pi().ldexp(1).sqrt()) / &a.sqrt(ctx);
    let pre = &av.scale(&kappa).exp(ctx) * &root;
    let coeffs = even_coeffs(k.max(1), ctx);
    let ainv = av.recip();
    let half = ctx.frac(1, 2);
    let mut layer = ctx.czero();
    let mut apow = ctx.cone();
    for (j, c) in coeffs.iter().take(k).enumerate() {
        let p = &ctx.int((n - j) as i64) + &half;
        let t = terminant(&p, &w, ctx)?.value;
        layer += &(&apow * &t).scale(c);
        apow = &apow * &ainv;
    }
    let terminant_layer = &pre * &layer;

    let abs_a = av.abs();
    let certified = k >= 2 && theta.abs() <= PI;
    let residual_bound = if certified {
        let kk = ctx.int(k as i64);
        let factor = &(&ctx.one() + &zeta_real(&kk, ctx)?) * &gamma_int(k, ctx);
        let two_pi = ctx.pi().ldexp(1);
        let p = &ctx.int((n - k) as i64) + &half;
        let tk = terminant(&p, &w, ctx)?.value;
        let first = &(&(&pre * &tk).abs() * &factor) / &(&two_pi.powi(k as i64 + 1) * &abs_a.powi(k as i64));
        let g = &gamma_half_integers(n - k, ctx)[n - k];
        let denom = &(&(&two_pi.powi(k as i64 + 1) * &two_pi.sqrt()) * &abs_a.powi(n as i64 + 1))
            * &(&kappa.ln(ctx) * &p).exp(ctx);
        &first + &(&(&factor * g) / &denom)
    } else {
        let expo = if theta.abs() <= PI { -(&abs_a * &kappa) } else { &av.re * &kappa };
        let scale = (&abs_a.ln(ctx) * &(&ctx.int(k as i64) + &half)).exp(ctx);
        &expo.exp(ctx) / &scale
    };
    Ok(HyperEvaluation {
        base_sum,
        terminant_layer,
        residual_bound,
        certified,
        indices: HyperIndices { n, m: None, k, l: None },
        sector: a.sector(),
    })
}
