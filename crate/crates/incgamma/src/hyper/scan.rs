use alloc::vec::Vec;

use super::large_a::hyper_large_a;
use super::z::{exponentials, hyper_z};
use crate::error::Result;
use crate::gamma::{incomplete_gamma_large_a_normalized, incomplete_gamma_zz_normalized, SheetPoint};
use crate::numerics::{erf_complex, Complex, PrecisionContext, Real};
use crate::terminant::terminant;

use core::f64::consts::PI;

/// One row of a Stokes scan. All columns are normalized by the prefactor of
/// the series that emerges across the Stokes line.
#[derive(Clone, Debug)]
pub struct ScanRow {
    pub theta: f64,
    /// Oracle value minus the truncated base series.
    pub exact: Complex,
    /// Terminant prediction.
    pub terminant: Complex,
    /// The complete terminant layer; equals `terminant` for `Γ(a, λa)`.
    pub layer: Complex,
    /// Error-function smoothing prediction.
    pub erf: Complex,
    pub thm_bound: Real,
    pub certified: bool,
}

fn erf_law(shift: f64, width: &Real, sign: i64, ctx: &PrecisionContext) -> Complex {
    let x = &ctx.f64(shift) * width;
    let e = erf_complex(&Complex::from_real(x), ctx);
    let half = ctx.frac(1, 2);
    let v = &half + &(&e.re * &half) * sign;
    Complex::from_real(v)
}

/// Scan of `Γ(a, λa)` across `arg a = ±π` at fixed `|a|`. The emerging
/// series prefactor is `e^{aκ}√(2π/a)`, `κ = λ − log λ − 1`; the erf column
/// is `½ ± ½ erf((θ ∓ π)√(|a|κ/2))`.
pub fn stokes_scan_large_a(
    abs_a: &Real,
    lambda: &Real,
    thetas: &[f64],
    n: usize,
    k: usize,
    ctx: &PrecisionContext,
) -> Result<Vec<ScanRow>> {
    let kappa = &(lambda - &lambda.ln(ctx)) - 1;
    let width = (&(abs_a * &kappa) * &ctx.frac(1, 2)).sqrt();
    let mut rows = Vec::with_capacity(thetas.len());
    for &theta in thetas {
        let a = SheetPoint::polar(abs_a, &ctx.f64(theta), ctx);
        let h = hyper_large_a(&a, lambda, n, k, ctx)?;
        let oracle = incomplete_gamma_large_a_normalized(&a, lambda, ctx)?.value;
        let root = &Complex::from_real(ctx.pi().ldexp(1).sqrt()) / &a.sqrt(ctx);
        let pre = &a.value.scale(&kappa).exp(ctx) * &root;
        let sign = if theta < 0.0 { -1 } else { 1 };
        rows.push(ScanRow {
            theta,
            exact: &(&oracle - &h.base_sum) / &pre,
            terminant: &h.terminant_layer / &pre,
            layer: &h.terminant_layer / &pre,
            erf: erf_law(theta - sign as f64 * PI, &width, sign, ctx),
            thm_bound: &h.residual_bound / &pre.abs(),
            certified: h.certified,
        });
    }
    Ok(rows)
}

/// Scan of `Γ(z, z)` across `arg z = ±3π/2` at fixed `|z|`, with `K = L`.
/// The emerging series prefactor is `−2e^{∓2πiz}`; the terminant column is
/// the average `(T̂_{N−k}(−2πiz) + T̂_{M−k+½}(−2πiz))/2` weighted by
/// `a_{2k}/z^k` (mirrored below the real axis) and the erf column is
/// `½ ± ½ erf((θ ∓ 3π/2)√(π|z|))`.
pub fn stokes_scan_z(
    abs_z: &Real,
    thetas: &[f64],
    n: usize,
    m: usize,
    k: usize,
    ctx: &PrecisionContext,
) -> Result<Vec<ScanRow>> {
    let width = (abs_z * &ctx.pi()).sqrt();
    let half = ctx.frac(1, 2);
    let mut rows = Vec::with_capacity(thetas.len());
    for &theta in thetas {
        let z = SheetPoint::polar(abs_z, &ctx.f64(theta), ctx);
        let h = hyper_z(&z, n, m, k, k, ctx)?;
        let ex = exponentials(&z, k, ctx);
        let oracle = incomplete_gamma_zz_normalized(&z, ctx)?.value;
        let sign = if theta < 0.0 { -1 } else { 1 };
        let (w, e) = if sign > 0 { (&ex.w_minus, &ex.e_minus) } else { (&ex.w_plus, &ex.e_plus) };
        let pre = -e.ldexp(1);
        let mut avg = ctx.czero();
        for (j, c) in ex.coeffs_over_z.iter().enumerate() {
            let tn = terminant(&ctx.int((n - j) as i64), w, ctx)?.value;
            let tm = terminant(&(&ctx.int((m - j) as i64) + &half), w, ctx)?.value;
            let pair = if sign > 0 { &tn + &tm } else { &tm - &tn };
            avg += (c * &pair).scale(&half);
        }
        rows.push(ScanRow {
            theta,
            exact: &(&oracle - &h.base_sum) / &pre,
            terminant: avg,
            layer: &h.terminant_layer / &pre,
            erf: erf_law(theta - sign as f64 * 1.5 * PI, &width, sign, ctx),
            thm_bound: &h.residual_bound / &pre.abs(),
            certified: h.certified,
        });
    }
    Ok(rows)
}
