use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gamma::{gamma_star, recip_gamma_star_real};
use crate::numerics::{integrate_semi_infinite_vec, ApproxValue, Complex, PrecisionContext, QuadHint, Real};

fn check_lambda(lambda: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if *lambda <= ctx.one() {
        return Err(Error::Domain(alloc::format!("resurgence integral needs λ > 1, got {:.10}", lambda)));
    }
    Ok(&(lambda - &lambda.ln(ctx)) - 1)
}

/// `b_n(λ) = (λ−1)^{2n+1}/√(2π) ∫_0^∞ t^{n−½} e^{−t(λ−log λ−1)}/Γ*(t) dt`.
pub fn b_coeff_resurgence_integral(lambda: &Real, n: usize, ctx: &PrecisionContext) -> Result<ApproxValue> {
    let kappa = check_lambda(lambda, ctx)?;
    let hint = QuadHint::gamma_like(n as f64 - 0.5, kappa.to_f64());
    let half = ctx.frac(1, 2);
    let expo = &ctx.int(n as i64) - &half;
    let v = integrate_semi_infinite_vec(
        |t, lt| {
            let w = (&(&expo * lt) - &(&kappa * t)).exp(ctx);
            Ok(alloc::vec![Complex::from_real(&w * &recip_gamma_star_real(t, lt, ctx))])
        },
        1,
        hint,
        ctx,
    )?;
    Ok(v[0].scaled(&Complex::from_real(b_prefactor(lambda, n, ctx))))
}

fn b_prefactor(lambda: &Real, n: usize, ctx: &PrecisionContext) -> Real {
    let two_pi = ctx.pi().ldexp(1);
    &(lambda - 1).powi(2 * n as i64 + 1) / &two_pi.sqrt()
}

/// [`b_coeff_resurgence_integral`] for `n = 0, …, n_max` in one quadrature.
pub fn b_coeffs_resurgence_integral(lambda: &Real, n_max: usize, ctx: &PrecisionContext) -> Result<Vec<ApproxValue>> {
    let kappa = check_lambda(lambda, ctx)?;
    let hint = QuadHint::gamma_like(n_max as f64 / 2.0, kappa.to_f64());
    let half = ctx.frac(1, 2);
    let v = integrate_semi_infinite_vec(
        |t, lt| {
            let mut w = (&(-&(&half * lt)) - &(&kappa * t)).exp(ctx) * recip_gamma_star_real(t, lt, ctx);
            let mut row = Vec::with_capacity(n_max + 1);
            for _ in 0..=n_max {
                row.push(Complex::from_real(w.clone()));
                w = &w * t;
            }
            Ok(row)
        },
        n_max + 1,
        hint,
        ctx,
    )?;
    Ok(v
        .iter()
        .enumerate()
        .map(|(n, x)| x.scaled(&Complex::from_real(b_prefactor(lambda, n, ctx))))
        .collect())
}

/// `a_n = Im(e^{−3nπi/4} ∫_0^∞ t^{n/2−1} e^{−2πt} Γ*(it) dt)/π`, which is the
/// pair of conjugate contour integrals combined, valid for `n ≥ 2`.
pub fn a_coeff_resurgence_integral(n: usize, ctx: &PrecisionContext) -> Result<ApproxValue> {
    Ok(a_coeffs_resurgence_integral(n, n, ctx)?.pop().expect("one coefficient"))
}

/// [`a_coeff_resurgence_integral`] for `n_lo ≤ n ≤ n_hi` in one quadrature.
pub fn a_coeffs_resurgence_integral(n_lo: usize, n_hi: usize, ctx: &PrecisionContext) -> Result<Vec<ApproxValue>> {
    if n_lo < 2 || n_hi < n_lo {
        return Err(Error::Domain(alloc::format!(
            "resurgence representation of a_n needs 2 ≤ n, got range {n_lo}..={n_hi}"
        )));
    }
    let two_pi = ctx.pi().ldexp(1);
    let width = n_hi - n_lo + 1;
    let lo = ctx.frac(n_lo as i64 - 2, 2);
    let half = ctx.frac(1, 2);
    let hint = QuadHint::gamma_like((n_lo + n_hi) as f64 / 4.0 - 1.0, two_pi.to_f64());
    let hint = QuadHint { alpha: n_lo as f64 / 2.0 - 1.5, ..hint };
    let v = integrate_semi_infinite_vec(
        |t, lt| {
            let g = gamma_star(&Complex::new(ctx.zero(), t.clone()), ctx)?.value;
            let mut w = (&(&lo * lt) - &(&two_pi * t)).exp(ctx);
            let root = (&half * lt).exp(ctx);
            let mut row = Vec::with_capacity(width);
            for _ in 0..width {
                row.push(g.scale(&w));
                w = &w * &root;
            }
            Ok(row)
        },
        width,
        hint,
        ctx,
    )?;
    let pi = ctx.pi();
    Ok(v
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let n = (n_lo + k) as i64;
            let rot = Complex::cis(&(&(&pi * (-3 * n)) / 4), ctx);
            let y = &rot * &x.value;
            ApproxValue::new(Complex::from_real(&y.im / &pi), &x.abs_err / &pi)
        })
        .collect())
}
