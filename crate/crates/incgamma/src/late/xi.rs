use alloc::format;

use crate::error::{Error, Result};
use crate::gamma::gamma_complex;
use crate::numerics::{integrate_semi_infinite, Complex, PrecisionContext, QuadHint, Real};

/// Longest partial sum attempted before falling back to the integral.
const MAX_TERMS: f64 = 20000.0;

fn check(r: &Real, ctx: &PrecisionContext) -> Result<()> {
    if *r <= ctx.frac(1, 2) {
        return Err(Error::Domain(format!("ξ(r) diverges for r ≤ 1/2, got {:.10}", r)));
    }
    Ok(())
}

/// `Σ_{m<terms} (½)_m/(m!(m+1)^r)` and a bound on the omitted tail, using
/// `(½)_m/m! ≤ 1/√(πm)`.
pub fn xi_series(r: &Real, terms: usize, ctx: &PrecisionContext) -> Result<(Real, Real)> {
    check(r, ctx)?;
    let r = r.with_prec(ctx.wp());
    let half = ctx.frac(1, 2);
    let mut c = ctx.one();
    let mut sum = ctx.zero();
    for m in 0..terms.max(1) {
        if m > 0 {
            c = &(&c * &(&ctx.int(m as i64) - &half)) / m as i64;
        }
        let w = (-(&r * &ctx.int(m as i64 + 1).ln(ctx))).exp(ctx);
        sum += &(&c * &w);
    }
    // Σ_{m≥M} m^{−r−½}/√π ≤ M^{½−r}/(√π (r−½)) + M^{−r−½}/√π
    let big_m = ctx.int(terms.max(1) as i64);
    let e = &r - &half;
    let lm = big_m.ln(ctx);
    let tail = &(&(-(&e * &lm)).exp(ctx) / &e) + &(-(&(&r + &half) * &lm)).exp(ctx);
    Ok((sum, &tail / &ctx.pi().sqrt()))
}

/// `1 − e^{−x}` for `x ≥ 0` without cancellation.
fn one_minus_exp_neg(x: &Real, ctx: &PrecisionContext) -> Real {
    if *x > ctx.frac(1, 2) {
        return &ctx.one() - &(-x).exp(ctx);
    }
    let mut term = x.clone();
    let mut sum = x.clone();
    let floor = x.log2_abs() - ctx.wp() as f64 - 4.0;
    for k in 2.. {
        term = -(&(&term * x) / k as i64);
        sum += &term;
        if term.log2_abs() < floor {
            break;
        }
    }
    sum
}

/// `ξ(r) = (2π)^r/Γ(r) ∫_0^∞ t^{r−1} e^{−2πt} (1−e^{−2πt})^{−½} dt` by
/// quadrature, with its error estimate.
pub fn xi_integral(r: &Real, ctx: &PrecisionContext) -> Result<(Real, Real)> {
    check(r, ctx)?;
    let r = r.with_prec(ctx.wp());
    let two_pi = ctx.pi().ldexp(1);
    let rm1 = &r - 1;
    let rf = r.to_f64();
    let hint = QuadHint { alpha: rf - 1.5, ..QuadHint::gamma_like(rf - 1.0, two_pi.to_f64()) };
    let v = integrate_semi_infinite(
        |t, lt| {
            let x = &two_pi * t;
            let w = (&(&rm1 * lt) - &x).exp(ctx);
            Ok(Complex::from_real(&w / &one_minus_exp_neg(&x, ctx).sqrt()))
        },
        hint,
        ctx,
    )?;
    let g = gamma_complex(&Complex::from_real(r.clone()), ctx)?.re;
    let pre = &(&r * &two_pi.ln(ctx)).exp(ctx) / &g;
    Ok((&v.value.re * &pre, &v.abs_err * &pre.abs()))
}

/// `ξ(r)` for `r > ½` with an error estimate: the Dirichlet series when it
/// reaches working precision within a moderate number of terms, the integral
/// otherwise.
pub fn xi_function(r: &Real, ctx: &PrecisionContext) -> Result<(Real, Real)> {
    check(r, ctx)?;
    let e = r.to_f64() - 0.5;
    let log2_terms = (ctx.wp() as f64 + 2.0) / e;
    if log2_terms < libm::log2(MAX_TERMS) {
        let terms = libm::ceil(libm::exp2(log2_terms)) as usize + 1;
        return xi_series(r, terms, ctx);
    }
    xi_integral(r, ctx)
}
