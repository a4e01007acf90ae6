use alloc::format;

use super::{gamma_half_integers, LateApprox, LateVariant};
use crate::coefficients::a_coeffs_even;
use crate::error::{Error, Result};
use crate::numerics::{PrecisionContext, Real};

use core::f64::consts::PI;

/// Truncation minimising the remainder bound for large `n`:
/// `⌊(n−½)·2π/(λ−log λ−1+2π)⌋`, clamped to `[1, n−1]`.
pub fn b_late_optimal_k(lambda: f64, n: usize) -> usize {
    let kappa = lambda - libm::log(lambda) - 1.0;
    let k = libm::floor((n as f64 - 0.5) * 2.0 * PI / (kappa + 2.0 * PI));
    let hi = n.saturating_sub(1).max(1);
    if !k.is_finite() {
        return hi;
    }
    (k.max(1.0) as usize).min(hi)
}

/// Inverse factorial approximation of `b_n(λ)` truncated after `K` terms,
/// `1 ≤ K ≤ n−1`, with its rigorous bound.
pub fn b_late(lambda: &Real, n: usize, k: usize, ctx: &PrecisionContext) -> Result<LateApprox> {
    if *lambda <= ctx.one() {
        return Err(Error::Domain(format!("λ must exceed 1, got {:.10}", lambda)));
    }
    if n < 2 || k < 1 || k > n - 1 {
        return Err(Error::Domain(format!("need n ≥ 2 and 1 ≤ K ≤ n−1, got n = {n}, K = {k}")));
    }
    let lambda = lambda.with_prec(ctx.wp());
    let kappa = &(&lambda - &lambda.ln(ctx)) - 1;
    let a = a_coeffs_even(k + 1);
    let a_real = |j: usize| Real::from_rational(&a[j], ctx.wp());
    let half = ctx.frac(1, 2);
    // r_j = Γ(n−j+½)/Γ(n+½)
    let mut r = ctx.one();
    let mut w = ctx.one();
    let mut sum = ctx.zero();
    for j in 0..k {
        let t = &(&w * &a_real(j)) * &r;
        if j % 2 == 0 {
            sum += &t;
        } else {
            sum -= &t;
        }
        w = &w * &kappa;
        r = &r / &(&ctx.int((n - j - 1) as i64) + &half);
    }
    let r_next = &r / &(&ctx.int((n - k - 1) as i64) + &half);
    let tail = &(&(&w * &a_real(k).abs()) * &r) + &(&(&(&w * &kappa) * &a_real(k + 1).abs()) * &r_next);
    let g = gamma_half_integers(n, ctx);
    let two_pi = ctx.pi().ldexp(1);
    let pre = &(&g[n] * &(&lambda - 1).powi(2 * n as i64 + 1)) / &(&(&two_pi * &kappa).sqrt() * &kappa.powi(n as i64));
    Ok(LateApprox { approx: &pre * &sum, bound: Some(&pre.abs() * &tail), k, variant: LateVariant::InverseFactorial })
}
