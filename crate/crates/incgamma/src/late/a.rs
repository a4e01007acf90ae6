use alloc::format;

use super::{gamma_half_integers, xi_function, LateApprox, LateVariant};
use crate::coefficients::a_coeffs_even;
use crate::error::{Error, Result};
use crate::numerics::{zeta_real, PrecisionContext, Real};

/// Residue class of the odd coefficient index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LateBranch {
    /// `a_{4n+1}`.
    OneMod4,
    /// `a_{4n+3}`.
    ThreeMod4,
}

impl LateBranch {
    /// The coefficient index `4n+1` or `4n+3`.
    pub fn index(&self, n: usize) -> usize {
        match self {
            LateBranch::OneMod4 => 4 * n + 1,
            LateBranch::ThreeMod4 => 4 * n + 3,
        }
    }

    /// Doubled shift `2s`, where the gamma arguments are `2n−k+s`.
    fn two_s(&self) -> i64 {
        match self {
            LateBranch::OneMod4 => 1,
            LateBranch::ThreeMod4 => 3,
        }
    }

    fn sign(&self, k: usize) -> bool {
        // true for a minus sign
        match self {
            LateBranch::OneMod4 => (k.div_ceil(2) + 1) % 2 == 1,
            LateBranch::ThreeMod4 => (k / 2 + 1) % 2 == 1,
        }
    }
}

/// Truncation near the least bound, `K = n`.
pub fn a_late_optimal_k(n: usize) -> usize {
    n.max(1)
}

/// Approximation of `a_{4n+1}` or `a_{4n+3}` truncated after `K` terms,
/// `1 ≤ K ≤ 2n`.  The inverse factorial and zeta variants carry rigorous
/// bounds and need `K ≥ 2`.
pub fn a_late(n: usize, branch: LateBranch, variant: LateVariant, k: usize, ctx: &PrecisionContext) -> Result<LateApprox> {
    if n < 1 || k < 1 || k > 2 * n {
        return Err(Error::Domain(format!("need n ≥ 1 and 1 ≤ K ≤ 2n, got n = {n}, K = {k}")));
    }
    let bounded = matches!(variant, LateVariant::InverseFactorial | LateVariant::Zeta);
    if bounded && k < 2 {
        return Err(Error::Domain(format!("the remainder bound needs K ≥ 2, got {k}")));
    }
    let two_s = branch.two_s();
    // Γ(2n−k+s) = Γ(m+½) with m = 2n−k+(2s−1)/2
    let shift = ((two_s - 1) / 2) as usize;
    let g = gamma_half_integers(2 * n + shift, ctx);
    let a = a_coeffs_even(k);
    let two_pi = ctx.pi().ldexp(1);
    let arg = |j: usize| ctx.frac(2 * (2 * n - j) as i64 + two_s, 2);
    let mut sum = ctx.zero();
    let mut pw = ctx.one();
    for j in 0..k {
        let mut t = &(&Real::from_rational(&a[j], ctx.wp()) * &pw) * &g[2 * n - j + shift];
        match variant {
            LateVariant::InverseFactorial => {}
            LateVariant::Zeta => t = &t * &zeta_real(&arg(j), ctx)?,
            LateVariant::Dingle => t = &t * &zeta_real(&(&arg(j) + 1), ctx)?,
            LateVariant::Xi => t = &t * &xi_function(&arg(j), ctx)?.0,
        }
        if branch.sign(j) {
            sum -= &t;
        } else {
            sum += &t;
        }
        pw = &pw * &two_pi;
    }
    let expo = ctx.frac(4 * n as i64 + two_s, 2);
    let scale = (&expo * &two_pi.ln(ctx)).exp(ctx);
    let mut pre = (&(&ctx.int(2).sqrt() * &ctx.pi()) * &scale).recip();
    if n % 2 == 1 {
        pre = -pre;
    }
    let bound = if bounded {
        // (2√K+1)(1+ζ(K))Γ(K)Γ(2n−K+s)/(2π)^{2n+s+2}
        let kk = k as i64;
        let fact: Real = (1..kk).fold(ctx.one(), |f, j| &f * j);
        let mut b = &(&(&ctx.int(kk).sqrt().ldexp(1) + 1) * &(&zeta_real(&ctx.int(kk), ctx)? + 1)) * &fact;
        b = &(&b * &g[2 * n - k + shift]) / &(&scale * &(&two_pi * &two_pi));
        if variant == LateVariant::Zeta {
            let r = arg(k);
            if r <= ctx.one() {
                return Err(Error::Domain(format!("the zeta-weighted bound needs 2n−K+s > 1, got K = {k}")));
            }
            b = &b * &zeta_real(&r, ctx)?;
        }
        Some(b)
    } else {
        None
    };
    Ok(LateApprox { approx: &pre * &sum, bound, k, variant })
}
