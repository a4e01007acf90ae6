//! Stirling series `log Γ*(w) ~ Σ_{k≥1} B_{2k} / (2k(2k−1) w^{2k−1})`.

use alloc::rc::Rc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::numerics::{Complex, PrecisionContext, Real};

/// Tangent numbers `T_1, T_3, …, T_{2n−1}` by the in-place recurrence of
/// Brent and Harvey.
fn tangent_numbers(n: usize) -> Vec<BigInt> {
    let mut t: Vec<BigInt> = alloc::vec![BigInt::zero(); n + 1];
    if n == 0 {
        return Vec::new();
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    t.remove(0);
    t
}

/// Exact Bernoulli numbers `B_2, B_4, …, B_{2n}`.
pub fn bernoulli_even(n: usize) -> Vec<BigRational> {
    tangent_numbers(n)
        .into_iter()
        .enumerate()
        .map(|(i, tk)| {
            let k = i + 1;
            let four_k = BigInt::one() << (2 * k);
            let num = tk * BigInt::from(2 * k);
            let den = &four_k * (&four_k - 1u32);
            let r = BigRational::new(num, den);
            if k % 2 == 1 {
                r
            } else {
                -r
            }
        })
        .collect()
}

/// Smallest real part for which the series reaches `2^{−p}` accuracy.
pub(super) fn threshold(p: usize) -> f64 {
    p as f64 * core::f64::consts::LN_2 / (2.0 * core::f64::consts::PI) + 2.0
}

/// Coefficients `B_{2k}/(2k(2k−1))` at precision `p`, cached per context.
fn coefficients(p: usize, ctx: &PrecisionContext) -> Rc<Vec<Real>> {
    let need = (core::f64::consts::PI * threshold(p)) as usize + 8;
    if let Some((q, c)) = &ctx.cache.borrow().stirling {
        if *q == p && c.len() >= need {
            return Rc::clone(c);
        }
    }
    let b = bernoulli_even(need);
    let c: Rc<Vec<Real>> = b
        .iter()
        .enumerate()
        .map(|(i, bk)| {
            let k = (i + 1) as i64;
            Real::from_rational(&(bk / BigRational::from_integer(BigInt::from(2 * k * (2 * k - 1)))), p)
        })
        .collect::<Vec<_>>()
        .into();
    ctx.cache.borrow_mut().stirling = Some((p, Rc::clone(&c)));
    c
}

/// `log Γ*(w)` for `Re w ≥ threshold(p)`.
pub(super) fn log_series(w: &Complex, p: usize, ctx: &PrecisionContext) -> Complex {
    let c = coefficients(p, ctx);
    let inv = Complex::one(p) / w;
    let inv2 = &inv * &inv;
    let mut pw = inv;
    let mut sum = Complex::zero(p);
    let stop = -(p as f64) - 4.0;
    for ck in c.iter() {
        let term = pw.scale(ck);
        let small = term.log2_abs() < stop;
        sum += &term;
        if small {
            break;
        }
        pw = &pw * &inv2;
    }
    sum
}

/// Real-argument version of [`log_series`].
pub(super) fn log_series_real(w: &Real, p: usize, ctx: &PrecisionContext) -> Real {
    let c = coefficients(p, ctx);
    let inv = w.recip();
    let inv2 = &inv * &inv;
    let mut pw = inv;
    let mut sum = Real::zero(p);
    let stop = -(p as f64) - 4.0;
    for ck in c.iter() {
        let term = &pw * ck;
        let small = term.log2_abs() < stop;
        sum += &term;
        if small {
            break;
        }
        pw = &pw * &inv2;
    }
    sum
}
