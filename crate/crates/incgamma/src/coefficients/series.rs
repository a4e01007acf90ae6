//! Truncated power series over the rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Product truncated to `n + 1` terms.
pub fn mul(f: &[BigRational], g: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut h = vec![BigRational::zero(); n + 1];
    for (i, fi) in f.iter().enumerate().take(n + 1) {
        if fi.is_zero() {
            continue;
        }
        for (j, gj) in g.iter().enumerate().take(n + 1 - i) {
            h[i + j] += fi * gj;
        }
    }
    h
}

/// Reciprocal truncated to `n + 1` terms.
pub fn recip(f: &[BigRational], n: usize) -> Result<Vec<BigRational>> {
    let f0 = f.first().filter(|c| !c.is_zero()).ok_or_else(|| {
        Error::Domain("series with zero constant term has no reciprocal".into())
    })?;
    let inv0 = f0.recip();
    let mut h = Vec::with_capacity(n + 1);
    h.push(inv0.clone());
    for k in 1..=n {
        let mut s = BigRational::zero();
        for j in 1..=k.min(f.len() - 1) {
            s += &f[j] * &h[k - j];
        }
        h.push(-s * &inv0);
    }
    Ok(h)
}

/// `f^ρ` for `f_0 = 1` and rational `ρ`, by Miller's recurrence
/// `k h_k = Σ_{j=1}^{k} ((ρ+1) j − k) f_j h_{k−j}`.
pub fn power(f: &[BigRational], rho: &BigRational, n: usize) -> Result<Vec<BigRational>> {
    if f.first() != Some(&BigRational::one()) {
        return Err(Error::Domain("series power needs constant term 1".into()));
    }
    let r1 = rho + BigRational::one();
    let mut h = Vec::with_capacity(n + 1);
    h.push(BigRational::one());
    for k in 1..=n {
        let mut s = BigRational::zero();
        for j in 1..=k.min(f.len() - 1) {
            let w = &r1 * BigRational::from_integer(j.into()) - BigRational::from_integer(k.into());
            s += w * &f[j] * &h[k - j];
        }
        h.push(s / BigRational::from_integer(k.into()));
    }
    Ok(h)
}

/// Square root with constant term 1 by Newton's iteration
/// `r ← (r + f/r)/2`, doubling the number of correct terms per step.
pub fn sqrt(f: &[BigRational], n: usize) -> Result<Vec<BigRational>> {
    if f.first() != Some(&BigRational::one()) {
        return Err(Error::Domain("series square root needs constant term 1".into()));
    }
    let half = BigRational::new(1.into(), 2.into());
    let mut r = vec![BigRational::one()];
    let mut have = 1;
    while have < n + 1 {
        have = (2 * have).min(n + 1);
        let m = have - 1;
        let q = mul(f, &recip(&r, m)?, m);
        r.resize(have, BigRational::zero());
        r = r.iter().zip(&q).map(|(a, b)| (a + b) * &half).collect();
    }
    r.truncate(n + 1);
    Ok(r)
}
