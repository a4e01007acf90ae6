//! Riemann zeta function for real arguments `s > 1`.
//!
//! Borwein's alternating-series acceleration: with
//! `d_k = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)! (2i)!)`,
//! `ζ(s) = −1/(d_n (1 − 2^{1−s})) Σ_{k<n} (−1)^k (d_k − d_n)/(k+1)^s`
//! with relative error below `3 (3+√8)^{−n}` for real `s`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::{PrecisionContext, Real};
use crate::error::{Error, Result};

fn borwein_d(n: usize) -> Vec<BigInt> {
    let nn = BigInt::from(n);
    let mut e = BigInt::one();
    let mut acc = BigInt::one();
    let mut d = Vec::with_capacity(n + 1);
    d.push(acc.clone());
    for i in 1..=n {
        let ib = BigInt::from(i);
        e = e * (&nn + &ib - 1u32) * (&nn - &ib + 1u32) * 4u32 / ((BigInt::from(2 * i) - 1u32) * (BigInt::from(2 * i)));
        acc += &e;
        d.push(acc.clone());
    }
    d
}

fn terms_for(wp: usize) -> usize {
    (wp as f64 * core::f64::consts::LN_2 / libm::log(3.0 + libm::sqrt(8.0))) as usize + 4
}

/// `ζ(k)` for an integer `k ≥ 2`.
pub fn riemann_zeta(k: i64, ctx: &PrecisionContext) -> Result<Real> {
    if k < 2 {
        return Err(Error::Domain(alloc::format!("zeta requires k >= 2, got {k}")));
    }
    zeta_real(&ctx.int(k), ctx)
}

/// `ζ(s)` for real `s > 1`.
pub fn zeta_real(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if *s <= ctx.one() {
        return Err(Error::Domain(alloc::format!("zeta requires s > 1, got {:.10}", s)));
    }
    let wp = ctx.wp() + 16;
    let s = s.with_prec(wp);
    let n = terms_for(wp);
    let d = borwein_d(n);
    let twice = s.ldexp(1);
    let half_int = twice.floor() == twice;
    let (ipart, has_half) = if half_int {
        let m = twice.to_f64() as i64;
        (m / 2, m % 2 != 0)
    } else {
        (0, false)
    };
    let dn = Real::from_bigint(&d[n], wp);
    let mut sum = Real::zero(wp);
    for k in 0..n {
        let base = Real::from_i64(k as i64 + 1, wp);
        let pw = if half_int {
            let mut v = base.powi(-ipart);
            if has_half {
                v = v / base.sqrt();
            }
            v
        } else {
            (-(&s * &base.ln(ctx))).exp(ctx)
        };
        let c = Real::from_bigint(&(&d[k] - &d[n]), wp);
        let t = &c * &pw;
        if k % 2 == 0 {
            sum += &t;
        } else {
            sum -= &t;
        }
    }
    let one = Real::one(wp);
    let two_pow = if half_int {
        let mut v = Real::from_i64(2, wp).powi(1 - ipart);
        if has_half {
            v = v / Real::from_i64(2, wp).sqrt();
        }
        v
    } else {
        ((&one - &s) * &Real::from_i64(2, wp).ln(ctx)).exp(ctx)
    };
    let r = -(sum / (&dn * &(&one - &two_pow)));
    Ok(r.with_prec(ctx.wp()))
}
