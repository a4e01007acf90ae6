use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bell::{BellTable, SeriesKind};
use super::poly::IntPolynomial;
use super::stirling::stirling2_table;
use super::{factorial, factorials, int, rat};
use crate::error::{Error, Result};
use crate::numerics::{PrecisionContext, Real};

/// `b_0, …, b_{n_max}` from `b_n = λ(1−λ) b'_{n−1} + (2n−1) λ b_{n−1}`.
pub fn b_poly_recurrence(n_max: usize) -> Vec<IntPolynomial> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(IntPolynomial::new(vec![BigInt::one()]));
    for n in 1..=n_max {
        let prev = &out[n - 1];
        // [λ^j] b_n = j c_j + (2n − j) c_{j−1}
        let c: Vec<BigInt> = (0..=n)
            .map(|j| {
                let mut v = prev.coefficient(j) * j;
                if j > 0 {
                    v += prev.coefficient(j - 1) * (2 * n - j);
                }
                v
            })
            .collect();
        out.push(IntPolynomial::new(c));
    }
    out
}

/// `b_n(λ)` from the double Stirling sum
/// `(−1)^n (2n+1)! Σ_k (λ−1)^{n−k}/((n+k+1)(n−k)!) Σ_{j≤k} (−λ)^j S(n+j,j)/((k−j)!(n+j)!)`.
pub fn b_coeff_stirling(lambda: &BigRational, n: usize) -> BigRational {
    let s = stirling2_table(2 * n);
    let f = factorials(2 * n + 1);
    let mut c = Vec::with_capacity(n + 1);
    let mut lp = BigRational::one();
    for j in 0..=n {
        let v = &lp * rat(s[n + j][j].clone(), f[n + j].clone());
        c.push(if j % 2 == 0 { v } else { -v });
        lp *= lambda;
    }
    let lm1 = lambda - BigRational::one();
    let mut pw = vec![BigRational::one(); n + 1];
    for k in 1..=n {
        pw[k] = &pw[k - 1] * &lm1;
    }
    let mut total = BigRational::zero();
    for k in 0..=n {
        let inner = (0..=k).fold(BigRational::zero(), |acc, j| acc + &c[j] / int(f[k - j].clone()));
        total += inner * &pw[n - k] / int(&f[n - k] * (n + k + 1));
    }
    let r = total * int(f[2 * n + 1].clone());
    if n % 2 == 0 {
        r
    } else {
        -r
    }
}

fn stirling_real_at(lambda: &Real, n: usize, s: &[Vec<BigInt>], q: usize) -> (Real, f64) {
    let lambda = lambda.with_prec(q);
    let one = Real::one(q);
    let mut inv_f = vec![one.clone(); 2 * n + 2];
    for k in 1..inv_f.len() {
        inv_f[k] = &inv_f[k - 1] / k as i64;
    }
    let mut c = Vec::with_capacity(n + 1);
    let mut lp = one.clone();
    for j in 0..=n {
        let v = &(&lp * &Real::from_bigint(&s[n + j][j], q)) * &inv_f[n + j];
        c.push(if j % 2 == 0 { v } else { -v });
        lp = &lp * &lambda;
    }
    let lm1 = &lambda - &one;
    let mut pw = vec![one.clone(); n + 1];
    for k in 1..=n {
        pw[k] = &pw[k - 1] * &lm1;
    }
    let mut total = Real::zero(q);
    let mut biggest = f64::NEG_INFINITY;
    for k in 0..=n {
        let w = &(&pw[n - k] * &inv_f[n - k]) / (n + k + 1) as i64;
        let mut inner = Real::zero(q);
        for j in 0..=k {
            let t = &c[j] * &inv_f[k - j];
            biggest = biggest.max(t.log2_abs() + w.log2_abs());
            inner += &t;
        }
        total += &(&inner * &w);
    }
    let fact = Real::from_bigint(&factorial(2 * n as u64 + 1), q);
    let r = &total * &fact;
    let loss = biggest - total.log2_abs();
    (if n % 2 == 0 { r } else { -r }, loss)
}

/// The Stirling sum of [`b_coeff_stirling`] for a real `λ`, carried at a
/// precision raised until the cancellation in the alternating sums is
/// covered.
pub fn b_coeff_stirling_real(lambda: &Real, n: usize, ctx: &PrecisionContext) -> Real {
    let s = stirling2_table(2 * n);
    let mut q = ctx.wp() + 16;
    loop {
        let (v, loss) = stirling_real_at(lambda, n, &s, q);
        if !loss.is_finite() || loss < 16.0 || q > ctx.wp() + loss as usize + 16 {
            return v.with_prec(ctx.wp());
        }
        q = ctx.wp() + loss as usize + 48;
    }
}

fn table_lambda(table: &BellTable) -> Result<&BigRational> {
    match &table.kind {
        SeriesKind::ForB(l) => Ok(l),
        SeriesKind::ForA => Err(Error::Domain("table is not built from the b-series".into())),
    }
}

/// `b_n(λ) = (2n+1)!/n! (λ−1)^n Σ_k (−1)^{n+k} C(n,k) A_{k,n}/(n+k+1)`.
pub fn b_coeff_potential(table: &BellTable, n: usize) -> Result<BigRational> {
    let lambda = table_lambda(table)?;
    if n > table.n_max() {
        return Err(Error::Domain("index beyond table".into()));
    }
    let mut s = BigRational::zero();
    let mut c = BigInt::one();
    for k in 0..=n {
        let t = int(c.clone()) * table.potential(k, n) / int(n + k + 1);
        if (n + k) % 2 == 0 {
            s += t;
        } else {
            s -= t;
        }
        c = c * (n - k) / (k + 1);
    }
    let lm1 = lambda - BigRational::one();
    let mut pw = BigRational::one();
    for _ in 0..n {
        pw *= &lm1;
    }
    Ok(s * pw * rat(factorial(2 * n as u64 + 1), factorial(n as u64)))
}

/// `b_n(λ) = Σ_k (−1)^{n+k} (λ−1)^{n−k} (n+k)!/k! · B_{n,k}`.
pub fn b_coeff_bell(table: &BellTable, n: usize) -> Result<BigRational> {
    let lambda = table_lambda(table)?;
    if n > table.n_max() {
        return Err(Error::Domain("index beyond table".into()));
    }
    let lm1 = lambda - BigRational::one();
    let mut s = BigRational::zero();
    for k in 0..=n {
        let mut pw = BigRational::one();
        for _ in 0..n - k {
            pw *= &lm1;
        }
        let t = pw * rat(factorial((n + k) as u64), factorial(k as u64)) * table.bell(n, k);
        if (n + k) % 2 == 0 {
            s += t;
        } else {
            s -= t;
        }
    }
    Ok(s)
}
