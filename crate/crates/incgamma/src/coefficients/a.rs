use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bell::{potential_polynomials, SeriesKind};
use super::stirling::{associated_stirling2_table, stirling2_table};
use super::{factorial, factorials, gamma_half, int, rat, series, ExactCoefficient};
use crate::error::{Error, Result};

/// `a_n = n!/(2^{n/2} Γ(n/2+1)) · [t^n] (½t²/(e^t−t−1))^{(n+1)/2}` from the
/// series coefficient `c`.
fn normalize(n: usize, c: BigRational) -> ExactCoefficient {
    let (g, _) = gamma_half(n as u64 + 2);
    let v = c * int(factorial(n as u64)) / g;
    if n % 2 == 0 {
        ExactCoefficient::new(v / int(BigInt::one() << (n / 2)), 0)
    } else {
        ExactCoefficient::new(v / int(BigInt::one() << ((n - 1) / 2 + 1)), 1)
    }
}

/// Exact `a_0, …, a_{n_max}`.
///
/// The series `½t²/(e^t−t−1)` is `g^{−1}` with `g = 1 + Σ_{j≥1} 2t^j/(j+2)!`.
/// Its power `g^ρ`, `ρ = −(n+1)/2`, follows from Comtet's formula applied to
/// the integer powers `[t^n] g^i = 2^i i! S₂(n+2i, i)/(n+2i)!`, where `S₂`
/// counts set partitions without singleton blocks.
pub fn a_coeffs_exact(n_max: usize) -> Vec<ExactCoefficient> {
    let s2 = associated_stirling2_table(3 * n_max, n_max);
    let f = factorials(3 * n_max + 1);
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        // −ρ = (n+1)/2; i − ρ = (n+1+2i)/2
        let mut s = BigRational::zero();
        let mut c = BigInt::one();
        let mut pow2 = BigInt::one();
        for i in 0..=n {
            let num = &c * &pow2 * &f[i] * &s2[n + 2 * i][i] * 2u32;
            let t = rat(num, &f[n + 2 * i] * (n + 1 + 2 * i));
            if i % 2 == 0 {
                s += t;
            } else {
                s -= t;
            }
            c = c * (n - i) / (i + 1);
            pow2 <<= 1;
        }
        let mut pre = BigRational::one();
        for k in 0..=n {
            pre *= rat(n + 1 + 2 * k, 2);
        }
        out.push(normalize(n, pre * s / int(f[n].clone())));
    }
    out
}

fn a_series(n: usize) -> Vec<BigRational> {
    let mut g = Vec::with_capacity(n + 1);
    g.push(BigRational::one());
    for j in 1..=n {
        g.push(rat(2, factorial(j as u64 + 2)));
    }
    g
}

/// `a_n` from Comtet's formula on the generic potential-polynomial table.
pub fn a_coeffs_potential(n_max: usize) -> Result<Vec<ExactCoefficient>> {
    let t = potential_polynomials(SeriesKind::ForA, n_max)?;
    (0..=n_max)
        .map(|n| {
            let rho = -rat(n + 1, 2);
            Ok(normalize(n, t.comtet(&rho, n)?))
        })
        .collect()
}

/// `a_n` from the square root of `½t²/(e^t−t−1)` by series Newton iteration,
/// raised to the integer power `n + 1`.
pub fn a_coeffs_series_root(n_max: usize) -> Result<Vec<ExactCoefficient>> {
    let f = series::recip(&a_series(n_max), n_max)?;
    let r = series::sqrt(&f, n_max)?;
    let mut p = r.clone();
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        out.push(normalize(n, p[n].clone()));
        p = series::mul(&p, &r, n_max);
    }
    Ok(out)
}

/// The auxiliary sequence `b_1, …, b_m` (index 0 unused) with `b_1 = 1`,
/// `b_2 = −1/6`, `b_3 = 1/36` and, for `n ≥ 4`,
/// `b_n = (2−n)/(3n+3) b_{n−1} − ½ Σ_{k=2}^{n−3} b_{k+1} b_{n−k}`.
pub fn bm_sequence(m: usize) -> Vec<BigRational> {
    let mut b = alloc::vec![BigRational::zero(); m.max(3) + 1];
    b[1] = BigRational::one();
    b[2] = rat(-1, 6);
    b[3] = rat(1, 36);
    for n in 4..=m {
        let mut s = BigRational::zero();
        for k in 2..=n - 3 {
            s += &b[k + 1] * &b[n - k];
        }
        let n_i = n as i64;
        b[n] = rat(2 - n_i, 3 * n_i + 3) * &b[n - 1] - s / int(2);
    }
    b.truncate(m + 1);
    b
}

/// `a_n = 2^{n/2+1} Γ((n+3)/2) b_{n+1}/√π` from [`bm_sequence`], checked
/// against [`a_coeffs_exact`]; any disagreement is reported as an error.
pub fn a_coeffs_bm_recurrence(n_max: usize) -> Result<Vec<ExactCoefficient>> {
    let b = bm_sequence(n_max + 1);
    let exact = a_coeffs_exact(n_max);
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let (g, _) = gamma_half(n as u64 + 3);
        let v = if n % 2 == 0 {
            ExactCoefficient::new(int(BigInt::one() << (n / 2 + 1)) * g * &b[n + 1], 0)
        } else {
            ExactCoefficient::new(int(BigInt::one() << ((n + 1) / 2)) * g * &b[n + 1], 1)
        };
        if v != exact[n] {
            return Err(Error::Mismatch(format!("a_{n}: recurrence gives {v}, generator gives {}", exact[n])));
        }
        out.push(v);
    }
    Ok(out)
}

/// `a_n` from the double Stirling sum
/// `Σ_k 2^{n/2+k+1} Γ(3(n+1)/2)/(√π (n+2k+1)(n−k)!) Σ_{j≤k} (−1)^j S(n+k+j,j)/((k−j)!(n+k+j)!)`.
pub fn a_coeff_stirling(n: usize) -> ExactCoefficient {
    let s = stirling2_table(3 * n);
    let f = factorials(3 * n);
    let mut total = BigRational::zero();
    for k in 0..=n {
        let mut inner = BigRational::zero();
        for j in 0..=k {
            let t = rat(s[n + k + j][j].clone(), &f[k - j] * &f[n + k + j]);
            if j % 2 == 0 {
                inner += t;
            } else {
                inner -= t;
            }
        }
        total += inner * rat(BigInt::one() << k, &f[n - k] * (n + 2 * k + 1));
    }
    let (g, _) = gamma_half(3 * n as u64 + 3);
    if n % 2 == 0 {
        ExactCoefficient::new(total * g * int(BigInt::one() << (n / 2 + 1)), 0)
    } else {
        ExactCoefficient::new(total * g * int(BigInt::one() << ((n - 1) / 2 + 1)), 1)
    }
}


/// Exact even coefficients `a_0, a_2, …, a_{2k_max}`, which are the Stirling
/// coefficients of `Γ*(z) = Σ a_{2k} z^{−k}`, obtained as the exponential of
/// `Σ_j B_{2j}/(2j(2j−1)) z^{1−2j}`.
pub fn a_coeffs_even(k_max: usize) -> Vec<BigRational> {
    let bern = crate::gamma::bernoulli_even(k_max.div_ceil(2).max(1));
    // l[m] = [w^m] log Γ*(1/w)
    let mut l = alloc::vec![BigRational::zero(); k_max + 1];
    for (i, b) in bern.iter().enumerate() {
        let j = i + 1;
        let m = 2 * j - 1;
        if m <= k_max {
            l[m] = b / int((2 * j) * (2 * j - 1));
        }
    }
    let mut e = Vec::with_capacity(k_max + 1);
    e.push(BigRational::one());
    for m in 1..=k_max {
        let mut s = BigRational::zero();
        for j in (1..=m).step_by(2) {
            s += &l[j] * &e[m - j] * int(j);
        }
        e.push(s / int(m));
    }
    e
}
