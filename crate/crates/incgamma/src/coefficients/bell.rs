use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{factorial, int, rat};
use crate::error::{Error, Result};

/// Which fixed series `Σ a_j t^{j+1}` the table is built from.
#[derive(Clone, Debug, PartialEq)]
pub enum SeriesKind {
    /// `λe^t − t − λ`: `a_0 = λ − 1`, `a_j = λ/(j+1)!`.
    ForB(BigRational),
    /// `(e^t − t − 1)/t`: `a_0 = 1/2`, `a_j = 1/(j+2)!`.
    ForA,
}

impl SeriesKind {
    fn coefficient(&self, j: usize) -> BigRational {
        match self {
            SeriesKind::ForB(l) if j == 0 => l - BigRational::one(),
            SeriesKind::ForB(l) => l / int(factorial(j as u64 + 1)),
            SeriesKind::ForA => rat(1, factorial(j as u64 + 2)),
        }
    }
}

/// Partial Bell polynomials `B_{j,i}` and integer-parameter potential
/// polynomials `A_{i,j}` of a fixed series, for `i, j ≤ n_max`.
#[derive(Clone, Debug)]
pub struct BellTable {
    pub kind: SeriesKind,
    /// `a_0, …, a_{n_max}`.
    pub a: Vec<BigRational>,
    /// `bell[j][i] = B_{j,i}` for `i ≤ j`.
    pub bell: Vec<Vec<BigRational>>,
    /// `potential[i][j] = A_{i,j}`.
    pub potential: Vec<Vec<BigRational>>,
}

/// Builds the tables by the recurrences
/// `B_{n,k} = Σ_{j=1}^{n−k+1} a_j B_{n−j,k−1}` and
/// `A_{k,n} = Σ_{j=0}^{n} (a_j/a_0) A_{k−1,n−j}`.
pub fn potential_polynomials(kind: SeriesKind, n_max: usize) -> Result<BellTable> {
    let a: Vec<BigRational> = (0..=n_max + 1).map(|j| kind.coefficient(j)).collect();
    if a[0].is_zero() {
        return Err(Error::Domain("leading coefficient a_0 vanishes (λ = 1)".into()));
    }
    let mut bell: Vec<Vec<BigRational>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigRational::zero(); n + 1];
        if n == 0 {
            row[0] = BigRational::one();
        }
        for k in 1..=n {
            let mut s = BigRational::zero();
            for j in 1..=n - k + 1 {
                if let Some(b) = bell[n - j].get(k - 1) {
                    s += &a[j] * b;
                }
            }
            row[k] = s;
        }
        bell.push(row);
    }
    let g: Vec<BigRational> = a.iter().map(|x| x / &a[0]).collect();
    let mut potential: Vec<Vec<BigRational>> = Vec::with_capacity(n_max + 1);
    let mut row0 = vec![BigRational::zero(); n_max + 1];
    row0[0] = BigRational::one();
    potential.push(row0);
    for k in 1..=n_max {
        let prev = &potential[k - 1];
        let row: Vec<BigRational> = (0..=n_max)
            .map(|n| (0..=n).map(|j| &g[j] * &prev[n - j]).fold(BigRational::zero(), |s, t| s + t))
            .collect();
        potential.push(row);
    }
    let mut a = a;
    a.truncate(n_max + 1);
    Ok(BellTable { kind, a, bell, potential })
}

/// `(x)_k / k!`-style generalized binomial `C(ρ, i)`.
fn binom_rational(rho: &BigRational, i: usize) -> BigRational {
    let mut c = BigRational::one();
    for k in 0..i {
        c = c * (rho - int(k)) / int(k + 1);
    }
    c
}

impl BellTable {
    pub fn n_max(&self) -> usize {
        self.potential.len() - 1
    }

    pub fn bell(&self, j: usize, i: usize) -> BigRational {
        self.bell[j].get(i).cloned().unwrap_or_default()
    }

    pub fn potential(&self, i: usize, j: usize) -> BigRational {
        self.potential[i][j].clone()
    }

    /// `A_{ρ,j}` for rational `ρ` by Comtet's formula
    /// `A_{ρ,j} = Γ(j+1−ρ)/(j! Γ(−ρ)) Σ_{i≤j} (−1)^i C(j,i) A_{i,j}/(i−ρ)`.
    /// Integer `ρ ∈ [0, j]` is read straight from the table.
    pub fn comtet(&self, rho: &BigRational, j: usize) -> Result<BigRational> {
        if j > self.n_max() {
            return Err(Error::Domain("index beyond table".into()));
        }
        if rho.is_integer() && *rho >= BigRational::zero() {
            let r = rho.to_integer();
            if let Ok(r) = usize::try_from(&r) {
                if r <= self.n_max() {
                    return Ok(self.potential(r, j));
                }
            }
        }
        let neg = -rho;
        let mut pre = BigRational::one();
        for k in 0..=j {
            pre *= &neg + int(k);
        }
        pre /= int(factorial(j as u64));
        let mut s = BigRational::zero();
        let mut c = BigRational::one();
        for i in 0..=j {
            let t = &c * &self.potential[i][j] / (&neg + int(i));
            if i % 2 == 0 {
                s += t;
            } else {
                s -= t;
            }
            c = c * int(j - i) / int(i + 1);
        }
        Ok(pre * s)
    }

    /// `A_{ρ,j} = Σ_i C(ρ,i) a_0^{−i} B_{j,i}`.
    pub fn potential_from_bell(&self, rho: &BigRational, j: usize) -> BigRational {
        let inv = self.a[0].recip();
        let mut p = BigRational::one();
        let mut s = BigRational::zero();
        for i in 0..=j {
            s += binom_rational(rho, i) * &p * self.bell(j, i);
            p *= &inv;
        }
        s
    }
}
