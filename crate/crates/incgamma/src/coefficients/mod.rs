//! Exact coefficients of the two large-parameter expansions.
//!
//! `b_n(λ)` are integer polynomials in `λ` generated by a three-term
//! recurrence; `a_n` are rationals times `(2/π)^{s/2}` with `s = n mod 2`.
//! Each family is produced by several independent routes (recurrences,
//! potential and Bell polynomials, Stirling-number sums, resurgence
//! integrals) so that every route validates the others.

mod a;
mod b;
mod bell;
mod poly;
mod resurgence;
pub mod series;
mod stirling;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numerics::{PrecisionContext, Real};

pub use a::{
    a_coeff_stirling, a_coeffs_bm_recurrence, a_coeffs_even, a_coeffs_exact, a_coeffs_potential, a_coeffs_series_root,
    bm_sequence,
};
pub use b::{b_coeff_bell, b_coeff_potential, b_coeff_stirling, b_coeff_stirling_real, b_poly_recurrence};
pub use bell::{potential_polynomials, BellTable, SeriesKind};
pub use poly::IntPolynomial;
pub use resurgence::{
    a_coeff_resurgence_integral, a_coeffs_resurgence_integral, b_coeff_resurgence_integral,
    b_coeffs_resurgence_integral,
};
pub use stirling::{associated_stirling2_table, stirling2_table};

/// An exact number `q · (2/π)^{s/2}` with `s ∈ {0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCoefficient {
    pub rational: BigRational,
    pub s: u8,
}

impl ExactCoefficient {
    pub fn new(rational: BigRational, s: u8) -> Self {
        debug_assert!(s <= 1);
        ExactCoefficient { rational, s }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero()
    }

    /// Value at the working precision of `ctx`.
    pub fn to_real(&self, ctx: &PrecisionContext) -> Real {
        let q = Real::from_rational(&self.rational, ctx.wp());
        if self.s == 0 {
            q
        } else {
            &q * &sqrt_two_over_pi(ctx)
        }
    }

    /// `|value|` as an exact coefficient.
    pub fn abs(&self) -> Self {
        ExactCoefficient { rational: self.rational.abs(), s: self.s }
    }
}

impl core::fmt::Display for ExactCoefficient {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.s == 0 {
            write!(f, "{}", self.rational)
        } else {
            write!(f, "{}·√(2/π)", self.rational)
        }
    }
}

pub(crate) fn sqrt_two_over_pi(ctx: &PrecisionContext) -> Real {
    (&ctx.int(2) / &ctx.pi()).sqrt()
}

pub(crate) fn factorial(n: u64) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= k;
    }
    f
}

pub(crate) fn factorials(n: usize) -> alloc::vec::Vec<BigInt> {
    let mut v = alloc::vec::Vec::with_capacity(n + 1);
    v.push(BigInt::one());
    for k in 1..=n {
        let next = &v[k - 1] * k;
        v.push(next);
    }
    v
}

pub(crate) fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub(crate) fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `Γ(m/2) = q · π^{h/2}` returned as `(q, h)`.
pub(crate) fn gamma_half(m: u64) -> (BigRational, u8) {
    assert!(m > 0);
    if m % 2 == 0 {
        (int(factorial(m / 2 - 1)), 0)
    } else {
        let k = (m - 1) / 2;
        (rat(factorial(2 * k), (BigInt::one() << (2 * k)) * factorial(k)), 1)
    }
}
