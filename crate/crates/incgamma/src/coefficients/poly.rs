use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::numerics::Real;

/// Polynomial with big-integer coefficients, lowest power first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial, dropping trailing zero coefficients.
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coefficients.last()
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> Self {
        IntPolynomial::new(self.coefficients.iter().enumerate().skip(1).map(|(k, c)| c * k).collect())
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_real(&self, x: &Real) -> Real {
        let p = x.prec();
        let mut acc = Real::zero(p);
        for c in self.coefficients.iter().rev() {
            acc = &(&acc * x) + &Real::from_bigint(c, p);
        }
        acc
    }
}
