//! Multiple-precision substrate: real and complex arithmetic, semi-infinite
//! double-exponential quadrature, the Riemann zeta function and the complex
//! error function.

mod complex;
mod elem;
mod erf;
mod quad;
mod real;
mod zeta;

use alloc::rc::Rc;
use alloc::vec::Vec;
use core::cell::RefCell;

use astro_float::Consts;

use crate::error::{Error, Result};

pub use complex::Complex;
pub use erf::erf_complex;
pub use quad::{integrate_semi_infinite, integrate_semi_infinite_vec, quadrature_levels, QuadHint};
pub use real::{parse_rational, rational_to_f64, real_to_rational, Real};
pub use zeta::{riemann_zeta, zeta_real};

pub(crate) use quad::DeLevel;

/// Working precision, quadrature tolerances and per-context caches.
///
/// A context is cheap to clone; clones start with empty caches.  Caches are
/// interior-mutable, so a context is meant to be used from one thread at a
/// time (clone it per thread).
pub struct PrecisionContext {
    /// Binary mantissa width requested for results.
    pub precision_bits: usize,
    /// Extra bits carried internally on top of `precision_bits`.
    pub guard_bits: usize,
    /// Relative tolerance for quadrature refinement.
    pub quad_rel_tol: f64,
    /// Maximum number of step-halvings in the quadrature.
    pub quad_max_levels: usize,
    pub(crate) consts: RefCell<Consts>,
    pub(crate) cache: RefCell<Cache>,
}

#[derive(Default)]
pub(crate) struct Cache {
    pub pi: Vec<(usize, Real)>,
    pub ln2: Vec<(usize, Real)>,
    pub inv_fact: Vec<(usize, Rc<Vec<Real>>)>,
    pub stirling: Option<(usize, Rc<Vec<Real>>)>,
    pub de_levels: Vec<DeLevel>,
}

impl Clone for PrecisionContext {
    fn clone(&self) -> Self {
        PrecisionContext {
            precision_bits: self.precision_bits,
            guard_bits: self.guard_bits,
            quad_rel_tol: self.quad_rel_tol,
            quad_max_levels: self.quad_max_levels,
            consts: RefCell::new(Consts::new().expect("constant cache")),
            cache: RefCell::new(Cache::default()),
        }
    }
}

impl core::fmt::Debug for PrecisionContext {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("PrecisionContext")
            .field("precision_bits", &self.precision_bits)
            .field("guard_bits", &self.guard_bits)
            .field("quad_rel_tol", &self.quad_rel_tol)
            .field("quad_max_levels", &self.quad_max_levels)
            .finish()
    }
}

impl PrecisionContext {
    /// Context with 32 guard bits and the tightest admissible quadrature
    /// tolerance `2^{guard_bits − precision_bits}`.
    pub fn new(precision_bits: usize) -> Result<Self> {
        Self::with_options(precision_bits, 32, libm::exp2(32.0 - precision_bits as f64), 12)
    }

    pub fn with_options(
        precision_bits: usize,
        guard_bits: usize,
        quad_rel_tol: f64,
        quad_max_levels: usize,
    ) -> Result<Self> {
        if precision_bits < 64 {
            return Err(Error::Domain(alloc::format!(
                "precision_bits must be at least 64, got {precision_bits}"
            )));
        }
        let min_tol = libm::exp2(guard_bits as f64 - precision_bits as f64);
        if !(quad_rel_tol > 0.0) || quad_rel_tol < min_tol {
            return Err(Error::Domain(alloc::format!(
                "quad_rel_tol must be at least 2^(guard_bits - precision_bits) = {min_tol:e}"
            )));
        }
        if quad_max_levels == 0 {
            return Err(Error::Domain("quad_max_levels must be positive".into()));
        }
        Ok(PrecisionContext {
            precision_bits,
            guard_bits,
            quad_rel_tol,
            quad_max_levels,
            consts: RefCell::new(Consts::new().map_err(|_| Error::Domain("constant cache".into()))?),
            cache: RefCell::new(Cache::default()),
        })
    }

    /// The default 256-bit context.
    pub fn default_256() -> Self {
        Self::new(256).expect("valid default context")
    }

    /// Internal working precision: `precision_bits + guard_bits`.
    pub fn wp(&self) -> usize {
        self.precision_bits + self.guard_bits
    }

    /// A fresh context carrying `extra` more bits with proportionally
    /// tightened tolerance.
    pub fn boosted(&self, extra: usize) -> Self {
        let bits = self.precision_bits + extra;
        let tol = (self.quad_rel_tol * libm::exp2(-(extra as f64)))
            .max(libm::exp2(self.guard_bits as f64 - bits as f64));
        Self::with_options(bits, self.guard_bits, tol, self.quad_max_levels).expect("boosted context")
    }

    /// Integer at working precision.
    pub fn int(&self, v: i64) -> Real {
        Real::from_i64(v, self.wp())
    }

    /// Double at working precision (exact conversion).
    pub fn f64(&self, v: f64) -> Real {
        Real::from_f64(v, self.wp())
    }

    /// `n/d` at working precision.
    pub fn frac(&self, n: i64, d: i64) -> Real {
        Real::frac(n, d, self.wp())
    }

    pub fn zero(&self) -> Real {
        Real::zero(self.wp())
    }

    pub fn one(&self) -> Real {
        Real::one(self.wp())
    }

    pub fn czero(&self) -> Complex {
        Complex::zero(self.wp())
    }

    pub fn cone(&self) -> Complex {
        Complex::one(self.wp())
    }

    /// Complex number from two doubles.
    pub fn complex(&self, re: f64, im: f64) -> Complex {
        Complex::from_f64(re, im, self.wp())
    }

    /// π at working precision.
    pub fn pi(&self) -> Real {
        self.pi_at(self.wp())
    }

    /// π rounded to `p` bits.
    pub fn pi_at(&self, p: usize) -> Real {
        if let Some((_, v)) = self.cache.borrow().pi.iter().find(|(q, _)| *q == p) {
            return v.clone();
        }
        let v = Real(self.consts.borrow_mut().pi(p, real::RM));
        self.cache.borrow_mut().pi.push((p, v.clone()));
        v
    }

    /// `ln 2` rounded to `p` bits.
    pub fn ln2_at(&self, p: usize) -> Real {
        if let Some((_, v)) = self.cache.borrow().ln2.iter().find(|(q, _)| *q == p) {
            return v.clone();
        }
        let v = Real(self.consts.borrow_mut().ln_2(p, real::RM));
        self.cache.borrow_mut().ln2.push((p, v.clone()));
        v
    }

    /// `1/k!` for `k ≤ n` at precision `p`.
    pub(crate) fn inv_factorials(&self, n: usize, p: usize) -> Rc<Vec<Real>> {
        let mut cache = self.cache.borrow_mut();
        let idx = match cache.inv_fact.iter().position(|(q, _)| *q == p) {
            Some(i) => i,
            None => {
                cache.inv_fact.push((p, Rc::new(alloc::vec![Real::one(p)])));
                cache.inv_fact.len() - 1
            }
        };
        let have = cache.inv_fact[idx].1.len();
        if have <= n {
            let mut v: Vec<Real> = cache.inv_fact[idx].1.as_ref().clone();
            for k in have..=n {
                let next = &v[k - 1] / k as i64;
                v.push(next);
            }
            cache.inv_fact[idx].1 = Rc::new(v);
        }
        Rc::clone(&cache.inv_fact[idx].1)
    }

    /// `2^{−wp}`, the unit roundoff of the working precision.
    pub fn eps(&self) -> Real {
        self.one().ldexp(-(self.wp() as i64))
    }

    /// `2^{−precision_bits}`.
    pub fn target_eps(&self) -> Real {
        self.one().ldexp(-(self.precision_bits as i64))
    }
}

/// A complex value with an absolute error estimate.
#[derive(Clone, Debug)]
pub struct ApproxValue {
    pub value: Complex,
    pub abs_err: Real,
}

impl ApproxValue {
    pub fn new(value: Complex, abs_err: Real) -> Self {
        ApproxValue { value, abs_err }
    }

    /// Exact value (zero error).
    pub fn exact(value: Complex) -> Self {
        let p = value.prec();
        ApproxValue { value, abs_err: Real::zero(p) }
    }

    /// Multiply by an exactly known factor, scaling the error.
    pub fn scaled(&self, c: &Complex) -> Self {
        ApproxValue { value: &self.value * c, abs_err: &self.abs_err * &c.abs() }
    }

    /// Sum of two estimates with added errors.
    pub fn plus(&self, o: &ApproxValue) -> Self {
        ApproxValue { value: &self.value + &o.value, abs_err: &self.abs_err + &o.abs_err }
    }

    /// Difference of two estimates with added errors.
    pub fn minus(&self, o: &ApproxValue) -> Self {
        ApproxValue { value: &self.value - &o.value, abs_err: &self.abs_err + &o.abs_err }
    }
}
