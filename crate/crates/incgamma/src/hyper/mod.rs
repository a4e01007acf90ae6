//! Terminant re-expansions of the remainders, their error bounds and
//! Stokes-transition scans.

mod large_a;
mod scan;
mod z;

use alloc::vec::Vec;

use crate::coefficients::a_coeffs_even;
use crate::error::{Error, Result};
use crate::gamma::{Sector, SheetPoint};
use crate::numerics::{Complex, PrecisionContext, Real};

pub use large_a::{hyper_large_a, optimal_n_large_a};
pub use scan::{stokes_scan_large_a, stokes_scan_z, ScanRow};
pub use z::{hyper_z, optimal_nm_z};

/// Truncation and re-expansion indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HyperIndices {
    pub n: usize,
    /// Odd-part truncation for the `Γ(z,z)` expansion.
    pub m: Option<usize>,
    pub k: usize,
    /// Odd-part re-expansion length for the `Γ(z,z)` expansion.
    pub l: Option<usize>,
}

/// Truncated series plus one layer of terminant corrections.
#[derive(Clone, Debug)]
pub struct HyperEvaluation {
    pub base_sum: Complex,
    pub terminant_layer: Complex,
    /// Bound on `|remainder − terminant_layer|`, or its asymptotic order
    /// when `certified` is false.
    pub residual_bound: Real,
    pub certified: bool,
    pub indices: HyperIndices,
    pub sector: Sector,
}

impl HyperEvaluation {
    /// `base_sum + terminant_layer`.
    pub fn total(&self) -> Complex {
        &self.base_sum + &self.terminant_layer
    }
}

/// `a_{2k}` for `k < count` at working precision.
fn even_coeffs(count: usize, ctx: &PrecisionContext) -> Vec<Real> {
    if count == 0 {
        return Vec::new();
    }
    a_coeffs_even(count - 1).iter().map(|q| Real::from_rational(q, ctx.wp())).collect()
}

/// `w = value` put on the sheet whose total argument is
/// `arg(p) + quarter_turns·π/2`.
fn rotated(p: &SheetPoint, value: Complex, quarter_turns: i64, ctx: &PrecisionContext) -> SheetPoint {
    let total = p.arg_f64() + quarter_turns as f64 * core::f64::consts::FRAC_PI_2;
    let principal = value.arg(ctx).to_f64();
    let m = libm::round((total - principal) / (2.0 * core::f64::consts::PI)) as i64;
    SheetPoint::new(value, m)
}

fn check_index(name: &str, k: usize, limit: usize, limit_name: &str) -> Result<()> {
    if k > limit {
        return Err(Error::Domain(alloc::format!("{name} = {k} exceeds {limit_name} = {limit}")));
    }
    Ok(())
}

/// `Γ(n)` for a positive integer `n`.
fn gamma_int(n: usize, ctx: &PrecisionContext) -> Real {
    (1..n as i64).fold(ctx.one(), |acc, j| &acc * j)
}
