//! Large-order behaviour of the expansion coefficients: inverse factorial
//! series for `b_n(λ)`, the four families of approximations for `a_{4n+1}`
//! and `a_{4n+3}`, and the Dirichlet series `ξ`.

mod a;
mod b;
mod xi;

use crate::numerics::{PrecisionContext, Real};

pub use a::{a_late, a_late_optimal_k, LateBranch};
pub use b::{b_late, b_late_optimal_k};
pub use xi::{xi_function, xi_integral, xi_series};

/// Which approximation produced a [`LateApprox`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LateVariant {
    /// Plain inverse factorial sums.
    InverseFactorial,
    /// Sums weighted by `ζ(2n−k+s)`.
    Zeta,
    /// Dingle's formal sums, weighted by `ζ(2n−k+s+1)`.
    Dingle,
    /// Formal sums weighted by `ξ(2n−k+s)`.
    Xi,
}

impl LateVariant {
    pub fn tag(&self) -> &'static str {
        match self {
            LateVariant::InverseFactorial => "INV_FACTORIAL",
            LateVariant::Zeta => "ZETA",
            LateVariant::Dingle => "DINGLE",
            LateVariant::Xi => "XI",
        }
    }
}

/// A truncated late-coefficient approximation.
#[derive(Clone, Debug)]
pub struct LateApprox {
    pub approx: Real,
    /// Rigorous bound on `|exact − approx|`; `None` for the formal variants.
    pub bound: Option<Real>,
    pub k: usize,
    pub variant: LateVariant,
}

impl LateApprox {
    /// True when no rigorous bound accompanies the value.
    pub fn is_heuristic(&self) -> bool {
        self.bound.is_none()
    }
}

/// `Γ(m + ½)` for `m = 0, …, m_max`.
pub(crate) fn gamma_half_integers(m_max: usize, ctx: &PrecisionContext) -> alloc::vec::Vec<Real> {
    let mut g = alloc::vec::Vec::with_capacity(m_max + 1);
    g.push(ctx.pi().sqrt());
    let half = ctx.frac(1, 2);
    for m in 1..=m_max {
        let next = &g[m - 1] * &(&ctx.int(m as i64 - 1) + &half);
        g.push(next);
    }
    g
}
