//! Truncated large-parameter expansions of `Γ(a, λa)` and `Γ(z, z)`, their
//! remainders by quadrature of the resurgence integrals, and explicit
//! remainder bounds.

mod large_a;
mod z_series;

use crate::gamma::Sector;
use crate::numerics::{Complex, Real};

pub use large_a::{
    bound_factors_large_a, error_bound_large_a, eval_series_large_a, large_a_terms, meijer_factor, remainder_quadrature_large_a,
    remainder_quadratures_large_a, solve_meijer_phi,
};
pub use z_series::{
    bound_candidates_z, error_bound_z, eval_series_z, remainder_quadrature_z, remainder_quadratures_z, z_series_terms,
};

/// Which estimate produced a remainder bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundRegime {
    /// `|term_N|` times `1` or `|csc θ|`.
    Csc,
    /// Rotated-contour bound `csc(θ−φ*)/cos^{N+1}φ*` with optimal `φ*`.
    Meijer,
    /// `√(e(N+3/2)) |term_N|` close to the Stokes lines.
    NearStokes,
    /// Two to four leading omitted terms, depending on `N mod 4`.
    Mod4,
    /// Four omitted terms times `1` or `|csc 2θ|`.
    Sector,
    /// Two-sided enclosure for positive real `z`.
    PositiveReal,
}

impl BoundRegime {
    pub fn tag(&self) -> &'static str {
        match self {
            BoundRegime::Csc => "CSC",
            BoundRegime::Meijer => "MEIJER",
            BoundRegime::NearStokes => "NEAR_STOKES",
            BoundRegime::Mod4 => "MOD4",
            BoundRegime::Sector => "SECTOR",
            BoundRegime::PositiveReal => "POSITIVE_REAL",
        }
    }
}

/// A remainder bound with its provenance.
#[derive(Clone, Debug)]
pub struct RemainderBound {
    /// Upper bound for `|R_N|`.
    pub bound: Real,
    /// Enclosure `lo < R_N < hi` when the remainder is known to be real.
    pub interval: Option<(Real, Real)>,
    pub regime: BoundRegime,
}

/// A truncated series with its remainder bound.
#[derive(Clone, Debug)]
pub struct SeriesEvaluation {
    pub partial_sum: Complex,
    /// Number of terms summed.
    pub n: usize,
    /// First omitted term.
    pub next_term: Complex,
    /// `None` when the argument lies outside every certified sector.
    pub bound: Option<RemainderBound>,
    pub sector: Sector,
}

fn pick(cands: alloc::vec::Vec<(f64, BoundRegime)>) -> Option<(f64, BoundRegime)> {
    cands.into_iter().filter(|(f, _)| f.is_finite()).min_by(|x, y| x.0.total_cmp(&y.0))
}
