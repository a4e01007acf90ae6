use incgamma::gamma::SheetPoint;
use incgamma::numerics::parse_rational;
use incgamma::{PrecisionContext, Real};
use num_rational::BigRational;

use crate::error::{CliError, CliResult};

pub fn rational(name: &str, s: &str) -> CliResult<BigRational> {
    parse_rational(s).map_err(|e| CliError::usage(format!("--{name}: {e}")))
}

pub fn real(name: &str, s: &str, ctx: &PrecisionContext) -> CliResult<Real> {
    Ok(Real::from_rational(&rational(name, s)?, ctx.wp()))
}

pub fn positive(name: &str, s: &str, ctx: &PrecisionContext) -> CliResult<Real> {
    let r = real(name, s, ctx)?;
    if !r.is_positive() {
        return Err(CliError::usage(format!("--{name} must be positive, got {s}")));
    }
    Ok(r)
}

pub fn lambda(s: Option<&String>, ctx: &PrecisionContext) -> CliResult<Real> {
    let s = s.ok_or_else(|| CliError::usage("--lambda is required for the large-a expansion"))?;
    let l = real("lambda", s, ctx)?;
    if l <= ctx.one() {
        return Err(CliError::usage(format!("--lambda must exceed 1, got {s}")));
    }
    Ok(l)
}

/// `r·e^{iπt}` on the sheet reached by the total argument `πt`.
pub fn point(r: &Real, turns_pi: &Real, ctx: &PrecisionContext) -> SheetPoint {
    SheetPoint::polar(r, &(turns_pi * &ctx.pi()), ctx)
}

/// `from, from + step, …` up to `to`, all in units of π.
pub fn grid(from: f64, to: f64, step: f64) -> CliResult<Vec<f64>> {
    if !(from.is_finite() && to.is_finite() && step.is_finite()) {
        return Err(CliError::usage("grid bounds must be finite"));
    }
    if from > to {
        return Err(CliError::usage(format!("grid start {from} exceeds end {to}")));
    }
    if !(step > 0.0) {
        return Err(CliError::usage(format!("grid step must be positive, got {step}")));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| from + step * i as f64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_counts_endpoints() {
        assert_eq!(grid(0.8, 1.2, 0.01).unwrap().len(), 41);
        assert_eq!(grid(1.3, 1.7, 0.1).unwrap().len(), 5);
        assert_eq!(grid(1.0, 1.0, 0.5).unwrap(), [1.0]);
        assert!(grid(1.2, 0.8, 0.01).is_err());
        assert!(grid(0.0, 1.0, -0.1).is_err());
        assert!(grid(0.0, f64::NAN, 0.1).is_err());
    }
}
