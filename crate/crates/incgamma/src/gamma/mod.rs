//! The gamma function, the scaled gamma function
//! `Γ*(z) = Γ(z)/(√(2π) z^{z−½} e^{−z})`, its continuation to other sheets,
//! and quadrature oracles for the incomplete gamma function.

mod incomplete;
mod stirling;

use alloc::format;

use crate::error::{Error, Result};
use crate::numerics::{Complex, PrecisionContext, Real};

pub(crate) use stirling::bernoulli_even;
pub use incomplete::{
    continue_incomplete_gamma, incomplete_gamma_large_a_normalized, incomplete_gamma_normalized,
    incomplete_gamma_normalized_ray, incomplete_gamma_oracle, incomplete_gamma_zz_normalized, OracleRoute,
};

/// Extra bits carried through the Stirling evaluation.
const STIRLING_GUARD: usize = 24;

/// Argument of a large parameter on the Riemann surface of the logarithm:
/// principal argument `theta` plus `m` full turns.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sector {
    pub theta: f64,
    pub m: i64,
}

impl Sector {
    /// Principal sector (`m = 0`); `theta` must lie in `(−π, π]`.
    pub fn principal(theta: f64) -> Result<Self> {
        Sector::new(theta, 0)
    }

    pub fn new(theta: f64, m: i64) -> Result<Self> {
        let pi = core::f64::consts::PI;
        if !(theta > -pi && theta <= pi) {
            return Err(Error::Domain(format!("principal argument {theta} outside (-pi, pi]")));
        }
        Ok(Sector { theta, m })
    }

    /// Splits a total argument into principal part and sheet index.
    pub fn from_total(phi: f64) -> Self {
        let two_pi = 2.0 * core::f64::consts::PI;
        let mut m = libm::floor((phi + core::f64::consts::PI) / two_pi) as i64;
        let mut theta = phi - two_pi * m as f64;
        if theta <= -core::f64::consts::PI {
            theta += two_pi;
            m -= 1;
        }
        Sector { theta, m }
    }

    /// `theta + 2πm`.
    pub fn total(&self) -> f64 {
        self.theta + 2.0 * core::f64::consts::PI * self.m as f64
    }
}

/// A point on the Riemann surface of the logarithm: the numeric value
/// (principal argument in `(−π, π]`) and the number of extra full turns.
#[derive(Clone, Debug, PartialEq)]
pub struct SheetPoint {
    pub value: Complex,
    pub m: i64,
}

impl SheetPoint {
    pub fn new(value: Complex, m: i64) -> Self {
        SheetPoint { value, m }
    }

    pub fn principal(value: Complex) -> Self {
        SheetPoint { value, m: 0 }
    }

    /// `r e^{iφ}` with total argument `φ`.
    pub fn polar(r: &Real, total_arg: &Real, ctx: &PrecisionContext) -> Self {
        let two_pi = ctx.pi().ldexp(1);
        let pi = ctx.pi();
        let m = ((total_arg + &pi) / &two_pi).floor();
        let mut mi = m.to_f64() as i64;
        let mut theta = total_arg - &(&two_pi * mi);
        // keep −π exclusive
        if theta <= -&pi {
            theta = &theta + &two_pi;
            mi -= 1;
        }
        SheetPoint { value: Complex::from_polar(r, &theta, ctx), m: mi }
    }

    /// Polar form from doubles.
    pub fn polar_f64(r: f64, total_arg: f64, ctx: &PrecisionContext) -> Self {
        SheetPoint::polar(&ctx.f64(r), &ctx.f64(total_arg), ctx)
    }

    /// Total argument as a double.
    pub fn arg_f64(&self) -> f64 {
        let (x, y) = self.value.to_f64();
        let th = if y == 0.0 && x < 0.0 { core::f64::consts::PI } else { libm::atan2(y, x) };
        th + 2.0 * core::f64::consts::PI * self.m as f64
    }

    pub fn sector(&self) -> Sector {
        Sector::from_total(self.arg_f64())
    }

    /// Logarithm on this sheet.
    pub fn ln(&self, ctx: &PrecisionContext) -> Complex {
        let l = self.value.ln(ctx);
        if self.m == 0 {
            return l;
        }
        let turn = &ctx.pi().ldexp(1) * self.m;
        Complex::new(l.re, &l.im + &turn)
    }

    /// Square root continued from the positive axis.
    pub fn sqrt(&self, ctx: &PrecisionContext) -> Complex {
        let r = self.value.sqrt(ctx);
        if self.m % 2 == 0 {
            r
        } else {
            -r
        }
    }

    /// `self^w` on this sheet.
    pub fn pow(&self, w: &Complex, ctx: &PrecisionContext) -> Complex {
        (w * &self.ln(ctx)).exp(ctx)
    }
}

/// A value of `Γ*` together with its argument.
#[derive(Clone, Debug)]
pub struct ScaledGammaValue {
    pub value: Complex,
    pub argument: Complex,
}

fn check_principal(z: &Complex, what: &str) -> Result<()> {
    if z.is_zero() {
        return Err(Error::Domain(format!("{what} is singular at 0")));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("{what} needs a finite argument")));
    }
    if z.im.is_zero() && z.re.is_negative() {
        return Err(Error::Sector(format!(
            "{what} needs |arg z| < pi; continue from the principal sheet instead"
        )));
    }
    Ok(())
}

/// `log Γ*(z)` at precision `p`, principal branch, `|arg z| < π`.
///
/// The argument is shifted to `w = z + m` with `Re w` beyond the Stirling
/// threshold; returns the exponent and the product `∏_{j<m}(z+j)` so that
/// `Γ*(z) = exp(E)/P`.
fn log_gamma_star_parts(z: &Complex, p: usize, ctx: &PrecisionContext) -> (Complex, Complex) {
    let z = z.with_prec(p);
    let threshold = stirling::threshold(p);
    let re = z.re.to_f64();
    let m = if re >= threshold { 0 } else { libm::ceil(threshold - re) as i64 };
    let mut prod = Complex::one(p);
    for j in 0..m {
        prod = &prod * &(&z + j);
    }
    let w = &z + m;
    let l = stirling::log_series(&w, p, ctx);
    if m == 0 {
        return (l, prod);
    }
    let half = Real::frac(1, 2, p);
    let tw = &(&w - &half) * &w.ln(ctx);
    let tz = &(&z - &half) * &z.ln(ctx);
    let e = &(&(&l + &tw) - &tz) - m;
    (e, prod)
}

/// `Γ*(z)` for `|arg z| < π`.
pub fn gamma_star(z: &Complex, ctx: &PrecisionContext) -> Result<ScaledGammaValue> {
    check_principal(z, "gamma_star")?;
    let p = ctx.wp() + STIRLING_GUARD;
    let (e, prod) = log_gamma_star_parts(z, p, ctx);
    let v = &e.exp(ctx) / &prod;
    Ok(ScaledGammaValue { value: v.with_prec(ctx.wp()), argument: z.clone() })
}

/// `1/Γ*(z)` for `|arg z| < π`, evaluated directly rather than by division.
pub fn recip_gamma_star(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    check_principal(z, "recip_gamma_star")?;
    let p = ctx.wp() + STIRLING_GUARD;
    let (e, prod) = log_gamma_star_parts(z, p, ctx);
    Ok((&(-&e).exp(ctx) * &prod).with_prec(ctx.wp()))
}

/// `1/Γ*(t)` for real `t > 0` whose logarithm is already known.
pub(crate) fn recip_gamma_star_real(t: &Real, ln_t: &Real, ctx: &PrecisionContext) -> Real {
    let p = ctx.wp() + STIRLING_GUARD;
    let t = t.with_prec(p);
    let threshold = stirling::threshold(p);
    let tf = t.to_f64();
    let m = if tf >= threshold { 0 } else { libm::ceil(threshold - tf) as i64 };
    let mut prod = Real::one(p);
    for j in 0..m {
        prod = &prod * &(&t + j);
    }
    let w = &t + m;
    let l = stirling::log_series_real(&w, p, ctx);
    let e = if m == 0 {
        l
    } else {
        let half = Real::frac(1, 2, p);
        &(&l + &(&(&w - &half) * &w.ln(ctx))) - &(&(&(&t - &half) * &ln_t.with_prec(p)) + m)
    };
    (&(-&e).exp(ctx) * &prod).with_prec(ctx.wp())
}

/// `Γ(z)` for any complex `z` other than a non-positive integer.
pub fn gamma_complex(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let wp = ctx.wp();
    if z.im.is_zero() && !z.re.is_positive() && z.re.floor() == z.re {
        return Err(Error::Domain(format!("gamma has a pole at z = {:.6}", z.re)));
    }
    let half = Real::frac(1, 2, wp);
    if z.re < half {
        // Γ(z) Γ(1−z) = π / sin(πz)
        let one = ctx.cone();
        let g = gamma_complex(&(&one - z), ctx)?;
        let pi = ctx.pi();
        let s = sin_complex(&z.scale(&pi), ctx);
        return Ok(Complex::from_real(pi) / (&s * &g));
    }
    let p = wp + STIRLING_GUARD;
    let zp = z.with_prec(p);
    let (e, prod) = log_gamma_star_parts(&zp, p, ctx);
    let halfp = Real::frac(1, 2, p);
    let lead = &(&(&zp - &halfp) * &zp.ln(ctx)) - &zp;
    let two_pi = ctx.pi_at(p).ldexp(1);
    let v = (&(&e + &lead).exp(ctx) / &prod).scale(&two_pi.sqrt());
    Ok(v.with_prec(wp))
}

pub(crate) fn sin_complex(w: &Complex, ctx: &PrecisionContext) -> Complex {
    let a = w.mul_i().exp(ctx);
    let b = (-&w.mul_i()).exp(ctx);
    // (e^{iw} − e^{−iw}) / (2i)
    -(&a - &b).mul_i().ldexp(-1)
}

/// `e^{2πi s z}` for `s = ±1`.
fn e2piz(z: &Complex, s: i64, ctx: &PrecisionContext) -> Complex {
    let two_pi = ctx.pi().ldexp(1);
    z.scale(&two_pi).mul_i().scale(&Real::from_i64(s, ctx.wp())).exp(ctx)
}

/// `Γ*` continued from the principal value at `z` to the point
/// `z·e^{iπk}` on the Riemann surface, using the connection formulas
/// `Γ*(z) Γ*(z e^{∓πi}) = 1/(1 − e^{±2πiz})` and
/// `Γ*(z) = −e^{±2πiz} Γ*(z e^{±2πi})`.
///
/// Odd `k` go through the reflection identity, so `Γ*(−z)` is never
/// evaluated directly.
pub fn gamma_star_continued(z: &Complex, half_turns: i64, ctx: &PrecisionContext) -> Result<Complex> {
    check_principal(z, "gamma_star_continued")?;
    let base = gamma_star(z, ctx)?.value;
    if half_turns == 0 {
        return Ok(base);
    }
    let upper = z.im.is_positive() || (z.im.is_zero() && z.re.is_positive());
    // Target on the principal sheet of the numeric value w and full turns m.
    let (w, mut m, w_val) = if half_turns % 2 == 0 {
        (z.clone(), half_turns / 2, base)
    } else {
        // w = z e^{∓πi} with the sign keeping arg w principal.
        let s = if upper { 1 } else { -1 };
        let den = &ctx.cone() - &e2piz(z, s, ctx);
        if den.log2_abs() < -(ctx.wp() as f64) + 4.0 {
            return Err(Error::Singular(format!("1 - exp(±2πiz) vanishes at z = {:.6}", z)));
        }
        let wv = (&den * &base).recip();
        // half_turns = ∓1 + 2m
        let m = (half_turns + s) / 2;
        (-z, m, wv)
    };
    let mut v = w_val;
    let step = if m > 0 { -1 } else { 1 };
    let f = -&e2piz(&w, step, ctx);
    while m != 0 {
        v = &v * &f;
        m += step;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sector_split() {
        let s = Sector::from_total(1.2 * core::f64::consts::PI);
        assert_eq!(s.m, 1);
        assert!((s.theta + 0.8 * core::f64::consts::PI).abs() < 1e-12);
        assert!((s.total() - 1.2 * core::f64::consts::PI).abs() < 1e-12);
        assert_eq!(Sector::from_total(core::f64::consts::PI).m, 0);
        assert!(Sector::new(4.0, 0).is_err());
    }

    #[test]
    fn sine_matches_real_sine() {
        let ctx = PrecisionContext::new(128).unwrap();
        let s = sin_complex(&ctx.complex(0.7, 0.0), &ctx);
        assert!((&s.re - &ctx.f64(0.7).sin(&ctx)).abs().log2_abs() < -150.0);
        assert!(s.im.abs().log2_abs() < -150.0);
    }
}
