//! The scaled terminant `T̂_p(w) = e^{πip} Γ(p) Γ(1−p, w)/(2πi)` on every
//! sheet of `w`, the Stokes variable `c(φ)` and the error-function
//! smoothing of the Stokes jump.

use alloc::format;

use crate::error::{Error, Result};
use crate::gamma::{gamma_complex, incomplete_gamma_normalized_ray, SheetPoint};
use crate::numerics::{erf_complex, integrate_semi_infinite, Complex, PrecisionContext, QuadHint, Real};

use core::f64::consts::PI;

/// Widest `|arg w|` evaluated through the defining integral by default.
const INTEGRAL_MAX_ARG: f64 = 0.75 * PI;
const POLE_GUARD: f64 = 1.0 / 256.0;

/// How a terminant value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TerminantRoute {
    /// `t^{p−1} e^{−t}/(w+t)` integrated over `(0, ∞)`.
    Integral,
    /// `Γ(1−p, w)` on the principal sheet by a rotated ray, then continued.
    GammaContinued,
    /// Leading error-function approximation.
    ErfSmoothed,
}

impl TerminantRoute {
    pub fn tag(&self) -> &'static str {
        match self {
            TerminantRoute::Integral => "INTEGRAL",
            TerminantRoute::GammaContinued => "GAMMA_CONTINUED",
            TerminantRoute::ErfSmoothed => "ERF_SMOOTHED",
        }
    }
}

/// A terminant value with the point it was evaluated at.
#[derive(Clone, Debug)]
pub struct TerminantValue {
    pub value: Complex,
    /// Error estimate; for [`TerminantRoute::ErfSmoothed`] the size
    /// `e^{−|w| Re c²/2}/√|w|` of the omitted term, without its constant.
    pub abs_err: Real,
    pub p: Real,
    pub w: SheetPoint,
    pub route: TerminantRoute,
}

/// `c(φ)` with `½c² = 1 + i(φ−π) − e^{i(φ−π)}`, on the branch with
/// `c ≈ φ − π` near `π`.
#[derive(Clone, Debug)]
pub struct StokesMultiplier {
    pub c: Complex,
    pub phi: Real,
}

fn check_p(p: &Real) -> Result<()> {
    if !p.is_positive() {
        return Err(Error::Domain(format!("terminant order must be positive, got {:.10}", p)));
    }
    Ok(())
}

/// `T̂_p(w)` for `p > 0` and `w` on any sheet.
pub fn terminant(p: &Real, w: &SheetPoint, ctx: &PrecisionContext) -> Result<TerminantValue> {
    check_p(p)?;
    if w.m == 0 && w.arg_f64().abs() <= INTEGRAL_MAX_ARG {
        return terminant_integral(p, &w.value, ctx);
    }
    terminant_continued(p, w, ctx)
}

/// `T̂_p(w) = e^{πip} w^{1−p} e^{−w}/(2πi) ∫_0^∞ t^{p−1} e^{−t}/(w+t) dt`,
/// `|arg w| < π`.
pub fn terminant_integral(p: &Real, w: &Complex, ctx: &PrecisionContext) -> Result<TerminantValue> {
    check_p(p)?;
    if w.is_zero() {
        return Err(Error::Domain("terminant needs w ≠ 0".into()));
    }
    let (x, y) = w.to_f64();
    let reach = if x >= 0.0 { 1.0 } else { y.abs() / libm::hypot(x, y) };
    if reach < POLE_GUARD {
        return Err(Error::Singular(format!(
            "w = ({x:.6}, {y:.6}) is too close to the negative axis for the defining integral"
        )));
    }
    let pm1 = p - 1;
    let pf = p.to_f64();
    let hint = QuadHint { alpha: pf - 1.0, ..QuadHint::gamma_like(pf - 1.0, 1.0) };
    let v = integrate_semi_infinite(
        |t, lt| {
            let num = (&(&pm1 * lt) - t).exp(ctx);
            Ok(Complex::from_real(num) / &(w + t))
        },
        hint,
        ctx,
    )?;
    let one_minus_p = Complex::from_real(&ctx.one() - p);
    let pre = &(&(&one_minus_p * &w.ln(ctx)) - w).exp(ctx) * &phase_over_2pi_i(p, ctx);
    let v = v.scaled(&pre);
    Ok(TerminantValue {
        value: v.value,
        abs_err: v.abs_err,
        p: p.clone(),
        w: SheetPoint::principal(w.clone()),
        route: TerminantRoute::Integral,
    })
}

/// `e^{πip}/(2πi)`.
fn phase_over_2pi_i(p: &Real, ctx: &PrecisionContext) -> Complex {
    let pi = ctx.pi();
    let e = Complex::cis(&(&pi * p), ctx);
    let den = Complex::new(ctx.zero(), pi.ldexp(1));
    &e / &den
}

/// `T̂_p(w e^{2πim}) = e^{−2πimp} T̂_p(w) + Σ_{0≤j<m} e^{−2πijp}` for
/// `m > 0`, and `… − Σ_{1≤j≤|m|} e^{2πijp}` for `m < 0`.
fn terminant_continued(p: &Real, w: &SheetPoint, ctx: &PrecisionContext) -> Result<TerminantValue> {
    let b = Complex::from_real(&ctx.one() - p);
    let g = incomplete_gamma_normalized_ray(&b, &w.value, ctx)?;
    let gp = gamma_complex(&Complex::from_real(p.clone()), ctx)?;
    let pre = &(&(&(&b * &w.value.ln(ctx)) - &w.value).exp(ctx) * &gp) * &phase_over_2pi_i(p, ctx);
    let base = g.scaled(&pre);
    let two_pi_p = &ctx.pi().ldexp(1) * p;
    let turn = |k: i64| Complex::cis(&(&two_pi_p * k), ctx);
    let mut value = &base.value * &turn(-w.m);
    if w.m > 0 {
        for j in 0..w.m {
            value = &value + &turn(-j);
        }
    } else {
        for j in 1..=-w.m {
            value = &value - &turn(j);
        }
    }
    Ok(TerminantValue { value, abs_err: base.abs_err, p: p.clone(), w: w.clone(), route: TerminantRoute::GammaContinued })
}

/// `c(φ) = ψ √(2g(ψ)/ψ²)` with `ψ = φ − π` and `g(ψ) = 1 + iψ − e^{iψ}`;
/// `Re g = 1 − cos ψ ≥ 0` keeps the principal root on a single branch for
/// every real `φ`.
pub fn c_of_phi(phi: &Real, ctx: &PrecisionContext) -> StokesMultiplier {
    let phi = phi.with_prec(ctx.wp());
    let psi = &phi - &ctx.pi();
    if psi.is_zero() {
        return StokesMultiplier { c: ctx.czero(), phi };
    }
    let g = stokes_g(&psi, ctx);
    let h = g.ldexp(1).scale(&(&psi * &psi).recip());
    StokesMultiplier { c: h.sqrt(ctx).scale(&psi), phi }
}

/// `1 + iψ − e^{iψ} = −Σ_{k≥2} (iψ)^k/k!`.
fn stokes_g(psi: &Real, ctx: &PrecisionContext) -> Complex {
    if psi.abs() > ctx.one() {
        let e = Complex::cis(psi, ctx);
        return Complex::new(&ctx.one() - &e.re, psi - &e.im);
    }
    let ipsi = Complex::new(ctx.zero(), psi.clone());
    let mut term = &(&ipsi * &ipsi) / 2;
    let mut sum = ctx.czero();
    let floor = term.log2_abs() - ctx.wp() as f64 - 8.0;
    let mut k = 2;
    while term.log2_abs() > floor {
        sum = &sum - &term;
        k += 1;
        term = &(&term * &ipsi) / k;
    }
    sum
}

/// Residual `½c² − (1 + i(φ−π) − e^{i(φ−π)})`.
pub fn stokes_residual(s: &StokesMultiplier, ctx: &PrecisionContext) -> Complex {
    let psi = &s.phi - &ctx.pi();
    &(&s.c * &s.c).ldexp(-1) - &stokes_g(&psi, ctx)
}

/// Error-function approximation of `T̂_p(w)` near the Stokes lines, for
/// `p ≈ |w|`: `½ + ½ erf(c(φ)√(|w|/2))` for `0 ≤ φ < 3π`, and
/// `e^{2πip}(−½ + ½ erf(−c̄(−φ)√(|w|/2)))` for `−3π < φ < 0`, where `φ` is the
/// total argument of `w`.
pub fn terminant_smoothed(p: &Real, w: &SheetPoint, ctx: &PrecisionContext) -> Result<TerminantValue> {
    check_p(p)?;
    let two_pi = ctx.pi().ldexp(1);
    let phi = &w.value.arg(ctx) + &(&two_pi * w.m);
    let three_pi = &ctx.pi() * 3;
    if phi.abs() >= three_pi {
        return Err(Error::Sector(format!("smoothing holds for |arg w| < 3π, got {:.6}", phi.to_f64())));
    }
    let r = w.value.abs();
    let root = r.ldexp(-1).sqrt();
    let half = ctx.frac(1, 2);
    let (value, c2) = if !phi.is_negative() {
        let c = c_of_phi(&phi, ctx).c;
        let e = erf_complex(&c.scale(&root), ctx);
        (&e.scale(&half) + &half, &c * &c)
    } else {
        let c = -c_of_phi(&-&phi, ctx).c.conj();
        let e = erf_complex(&c.scale(&root), ctx);
        let v = &e.scale(&half) - &half;
        (&v * &Complex::cis(&(&two_pi * p), ctx), &c * &c)
    };
    let abs_err = &(-(&(&r * &c2.re).ldexp(-1))).exp(ctx) / &r.sqrt();
    Ok(TerminantValue { value, abs_err, p: p.clone(), w: w.clone(), route: TerminantRoute::ErfSmoothed })
}
