//! Quadrature oracles for `Γ(a, z)` and the sheet-continuation formula.

use alloc::format;

use crate::error::{Error, Result};
use crate::numerics::{integrate_semi_infinite, ApproxValue, Complex, PrecisionContext, QuadHint, Real};

use super::{gamma_complex, gamma_star, SheetPoint};

/// Which integral produced an oracle value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OracleRoute {
    /// `Γ(a,z) = z^a ∫_0^∞ exp(at − z e^t) dt`, for `Re z > 0`.
    LogIntegral,
    /// `Γ(a,w) = e^{−w} ∫_0^∞ (w+u)^{a−1} e^{−u} du` along the ray
    /// `u = s e^{iα}`.
    Ray { alpha: f64 },
}

const LOG_ROUTE_MAX_ARG: f64 = core::f64::consts::FRAC_PI_4;
const RAY_MARGIN: f64 = 0.3;

fn arg_f64(c: &Complex) -> f64 {
    let (x, y) = c.to_f64();
    libm::atan2(y, x)
}

fn abs_f64(c: &Complex) -> f64 {
    libm::exp2(c.log2_abs())
}

/// `Γ(a,z)/(z^a e^{−z})` on the principal branch, with the route used.
///
/// The normalisation keeps the value of moderate size even when `Γ(a,z)`
/// itself overflows a double.
pub fn incomplete_gamma_normalized(
    a: &Complex,
    z: &Complex,
    ctx: &PrecisionContext,
) -> Result<(ApproxValue, OracleRoute)> {
    if z.is_zero() {
        return Err(Error::Domain("incomplete gamma oracle needs z != 0".into()));
    }
    let use_log = z.re.is_positive() && arg_f64(z).abs() <= LOG_ROUTE_MAX_ARG && arg_f64(a).abs() <= LOG_ROUTE_MAX_ARG;
    if use_log {
        Ok((log_integral(a, z, ctx)?, OracleRoute::LogIntegral))
    } else {
        let (v, alpha) = ray_integral(a, z, ctx)?;
        Ok((v, OracleRoute::Ray { alpha }))
    }
}

/// `Γ(a,z)/(z^a e^{−z})` forced through the ray integral, for any `z ≠ 0`
/// off the negative real axis.
pub fn incomplete_gamma_normalized_ray(a: &Complex, z: &Complex, ctx: &PrecisionContext) -> Result<ApproxValue> {
    if z.is_zero() {
        return Err(Error::Domain("incomplete gamma oracle needs z != 0".into()));
    }
    Ok(ray_integral(a, z, ctx)?.0)
}

/// `Γ(a, z)` on the principal branch of `z^a`.
pub fn incomplete_gamma_oracle(a: &Complex, z: &Complex, ctx: &PrecisionContext) -> Result<ApproxValue> {
    let (v, _) = incomplete_gamma_normalized(a, z, ctx)?;
    let pref = (&(a * &z.ln(ctx)) - z).exp(ctx);
    Ok(v.scaled(&pref))
}

/// `∫_0^T exp(at − z(e^t − 1)) dt`, the normalised log-variable integral.
fn log_integral(a: &Complex, z: &Complex, ctx: &PrecisionContext) -> Result<ApproxValue> {
    let (ar, _) = a.to_f64();
    let (zr, _) = z.to_f64();
    let expo = |t: f64| ar * t - zr * libm::expm1(t);
    let t_peak = if ar > zr { libm::log(ar / zr) } else { 0.0 };
    let peak = expo(t_peak).max(0.0);
    let need = (ctx.wp() as f64 + 16.0) * core::f64::consts::LN_2;
    let mut t_max = t_peak + 1.0;
    while peak - expo(t_max) < need {
        t_max *= 1.5;
    }
    let dz = abs_f64(&(z - a)).max(libm::sqrt(abs_f64(a))).max(1.0);
    let scale = if t_peak > 0.0 { t_peak } else { 1.0 / dz };
    let cutoff = ctx.f64(t_max);
    let one = ctx.one();
    integrate_semi_infinite(
        |t, _| {
            if *t > cutoff {
                return Ok(ctx.czero());
            }
            let em1 = &t.exp(ctx) - &one;
            Ok((&a.scale(t) - &z.scale(&em1)).exp(ctx))
        },
        QuadHint::new(scale, 0.0),
        ctx,
    )
}

/// Descent direction for `(1 + u/w)^{b−1} e^{−u}` leaving `u = 0`.
fn ray_angle(b: &Complex, w: &Complex) -> (f64, f64) {
    let (br, bi) = b.to_f64();
    let (wr, wi) = w.to_f64();
    let (bm1r, bm1i) = (br - 1.0, bi);
    // g1 = (b−1)/w − 1, g2 = −(b−1)/w²
    let wn = wr * wr + wi * wi;
    let q = ((bm1r * wr + bm1i * wi) / wn, (bm1i * wr - bm1r * wi) / wn);
    let g1 = (q.0 - 1.0, q.1);
    let g2 = (-(q.0 * wr + q.1 * wi) / wn, -(q.1 * wr - q.0 * wi) / wn);
    let g1m = libm::hypot(g1.0, g1.1);
    let g2m = libm::hypot(g2.0, g2.1);
    let pi = core::f64::consts::PI;
    let (mut alpha, scale) = if g1m * g1m >= 4.0 * g2m {
        (pi - libm::atan2(g1.1, g1.0), 1.0 / g1m)
    } else {
        ((pi - libm::atan2(g2.1, g2.0)) / 2.0, 1.0 / libm::sqrt(g2m))
    };
    while alpha > pi / 2.0 {
        alpha -= pi;
    }
    while alpha <= -pi / 2.0 {
        alpha += pi;
    }
    let phi = libm::atan2(wi, wr);
    let lo = (-pi / 2.0 + RAY_MARGIN).max(phi - pi + RAY_MARGIN);
    let hi = (pi / 2.0 - RAY_MARGIN).min(phi + pi - RAY_MARGIN);
    (alpha.clamp(lo, hi), scale.clamp(1e-3, 1e3))
}

/// `Γ(b,w)/(w^b e^{−w}) = w^{−1} ∫_0^∞ exp((b−1) Log(1+u/w) − u) du`.
fn ray_integral(b: &Complex, w: &Complex, ctx: &PrecisionContext) -> Result<(ApproxValue, f64)> {
    let (alpha, scale) = ray_angle(b, w);
    let dir = Complex::cis(&ctx.f64(alpha), ctx);
    let dir_over_w = &dir / w;
    let bm1 = b - 1;
    let v = integrate_semi_infinite(
        |s, _| {
            let v = &ctx.cone() + &dir_over_w.scale(s);
            Ok((&(&bm1 * &v.ln(ctx)) - &dir.scale(s)).exp(ctx))
        },
        QuadHint::new(scale, 0.0),
        ctx,
    )?;
    Ok((v.scaled(&dir_over_w), alpha))
}

/// `Γ(a, z e^{2πim}) = e^{2πima} Γ(a,z) + (1 − e^{2πima}) Γ(a)`.
pub fn continue_incomplete_gamma(a: &Complex, z: &Complex, m: i64, ctx: &PrecisionContext) -> Result<ApproxValue> {
    let base = incomplete_gamma_oracle(a, z, ctx)?;
    if m == 0 {
        return Ok(base);
    }
    let mono = a.scale(&ctx.pi().ldexp(1)).mul_i().scale(&Real::from_i64(m, ctx.wp())).exp(ctx);
    let g = gamma_complex(a, ctx).map_err(|e| Error::Domain(format!("continuation needs Γ(a): {e}")))?;
    let rest = &(&ctx.cone() - &mono) * &g;
    let v = base.scaled(&mono);
    Ok(ApproxValue::new(&v.value + &rest, v.abs_err))
}

/// `Γ(A, λA)/(Z^A e^{−Z})` with `Z = λA` for `A` on any sheet, from the
/// principal oracle and the monodromy
/// `G_m = G_0 + (e^{−2πima} − 1) √(2π/a) Γ*(a) e^{a(λ−log λ−1)}`.
pub fn incomplete_gamma_large_a_normalized(a: &SheetPoint, lambda: &Real, ctx: &PrecisionContext) -> Result<ApproxValue> {
    if *lambda <= ctx.one() {
        return Err(Error::Domain(format!("λ must exceed 1, got {:.10}", lambda)));
    }
    let av = &a.value;
    let z = av.scale(lambda);
    let (base, _) = incomplete_gamma_normalized(av, &z, ctx)?;
    if a.m == 0 {
        return Ok(base);
    }
    let two_pi = ctx.pi().ldexp(1);
    let kappa = &(lambda - &lambda.ln(ctx)) - 1;
    let mono = av.scale(&(&two_pi * (-a.m))).mul_i().exp(ctx);
    let gs = gamma_star(av, ctx)?.value;
    let root = (&Complex::from_real(two_pi) / av).sqrt(ctx);
    let jump = &(&(&mono - &ctx.cone()) * &(&root * &gs)) * &av.scale(&kappa).exp(ctx);
    Ok(ApproxValue::new(&base.value + &jump, base.abs_err))
}

/// `Γ(Z, Z)/(√(π/2) Z^{Z−½} e^{−Z})` for `Z` on any sheet, from the
/// principal value `z` through
/// `F_m = (−1)^m (F_0 + (e^{−2πimz} − 1) · 2Γ*(z))`.
pub fn incomplete_gamma_zz_normalized(z: &SheetPoint, ctx: &PrecisionContext) -> Result<ApproxValue> {
    let zv = &z.value;
    let (g, _) = incomplete_gamma_normalized(zv, zv, ctx)?;
    let half_pi = ctx.pi().ldexp(-1);
    let scale = &zv.sqrt(ctx) / &Complex::from_real(half_pi.sqrt());
    let base = g.scaled(&scale);
    if z.m == 0 {
        return Ok(base);
    }
    let two_pi = ctx.pi().ldexp(1);
    let mono = zv.scale(&(&two_pi * (-z.m))).mul_i().exp(ctx);
    let gs = gamma_star(zv, ctx)?.value;
    let v = &base.value + &(&(&mono - &ctx.cone()) * &gs.ldexp(1));
    let v = if z.m % 2 == 0 { v } else { -v };
    Ok(ApproxValue::new(v, base.abs_err))
}
