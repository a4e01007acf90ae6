use alloc::format;
use alloc::vec::Vec;

use super::{pick, BoundRegime, RemainderBound, SeriesEvaluation};
use crate::coefficients::b_poly_recurrence;
use crate::error::{Error, Result};
use crate::gamma::{recip_gamma_star_real, SheetPoint};
use crate::numerics::{integrate_semi_infinite_vec, ApproxValue, Complex, PrecisionContext, QuadHint, Real};

use core::f64::consts::{E, FRAC_PI_2, PI};

/// Smallest admissible `|1 + t/a|` on the integration ray.
const POLE_GUARD: f64 = 1.0 / 256.0;

fn check_lambda(lambda: &Real, ctx: &PrecisionContext) -> Result<()> {
    if *lambda <= ctx.one() {
        return Err(Error::Domain(format!("λ must exceed 1, got {:.10}", lambda)));
    }
    Ok(())
}

fn kappa(lambda: &Real, ctx: &PrecisionContext) -> Real {
    &(lambda - &lambda.ln(ctx)) - 1
}

/// Terms `(−a)^n b_n(λ)/(z−a)^{2n+1} = (−1)^n b_n(λ)/((λ−1)^{2n+1} a^{n+1})`
/// for `n < count`.
pub fn large_a_terms(a: &Complex, lambda: &Real, count: usize, ctx: &PrecisionContext) -> Vec<Complex> {
    let polys = b_poly_recurrence(count.saturating_sub(1));
    let lambda = lambda.with_prec(ctx.wp());
    let lm1 = &lambda - 1;
    let base = (a.scale(&lm1)).recip();
    let q = -&(a.scale(&(&lm1 * &lm1))).recip();
    let mut w = base;
    let mut out = Vec::with_capacity(count);
    for p in polys.iter().take(count) {
        out.push(w.scale(&p.eval_real(&lambda)));
        w = &w * &q;
    }
    out
}

/// Sum of the first `n` terms of the large-`a` series for
/// `Γ(a,λa)/(z^a e^{−z})`, with the bound for the sector of `a`.
pub fn eval_series_large_a(a: &SheetPoint, lambda: &Real, n: usize, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    check_lambda(lambda, ctx)?;
    let terms = large_a_terms(&a.value, lambda, n + 1, ctx);
    let sum = terms[..n].iter().fold(ctx.czero(), |s, t| &s + t);
    let bound = error_bound_large_a(a, lambda, n, ctx).ok();
    Ok(SeriesEvaluation { partial_sum: sum, n, next_term: terms[n].clone(), bound, sector: a.sector() })
}

/// `R_N(a,λ)` by quadrature of
/// `(−1)^N/(√(2π) a^{N+1}) ∫_0^∞ t^{N−½} e^{−t(λ−log λ−1)}/((1+t/a) Γ*(t)) dt`.
pub fn remainder_quadrature_large_a(a: &SheetPoint, lambda: &Real, n: usize, ctx: &PrecisionContext) -> Result<ApproxValue> {
    Ok(remainder_quadratures_large_a(a, lambda, &[n], ctx)?.pop().expect("one remainder"))
}

/// [`remainder_quadrature_large_a`] for several truncation indices sharing
/// one quadrature.
pub fn remainder_quadratures_large_a(
    a: &SheetPoint,
    lambda: &Real,
    ns: &[usize],
    ctx: &PrecisionContext,
) -> Result<Vec<ApproxValue>> {
    check_lambda(lambda, ctx)?;
    if ns.is_empty() {
        return Ok(Vec::new());
    }
    let theta = a.arg_f64();
    if a.m != 0 || theta.abs() >= PI {
        return Err(Error::Sector(format!(
            "remainder integral needs |arg a| < π, got {theta:.6}; use the terminant expansion beyond"
        )));
    }
    let closest = if theta.abs() > FRAC_PI_2 { libm::sin(theta).abs() } else { 1.0 };
    if closest < POLE_GUARD {
        return Err(Error::Singular(format!("1 + t/a comes within {closest:e} of zero at arg a = {theta:.6}")));
    }
    let av = &a.value;
    let k = kappa(lambda, ctx);
    let inv_a = av.recip();
    let half = ctx.frac(1, 2);
    let n_max = *ns.iter().max().expect("non-empty");
    let n_min = *ns.iter().min().expect("non-empty");
    let mid = (n_max + n_min) as f64 / 2.0;
    let hint = QuadHint { alpha: n_min as f64 - 0.5, ..QuadHint::gamma_like(mid - 0.5, k.to_f64()) };
    let expos: Vec<Real> = ns.iter().map(|&n| &ctx.int(n as i64) - &half).collect();
    let one = ctx.cone();
    let vals = integrate_semi_infinite_vec(
        |t, lt| {
            let base = (-&(&k * t)).exp(ctx) * recip_gamma_star_real(t, lt, ctx);
            let den = (&one + &inv_a.scale(t)).recip();
            Ok(expos.iter().map(|e| den.scale(&(&base * &(e * lt).exp(ctx)))).collect())
        },
        ns.len(),
        hint,
        ctx,
    )?;
    let root = ctx.pi().ldexp(1).sqrt();
    Ok(ns
        .iter()
        .zip(vals)
        .map(|(&n, v)| {
            let mut pre = inv_a.powi(n as i64 + 1) / &Complex::from_real(root.clone());
            if n % 2 == 1 {
                pre = -pre;
            }
            v.scaled(&pre)
        })
        .collect())
}

/// The rotation angle `φ*` solving `(N+2) cos(θ − 2φ) = N cos θ` in the
/// admissible interval, for `π/2 < |θ| < 3π/2`.
pub fn solve_meijer_phi(theta: &Real, n: usize, ctx: &PrecisionContext) -> Result<Real> {
    let t = theta.to_f64();
    if !(t.abs() > FRAC_PI_2 && t.abs() < 1.5 * PI) {
        return Err(Error::Domain(format!("optimal rotation needs π/2 < |θ| < 3π/2, got {t}")));
    }
    let neg = theta.is_negative();
    let th = theta.abs();
    let c = &(&th.cos(ctx) * (n as i64)) / (n as i64 + 2);
    let s = (&ctx.one() - &(&c * &c)).sqrt();
    let phi = (&th - &s.atan2(&c, ctx)).ldexp(-1);
    Ok(if neg { -phi } else { phi })
}

fn meijer_phi_f64(theta: f64, n: usize) -> f64 {
    let th = theta.abs();
    let c = n as f64 * libm::cos(th) / (n as f64 + 2.0);
    let phi = (th - libm::acos(c)) / 2.0;
    phi.copysign(theta)
}

/// `|csc(θ − φ*)| / cos^{N+1} φ*`.
pub fn meijer_factor(theta: f64, n: usize) -> f64 {
    let phi = meijer_phi_f64(theta, n);
    1.0 / (libm::sin(theta - phi).abs() * libm::pow(libm::cos(phi), n as f64 + 1.0))
}

/// Every bound factor applicable to `|R_N(a,λ)|/|term_N|` at total
/// argument `θ`, `|θ| < 3π/2`.
pub fn bound_factors_large_a(theta: f64, n: usize) -> Result<Vec<(f64, BoundRegime)>> {
    let th = theta.abs();
    if th >= 1.5 * PI {
        return Err(Error::Sector(format!("no certified bound for |arg a| = {th:.6} ≥ 3π/2")));
    }
    let mut cands = Vec::new();
    if th <= FRAC_PI_2 {
        cands.push((1.0, BoundRegime::Csc));
    } else {
        if th < PI {
            cands.push((1.0 / libm::sin(th), BoundRegime::Csc));
        }
        cands.push((meijer_factor(theta, n), BoundRegime::Meijer));
        if th <= PI {
            cands.push((libm::sqrt(E * (n as f64 + 1.5)), BoundRegime::NearStokes));
        }
    }
    Ok(cands)
}

/// Smallest applicable bound for `|R_N(a,λ)|` at the total argument of `a`,
/// `|arg a| < 3π/2`.
pub fn error_bound_large_a(a: &SheetPoint, lambda: &Real, n: usize, ctx: &PrecisionContext) -> Result<RemainderBound> {
    check_lambda(lambda, ctx)?;
    let cands = bound_factors_large_a(a.arg_f64(), n)?;
    let (factor, regime) = pick(cands).expect("at least one bound applies");
    let term = large_a_terms(&a.value, lambda, n + 1, ctx).pop().expect("term");
    let bound = &term.abs() * &ctx.f64(factor);
    let interval = if a.m == 0 && a.value.im.is_zero() && a.value.re.is_positive() {
        let t = term.re;
        let z = ctx.zero();
        Some(if t.is_negative() { (t, z) } else { (z, t) })
    } else {
        None
    };
    Ok(RemainderBound { bound, interval, regime })
}
