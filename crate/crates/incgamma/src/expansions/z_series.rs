use alloc::format;
use alloc::vec::Vec;

use super::{BoundRegime, RemainderBound, SeriesEvaluation};
use crate::coefficients::a_coeffs_exact;
use crate::error::{Error, Result};
use crate::gamma::{gamma_star, SheetPoint};
use crate::numerics::{integrate_semi_infinite_vec, ApproxValue, Complex, PrecisionContext, QuadHint, Real};

use core::f64::consts::{FRAC_PI_2, PI};

const POLE_GUARD: f64 = 1.0 / 256.0;

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("truncation index must be at least 2, got {n}")));
    }
    Ok(())
}

/// Terms `a_n / z^{n/2}` for `n < count`, with the square root continued
/// along the sheet of `z`.
pub fn z_series_terms(z: &SheetPoint, count: usize, ctx: &PrecisionContext) -> Vec<Complex> {
    let coeffs = a_coeffs_exact(count.saturating_sub(1));
    let r = z.sqrt(ctx).recip();
    let mut w = ctx.cone();
    let mut out = Vec::with_capacity(count);
    for c in coeffs.iter().take(count) {
        out.push(w.scale(&c.to_real(ctx)));
        w = &w * &r;
    }
    out
}

/// Sum of the first `n ≥ 2` terms of the series for
/// `Γ(z,z)/(√(π/2) z^{z−½} e^{−z})`.
pub fn eval_series_z(z: &SheetPoint, n: usize, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    check_n(n)?;
    let terms = z_series_terms(z, n + 1, ctx);
    let sum = terms[..n].iter().fold(ctx.czero(), |s, t| &s + t);
    let bound = error_bound_z(z, n, ctx).ok();
    Ok(SeriesEvaluation { partial_sum: sum, n, next_term: terms[n].clone(), bound, sector: z.sector() })
}

fn reduce(x: f64) -> f64 {
    let t = x.rem_euclid(2.0 * PI);
    if t > PI {
        t - 2.0 * PI
    } else {
        t
    }
}

/// `min_{r>0} |1 − r e^{iβ}|`.
fn ray_distance(beta: f64) -> f64 {
    let b = reduce(beta);
    if b.abs() < FRAC_PI_2 {
        libm::sin(b).abs()
    } else {
        1.0
    }
}

/// `R_N(z)` by quadrature of the two conjugate resurgence integrals, for
/// `|arg z| < 3π/2`.
pub fn remainder_quadrature_z(z: &SheetPoint, n: usize, ctx: &PrecisionContext) -> Result<ApproxValue> {
    Ok(remainder_quadratures_z(z, &[n], ctx)?.pop().expect("one remainder"))
}

/// [`remainder_quadrature_z`] for several truncation indices sharing the
/// evaluations of `Γ*(it)`.
pub fn remainder_quadratures_z(z: &SheetPoint, ns: &[usize], ctx: &PrecisionContext) -> Result<Vec<ApproxValue>> {
    for &n in ns {
        check_n(n)?;
    }
    if ns.is_empty() {
        return Ok(Vec::new());
    }
    let theta = z.arg_f64();
    if theta.abs() >= 1.5 * PI {
        return Err(Error::Sector(format!(
            "remainder integral needs |arg z| < 3π/2, got {theta:.6}; use the terminant expansion beyond"
        )));
    }
    let closest = ray_distance(-0.75 * PI - theta / 2.0).min(ray_distance(0.75 * PI - theta / 2.0));
    if closest < POLE_GUARD {
        return Err(Error::Singular(format!("integrand pole within {closest:e} of the ray at arg z = {theta:.6}")));
    }
    let pi = ctx.pi();
    let two_pi = pi.ldexp(1);
    let rz = z.sqrt(ctx);
    let inv_rz = rz.recip();
    let quarter = &pi / 4;
    let e_minus = Complex::cis(&(&quarter * -3), ctx);
    let e_plus = e_minus.conj();
    let c1 = &e_minus * &inv_rz;
    let c2 = &e_plus * &inv_rz;
    let one = ctx.cone();
    let half = ctx.frac(1, 2);
    let expos: Vec<Real> = ns.iter().map(|&n| ctx.frac(n as i64 - 2, 2)).collect();
    let n_min = *ns.iter().min().expect("non-empty");
    let n_max = *ns.iter().max().expect("non-empty");
    let hint = QuadHint::gamma_like((n_min + n_max) as f64 / 4.0 - 1.0, two_pi.to_f64());
    let hint = QuadHint { alpha: n_min as f64 / 2.0 - 1.5, ..hint };
    let vals = integrate_semi_infinite_vec(
        |t, lt| {
            let g = gamma_star(&Complex::new(ctx.zero(), t.clone()), ctx)?.value;
            let st = (&half * lt).exp(ctx);
            let f1 = &g / &(&one - &c1.scale(&st));
            let f2 = &g.conj() / &(&one - &c2.scale(&st));
            let damp = -&(&two_pi * t);
            let mut row = Vec::with_capacity(2 * expos.len());
            for e in &expos {
                let w = (&(e * lt) + &damp).exp(ctx);
                row.push(f1.scale(&w));
                row.push(f2.scale(&w));
            }
            Ok(row)
        },
        2 * ns.len(),
        hint,
        ctx,
    )?;
    let two_pi_i = Complex::new(ctx.zero(), two_pi);
    Ok(ns
        .iter()
        .enumerate()
        .map(|(k, &n)| {
            let den = &two_pi_i * &rz.powi(n as i64);
            let rot = Complex::cis(&(&quarter * -(3 * n as i64)), ctx);
            let p1 = &rot / &den;
            let p2 = -(&rot.conj() / &den);
            vals[2 * k].scaled(&p1).plus(&vals[2 * k + 1].scaled(&p2))
        })
        .collect())
}

/// Every bound applicable to `|R_N(z)|`, `|arg z| < 3π/2`, `N ≥ 2`.
pub fn bound_candidates_z(z: &SheetPoint, n: usize, ctx: &PrecisionContext) -> Result<Vec<RemainderBound>> {
    check_n(n)?;
    let theta = z.arg_f64();
    let th = theta.abs();
    if th >= 1.5 * PI {
        return Err(Error::Sector(format!(
            "no certified bound for |arg z| = {th:.6} ≥ 3π/2; continue with the connection formulas"
        )));
    }
    let terms = z_series_terms(z, n + 4, ctx);
    let mag: Vec<Real> = terms[n..].iter().map(Complex::abs).collect();
    let sum = |k: usize| mag[..k].iter().fold(ctx.zero(), |s, x| &s + x);
    let four = sum(4);
    let plain = |bound, regime| RemainderBound { bound, interval: None, regime };
    let mut out = Vec::new();
    if th <= PI {
        let k = match n % 4 {
            0 => 3,
            1 | 2 => 2,
            _ => 4,
        };
        out.push(plain(sum(k), BoundRegime::Mod4));
    }
    if th <= 1.25 * PI {
        out.push(plain(four, BoundRegime::Sector));
    } else {
        let c = 1.0 / libm::sin(2.0 * theta).abs();
        out.push(plain(&four * &ctx.f64(c), BoundRegime::Sector));
    }
    if z.m == 0 && z.value.im.is_zero() && z.value.re.is_positive() {
        let (lo, hi) = positive_interval(&mag, n, ctx);
        out.push(RemainderBound { bound: lo.abs().max(&hi.abs()), interval: Some((lo, hi)), regime: BoundRegime::PositiveReal });
    }
    Ok(out)
}

/// Smallest applicable bound for `|R_N(z)|`, `|arg z| < 3π/2`, `N ≥ 2`.
/// For `z > 0` the enclosure of `R_N` is always attached.
pub fn error_bound_z(z: &SheetPoint, n: usize, ctx: &PrecisionContext) -> Result<RemainderBound> {
    let cands = bound_candidates_z(z, n, ctx)?;
    let interval = cands.iter().find_map(|c| c.interval.clone());
    let best = cands
        .into_iter()
        .min_by(|x, y| x.bound.partial_cmp(&y.bound).expect("finite bounds"))
        .expect("at least one bound applies");
    Ok(RemainderBound { interval, ..best })
}

/// Enclosure of `R_N(z)` for `z > 0` from the sign pattern of `a_n`.
fn positive_interval(mag: &[Real], n: usize, ctx: &PrecisionContext) -> (Real, Real) {
    let zero = ctx.zero();
    let m = n / 4;
    // (lo, hi) for s·R_N, with the sign s
    let (lo, hi, s_neg) = match n % 4 {
        0 => ((&mag[0] - &mag[2]).max(&zero), &mag[0] + &mag[1], m % 2 == 0),
        1 => (-&mag[1], mag[0].clone(), m % 2 == 0),
        2 => (zero, &mag[0] + &mag[1], m % 2 == 1),
        _ => (
            (&(&mag[0] - &mag[1]) - &mag[2]).max(&ctx.zero()),
            &(&mag[0] - &mag[1]) + &mag[3],
            m % 2 == 0,
        ),
    };
    if s_neg {
        (-hi, -lo)
    } else {
        (lo, hi)
    }
}
