//! The error function of a complex argument.

use super::{Complex, PrecisionContext, Real};

/// `erf(w) = 2/√π ∫_0^w e^{−t²} dt` for any complex `w`.
///
/// The Maclaurin series is used with enough extra bits to absorb its
/// cancellation; far from the origin with `|Re w|` large the Laplace
/// continued fraction for `erfc` takes over.
pub fn erf_complex(w: &Complex, ctx: &PrecisionContext) -> Complex {
    let wp = ctx.wp();
    if w.is_zero() {
        return ctx.czero();
    }
    let x = w.re.to_f64();
    let y = w.im.to_f64();
    let r2 = x * x + y * y;
    let loss = if y * y > x * x { 2.0 * x * x } else { r2 } * core::f64::consts::LOG2_E;
    if r2 <= 64.0 || loss <= 2.0 * wp as f64 || x.abs() < 2.0 {
        return erf_series(w, loss.max(0.0) as usize + 16, ctx).with_prec(wp);
    }
    if x < 0.0 {
        return -erf_complex(&-w, ctx);
    }
    let one = ctx.cone();
    (&one - &erfc_cf(w, ctx)).with_prec(wp)
}

fn erf_series(w: &Complex, extra: usize, ctx: &PrecisionContext) -> Complex {
    let p = ctx.wp() + extra;
    let w = w.with_prec(p);
    let mw2 = -(&w * &w);
    let mut term = w.clone();
    let mut sum = w.clone();
    let stop = -(p as f64) - 8.0;
    let mut n: i64 = 1;
    loop {
        term = &(&term * &mw2) / n;
        let piece = &term / (2 * n + 1);
        sum += &piece;
        if piece.log2_abs() - sum.log2_abs() < stop {
            break;
        }
        n += 1;
    }
    let pi = ctx.pi_at(p);
    let c = Real::from_i64(2, p) / pi.sqrt();
    sum.scale(&c)
}

/// `erfc(w)` for `Re w > 0` and `|w|` large, by modified Lentz evaluation of
/// `√π e^{w²} erfc(w) = 1/(w + (1/2)/(w + 1/(w + (3/2)/(w + …))))`.
fn erfc_cf(w: &Complex, ctx: &PrecisionContext) -> Complex {
    let p = ctx.wp() + 16;
    let w = w.with_prec(p);
    let tiny = Real::one(p).ldexp(-(4 * p as i64));
    let tinyc = Complex::from_real(tiny.clone());
    let mut f = w.clone();
    let mut c = w.clone();
    let mut d = Complex::zero(p);
    let one = Complex::one(p);
    let stop = -(p as f64) - 4.0;
    let mut k: i64 = 1;
    loop {
        let a = Real::frac(k, 2, p);
        d = &w + &d.scale(&a);
        if d.is_zero() {
            d = tinyc.clone();
        }
        c = &w + &(&Complex::from_real(a.clone()) / &c);
        if c.is_zero() {
            c = tinyc.clone();
        }
        d = &one / &d;
        let delta = &c * &d;
        f = &f * &delta;
        if (&delta - &one).log2_abs() < stop || k > 100_000 {
            break;
        }
        k += 1;
    }
    let pi = ctx.pi_at(p);
    let e = (-(&w * &w)).exp(ctx);
    &e / &f.scale(&pi.sqrt())
}
