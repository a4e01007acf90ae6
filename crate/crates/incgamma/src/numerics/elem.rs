//! Elementary functions at arbitrary precision.
//!
//! `exp` and `sin`/`cos` use additive reduction by multiples of `ln 2` and
//! `π/2`, a further halving of the argument `s ≈ √p` times, a Taylor
//! polynomial and `s` squarings.  Logarithms and arguments are recovered by
//! Newton iteration on these, doubling the precision at each step from a
//! double-precision seed.

use alloc::vec::Vec;

use super::{Complex, PrecisionContext, Real};

/// Largest `|x|` for which `e^x` is representable.
const EXP_LIMIT: f64 = 1.4e9;

fn halvings(p: usize) -> usize {
    (libm::sqrt(p as f64) as usize).max(4)
}

/// Precisions for Halley steps (cubic convergence) ending at `p`, smallest
/// first.
fn schedule(p: usize) -> Vec<usize> {
    let mut v = alloc::vec![p];
    while *v.last().unwrap() > 150 {
        let last = *v.last().unwrap();
        v.push(last / 3 + 12);
    }
    v.reverse();
    v
}

/// `log₂` of the magnitude of `k`, for guard-bit sizing.
fn bits_of(k: i64) -> usize {
    (64 - k.unsigned_abs().leading_zeros()) as usize
}

/// `Σ_{n≥0} c_n x^n` by Horner's rule from the highest needed term, where
/// `c_n = 1/((step·n + off)!)` and terms below `2^{−q}` are dropped.
fn horner_inv_fact(x: &Real, step: usize, off: usize, q: usize, ctx: &PrecisionContext) -> Real {
    let lx = x.log2_abs();
    let mut n = 0usize;
    let mut lt = 0.0f64;
    while lt > -(q as f64) - 4.0 {
        n += 1;
        let k = step * n + off;
        lt = n as f64 * lx - libm::lgamma(k as f64 + 1.0) * core::f64::consts::LOG2_E;
        if n > 4 * q {
            break;
        }
    }
    let inv = ctx.inv_factorials(step * n + off, q);
    let mut acc = inv[step * n + off].clone();
    for j in (0..n).rev() {
        acc = &(&acc * x) + &inv[step * j + off];
    }
    acc
}

pub(super) fn exp(x: &Real, ctx: &PrecisionContext) -> Real {
    let p = x.prec().max(64);
    if x.is_zero() {
        return Real::one(p);
    }
    let xf = x.to_f64();
    if xf < -EXP_LIMIT {
        return Real::zero(p);
    }
    if xf > EXP_LIMIT {
        return Real::from_f64(f64::INFINITY, p);
    }
    let k = libm::round(xf / core::f64::consts::LN_2) as i64;
    let s = halvings(p);
    let q = p + s + 16 + bits_of(k);
    let r = if k == 0 {
        x.with_prec(q)
    } else {
        &x.with_prec(q) - &(&ctx.ln2_at(q) * k)
    };
    let r = r.ldexp(-(s as i64));
    let mut sum = horner_inv_fact(&r, 1, 0, q, ctx);
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum.ldexp(k).with_prec(p)
}

/// `(sin x, cos x)`.
pub(super) fn sin_cos(x: &Real, ctx: &PrecisionContext) -> (Real, Real) {
    let p = x.prec().max(64);
    if x.is_zero() {
        return (Real::zero(p), Real::one(p));
    }
    let xf = x.to_f64();
    let k = libm::round(xf / core::f64::consts::FRAC_PI_2) as i64;
    let s = halvings(p) / 2;
    let tiny = (-x.log2_abs()).max(0.0) as usize;
    let q = p + s + 16 + bits_of(k) + tiny.min(p);
    let r = if k == 0 {
        x.with_prec(q)
    } else {
        &x.with_prec(q) - &(&ctx.pi_at(q).ldexp(-1) * k)
    };
    let r = r.ldexp(-(s as i64));
    let mr2 = -(&r * &r);
    let mut cs = horner_inv_fact(&mr2, 2, 0, q, ctx);
    let mut sn = &horner_inv_fact(&mr2, 2, 1, q, ctx) * &r;
    for _ in 0..s {
        let c2 = &(&cs * &cs) - &(&sn * &sn);
        sn = (&sn * &cs).ldexp(1);
        cs = c2;
    }
    let (sn, cs) = match k.rem_euclid(4) {
        0 => (sn, cs),
        1 => (cs, -sn),
        2 => (-sn, -cs),
        _ => (-cs, sn),
    };
    (sn.with_prec(p), cs.with_prec(p))
}

/// Natural logarithm of `x > 0`.
pub(super) fn ln(x: &Real, ctx: &PrecisionContext) -> Real {
    let p = x.prec().max(64);
    if x.is_zero() || x.is_negative() {
        return Real::from_f64(f64::NAN, p);
    }
    let e = libm::round(x.log2_abs()) as i64;
    let m = x.ldexp(-e);
    let mf = m.to_f64();
    if mf == 1.0 && (&m - &Real::one(p)).is_zero() {
        return (&ctx.ln2_at(p + bits_of(e) + 8) * e).with_prec(p);
    }
    let seed = libm::log(mf);
    let small = (-libm::log2(seed.abs())).max(0.0) as usize;
    let q = p + 16 + small.min(2 * p) + bits_of(e);
    let mut y = Real::from_f64(seed, 64);
    for pk in schedule(q) {
        let mk = m.with_prec(pk);
        let yk = y.with_prec(pk);
        let ey = exp(&yk, ctx);
        // Halley step: y + 2(m − e^y)/(m + e^y)
        y = &yk + &(&(&mk - &ey) / &(&mk + &ey)).ldexp(1);
    }
    let r = if e == 0 { y } else { &y + &(&ctx.ln2_at(q) * e) };
    r.with_prec(p)
}

/// Principal argument of `x + iy` in `(−π, π]`.
pub(super) fn arg(y: &Real, x: &Real, ctx: &PrecisionContext) -> Real {
    let p = y.prec().max(x.prec()).max(64);
    if y.is_zero() {
        return if x.is_negative() { ctx.pi_at(p) } else { Real::zero(p) };
    }
    if x.is_zero() {
        let h = ctx.pi_at(p).ldexp(-1);
        return if y.is_negative() { -h } else { h };
    }
    ln_complex(&Complex::new(x.with_prec(p), y.with_prec(p)), ctx).im
}

/// Principal logarithm of a non-zero complex number.
pub(super) fn ln_complex(z: &Complex, ctx: &PrecisionContext) -> Complex {
    let p = z.prec().max(64);
    if z.im.is_zero() && !z.re.is_negative() {
        return Complex::new(ln(&z.re.with_prec(p), ctx), Real::zero(p));
    }
    if z.im.is_zero() {
        return Complex::new(ln(&(-&z.re).with_prec(p), ctx), ctx.pi_at(p));
    }
    let sh = libm::round(z.re.log2_abs().max(z.im.log2_abs())) as i64;
    let zs = z.ldexp(-sh);
    let (xf, yf) = zs.to_f64();
    let re0 = 0.5 * libm::log(xf * xf + yf * yf);
    let im0 = libm::atan2(yf, xf);
    let small = (-libm::log2(re0.abs().max(im0.abs()).min(1.0))).max(0.0) as usize;
    let q = p + 16 + small.min(2 * p) + bits_of(sh);
    let mut w = Complex::new(Real::from_f64(re0, 64), Real::from_f64(im0, 64));
    for pk in schedule(q) {
        let zk = zs.with_prec(pk);
        let wk = w.with_prec(pk);
        let ew = wk.exp(ctx);
        // Halley step for e^w = z
        w = &wk + &(&(&zk - &ew) / &(&zk + &ew)).ldexp(1);
    }
    if sh != 0 {
        w.re = &w.re + &(&ctx.ln2_at(q) * sh);
    }
    w.with_prec(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(256).unwrap()
    }

    fn agree(a: &Real, b: &Real, bits: f64) -> bool {
        let d = (a - b).abs();
        d.is_zero() || d.log2_abs() - b.log2_abs().max(-1e9) < -bits
    }

    #[test]
    fn exp_matches_backend() {
        let ctx = ctx();
        for v in [1e-30, -0.3, 1.0, 2.5, -17.25, 700.0, -1234.5, 1e6] {
            let x = ctx.f64(v);
            let a = exp(&x, &ctx);
            let b = Real(x.0.exp(x.prec(), super::super::real::RM, &mut ctx.consts.borrow_mut()));
            assert!(agree(&a, &b, 280.0), "exp({v})");
        }
        assert!(exp(&ctx.f64(-1e12), &ctx).is_zero());
    }

    #[test]
    fn sin_cos_match_backend() {
        let ctx = ctx();
        for v in [1e-40, 0.5, -1.5707963, 3.0, 100.0, -2.0e5] {
            let x = ctx.f64(v);
            let (s, c) = sin_cos(&x, &ctx);
            let mut k = ctx.consts.borrow_mut();
            let bs = Real(x.0.sin(x.prec(), super::super::real::RM, &mut k));
            let bc = Real(x.0.cos(x.prec(), super::super::real::RM, &mut k));
            drop(k);
            assert!(agree(&s, &bs, 270.0), "sin({v})");
            assert!(agree(&c, &bc, 270.0), "cos({v})");
        }
    }

    #[test]
    fn logs_invert_exp() {
        let ctx = ctx();
        for v in [1e-300, 0.37, 1.0, 1.0000001, 2.0, 1e50, 2f64.powi(-700)] {
            let x = ctx.f64(v);
            let l = ln(&x, &ctx);
            let back = exp(&l, &ctx);
            assert!(agree(&back, &x, 275.0), "ln({v})");
        }
        for (x, y) in [(1.0, 1e-30), (-3.0, 0.5), (-1.0, -1e-10), (0.0, 2.0), (1e-20, -1.0), (5.0, 7.0)] {
            let z = Complex::new(ctx.f64(x), ctx.f64(y));
            let l = ln_complex(&z, &ctx);
            let r = exp(&l.re, &ctx);
            let (s, c) = sin_cos(&l.im, &ctx);
            let back = Complex::new(&r * &c, &r * &s);
            assert!((&back - &z).log2_abs() - z.log2_abs() < -270.0, "at {x},{y}");
        }
    }
}
