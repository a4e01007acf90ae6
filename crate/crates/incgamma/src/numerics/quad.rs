//! Double-exponential quadrature on `(0, +∞)`.
//!
//! The substitution `t = σ·exp(π/2·sinh u)` maps the half line onto the real
//! `u` line with doubly exponential decay at both ends, which absorbs
//! algebraic endpoint singularities `t^α` (`α > −1`) at the origin and
//! exponential decay at infinity.  The trapezoidal rule in `u` is refined by
//! halving the step; nodes are generated once per context and reused.

use alloc::format;
use alloc::vec::Vec;

use super::{ApproxValue, Complex, PrecisionContext, Real};
use crate::error::{Error, Result};

const H0_LOG2: i64 = -1;
const U_MAX: f64 = 7.5;
const MIN_LEVELS: usize = 3;

/// Caller-supplied shape information for an integrand on `(0, +∞)`.
#[derive(Clone, Copy, Debug)]
pub struct QuadHint {
    /// Characteristic abscissa, ideally near the bulk of the integrand.
    pub scale: f64,
    /// Exponent `α` of the algebraic behaviour `t^α` at the origin.
    pub alpha: f64,
}

impl QuadHint {
    pub fn new(scale: f64, alpha: f64) -> Self {
        QuadHint { scale, alpha }
    }

    /// Hint for `t^α e^{−c t}` times a slowly varying factor.
    pub fn gamma_like(alpha: f64, c: f64) -> Self {
        let peak = if alpha > 0.5 { alpha / c } else { 1.0 / c };
        QuadHint { scale: peak, alpha }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Node {
    /// `π/2 · sinh u`.
    q: Real,
    /// `exp(q)`.
    x: Real,
    /// `π/2 · cosh u`.
    c: Real,
}

/// Positive-side nodes of one refinement level.
#[derive(Clone, Debug)]
pub(crate) struct DeLevel {
    wp: usize,
    level: usize,
    nodes: Vec<Node>,
}

fn step_u(level: usize, j: usize) -> f64 {
    let h = libm::exp2(H0_LOG2 as f64 - level as f64);
    if level == 0 {
        j as f64 * h
    } else {
        (2 * j + 1) as f64 * h
    }
}

fn make_node(level: usize, j: usize, ctx: &PrecisionContext) -> Node {
    let wp = ctx.wp();
    let u = if level == 0 {
        Real::from_i64(j as i64, wp).ldexp(H0_LOG2)
    } else {
        Real::from_i64((2 * j + 1) as i64, wp).ldexp(H0_LOG2 - level as i64)
    };
    let eu = u.exp(ctx);
    let emu = eu.recip();
    let half_pi = ctx.pi().ldexp(-1);
    let q = &half_pi * &(&eu - &emu).ldexp(-1);
    let c = &half_pi * &(&eu + &emu).ldexp(-1);
    let x = q.exp(ctx);
    Node { q, x, c }
}

fn node(level: usize, j: usize, ctx: &PrecisionContext) -> Node {
    let wp = ctx.wp();
    {
        let cache = ctx.cache.borrow();
        if let Some(l) = cache.de_levels.iter().find(|l| l.level == level && l.wp == wp) {
            if let Some(n) = l.nodes.get(j) {
                return n.clone();
            }
        }
    }
    let mut cache = ctx.cache.borrow_mut();
    let idx = match cache.de_levels.iter().position(|l| l.level == level && l.wp == wp) {
        Some(i) => i,
        None => {
            cache.de_levels.push(DeLevel { wp, level, nodes: Vec::new() });
            cache.de_levels.len() - 1
        }
    };
    drop(cache);
    loop {
        let have = ctx.cache.borrow().de_levels[idx].nodes.len();
        if have > j {
            break;
        }
        let n = make_node(level, have, ctx);
        ctx.cache.borrow_mut().de_levels[idx].nodes.push(n);
    }
    ctx.cache.borrow().de_levels[idx].nodes[j].clone()
}

fn mag(c: &Complex) -> Real {
    c.re.abs() + c.im.abs()
}

struct Eval<'a, F> {
    f: F,
    sigma: Real,
    ln_sigma: Real,
    width: usize,
    ctx: &'a PrecisionContext,
}

impl<'a, F> Eval<'a, F>
where
    F: FnMut(&Real, &Real) -> Result<Vec<Complex>>,
{
    /// Weighted integrands `f(t)·dt/du` at node `n` on the chosen side.
    fn term(&mut self, n: &Node, negative: bool) -> Result<Vec<Complex>> {
        let (t, ln_t, w) = if negative {
            let xi = n.x.recip();
            (&self.sigma * &xi, &self.ln_sigma - &n.q, &(&n.c * &xi) * &self.sigma)
        } else {
            (&self.sigma * &n.x, &self.ln_sigma + &n.q, &(&n.c * &n.x) * &self.sigma)
        };
        let v = (self.f)(&t, &ln_t)?;
        if v.len() != self.width {
            return Err(Error::Domain(format!(
                "integrand returned {} components, expected {}",
                v.len(),
                self.width
            )));
        }
        if v.iter().any(|c| !c.is_finite()) {
            let _ = self.ctx;
            return Err(Error::Domain(format!("integrand is not finite at t = {:.10}", t)));
        }
        Ok(v.iter().map(|c| c.scale(&w)).collect())
    }
}

fn max_log2(v: &[Complex]) -> f64 {
    v.iter().map(|c| c.log2_abs()).fold(f64::NEG_INFINITY, f64::max)
}

fn accumulate(acc: &mut [Complex], abs: &mut [Real], v: &[Complex]) {
    for ((a, m), c) in acc.iter_mut().zip(abs.iter_mut()).zip(v) {
        *a += c;
        *m += &mag(c);
    }
}

/// `∫_0^{+∞} f(t) dt` for an integrand given as `f(t, ln t)`.
///
/// The error estimate is twice the difference of the last two refinement
/// levels plus a roundoff floor proportional to `Σ|w·f|`.
pub fn integrate_semi_infinite<F>(mut f: F, hint: QuadHint, ctx: &PrecisionContext) -> Result<ApproxValue>
where
    F: FnMut(&Real, &Real) -> Result<Complex>,
{
    let mut v = integrate_semi_infinite_vec(|t, lt| Ok(alloc::vec![f(t, lt)?]), 1, hint, ctx)?;
    Ok(v.pop().expect("one component"))
}

/// Simultaneous quadrature of `width` integrands sharing their nodes, for
/// integrands that share expensive factors.  Refinement continues until
/// every component has converged.
pub fn integrate_semi_infinite_vec<F>(
    f: F,
    width: usize,
    hint: QuadHint,
    ctx: &PrecisionContext,
) -> Result<Vec<ApproxValue>>
where
    F: FnMut(&Real, &Real) -> Result<Vec<Complex>>,
{
    let mut out = None;
    let tol = ctx.f64(ctx.quad_rel_tol);
    let (s, last_diff) = run(f, width, hint, ctx, |level, s, diff, floor| {
        if level < MIN_LEVELS {
            return false;
        }
        let done = s
            .iter()
            .zip(diff)
            .zip(floor)
            .all(|((si, di), fi)| *di <= &si.abs() * &tol || di <= fi);
        if done {
            out = Some(
                s.iter()
                    .zip(diff)
                    .zip(floor)
                    .map(|((si, di), fi)| ApproxValue::new(si.clone(), di.ldexp(1) + fi))
                    .collect(),
            );
        }
        done
    })?;
    out.ok_or_else(|| Error::Quadrature {
        best: format!("{:.20}", s[0]),
        last_diff,
        levels: ctx.quad_max_levels,
    })
}

/// Trapezoidal estimates for refinement levels `0..=ctx.quad_max_levels`,
/// without any convergence test.
pub fn quadrature_levels<F>(mut f: F, hint: QuadHint, ctx: &PrecisionContext) -> Result<Vec<Complex>>
where
    F: FnMut(&Real, &Real) -> Result<Complex>,
{
    let mut all = Vec::new();
    run(|t, lt| Ok(alloc::vec![f(t, lt)?]), 1, hint, ctx, |_, s, _, _| {
        all.push(s[0].clone());
        false
    })?;
    Ok(all)
}

/// Drives the refinement, reporting `(level, estimates, |Δ|, floors)` after
/// each level until `stop` returns true.  Returns the last estimates and the
/// largest last difference.
fn run<F, S>(f: F, width: usize, hint: QuadHint, ctx: &PrecisionContext, mut stop: S) -> Result<(Vec<Complex>, f64)>
where
    F: FnMut(&Real, &Real) -> Result<Vec<Complex>>,
    S: FnMut(usize, &[Complex], &[Real], &[Real]) -> bool,
{
    if !(hint.scale > 0.0) || !hint.scale.is_finite() {
        return Err(Error::Domain(format!("quadrature scale must be positive, got {}", hint.scale)));
    }
    if !(hint.alpha > -1.0) {
        return Err(Error::Domain(format!("endpoint exponent must exceed -1, got {}", hint.alpha)));
    }
    if width == 0 {
        return Err(Error::Domain("quadrature needs at least one integrand".into()));
    }
    let wp = ctx.wp();
    let sigma = ctx.f64(hint.scale);
    let ln_sigma = sigma.ln(ctx);
    let mut ev = Eval { f, sigma, ln_sigma, width, ctx };
    let drop_bits = wp as f64 + 24.0;

    // Level 0 fixes the truncation range on each side.
    let n0 = node(0, 0, ctx);
    let t0 = ev.term(&n0, false)?;
    let mut raw = t0.clone();
    let mut abs_sum: Vec<Real> = t0.iter().map(mag).collect();
    let mut peak = max_log2(&t0);
    let mut j_hi = [0usize; 2];
    for (side, negative) in [false, true].into_iter().enumerate() {
        let mut small = 0;
        let mut j = 1;
        while step_u(0, j) <= U_MAX {
            let n = node(0, j, ctx);
            let t = ev.term(&n, negative)?;
            let l = max_log2(&t);
            if l > peak {
                peak = l;
            }
            accumulate(&mut raw, &mut abs_sum, &t);
            j_hi[side] = j;
            if l < peak - drop_bits {
                small += 1;
                if small >= 2 {
                    break;
                }
            } else {
                small = 0;
            }
            j += 1;
        }
    }
    let u_hi = [step_u(0, j_hi[0]), step_u(0, j_hi[1])];
    let mut h = ctx.one().ldexp(H0_LOG2);
    let mut s: Vec<Complex> = raw.iter().map(|r| r * &h).collect();
    let mut last_diff = f64::INFINITY;
    let floors = |abs_sum: &[Real], h: &Real| -> Vec<Real> {
        abs_sum.iter().map(|a| (a * h).ldexp(8 - wp as i64)).collect()
    };
    let inf: Vec<Real> = (0..width).map(|_| Real::from_f64(f64::INFINITY, wp)).collect();
    if stop(0, &s, &inf, &floors(&abs_sum, &h)) {
        return Ok((s, last_diff));
    }
    for level in 1..=ctx.quad_max_levels {
        let mut odd: Vec<Complex> = (0..width).map(|_| ctx.czero()).collect();
        for (side, negative) in [false, true].into_iter().enumerate() {
            let mut j = 0;
            while step_u(level, j) < u_hi[side] {
                let n = node(level, j, ctx);
                let t = ev.term(&n, negative)?;
                accumulate(&mut odd, &mut abs_sum, &t);
                j += 1;
            }
        }
        h = h.ldexp(-1);
        let s_new: Vec<Complex> = s.iter().zip(&odd).map(|(si, oi)| &si.ldexp(-1) + &(oi * &h)).collect();
        let diff: Vec<Real> = s_new.iter().zip(&s).map(|(a, b)| (a - b).abs()).collect();
        s = s_new;
        last_diff = diff.iter().map(|d| d.to_f64()).fold(0.0, f64::max);
        if stop(level, &s, &diff, &floors(&abs_sum, &h)) {
            break;
        }
    }
    Ok((s, last_diff))
}
