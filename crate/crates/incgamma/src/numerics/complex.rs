//! Multiple-precision complex numbers in rectangular form.

use core::fmt;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::{PrecisionContext, Real};

/// A complex number `re + i·im`.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn zero(p: usize) -> Self {
        Complex::new(Real::zero(p), Real::zero(p))
    }

    pub fn one(p: usize) -> Self {
        Complex::new(Real::one(p), Real::zero(p))
    }

    /// The imaginary unit.
    pub fn i(p: usize) -> Self {
        Complex::new(Real::zero(p), Real::one(p))
    }

    pub fn from_real(re: Real) -> Self {
        let p = re.prec();
        Complex::new(re, Real::zero(p))
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        Complex::new(Real::from_f64(re, p), Real::from_f64(im, p))
    }

    /// `r·e^{iφ}`.
    pub fn from_polar(r: &Real, phi: &Real, ctx: &PrecisionContext) -> Self {
        let (s, c) = phi.sin_cos(ctx);
        Complex::new(r * &c, r * &s)
    }

    /// `e^{iφ}`.
    pub fn cis(phi: &Real, ctx: &PrecisionContext) -> Self {
        let (s, c) = phi.sin_cos(ctx);
        Complex::new(c, s)
    }

    pub fn prec(&self) -> usize {
        self.re.prec().max(self.im.prec())
    }

    pub fn with_prec(&self, p: usize) -> Self {
        Complex::new(self.re.with_prec(p), self.im.with_prec(p))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Modulus, computed without overflow-prone squaring of large parts.
    pub fn abs(&self) -> Real {
        let a = self.re.abs();
        let b = self.im.abs();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let (big, small) = if a >= b { (a, b) } else { (b, a) };
        let r = &small / &big;
        &big * &(Real::one(r.prec()) + &r * &r).sqrt()
    }

    /// Approximate `log₂|self|`.
    pub fn log2_abs(&self) -> f64 {
        let a = self.re.log2_abs();
        let b = self.im.log2_abs();
        let m = a.max(b);
        if m == f64::NEG_INFINITY {
            return m;
        }
        m + 0.5 * libm::log2(libm::exp2(2.0 * (a - m)) + libm::exp2(2.0 * (b - m)))
    }

    /// Principal argument in `(−π, π]`.
    pub fn arg(&self, ctx: &PrecisionContext) -> Real {
        self.im.atan2(&self.re, ctx)
    }

    /// `self · i`.
    pub fn mul_i(&self) -> Self {
        Complex::new(-&self.im, self.re.clone())
    }

    /// `self · r` for real `r`.
    pub fn scale(&self, r: &Real) -> Self {
        Complex::new(&self.re * r, &self.im * r)
    }

    pub fn ldexp(&self, k: i64) -> Self {
        Complex::new(self.re.ldexp(k), self.im.ldexp(k))
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        Complex::one(p) / self
    }

    pub fn exp(&self, ctx: &PrecisionContext) -> Self {
        let r = self.re.exp(ctx);
        if r.is_zero() {
            return Complex::zero(self.prec());
        }
        let (s, c) = self.im.with_prec(self.prec()).sin_cos(ctx);
        Complex::new(&r * &c, &r * &s)
    }

    /// Principal logarithm.
    pub fn ln(&self, ctx: &PrecisionContext) -> Self {
        super::elem::ln_complex(self, ctx)
    }

    /// Logarithm with the imaginary part fixed to the given total argument.
    pub fn ln_with_arg(&self, total_arg: &Real, ctx: &PrecisionContext) -> Self {
        Complex::new(self.abs().ln(ctx), total_arg.clone())
    }

    /// Principal square root.
    pub fn sqrt(&self, _ctx: &PrecisionContext) -> Self {
        let p = self.prec();
        if self.is_zero() {
            return Complex::zero(p);
        }
        let m = self.abs();
        let half = Real::frac(1, 2, 64);
        let t = ((&m + &self.re.abs()) * &half).sqrt();
        if !self.re.is_negative() {
            let im = &self.im / &(&t * 2);
            Complex::new(t, im)
        } else {
            let re = &self.im.abs() / &(&t * 2);
            let im = if self.im.is_negative() { -t } else { t };
            Complex::new(re, im)
        }
    }

    /// `self^w` on the principal branch.
    pub fn powc(&self, w: &Complex, ctx: &PrecisionContext) -> Self {
        (w * &self.ln(ctx)).exp(ctx)
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, n: i64) -> Self {
        let p = self.prec();
        let mut base = self.clone();
        let mut acc = Complex::one(p);
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    /// Rough `f64` pair for diagnostics.
    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(d) => write!(f, "({:.*}, {:.*})", d, self.re, d, self.im),
            None => write!(f, "({}, {})", self.re, self.im),
        }
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, o: &Complex) -> Complex {
        Complex::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, o: &Complex) -> Complex {
        Complex::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, o: &Complex) -> Complex {
        Complex::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, o: &Complex) -> Complex {
        // Smith's algorithm
        if o.re.abs() >= o.im.abs() {
            let r = &o.im / &o.re;
            let d = &o.re + &(&o.im * &r);
            Complex::new(
                (&self.re + &(&self.im * &r)) / &d,
                (&self.im - &(&self.re * &r)) / &d,
            )
        } else {
            let r = &o.re / &o.im;
            let d = &o.im + &(&o.re * &r);
            Complex::new(
                (&(&self.re * &r) + &self.im) / &d,
                (&(&self.im * &r) - &self.re) / &d,
            )
        }
    }
}

macro_rules! complex_forward {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<Complex> for Complex {
            type Output = Complex;
            fn $m(self, o: Complex) -> Complex {
                (&self).$m(&o)
            }
        }
        impl $tr<&Complex> for Complex {
            type Output = Complex;
            fn $m(self, o: &Complex) -> Complex {
                (&self).$m(o)
            }
        }
        impl $tr<Complex> for &Complex {
            type Output = Complex;
            fn $m(self, o: Complex) -> Complex {
                self.$m(&o)
            }
        }
        impl $atr<&Complex> for Complex {
            fn $am(&mut self, o: &Complex) {
                *self = (&*self).$m(o);
            }
        }
        impl $atr<Complex> for Complex {
            fn $am(&mut self, o: Complex) {
                *self = (&*self).$m(&o);
            }
        }
    };
}

complex_forward!(Add, add, AddAssign, add_assign);
complex_forward!(Sub, sub, SubAssign, sub_assign);
complex_forward!(Mul, mul, MulAssign, mul_assign);
complex_forward!(Div, div, DivAssign, div_assign);

impl Add<&Real> for &Complex {
    type Output = Complex;
    fn add(self, o: &Real) -> Complex {
        Complex::new(&self.re + o, self.im.clone())
    }
}

impl Sub<&Real> for &Complex {
    type Output = Complex;
    fn sub(self, o: &Real) -> Complex {
        Complex::new(&self.re - o, self.im.clone())
    }
}

impl Mul<&Real> for &Complex {
    type Output = Complex;
    fn mul(self, o: &Real) -> Complex {
        self.scale(o)
    }
}

impl Div<&Real> for &Complex {
    type Output = Complex;
    fn div(self, o: &Real) -> Complex {
        Complex::new(&self.re / o, &self.im / o)
    }
}

impl Add<i64> for &Complex {
    type Output = Complex;
    fn add(self, o: i64) -> Complex {
        Complex::new(&self.re + o, self.im.clone())
    }
}

impl Sub<i64> for &Complex {
    type Output = Complex;
    fn sub(self, o: i64) -> Complex {
        Complex::new(&self.re - o, self.im.clone())
    }
}

impl Mul<i64> for &Complex {
    type Output = Complex;
    fn mul(self, o: i64) -> Complex {
        Complex::new(&self.re * o, &self.im * o)
    }
}

impl Div<i64> for &Complex {
    type Output = Complex;
    fn div(self, o: i64) -> Complex {
        Complex::new(&self.re / o, &self.im / o)
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}
