//! Multiple-precision real numbers.
//!
//! [`Real`] wraps an `astro_float::BigFloat`. Binary operations round to the
//! larger of the two operand precisions, so values created from a context
//! keep that context's working precision through arithmetic.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use astro_float::{BigFloat, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PrecisionContext;
use crate::error::{Error, Result};

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

/// A binary floating-point number of arbitrary precision.
#[derive(Clone, Debug)]
pub struct Real(pub(crate) BigFloat);

impl Real {
    /// Zero at precision `p`.
    pub fn zero(p: usize) -> Self {
        Real(BigFloat::from_i64(0, p))
    }

    /// One at precision `p`.
    pub fn one(p: usize) -> Self {
        Real(BigFloat::from_i64(1, p))
    }

    /// Exact conversion of a machine integer.
    pub fn from_i64(v: i64, p: usize) -> Self {
        Real(BigFloat::from_i64(v, p))
    }

    /// Exact conversion of a double.
    pub fn from_f64(v: f64, p: usize) -> Self {
        Real(BigFloat::from_f64(v, p))
    }

    /// `n / d` rounded to precision `p`.
    pub fn frac(n: i64, d: i64, p: usize) -> Self {
        Real::from_i64(n, p) / Real::from_i64(d, p)
    }

    /// Mantissa capacity in bits (0 for non-finite values).
    pub fn prec(&self) -> usize {
        self.0.mantissa_max_bit_len().unwrap_or(0)
    }

    /// Copy rounded to precision `p`.
    pub fn with_prec(&self, p: usize) -> Self {
        let mut v = self.0.clone();
        let _ = v.set_precision(p, RM);
        Real(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive() && !self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !(self.0.is_nan() || self.0.is_inf())
    }

    pub fn abs(&self) -> Self {
        Real(self.0.abs())
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.sqrt(self.prec(), RM))
    }

    pub fn recip(&self) -> Self {
        Real(self.0.reciprocal(self.prec(), RM))
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, n: i64) -> Self {
        let p = self.prec();
        let mut r = Real(self.0.powi(n.unsigned_abs() as usize, p, RM));
        if n < 0 {
            r = r.recip();
        }
        r
    }

    /// `self · 2^k`.
    pub fn ldexp(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = self.0.clone();
        if let Some(e) = v.exponent() {
            v.set_exponent((e as i64 + k) as i32);
        }
        Real(v)
    }

    pub fn exp(&self, ctx: &PrecisionContext) -> Self {
        super::elem::exp(self, ctx)
    }

    /// Natural logarithm (NaN for non-positive arguments).
    pub fn ln(&self, ctx: &PrecisionContext) -> Self {
        super::elem::ln(self, ctx)
    }

    pub fn sin(&self, ctx: &PrecisionContext) -> Self {
        super::elem::sin_cos(self, ctx).0
    }

    pub fn cos(&self, ctx: &PrecisionContext) -> Self {
        super::elem::sin_cos(self, ctx).1
    }

    /// `(sin self, cos self)` with a shared argument reduction.
    pub fn sin_cos(&self, ctx: &PrecisionContext) -> (Self, Self) {
        super::elem::sin_cos(self, ctx)
    }

    pub fn atan(&self, ctx: &PrecisionContext) -> Self {
        super::elem::arg(self, &Real::one(self.prec()), ctx)
    }

    /// Four-quadrant arctangent `atan2(self, x)` in `(−π, π]`.
    pub fn atan2(&self, x: &Real, ctx: &PrecisionContext) -> Self {
        super::elem::arg(self, x, ctx)
    }

    /// Largest integer not exceeding `self`.
    pub fn floor(&self) -> Self {
        Real(self.0.floor())
    }

    /// Nearest integer, ties away from zero.
    pub fn round(&self) -> Self {
        let h = Real::frac(1, 2, 64);
        if self.is_negative() {
            -((-self) + &h).floor()
        } else {
            (self + &h).floor()
        }
    }

    pub fn max(&self, o: &Real) -> Self {
        if self >= o {
            self.clone()
        } else {
            o.clone()
        }
    }

    pub fn min(&self, o: &Real) -> Self {
        if self <= o {
            self.clone()
        } else {
            o.clone()
        }
    }

    /// Approximate `log₂|self|`; `-inf` for zero.  Valid far outside the
    /// range of `f64`.
    pub fn log2_abs(&self) -> f64 {
        match self.0.as_raw_parts() {
            Some((m, _, _, e, _)) if !self.is_zero() => {
                let top = *m.last().unwrap_or(&0);
                if top == 0 {
                    return f64::NEG_INFINITY;
                }
                e as f64 + libm::log2(top as f64) - 64.0
            }
            _ => f64::NEG_INFINITY,
        }
    }

    /// Conversion to the nearest double (saturating to ±inf or 0).
    pub fn to_f64(&self) -> f64 {
        match self.0.as_raw_parts() {
            Some((m, _, s, e, _)) if !self.is_zero() => {
                let top = *m.last().unwrap_or(&0);
                let mut v = top as f64;
                if m.len() > 1 {
                    v += m[m.len() - 2] as f64 / 18446744073709551616.0;
                }
                let v = libm::ldexp(v, e - 64);
                if s == Sign::Neg {
                    -v
                } else {
                    v
                }
            }
            _ => {
                if self.0.is_nan() {
                    f64::NAN
                } else if self.0.is_inf_pos() {
                    f64::INFINITY
                } else if self.0.is_inf_neg() {
                    f64::NEG_INFINITY
                } else {
                    0.0
                }
            }
        }
    }

    /// Exact conversion of a big integer, rounded to `p` bits.
    pub fn from_bigint(v: &BigInt, p: usize) -> Self {
        if v.is_zero() {
            return Real::zero(p);
        }
        let (sign, digits) = v.to_u64_digits();
        let e = (digits.len() * 64) as i32;
        let mut f = BigFloat::from_words(&digits, if sign == BigSign::Minus { Sign::Neg } else { Sign::Pos }, e);
        let _ = f.set_precision(p, RM);
        Real(f)
    }

    /// Rational rounded to `p` bits.
    pub fn from_rational(q: &BigRational, p: usize) -> Self {
        let wp = p + 8;
        let n = Real::from_bigint(q.numer(), wp.max(q.numer().bits() as usize + 64));
        let d = Real::from_bigint(q.denom(), wp.max(q.denom().bits() as usize + 64));
        Real((n / d).0).with_prec(p)
    }

    /// Integer part, truncated toward zero.
    pub fn trunc_to_bigint(&self) -> BigInt {
        match self.0.as_raw_parts() {
            Some((m, _, s, e, _)) if !self.is_zero() => {
                if e <= 0 {
                    return BigInt::zero();
                }
                let mag = BigUint::from_slice(
                    &m.iter().flat_map(|w| [(*w & 0xffff_ffff) as u32, (*w >> 32) as u32]).collect::<Vec<u32>>(),
                );
                let width = (m.len() * 64) as i64;
                let shift = width - e as i64;
                let int = if shift >= 0 { mag >> (shift as usize) } else { mag << ((-shift) as usize) };
                let r = BigInt::from_biguint(BigSign::Plus, int);
                if s == Sign::Neg {
                    -r
                } else {
                    r
                }
            }
            _ => BigInt::zero(),
        }
    }

    /// Nearest big integer.
    pub fn round_to_bigint(&self) -> BigInt {
        self.round().trunc_to_bigint()
    }

    /// Decimal scientific notation with `digits` significant digits,
    /// e.g. `-1.2659638780775052710e76`.
    pub fn to_sci(&self, digits: usize) -> String {
        let (neg, mant, e10) = self.decimal_digits(digits);
        if mant.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        s.push_str(&mant[..1]);
        if mant.len() > 1 {
            s.push('.');
            s.push_str(&mant[1..]);
        }
        s.push('e');
        s.push_str(&e10.to_string());
        s
    }

    /// Sign, significant digit string and decimal exponent `e` such that the
    /// value is `d.ddd × 10^e`.  Zero yields an empty digit string.
    pub fn decimal_digits(&self, digits: usize) -> (bool, String, i64) {
        let digits = digits.max(1);
        if self.is_zero() || !self.is_finite() {
            return (false, String::new(), 0);
        }
        let neg = self.is_negative();
        let p = self.prec().max(64) + 64;
        let x = self.abs().with_prec(p);
        let ten = Real::from_i64(10, p);
        let mut e10 = libm::floor(x.log2_abs() * core::f64::consts::LOG10_2) as i64;
        let lo = BigInt::from(10u32).pow(digits as u32 - 1);
        let hi = &lo * 10u32;
        for _ in 0..4 {
            let k = digits as i64 - 1 - e10;
            let y = &x * &ten.powi(k);
            let n = y.round_to_bigint();
            if n >= hi {
                e10 += 1;
                continue;
            }
            if n < lo {
                e10 -= 1;
                continue;
            }
            return (neg, n.to_string(), e10);
        }
        let y = &x * &ten.powi(digits as i64 - 1 - e10);
        (neg, y.round_to_bigint().to_string(), e10)
    }

    /// Parse a decimal (`-1.25e-3`) or rational (`7/2`) literal at `p` bits.
    pub fn parse(s: &str, p: usize) -> Result<Self> {
        Ok(Real::from_rational(&parse_rational(s)?, p))
    }
}

/// Parse a decimal or `p/q` literal into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(alloc::format!("not a number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = alloc::format!("{ip}{fp}").parse().map_err(|_| bad())?;
    let e = exp - fp.len() as i64;
    let ten = BigInt::from(10u32);
    let mut q = if e >= 0 {
        BigRational::from_integer(digits * ten.pow(e as u32))
    } else {
        BigRational::new(digits, ten.pow((-e) as u32))
    };
    if neg {
        q = -q;
    }
    Ok(q)
}

/// Exact rational value of a finite [`Real`].
pub fn real_to_rational(x: &Real) -> BigRational {
    match x.0.as_raw_parts() {
        Some((m, _, s, e, _)) if !x.is_zero() => {
            let mag = BigUint::from_slice(
                &m.iter().flat_map(|w| [(*w & 0xffff_ffff) as u32, (*w >> 32) as u32]).collect::<Vec<u32>>(),
            );
            let shift = e as i64 - (m.len() * 64) as i64;
            let n = BigInt::from_biguint(if s == Sign::Neg { BigSign::Minus } else { BigSign::Plus }, mag);
            if shift >= 0 {
                BigRational::from_integer(n << (shift as usize))
            } else {
                BigRational::new(n, BigInt::one() << ((-shift) as usize))
            }
        }
        _ => BigRational::zero(),
    }
}

/// `f64` view of a rational, for heuristics only.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 60).max(0);
    let shift_d = (db - 60).max(0);
    let n = (q.numer().abs() >> (shift_n as usize)).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> (shift_d as usize)).to_f64().unwrap_or(1.0);
    let v = libm::ldexp(n / d, (shift_n - shift_d) as i32);
    if q.is_negative() {
        -v
    } else {
        v
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(((self.prec() as f64) * core::f64::consts::LOG10_2) as usize);
        f.write_str(&self.to_sci(digits))
    }
}

impl PartialEq for Real {
    fn eq(&self, o: &Self) -> bool {
        self.0 == o.0
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&o.0)
    }
}

fn prec2(a: &BigFloat, b: &BigFloat) -> usize {
    a.mantissa_max_bit_len().unwrap_or(64).max(b.mantissa_max_bit_len().unwrap_or(64))
}

macro_rules! real_binop {
    ($tr:ident, $m:ident, $f:ident, $atr:ident, $am:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $m(self, o: &Real) -> Real {
                Real(self.0.$f(&o.0, prec2(&self.0, &o.0), RM))
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $m(self, o: Real) -> Real {
                self.$m(&o)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $m(self, o: &Real) -> Real {
                (&self).$m(o)
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $m(self, o: Real) -> Real {
                (&self).$m(&o)
            }
        }
        impl $tr<i64> for &Real {
            type Output = Real;
            fn $m(self, o: i64) -> Real {
                let p = self.prec().max(64);
                self.$m(&Real::from_i64(o, p))
            }
        }
        impl $tr<i64> for Real {
            type Output = Real;
            fn $m(self, o: i64) -> Real {
                (&self).$m(o)
            }
        }
        impl $atr<&Real> for Real {
            fn $am(&mut self, o: &Real) {
                *self = (&*self).$m(o);
            }
        }
        impl $atr<Real> for Real {
            fn $am(&mut self, o: Real) {
                *self = (&*self).$m(&o);
            }
        }
        impl $atr<i64> for Real {
            fn $am(&mut self, o: i64) {
                *self = (&*self).$m(o);
            }
        }
    };
}

real_binop!(Add, add, add, AddAssign, add_assign);
real_binop!(Sub, sub, sub, SubAssign, sub_assign);
real_binop!(Mul, mul, mul, MulAssign, mul_assign);
real_binop!(Div, div, div, DivAssign, div_assign);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(BigFloat::neg(&self.0))
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(BigFloat::neg(&self.0))
    }
}
