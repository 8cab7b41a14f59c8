//! Scalar domains and the traits the generic algorithms are written against.

pub mod bigreal;
pub mod complex;
pub mod surd;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use bigreal::BigReal;
pub use complex::Complex;
pub use surd::Surd2;

/// Arbitrary-size rational in canonical form (reduced, positive denominator).
pub type Rational = BigRational;

/// Ring operations shared by every coefficient domain.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + Debug + PartialEq + Zero + One + Neg<Output = T> + Add<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}

/// A scalar domain with division.
pub trait Field: Scalar + Div<Output = Self> {
    /// Arithmetic is exact (no rounding anywhere).
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    /// Embeds a rational; inexact domains round at `digits`.
    fn from_rational(q: &Rational, digits: u32) -> Self;

    /// Zero for exact domains; below the rounding floor relative to `scale` otherwise.
    fn is_negligible(&self, scale: &Self) -> bool;
}

/// An ordered field that can be evaluated numerically.
pub trait Real: Field + PartialOrd {
    fn to_big_real(&self, digits: u32) -> BigReal;
    fn from_big_real(x: &BigReal) -> Self;
    fn as_f64(&self) -> f64;

    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

/// Exact ordered fields (Sturm chains need exact remainders).
pub trait ExactField: Real {}

macro_rules! float_scalar {
    ($t:ty, $eps:expr) => {
        impl Field for $t {
            const EXACT: bool = false;
            fn from_i64(v: i64) -> Self {
                v as $t
            }
            fn from_rational(q: &Rational, _digits: u32) -> Self {
                ToPrimitive::to_f64(q).unwrap_or(f64::NAN) as $t
            }
            fn is_negligible(&self, scale: &Self) -> bool {
                self.abs() <= $eps * scale.abs()
            }
        }
        impl Real for $t {
            fn to_big_real(&self, digits: u32) -> BigReal {
                BigReal::from_f64(*self as f64).with_digits(digits)
            }
            fn from_big_real(x: &BigReal) -> Self {
                x.to_f64() as $t
            }
            fn as_f64(&self) -> f64 {
                *self as f64
            }
        }
    };
}

float_scalar!(f64, 1e-10);
float_scalar!(f32, 1e-3);

impl Field for Rational {
    const EXACT: bool = true;
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v.into())
    }
    fn from_rational(q: &Rational, _digits: u32) -> Self {
        q.clone()
    }
    fn is_negligible(&self, _scale: &Self) -> bool {
        self.is_zero()
    }
}

impl Real for Rational {
    fn to_big_real(&self, digits: u32) -> BigReal {
        BigReal::from_rational(self, digits)
    }
    fn from_big_real(x: &BigReal) -> Self {
        x.to_rational()
    }
    fn as_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl ExactField for Rational {}

impl Field for Surd2 {
    const EXACT: bool = true;
    fn from_i64(v: i64) -> Self {
        Surd2::from_rational(Rational::from_integer(v.into()))
    }
    fn from_rational(q: &Rational, _digits: u32) -> Self {
        Surd2::from_rational(q.clone())
    }
    fn is_negligible(&self, _scale: &Self) -> bool {
        self.is_zero()
    }
}

impl Real for Surd2 {
    fn to_big_real(&self, digits: u32) -> BigReal {
        Surd2::to_big_real(self, digits)
    }
    fn from_big_real(x: &BigReal) -> Self {
        Surd2::from_rational(x.to_rational())
    }
    fn as_f64(&self) -> f64 {
        Surd2::to_big_real(self, 20).to_f64()
    }
}

impl ExactField for Surd2 {}

impl Field for BigReal {
    const EXACT: bool = false;
    fn from_i64(v: i64) -> Self {
        BigReal::from_i64(v)
    }
    fn from_rational(q: &Rational, digits: u32) -> Self {
        BigReal::from_rational(q, digits)
    }
    fn is_negligible(&self, scale: &Self) -> bool {
        if self.is_exact() && scale.is_exact() {
            return self.is_zero();
        }
        let d = self.digits().min(scale.digits());
        let d = if d == bigreal::EXACT {
            bigreal::FALLBACK_DIGITS
        } else {
            d
        };
        self.abs() <= &BigReal::ten_pow(6 - d as i64, d) * &scale.abs()
    }
}

impl Real for BigReal {
    fn to_big_real(&self, digits: u32) -> BigReal {
        self.with_digits(digits)
    }
    fn from_big_real(x: &BigReal) -> Self {
        x.clone()
    }
    fn as_f64(&self) -> f64 {
        BigReal::to_f64(self)
    }
}

/// Parses `p`, `p/q`, or decimal text with optional exponent into an exact rational.
pub fn parse_rational_text(text: &str) -> Option<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = parse_int(n)?;
        let d: BigInt = parse_int(d)?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i64>().ok()?),
        None => (t, 0),
    };
    let (neg, body) = match mant.as_bytes().first()? {
        b'-' => (true, &mant[1..]),
        b'+' => (false, &mant[1..]),
        _ => (false, mant),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() {
        return None;
    }
    if !ip.bytes().chain(fp.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{ip}{fp}");
    let mut n: BigInt = digits.parse().ok()?;
    if neg {
        n = -n;
    }
    let e = exp - fp.len() as i64;
    let ten = BigInt::from(10u32);
    let r = if e >= 0 {
        Rational::from_integer(n * ten.pow(e as u32))
    } else {
        Rational::new(n, ten.pow((-e) as u32))
    };
    Some(r)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let body = s.strip_prefix(['+', '-']).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// First continued-fraction convergent of `x` within `tol`.
pub fn rationalize(x: &BigReal, tol: &BigReal) -> Rational {
    let target = x.to_rational();
    let tol_q = tol.to_rational();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = target.clone();
    loop {
        let a = rest.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        let approx = Rational::new(h2.clone(), k2.clone());
        if (&approx - &target).abs() <= tol_q {
            return approx;
        }
        let frac = &rest - Rational::from_integer(a);
        if frac.is_zero() {
            return approx;
        }
        rest = frac.recip();
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
    }
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
