//! Binary floating point over an unbounded integer mantissa, with a decimal
//! precision context carried by every value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Context marker for values that are held exactly (integers, dyadic fractions).
pub const EXACT: u32 = u32::MAX;

/// Context used when two exact operands produce an inexact result
/// (non-dyadic quotient, irrational root).
pub const FALLBACK_DIGITS: u32 = 60;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

fn bits_for(digits: u32) -> u64 {
    (digits as f64 * LOG2_10).ceil() as u64 + 16
}

/// `mant * 2^exp`, rounded to the precision implied by `digits`.
#[derive(Clone)]
pub struct BigReal {
    mant: BigInt,
    exp: i64,
    digits: u32,
}

impl BigReal {
    fn from_parts(mant: BigInt, exp: i64, digits: u32) -> Self {
        let mut out = BigReal { mant, exp, digits };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        if self.digits != EXACT {
            let prec = bits_for(self.digits);
            let bits = self.mant.bits();
            if bits > prec {
                let shift = bits - prec;
                let neg = self.mant.sign() == Sign::Minus;
                let half = BigUint::one() << (shift - 1);
                let mag = (self.mant.magnitude() + half) >> shift;
                self.mant = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, mag);
                self.exp += shift as i64;
            }
        }
        if let Some(tz) = self.mant.trailing_zeros() {
            if tz > 0 {
                self.mant >>= tz;
                self.exp += tz as i64;
            }
        }
    }

    /// Exact integer.
    pub fn from_i64(v: i64) -> Self {
        Self::from_parts(BigInt::from(v), 0, EXACT)
    }

    /// Exact integer.
    pub fn from_bigint(v: BigInt) -> Self {
        Self::from_parts(v, 0, EXACT)
    }

    /// Exact conversion of a binary double.
    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 || !x.is_finite() {
            return Self::zero();
        }
        let (m, e, s) = num_traits::float::FloatCore::integer_decode(x);
        let mant = BigInt::from(m) * BigInt::from(s);
        Self::from_parts(mant, e as i64, EXACT)
    }

    /// Rational value rounded to `digits` (exact when the denominator is a power of two).
    pub fn from_rational(q: &BigRational, digits: u32) -> Self {
        let den = q.denom();
        let tz = den.trailing_zeros().unwrap_or(0);
        if (den >> tz).is_one() {
            let v = Self::from_parts(q.numer().clone(), -(tz as i64), EXACT);
            return if digits == EXACT { v } else { v.with_digits(digits) };
        }
        let digits = if digits == EXACT { FALLBACK_DIGITS } else { digits };
        let n = Self::from_parts(q.numer().clone(), 0, digits);
        let d = Self::from_parts(den.clone(), 0, digits);
        n / d
    }

    /// Exact dyadic rational with the same value.
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << (self.exp as u64))
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << ((-self.exp) as u64))
        }
    }

    /// Parses decimal (`-1.25e-3`) or rational (`7/3`) text.
    pub fn parse(text: &str, digits: u32) -> Result<Self> {
        let q = super::parse_rational_text(text).ok_or_else(|| Error::Parse(text.to_string()))?;
        Ok(Self::from_rational(&q, digits))
    }

    /// `10^k` at the given context.
    pub fn ten_pow(k: i64, digits: u32) -> Self {
        let p = BigInt::from(10u32).pow(k.unsigned_abs() as u32);
        if k >= 0 {
            Self::from_parts(p, 0, EXACT).with_digits(digits)
        } else {
            let d = if digits == EXACT { FALLBACK_DIGITS } else { digits };
            Self::from_parts(BigInt::one(), 0, d) / Self::from_parts(p, 0, d)
        }
    }

    pub fn sqrt2(digits: u32) -> Self {
        Self::from_i64(2).with_digits(digits).sqrt().expect("positive")
    }

    /// Re-rounds to `digits` and adopts that context.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::from_parts(self.mant.clone(), self.exp, digits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn is_exact(&self) -> bool {
        self.digits == EXACT
    }

    pub fn is_negative(&self) -> bool {
        self.mant.sign() == Sign::Minus
    }

    pub fn is_positive(&self) -> bool {
        self.mant.sign() == Sign::Plus
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        BigReal {
            mant: self.mant.abs(),
            exp: self.exp,
            digits: self.digits,
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Position of the leading bit: `2^(top-1) <= |x| < 2^top`.
    fn top(&self) -> i64 {
        self.exp + self.mant.bits() as i64
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        let digits = self.digits.min(other.digits);
        let om = if negate { -&other.mant } else { other.mant.clone() };
        if other.mant.is_zero() {
            return self.with_digits(digits);
        }
        if self.mant.is_zero() {
            return Self::from_parts(om, other.exp, digits);
        }
        if digits != EXACT {
            let gap = bits_for(digits) as i64 + 8;
            if self.top() > other.top() + gap {
                return self.with_digits(digits);
            }
            if other.top() > self.top() + gap {
                return Self::from_parts(om, other.exp, digits);
            }
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << ((self.exp - e) as u64);
        let b = om << ((other.exp - e) as u64);
        Self::from_parts(a + b, e, digits)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let digits = self.digits.min(other.digits);
        Self::from_parts(&self.mant * &other.mant, self.exp + other.exp, digits)
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.mant.is_zero() {
            return None;
        }
        let mut digits = self.digits.min(other.digits);
        if digits == EXACT {
            let tz = other.mant.trailing_zeros().unwrap_or(0);
            let odd = &other.mant >> tz;
            let (q, r) = self.mant.div_rem(&odd);
            if r.is_zero() {
                return Some(Self::from_parts(q, self.exp - other.exp - tz as i64, EXACT));
            }
            digits = FALLBACK_DIGITS;
        }
        let prec = bits_for(digits) as i64;
        let s = (prec + 2 + other.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let q = (&self.mant << (s as u64)) / &other.mant;
        Some(Self::from_parts(q, self.exp - s - other.exp, digits))
    }

    /// Square root; negative input is a domain error.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::Domain(format!(
                "square root of negative {}",
                self.to_sig_string(12)
            )));
        }
        if self.mant.is_zero() {
            return Ok(self.clone());
        }
        let mut digits = self.digits;
        if digits == EXACT {
            let (m, e) = if self.exp % 2 != 0 {
                (&self.mant << 1u32, self.exp - 1)
            } else {
                (self.mant.clone(), self.exp)
            };
            let r = m.sqrt();
            if &r * &r == m {
                return Ok(Self::from_parts(r, e / 2, EXACT));
            }
            digits = FALLBACK_DIGITS;
        }
        let prec = bits_for(digits) as i64;
        let mut s = (2 * prec + 4 - self.mant.bits() as i64).max(0);
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let r = (&self.mant << (s as u64)).sqrt();
        Ok(Self::from_parts(r, (self.exp - s) / 2, digits))
    }

    /// Real n-th root; odd roots of negative values are allowed.
    pub fn nth_root(&self, n: u32) -> Result<Self> {
        assert!(n >= 1);
        if n == 1 || self.mant.is_zero() {
            return Ok(self.clone());
        }
        if self.is_negative() {
            if n.is_multiple_of(2) {
                return Err(Error::Domain(format!(
                    "even root of negative {}",
                    self.to_sig_string(12)
                )));
            }
            return Ok(-self.neg().nth_root(n)?);
        }
        let nn = n as i64;
        let mut digits = self.digits;
        if digits == EXACT {
            let s0 = self.exp.rem_euclid(nn);
            let m = &self.mant << (s0 as u64);
            let r = m.nth_root(n);
            if r.pow(n) == m {
                return Ok(Self::from_parts(r, (self.exp - s0) / nn, EXACT));
            }
            digits = FALLBACK_DIGITS;
        }
        let prec = bits_for(digits) as i64;
        let mut s = (nn * prec + 4 - self.mant.bits() as i64).max(0);
        s += (self.exp - s).rem_euclid(nn);
        let r = (&self.mant << (s as u64)).nth_root(n);
        Ok(Self::from_parts(r, (self.exp - s) / nn, digits))
    }

    pub fn cbrt(&self) -> Self {
        self.nth_root(3).expect("odd root is total")
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn recip(&self) -> Self {
        Self::one() / self
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let (m, e) = if bits > 64 {
            (&self.mant >> ((bits - 64) as u64), self.exp + bits - 64)
        } else {
            (self.mant.clone(), self.exp)
        };
        let f = m.to_f64().unwrap_or(0.0);
        if e > 2200 {
            return f * f64::INFINITY;
        }
        if e < -2300 {
            return 0.0;
        }
        let h = (e / 2) as i32;
        f * 2f64.powi(h) * 2f64.powi(e as i32 - h)
    }

    /// Significant decimal digits: sign, digit string of length `sig`, and the
    /// decimal exponent of the first digit.
    pub fn decimal_digits(&self, sig: usize, round: bool) -> (bool, String, i64) {
        let sig = sig.max(1);
        if self.mant.is_zero() {
            return (false, "0".repeat(sig), 0);
        }
        let neg = self.is_negative();
        let est = ((self.top() as f64) * std::f64::consts::LOG10_2).floor() as i64;
        let mut k = sig as i64 - est + 2;
        loop {
            let mut num = self.mant.abs();
            let mut den = BigInt::one();
            if k >= 0 {
                num *= BigInt::from(10u32).pow(k as u32);
            } else {
                den *= BigInt::from(10u32).pow((-k) as u32);
            }
            if self.exp >= 0 {
                num <<= self.exp as u64;
            } else {
                den <<= (-self.exp) as u64;
            }
            let n = num / den;
            let s = n.to_string();
            if s.len() < sig + 1 {
                k += (sig + 1 - s.len()) as i64 + 1;
                continue;
            }
            let mut e10 = s.len() as i64 - 1 - k;
            let mut digits: Vec<u8> = s.as_bytes()[..sig].to_vec();
            if round && s.as_bytes()[sig] >= b'5' {
                let mut i = sig;
                loop {
                    if i == 0 {
                        digits.insert(0, b'1');
                        digits.truncate(sig);
                        e10 += 1;
                        break;
                    }
                    i -= 1;
                    if digits[i] == b'9' {
                        digits[i] = b'0';
                    } else {
                        digits[i] += 1;
                        break;
                    }
                }
            }
            return (neg, String::from_utf8(digits).expect("ascii"), e10);
        }
    }

    /// Rounded to `sig` significant digits; positional for moderate exponents.
    pub fn to_sig_string(&self, sig: usize) -> String {
        let (neg, d, e10) = self.decimal_digits(sig, true);
        format_digits(neg, &d, e10)
    }

    /// Truncated (not rounded) to `sig` significant digits.
    pub fn to_sig_string_truncated(&self, sig: usize) -> String {
        let (neg, d, e10) = self.decimal_digits(sig, false);
        format_digits(neg, &d, e10)
    }

    /// Fixed number of digits after the decimal point, rounded.
    pub fn to_fixed_string(&self, frac: usize) -> String {
        if self.mant.is_zero() {
            return if frac == 0 {
                "0".into()
            } else {
                format!("0.{}", "0".repeat(frac))
            };
        }
        let scaled = self * &Self::ten_pow(frac as i64, EXACT);
        let q = scaled.to_rational();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let r = if q.is_negative() {
            -((-q) + half).floor()
        } else {
            (q + half).floor()
        };
        let n = r.to_integer();
        let neg = n.is_negative();
        let mut s = n.abs().to_string();
        if s.len() <= frac {
            s = format!("{}{}", "0".repeat(frac + 1 - s.len()), s);
        }
        let (ip, fp) = s.split_at(s.len() - frac);
        let body = if frac == 0 {
            ip.to_string()
        } else {
            format!("{ip}.{fp}")
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn format_digits(neg: bool, d: &str, e10: i64) -> String {
    let sign = if neg { "-" } else { "" };
    if !(-8..=40).contains(&e10) {
        let (h, t) = d.split_at(1);
        return if t.is_empty() {
            format!("{sign}{h}e{e10}")
        } else {
            format!("{sign}{h}.{t}e{e10}")
        };
    }
    if e10 < 0 {
        return format!("{sign}0.{}{d}", "0".repeat((-e10 - 1) as usize));
    }
    let ip = (e10 + 1) as usize;
    if d.len() <= ip {
        format!("{sign}{d}{}", "0".repeat(ip - d.len()))
    } else {
        format!("{sign}{}.{}", &d[..ip], &d[ip..])
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = if self.digits == EXACT { 40 } else { self.digits as usize };
        write!(f, "{}", self.to_sig_string(sig))
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = if self.digits == EXACT { 40 } else { self.digits as usize };
        write!(
            f,
            "BigReal({}; {})",
            self.to_sig_string(sig.min(50)),
            if self.digits == EXACT {
                "exact".to_string()
            } else {
                self.digits.to_string()
            }
        )
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.mant == other.mant && self.exp == other.exp
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return Some(sa.cmp(&sb));
        }
        if sa == 0 {
            return Some(Ordering::Equal);
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << ((self.exp - e) as u64);
        let b = &other.mant << ((other.exp - e) as u64);
        Some(a.cmp(&b))
    }
}

impl Zero for BigReal {
    fn zero() -> Self {
        BigReal {
            mant: BigInt::zero(),
            exp: 0,
            digits: EXACT,
        }
    }
    fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }
}

impl One for BigReal {
    fn one() -> Self {
        BigReal {
            mant: BigInt::one(),
            exp: 0,
            digits: EXACT,
        }
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal {
            mant: -self.mant,
            exp: self.exp,
            digits: self.digits,
        }
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal {
            mant: -&self.mant,
            exp: self.exp,
            digits: self.digits,
        }
    }
}

impl<'a> Add<&'a BigReal> for &'a BigReal {
    type Output = BigReal;
    fn add(self, o: &BigReal) -> BigReal {
        self.add_signed(o, false)
    }
}

impl<'a> Sub<&'a BigReal> for &'a BigReal {
    type Output = BigReal;
    fn sub(self, o: &BigReal) -> BigReal {
        self.add_signed(o, true)
    }
}

impl<'a> Mul<&'a BigReal> for &'a BigReal {
    type Output = BigReal;
    fn mul(self, o: &BigReal) -> BigReal {
        self.mul_ref(o)
    }
}

impl<'a> Div<&'a BigReal> for &'a BigReal {
    type Output = BigReal;
    fn div(self, o: &BigReal) -> BigReal {
        self.checked_div(o).expect("BigReal division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, o: BigReal) -> BigReal { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, o: &BigReal) -> BigReal { (&self).$m(o) }
        }
        impl<'a> $tr<BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $m(self, o: BigReal) -> BigReal { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);
