//! Exact arithmetic in Q(√2).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bigreal::BigReal;
use super::{parse_rational_text, Rational};
use crate::error::{Error, Result};

/// `rat + surd·√2` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd2 {
    pub rat: Rational,
    pub surd: Rational,
}

fn q(n: i64, d: i64) -> Rational {
    BigRational::new(n.into(), d.into())
}

impl Surd2 {
    pub fn new(rat: Rational, surd: Rational) -> Self {
        Surd2 { rat, surd }
    }

    /// `a/b + (c/d)·√2` from small integers.
    pub fn from_fracs(a: i64, b: i64, c: i64, d: i64) -> Self {
        Surd2 {
            rat: q(a, b),
            surd: q(c, d),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Surd2 {
            rat: r,
            surd: Rational::zero(),
        }
    }

    pub fn sqrt2() -> Self {
        Surd2 {
            rat: Rational::zero(),
            surd: Rational::one(),
        }
    }

    /// `a − b√2`.
    pub fn conjugate(&self) -> Self {
        Surd2 {
            rat: self.rat.clone(),
            surd: -&self.surd,
        }
    }

    /// `a² − 2b²`, the field norm.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(2.into()) * &self.surd * &self.surd
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = rhs.norm();
        let num = self * &rhs.conjugate();
        Ok(Surd2 {
            rat: num.rat / &n,
            surd: num.surd / n,
        })
    }

    pub fn recip(&self) -> Result<Self> {
        Surd2::one().checked_div(self)
    }

    /// Exact sign of `a + b√2`.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.rat);
        let sb = sign_of(&self.surd);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        let a2 = &self.rat * &self.rat;
        let b2 = Rational::from_integer(2.into()) * &self.surd * &self.surd;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Surd2::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Numeric value with relative error at most `10^(2−digits)`.
    ///
    /// When the two parts cancel, evaluates `(a² − 2b²)/(a − b√2)` so the only
    /// subtraction left is exact.
    pub fn to_big_real(&self, digits: u32) -> BigReal {
        let work = digits + 4;
        let a = BigReal::from_rational(&self.rat, work);
        if self.surd.is_zero() {
            return a.with_digits(digits);
        }
        let s2 = BigReal::sqrt2(work);
        let b = BigReal::from_rational(&self.surd, work);
        let cancels = sign_of(&self.rat) * sign_of(&self.surd) < 0;
        let v = if cancels {
            let n = BigReal::from_rational(&self.norm(), work);
            &n / &(&a - &(&b * &s2))
        } else {
            &a + &(&b * &s2)
        };
        v.with_digits(digits)
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

impl Zero for Surd2 {
    fn zero() -> Self {
        Surd2 {
            rat: Rational::zero(),
            surd: Rational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }
}

impl One for Surd2 {
    fn one() -> Self {
        Surd2 {
            rat: Rational::one(),
            surd: Rational::zero(),
        }
    }
}

impl PartialOrd for Surd2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self - other).signum().cmp(&0))
    }
}

impl Neg for Surd2 {
    type Output = Surd2;
    fn neg(self) -> Surd2 {
        Surd2 {
            rat: -self.rat,
            surd: -self.surd,
        }
    }
}

impl Neg for &Surd2 {
    type Output = Surd2;
    fn neg(self) -> Surd2 {
        Surd2 {
            rat: -&self.rat,
            surd: -&self.surd,
        }
    }
}

impl<'a> Add<&'a Surd2> for &'a Surd2 {
    type Output = Surd2;
    fn add(self, o: &Surd2) -> Surd2 {
        Surd2 {
            rat: &self.rat + &o.rat,
            surd: &self.surd + &o.surd,
        }
    }
}

impl<'a> Sub<&'a Surd2> for &'a Surd2 {
    type Output = Surd2;
    fn sub(self, o: &Surd2) -> Surd2 {
        Surd2 {
            rat: &self.rat - &o.rat,
            surd: &self.surd - &o.surd,
        }
    }
}

impl<'a> Mul<&'a Surd2> for &'a Surd2 {
    type Output = Surd2;
    fn mul(self, o: &Surd2) -> Surd2 {
        let two = Rational::from_integer(2.into());
        Surd2 {
            rat: &self.rat * &o.rat + two * &self.surd * &o.surd,
            surd: &self.rat * &o.surd + &self.surd * &o.rat,
        }
    }
}

impl<'a> Div<&'a Surd2> for &'a Surd2 {
    type Output = Surd2;
    fn div(self, o: &Surd2) -> Surd2 {
        self.checked_div(o).expect("Surd2 division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Surd2> for Surd2 {
            type Output = Surd2;
            fn $m(self, o: Surd2) -> Surd2 { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a Surd2> for Surd2 {
            type Output = Surd2;
            fn $m(self, o: &Surd2) -> Surd2 { (&self).$m(o) }
        }
        impl<'a> $tr<Surd2> for &'a Surd2 {
            type Output = Surd2;
            fn $m(self, o: Surd2) -> Surd2 { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for Surd2 {
    /// `p/q + r/s*sqrt2`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.surd.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}*sqrt2", self.surd),
            (false, false) => {
                if self.surd.is_negative() {
                    write!(f, "{} - {}*sqrt2", self.rat, -&self.surd)
                } else {
                    write!(f, "{} + {}*sqrt2", self.rat, self.surd)
                }
            }
        }
    }
}

impl FromStr for Surd2 {
    type Err = Error;

    /// Accepts sums of terms `p/q` and `p/q*sqrt2` (or bare `sqrt2`).
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse(s.to_string()));
        }
        let mut out = Surd2::zero();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..=bytes.len() {
            let boundary = i == bytes.len()
                || ((bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E' | b'*'));
            if !boundary {
                continue;
            }
            let term = &compact[start..i];
            start = i;
            let (neg, body) = match term.as_bytes()[0] {
                b'+' => (false, &term[1..]),
                b'-' => (true, &term[1..]),
                _ => (false, term),
            };
            let (coef, is_surd) = if let Some(c) = body.strip_suffix("*sqrt2") {
                (c.to_string(), true)
            } else if body == "sqrt2" {
                ("1".to_string(), true)
            } else {
                (body.to_string(), false)
            };
            let mut v = parse_rational_text(&coef).ok_or_else(|| Error::Parse(s.to_string()))?;
            if neg {
                v = -v;
            }
            if is_surd {
                out.surd += v;
            } else {
                out.rat += v;
            }
        }
        Ok(out)
    }
}
