//! Complex pairs of [`BigReal`], enough for closed-form root output.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::bigreal::BigReal;

#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: BigReal,
    pub im: BigReal,
}

impl Complex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        Complex { re, im }
    }

    pub fn real(re: BigReal) -> Self {
        Complex {
            re,
            im: BigReal::zero(),
        }
    }

    pub fn zero() -> Self {
        Complex::real(BigReal::zero())
    }

    pub fn one() -> Self {
        Complex::real(BigReal::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Complex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm_sqr(&self) -> BigReal {
        &self.re.square() + &self.im.square()
    }

    pub fn abs(&self) -> BigReal {
        self.norm_sqr().sqrt().expect("non-negative")
    }

    pub fn scale(&self, k: &BigReal) -> Self {
        Complex {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn digits(&self) -> u32 {
        self.re.digits().min(self.im.digits())
    }

    /// True when `|im| <= tol·max(1, |re|)`.
    pub fn is_real_within(&self, tol: &BigReal) -> bool {
        let scale = self.re.abs().max(BigReal::one());
        self.im.abs() <= tol * &scale
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        if self.im.is_zero() {
            return if self.re.is_negative() {
                Complex {
                    re: BigReal::zero(),
                    im: (-&self.re).sqrt().expect("positive"),
                }
            } else {
                Complex::real(self.re.sqrt().expect("non-negative"))
            };
        }
        let r = self.abs();
        let two = BigReal::from_i64(2);
        let re = ((&r + &self.re) / &two).abs().sqrt().expect("non-negative");
        let im = ((&r - &self.re) / &two).abs().sqrt().expect("non-negative");
        let im = if self.im.is_negative() { -im } else { im };
        Complex { re, im }
    }

    /// Principal n-th root, polished by Newton from a double-precision guess.
    pub fn nth_root(&self, n: u32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let digits = match self.digits() {
            super::bigreal::EXACT => super::bigreal::FALLBACK_DIGITS,
            d => d,
        };
        let (x, y) = (self.re.to_f64(), self.im.to_f64());
        let rho = x.hypot(y).powf(1.0 / n as f64);
        let th = y.atan2(x) / n as f64;
        let mut w = Complex::new(BigReal::from_f64(rho * th.cos()), BigReal::from_f64(rho * th.sin()));
        w = Complex::new(w.re.with_digits(digits), w.im.with_digits(digits));
        let nn = BigReal::from_i64(n as i64);
        let tol = BigReal::ten_pow(-(digits as i64) - 2, digits + 10);
        for _ in 0..200 {
            let wn1 = w.powu(n - 1);
            let f = &(&wn1 * &w) - self;
            let step = &f / &wn1.scale(&nn);
            w = &w - &step;
            if step.abs() <= &tol * &w.abs() {
                break;
            }
        }
        w
    }

    pub fn powu(&self, n: u32) -> Self {
        let mut acc = Complex::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `e^{2πik/5}` from radicals.
    pub fn fifth_root_of_unity(k: u32, digits: u32) -> Self {
        let five = BigReal::from_i64(5).with_digits(digits);
        let s5 = five.sqrt().expect("positive");
        let four = BigReal::from_i64(4);
        let c = &(&s5 - &BigReal::one()) / &four;
        let s = (&BigReal::from_i64(10) + &(&BigReal::from_i64(2) * &s5))
            .sqrt()
            .expect("positive")
            / &four;
        Complex::new(c, s).powu(k % 5)
    }

    pub fn to_sig_string(&self, sig: usize) -> String {
        if self.im.is_zero() {
            return self.re.to_sig_string(sig);
        }
        let re = self.re.to_sig_string(sig);
        if self.im.is_negative() {
            format!("{re} - {}i", (-&self.im).to_sig_string(sig))
        } else {
            format!("{re} + {}i", self.im.to_sig_string(sig))
        }
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.digits();
        let sig = if d == super::bigreal::EXACT { 40 } else { d as usize };
        write!(f, "{}", self.to_sig_string(sig))
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl<'a> Add<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn add(self, o: &Complex) -> Complex {
        Complex {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl<'a> Sub<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn sub(self, o: &Complex) -> Complex {
        Complex {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl<'a> Mul<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn mul(self, o: &Complex) -> Complex {
        Complex {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

impl<'a> Div<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn div(self, o: &Complex) -> Complex {
        if o.im.is_zero() {
            return Complex {
                re: &self.re / &o.re,
                im: &self.im / &o.re,
            };
        }
        let d = o.norm_sqr();
        let n = self * &o.conj();
        Complex {
            re: &n.re / &d,
            im: &n.im / &d,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Complex> for Complex {
            type Output = Complex;
            fn $m(self, o: Complex) -> Complex { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a Complex> for Complex {
            type Output = Complex;
            fn $m(self, o: &Complex) -> Complex { (&self).$m(o) }
        }
        impl<'a> $tr<Complex> for &'a Complex {
            type Output = Complex;
            fn $m(self, o: Complex) -> Complex { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: &str, im: &str) -> Complex {
        Complex::new(BigReal::parse(re, 50).unwrap(), BigReal::parse(im, 50).unwrap())
    }

    #[test]
    fn sqrt_of_minus_one() {
        let s = c("-1", "0").sqrt();
        assert!(s.re.is_zero());
        assert_eq!(s.im, BigReal::one());
    }

    #[test]
    fn principal_sqrt_squares_back() {
        let z = c("-3", "-4");
        let s = z.sqrt();
        assert!(s.re.is_positive());
        let back = &s * &s;
        assert!((&back - &z).abs() < BigReal::ten_pow(-45, 60));
    }

    #[test]
    fn cube_root_newton() {
        let z = c("-2", "5");
        let w = z.nth_root(3);
        assert!((&w.powu(3) - &z).abs() < BigReal::ten_pow(-45, 60));
        assert!(w.re.is_positive());
    }

    #[test]
    fn fifth_roots_of_unity() {
        for k in 0..5 {
            let w = Complex::fifth_root_of_unity(k, 50);
            assert!((&w.powu(5) - &Complex::one()).abs() < BigReal::ten_pow(-45, 60));
        }
        let w1 = Complex::fifth_root_of_unity(1, 30);
        assert!((w1.re.to_f64() - (2.0 * std::f64::consts::PI / 5.0).cos()).abs() < 1e-15);
    }
}
