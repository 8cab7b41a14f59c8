//! Dense univariate polynomials, constant coefficient first.

pub mod refine;
pub mod sturm;
pub mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::numeric::{Field, Real, Scalar};

pub use refine::{refine_root, refine_root_rational};
pub use sturm::{isolate_real_roots, root_bound, sturm_chain, sturm_count, RootIsolation};
pub use text::{format_poly, parse_poly, parse_poly_file, NamedPoly};

/// `coeffs[i]` is the coefficient of `x^i`; the leading coefficient is never zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    /// `x − r`.
    pub fn linear_root(r: T) -> Self {
        Polynomial {
            coeffs: vec![-r, T::one()],
        }
    }

    /// Product of `(x − r)` over the given roots.
    pub fn from_roots(roots: &[T]) -> Self {
        roots
            .iter()
            .fold(Self::constant(T::one()), |acc, r| &acc * &Self::linear_root(r.clone()))
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = T::zero();
        for c in self.coeffs.iter().skip(1) {
            k = k + T::one();
            out.push(c.clone() * k.clone());
        }
        Self::new(out)
    }

    /// k-th derivative.
    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![T::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs: out }
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Coefficient-wise conversion into another domain.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// `f(x + a)`.
    pub fn taylor_shift(&self, a: &T) -> Self {
        let shift = Polynomial {
            coeffs: vec![a.clone(), T::one()],
        };
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &shift) + &Self::constant(c.clone()))
    }
}

impl<T: Field> Polynomial<T> {
    /// Division by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lead = self.lead().ok_or(Error::ZeroPolynomial)?.clone();
        let n = self.coeffs.len();
        let mut out: Vec<T> = self.coeffs[..n - 1].iter().map(|c| c.clone() / lead.clone()).collect();
        out.push(T::one());
        Ok(Self::new(out))
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.lead().ok_or(Error::DivisionByZero)?.clone();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![T::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone() / dl.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * dc.clone();
            }
            r[i + dd] = T::zero();
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Monic greatest common divisor (meaningful over exact domains).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic().unwrap_or(a)
    }

    /// `f / gcd(f, f′)`: same distinct roots, all simple.
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) < 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("gcd is nonzero").0
    }
}

impl<T: Real> Polynomial<T> {
    /// `max |c_i|` (zero for the zero polynomial).
    pub fn max_abs_coeff(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| {
            let a = c.abs_val();
            if a > m {
                a
            } else {
                m
            }
        })
    }

    /// True when every coefficient is negligible relative to `scale`.
    pub fn is_negligible(&self, scale: &T) -> bool {
        self.coeffs.iter().all(|c| c.is_negligible(scale))
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, o: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, o: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, o: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr<Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, o: Polynomial<T>) -> Polynomial<T> { (&self).$m(&o) }
        }
        impl<'a, T: Scalar> $tr<&'a Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, o: &Polynomial<T>) -> Polynomial<T> { (&self).$m(o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Scalar + fmt::Display> fmt::Display for Polynomial<T> {
    /// Space-separated coefficients, constant first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}
