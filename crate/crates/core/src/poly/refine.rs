//! Bracketed numeric root refinement at arbitrary precision.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{BigReal, ExactField, Rational, Real};

use super::sturm::isolate_real_roots;
use super::Polynomial;

/// Refines the single root of `f` in `[lo, hi]` to at least `digits` significant digits.
///
/// Bisection narrows the bracket, then safeguarded Newton runs at `digits + 20`; the
/// result keeps those guard digits. It stays inside the bracket and satisfies
/// `|f(x)| <= 10^(2 - digits) · max|c_i|`.
pub fn refine_root<T: Real>(f: &Polynomial<T>, lo: &T, hi: &T, digits: u32) -> Result<BigReal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let work = digits + 20;
    let g: Polynomial<BigReal> = f.map(|c| c.to_big_real(work));
    let dg = g.derivative();
    let (mut a, mut b) = (lo.to_big_real(work), hi.to_big_real(work));
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let (fa, fb) = (g.eval(&a), g.eval(&b));
    if fa.is_zero() {
        return Ok(a);
    }
    if fb.is_zero() {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange {
            lo: a.to_sig_string(12),
            hi: b.to_sig_string(12),
        });
    }
    let sa = fa.signum();
    let two = BigReal::from_i64(2);
    let scale = g.max_abs_coeff();
    let bound = &BigReal::ten_pow(2 - digits as i64, work) * &scale;
    let step_tol = BigReal::ten_pow(-(digits as i64) - 4, work);

    // Bisection until the bracket is narrow enough for Newton to take over safely.
    let coarse = BigReal::ten_pow(-12, work) * (b.abs().max(a.abs()).max(BigReal::one()));
    while &b - &a > coarse {
        let m = &(&a + &b) / &two;
        let fm = g.eval(&m);
        if fm.is_zero() {
            return Ok(m);
        }
        if fm.signum() == sa {
            a = m;
        } else {
            b = m;
        }
    }

    let mut x = &(&a + &b) / &two;
    for _ in 0..400 {
        let fx = g.eval(&x);
        if fx.is_zero() {
            break;
        }
        if fx.signum() == sa {
            a = x.clone();
        } else {
            b = x.clone();
        }
        let d = dg.eval(&x);
        let newton = if d.is_zero() { None } else { Some(&x - &(&fx / &d)) };
        let next = match newton {
            Some(n) if n > a && n < b => n,
            _ => &(&a + &b) / &two,
        };
        let step = (&next - &x).abs();
        x = next;
        if step <= &step_tol * &x.abs().max(BigReal::one()) && g.eval(&x).abs() <= bound {
            break;
        }
        if &b - &a <= &step_tol * &x.abs().max(BigReal::one()) {
            break;
        }
    }
    let lo_w = lo.to_big_real(work).min(hi.to_big_real(work));
    let hi_w = lo.to_big_real(work).max(hi.to_big_real(work));
    Ok(x.max(lo_w).min(hi_w))
}

/// [`refine_root`] for rational inputs.
pub fn refine_root_rational(f: &Polynomial<Rational>, lo: &Rational, hi: &Rational, digits: u32) -> Result<BigReal> {
    refine_root(f, lo, hi, digits)
}

/// Every distinct real root of an exact polynomial, ascending, at `digits`.
pub fn real_roots<T: ExactField>(f: &Polynomial<T>, digits: u32) -> Result<Vec<BigReal>> {
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sf = f.square_free();
    let iso = isolate_real_roots(&sf, None)?;
    iso.intervals
        .iter()
        .map(|(a, b)| refine_root(&sf, a, b, digits))
        .collect()
}

/// Every distinct real root in `(lo, hi)`, ascending.
pub fn real_roots_in<T: ExactField>(f: &Polynomial<T>, lo: &T, hi: &T, digits: u32) -> Result<Vec<BigReal>> {
    let sf = f.square_free();
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let iso = isolate_real_roots(&sf, Some((lo, hi)))?;
    iso.intervals
        .iter()
        .map(|(a, b)| refine_root(&sf, a, b, digits))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&n| rat(n, 1)).collect())
    }

    #[test]
    fn sqrt_two_thirty_digits() {
        let r = refine_root_rational(&ip(&[-2, 0, 1]), &rat(1, 1), &rat(2, 1), 30).unwrap();
        assert_eq!(r.to_sig_string(30), "1.41421356237309504880168872421");
        assert_eq!(r.to_sig_string(38), BigReal::sqrt2(40).to_sig_string(38));
    }

    #[test]
    fn no_sign_change() {
        let r = refine_root_rational(&ip(&[1, 0, 1]), &rat(0, 1), &rat(1, 1), 20);
        assert!(matches!(r, Err(Error::NoSignChange { .. })));
    }

    #[test]
    fn exact_root_at_endpoint_or_midpoint() {
        let r = refine_root_rational(&ip(&[-1, 1]), &rat(0, 1), &rat(2, 1), 20).unwrap();
        assert_eq!(r, BigReal::one());
    }

    #[test]
    fn float_domain() {
        let f = Polynomial::new(vec![-2.0f64, 0.0, 1.0]);
        let r = refine_root(&f, &1.0, &2.0, 15).unwrap();
        assert!((r.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn all_real_roots() {
        let f = Polynomial::from_roots(&[rat(-3, 2), rat(1, 3), rat(1, 3), rat(5, 1)]);
        let roots = real_roots(&f, 30).unwrap();
        let want = [-1.5, 1.0 / 3.0, 5.0];
        assert_eq!(roots.len(), 3);
        for (r, w) in roots.iter().zip(want) {
            assert!((r.to_f64() - w).abs() < 1e-14);
        }
    }

    proptest! {
        #[test]
        fn result_in_bracket_and_residual_small(c in proptest::collection::vec(-50i64..50, 2..7), digits in 10u32..60) {
            let f = ip(&c);
            prop_assume!(f.degree().unwrap_or(0) >= 1);
            let iso = isolate_real_roots(&f, None).unwrap();
            let sf = f.square_free();
            let scale = sf.max_abs_coeff().to_big_real(digits + 20);
            let bound = &BigReal::ten_pow(2 - digits as i64, digits + 20) * &scale;
            for (lo, hi) in &iso.intervals {
                let r = refine_root(&sf, lo, hi, digits).unwrap();
                prop_assert!(r >= lo.to_big_real(digits + 20) && r <= hi.to_big_real(digits + 20));
                let g: Polynomial<BigReal> = sf.map(|q| q.to_big_real(digits + 20));
                prop_assert!(g.eval(&r).abs() <= bound);
            }
        }
    }
}
