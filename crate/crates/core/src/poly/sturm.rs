//! Sturm chains and exact real-root isolation.

use crate::error::{Error, Result};
use crate::numeric::{BigReal, ExactField, Real};

use super::Polynomial;

/// Disjoint sorted intervals `(lo, hi]`, each holding exactly one distinct real root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootIsolation<T> {
    pub intervals: Vec<(T, T)>,
    /// Set when `gcd(f, f′)` is nonconstant, i.e. some root is repeated.
    pub multiplicity_note: bool,
}

impl<T: Real> RootIsolation<T> {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn to_big_real(&self, digits: u32) -> Vec<(BigReal, BigReal)> {
        self.intervals
            .iter()
            .map(|(a, b)| (a.to_big_real(digits), b.to_big_real(digits)))
            .collect()
    }
}

/// `f, f′, −rem(f, f′), …` down to a constant.
pub fn sturm_chain<T: ExactField>(f: &Polynomial<T>) -> Result<Vec<Polynomial<T>>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    Ok(chain)
}

fn variations<T: ExactField>(chain: &[Polynomial<T>], x: &T) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_zero() {
            0
        } else if v < T::zero() {
            -1
        } else {
            1
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn sturm_count<T: ExactField>(f: &Polynomial<T>, lo: &T, hi: &T) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    for e in [lo, hi] {
        if f.eval(e).is_zero() {
            return Err(Error::EndpointIsRoot(format!("{:?}", e)));
        }
    }
    let chain = sturm_chain(&f.square_free())?;
    Ok(variations(&chain, lo) - variations(&chain, hi))
}

/// Cauchy bound `1 + max|c_i| / |lead|`: every real root lies strictly inside `(−B, B)`.
pub fn root_bound<T: Real>(f: &Polynomial<T>) -> Result<T> {
    let lead = f.lead().ok_or(Error::ZeroPolynomial)?.abs_val();
    let n = f.coeffs().len();
    let m = f.coeffs()[..n - 1].iter().fold(T::zero(), |m, c| {
        let a = c.abs_val();
        if a > m {
            a
        } else {
            m
        }
    });
    Ok(T::one() + m / lead)
}

/// Isolates every distinct real root of `f` inside `(lo, hi)`; the whole line when no
/// bounds are given. Endpoints that are roots are rejected.
pub fn isolate_real_roots<T: ExactField>(f: &Polynomial<T>, bounds: Option<(&T, &T)>) -> Result<RootIsolation<T>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = f.square_free();
    let multiplicity_note = sf.degree() != f.degree();
    let (lo, hi) = match bounds {
        Some((a, b)) => (a.clone(), b.clone()),
        None => {
            let b = root_bound(&sf)?;
            (-b.clone(), b)
        }
    };
    let total = sturm_count(&sf, &lo, &hi)?;
    let chain = sturm_chain(&sf)?;
    let two = T::from_i64(2);
    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mut mid = (a.clone() + b.clone()) / two.clone();
        let mut nudge = (b.clone() - a.clone()) / T::from_i64(8);
        while sf.eval(&mid).is_zero() {
            nudge = nudge / T::from_i64(3);
            mid = mid + nudge.clone();
        }
        let left = variations(&chain, &a) - variations(&chain, &mid);
        stack.push((mid.clone(), b, n - left));
        stack.push((a, mid, left));
    }
    out.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("exact order"));
    Ok(RootIsolation {
        intervals: out,
        multiplicity_note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, Rational, Surd2};
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&n| rat(n, 1)).collect())
    }

    #[test]
    fn counts_square_root_of_two() {
        assert_eq!(sturm_count(&ip(&[-2, 0, 1]), &rat(0, 1), &rat(2, 1)).unwrap(), 1);
    }

    #[test]
    fn repeated_roots_counted_once() {
        let f = Polynomial::from_roots(&[rat(1, 1), rat(1, 1), rat(-1, 1)]);
        assert_eq!(sturm_count(&f, &rat(-2, 1), &rat(2, 1)).unwrap(), 2);
        let iso = isolate_real_roots(&f, None).unwrap();
        assert!(iso.multiplicity_note);
        assert_eq!(iso.len(), 2);
    }

    #[test]
    fn endpoint_root_rejected() {
        let r = sturm_count(&ip(&[-1, 1]), &rat(1, 1), &rat(2, 1));
        assert!(matches!(r, Err(Error::EndpointIsRoot(_))));
        assert_eq!(
            sturm_count(&ip(&[-1, 1]), &rat(2, 1), &rat(0, 1)),
            Err(Error::EmptyInterval)
        );
    }

    #[test]
    fn symmetric_quartic_two_real_roots_in_unit_interval() {
        // ε⁴ + 2pε³ − ε² − 2pε + p² with p ≈ √2 − 1
        let p = rat(408, 985);
        let f = Polynomial::new(vec![&p * &p, -(&p * rat(2, 1)), rat(-1, 1), &p * rat(2, 1), rat(1, 1)]);
        assert_eq!(sturm_count(&f, &rat(0, 1), &rat(1, 1)).unwrap(), 2);
        let iso = isolate_real_roots(&f, Some((&rat(0, 1), &rat(1, 1)))).unwrap();
        assert!(!iso.multiplicity_note);
        assert!(iso.intervals[0].1 <= rat(1, 2) && iso.intervals[1].0 >= rat(1, 2));
    }

    #[test]
    fn surd_coefficients() {
        // x² − 2 over Q(√2) has exactly the roots ±√2; isolate them on the whole line.
        let f = Polynomial::new(vec![
            Surd2::from_rational(rat(-2, 1)),
            Surd2::from_rational(rat(0, 1)),
            Surd2::from_rational(rat(1, 1)),
        ]);
        let iso = isolate_real_roots(&f, None).unwrap();
        assert_eq!(iso.len(), 2);
        // (x − √2)(x − 1): both roots distinct inside (0, 2)
        let g = Polynomial::from_roots(&[Surd2::sqrt2(), Surd2::from_rational(rat(1, 1))]);
        let n = sturm_count(&g, &Surd2::from_rational(rat(1, 2)), &Surd2::from_rational(rat(2, 1))).unwrap();
        assert_eq!(n, 2);
    }

    fn roots_poly() -> impl Strategy<Value = (Vec<i64>, Polynomial<Rational>)> {
        proptest::collection::vec(-6i64..6, 1..6).prop_flat_map(|roots| {
            (Just(roots.clone()), 1i64..4, proptest::collection::vec(1i64..5, 0..2)).prop_map(|(r, k, extra)| {
                let mut f = Polynomial::from_roots(&r.iter().map(|&v| rat(v, 1)).collect::<Vec<_>>());
                // irreducible quadratic factors contribute no real roots
                for e in extra {
                    f = &f * &Polynomial::new(vec![rat(e, 1), rat(0, 1), rat(1, 1)]);
                }
                (r, f.scale(&rat(k, 1)))
            })
        })
    }

    proptest! {
        #[test]
        fn count_over_cauchy_bound_is_total((roots, f) in roots_poly()) {
            let mut distinct = roots.clone();
            distinct.sort();
            distinct.dedup();
            let b = root_bound(&f).unwrap();
            prop_assert_eq!(sturm_count(&f, &-b.clone(), &b).unwrap(), distinct.len());
            let iso = isolate_real_roots(&f, None).unwrap();
            prop_assert_eq!(iso.len(), distinct.len());
            for w in iso.intervals.windows(2) {
                prop_assert!(w[0].1 <= w[1].0);
            }
            for ((lo, hi), r) in iso.intervals.iter().zip(distinct.iter()) {
                let r = rat(*r, 1);
                prop_assert!(lo < &r && &r <= hi);
            }
        }
    }
}
