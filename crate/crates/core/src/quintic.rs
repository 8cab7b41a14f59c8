//! Solvability of the Bring–Jerrard quintic `z⁵ + az + b` left over after reducing the
//! eccentricity sextic, and explicit radicals for the solvable ones.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::closed_form::GUARD_DIGITS;
use crate::error::{Error, Result};
use crate::numeric::{rationalize, BigReal, Complex, Field, Rational};
use crate::poly::{isolate_real_roots, refine_root, Polynomial};

/// `z⁵ + a_lin·z + b_const`.
#[derive(Clone, Debug, PartialEq)]
pub struct BringJerrard {
    pub a_lin: BigReal,
    pub b_const: BigReal,
}

impl BringJerrard {
    pub fn poly(&self) -> Polynomial<BigReal> {
        let z = BigReal::zero();
        Polynomial::new(vec![
            self.b_const.clone(),
            self.a_lin.clone(),
            z.clone(),
            z.clone(),
            z,
            BigReal::one(),
        ])
    }
}

/// The quintic factor for legs `b ≤ c` and radius `r`: `a_lin = 1`,
/// `b_const = −((2r/b)² + (2r/c)²) = −(2ra/bc)² = −(2r/h)²`.
pub fn bring_jerrard_from_triangle(b: &BigReal, c: &BigReal, r: &BigReal, digits: u32) -> Result<BringJerrard> {
    let w = digits + GUARD_DIGITS;
    let (b, c, r) = (b.with_digits(w), c.with_digits(w), r.with_digits(w));
    let two = BigReal::from_i64(2).with_digits(w);
    let d = &two * &r;
    if !r.is_positive() || d >= b || b > c {
        return Err(Error::Range("need 0 < 2r < b <= c".into()));
    }
    let a = (&b.square() + &c.square()).sqrt()?;
    let bc = &b * &c;
    let sum = &(&d / &b).square() + &(&d / &c).square();
    let via_sides = &(&BigReal::from_i64(4) * &(&a / &bc).square()) * &r.square();
    let h = &bc / &a;
    let via_height = (&d / &h).square();
    let tol = &BigReal::ten_pow(4 - digits as i64, w) * &sum;
    if (&sum - &via_sides).abs() > tol || (&sum - &via_height).abs() > tol {
        return Err(Error::Domain("the three forms of the quintic constant disagree".into()));
    }
    Ok(BringJerrard {
        a_lin: BigReal::one().with_digits(w),
        b_const: -sum,
    })
}

/// Rational parameters making `z⁵ + az + b` solvable by radicals:
/// `a = 5q⁴(3 − 4εp)/(p² + 1)` and `b = −4q⁵(11ε + 2p)/(p² + 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolvabilityWitness {
    pub epsilon_sign: i32,
    pub p: Rational,
    pub q: Rational,
    pub a: Rational,
    pub b: Rational,
    pub satisfied: bool,
}

/// Outcome of a bounded search.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome {
    pub witness: Option<SolvabilityWitness>,
    /// `(ε, p)` pairs examined.
    pub pairs_examined: usize,
    /// `(ε, p, q)` triples covered, counting every `q = ±k/l` with `k, l ≤ height`.
    pub candidates_covered: usize,
}

impl SearchOutcome {
    pub fn exhausted(&self) -> bool {
        self.witness.is_none()
    }
}

fn exact_root4(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.nth_root(4);
    (r.pow(4u32) == *x).then_some(r)
}

fn witness_conditions(eps: i32, p: &Rational, q: &Rational) -> (Rational, Rational) {
    let e = Rational::from_integer(eps.into());
    let d = p * p + Rational::one();
    let q4 = q * q * q * q;
    let a = Rational::from_integer(5.into())
        * &q4
        * (Rational::from_integer(3.into()) - Rational::from_integer(4.into()) * &e * p)
        / &d;
    let b = -(Rational::from_integer(4.into())
        * &q4
        * q
        * (Rational::from_integer(11.into()) * &e + Rational::from_integer(2.into()) * p))
        / &d;
    (a, b)
}

/// Every reduced `i/j` with `1 ≤ i, j ≤ height`, ascending.
fn p_values(height: u32) -> Vec<Rational> {
    let mut v: Vec<Rational> = (1..=height as i64)
        .flat_map(|i| (1..=height as i64).map(move |j| Rational::new(i.into(), j.into())))
        .collect();
    v.sort();
    v.dedup();
    v
}

/// Searches `ε = +1` then `−1`, `p = i/j` ascending, `q` positive before negative.
///
/// For each `(ε, p)` the first condition fixes `q⁴`, so `q` is read off as an exact
/// rational fourth root (if any, with numerator and denominator at most `height`) and
/// both conditions are then checked exactly.
pub fn solvability_search_general(a: &Rational, b: &Rational, height: u32) -> SearchOutcome {
    let ps = p_values(height);
    let q_grid = 2 * (height as usize) * (height as usize);
    let hb = BigInt::from(height);
    let mut pairs = 0;
    for eps in [1, -1] {
        for p in &ps {
            pairs += 1;
            let (unit, _) = witness_conditions(eps, p, &Rational::one());
            if unit.is_zero() {
                continue;
            }
            let q4 = a / &unit;
            let (Some(k), Some(l)) = (exact_root4(q4.numer()), exact_root4(q4.denom())) else {
                continue;
            };
            if k.is_zero() || k > hb || l > hb {
                continue;
            }
            for sign in [1, -1] {
                let q = Rational::new(&k * BigInt::from(sign), l.clone());
                let (wa, wb) = witness_conditions(eps, p, &q);
                if &wa == a && &wb == b {
                    return SearchOutcome {
                        witness: Some(SolvabilityWitness {
                            epsilon_sign: eps,
                            p: p.clone(),
                            q,
                            a: a.clone(),
                            b: b.clone(),
                            satisfied: true,
                        }),
                        pairs_examined: pairs,
                        candidates_covered: pairs * q_grid,
                    };
                }
            }
        }
    }
    SearchOutcome {
        witness: None,
        pairs_examined: pairs,
        candidates_covered: pairs * q_grid,
    }
}

/// The search for `z⁵ + z + target`.
pub fn solvability_search(target: &Rational, height: u32) -> SearchOutcome {
    solvability_search_general(&Rational::one(), target, height)
}

/// The five roots of a solvable `z⁵ + az + b` and the fifth-root branches that produced them.
#[derive(Clone, Debug)]
pub struct QuinticRoots {
    pub roots: [Complex; 5],
    /// Power of `e^{2πi/5}` applied to the real fifth root of each `u_k`.
    pub branches: [u32; 4],
    pub max_residual: BigReal,
}

fn eval_c(coeffs: &[Complex], z: &Complex) -> Complex {
    coeffs.iter().rev().fold(Complex::zero(), |acc, c| &(&acc * z) + c)
}

/// `z_j = q·Σ_k ω^{jk} u_k` with `u_k` from the `v_k` radicals; the `5⁴` fifth-root
/// branch choices are tried in order and the first reproducing the quintic is kept.
pub fn solvable_quintic_roots(wit: &SolvabilityWitness, digits: u32) -> Result<QuinticRoots> {
    if !wit.satisfied {
        return Err(Error::Domain("witness does not satisfy the conditions".into()));
    }
    let w = digits + GUARD_DIGITS;
    let r = |q: &Rational| BigReal::from_rational(q, w);
    let eps = BigReal::from_i64(wit.epsilon_sign as i64).with_digits(w);
    let delta = r(&(&wit.p * &wit.p + Rational::one()));
    let sd = delta.sqrt()?;
    let es = &eps * &sd;
    let v1 = &sd + &(&delta - &es).sqrt()?;
    let v2 = -(&sd + &(&delta + &es).sqrt()?);
    let v3 = &(&delta + &es).sqrt()? - &sd;
    let v4 = &sd - &(&delta - &es).sqrt()?;
    let d2 = delta.square();
    let base = [
        (&(&v1.square() * &v3) / &d2).nth_root(5)?,
        (&(&v3.square() * &v4) / &d2).nth_root(5)?,
        (&(&v2.square() * &v1) / &d2).nth_root(5)?,
        (&(&v4.square() * &v2) / &d2).nth_root(5)?,
    ];
    let q = r(&wit.q);
    let omega: Vec<Complex> = (0..5).map(|k| Complex::fifth_root_of_unity(k, w)).collect();
    let zero = BigReal::zero().with_digits(w);
    let coeffs: Vec<Complex> = [
        r(&wit.b),
        r(&wit.a),
        zero.clone(),
        zero.clone(),
        zero,
        BigReal::one().with_digits(w),
    ]
    .into_iter()
    .map(Complex::real)
    .collect();
    let scale = r(&wit.a).abs().max(r(&wit.b).abs()).max(BigReal::one());
    let tol = &BigReal::ten_pow(6 - digits as i64, w) * &scale;
    for idx in 0..625u32 {
        let br = [idx / 125, (idx / 25) % 5, (idx / 5) % 5, idx % 5];
        let u: Vec<Complex> = (0..4)
            .map(|k| omega[br[k] as usize].scale(&base[k]).scale(&q))
            .collect();
        let roots: Vec<Complex> = (0..5)
            .map(|j| (0..4).fold(Complex::zero(), |acc, k| &acc + &(&omega[(j * (k + 1)) % 5] * &u[k])))
            .collect();
        let res = roots
            .iter()
            .map(|z| eval_c(&coeffs, z).abs())
            .fold(BigReal::zero(), BigReal::max);
        if res <= tol {
            let roots: [Complex; 5] = roots.try_into().expect("five roots");
            return Ok(QuinticRoots {
                roots,
                branches: br,
                max_residual: res,
            });
        }
    }
    Err(Error::BranchFailure)
}

/// Sextics `z⁶ + z² + a₂z + a₁` whose degree-15 resolvent has the rational root 0.
#[derive(Clone, Debug)]
pub struct C12Report {
    pub a2: Rational,
    /// `(32a₂⁴ + 3)/(144a₂²)`.
    pub a1: Rational,
    pub monic: Polynomial<Rational>,
    /// Integer multiple with coprime coefficients.
    pub cleared: Vec<BigInt>,
    pub real_roots: usize,
    /// The eccentricity sextic reduces with `a₁ = 0`, which the formula never produces.
    pub applies_to_reduced_sextic: bool,
}

pub fn c12_report(a2: &Rational) -> Result<C12Report> {
    if a2.is_zero() {
        return Err(Error::Domain("a2 must be non-zero".into()));
    }
    let a2sq = a2 * a2;
    let a1 = (Rational::from_integer(32.into()) * &a2sq * &a2sq + Rational::from_integer(3.into()))
        / (Rational::from_integer(144.into()) * &a2sq);
    let z = Rational::zero();
    let one = Rational::one();
    let monic = Polynomial::new(vec![a1.clone(), a2.clone(), one.clone(), z.clone(), z.clone(), z, one]);
    let lcm = monic
        .coeffs()
        .iter()
        .fold(BigInt::one(), |l, c| num_integer::Integer::lcm(&l, c.denom()));
    let ints: Vec<BigInt> = monic
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |g, c| num_integer::Integer::gcd(&g, c));
    let cleared = ints.iter().map(|c| c / &g).collect();
    let real_roots = isolate_real_roots(&monic, None)?.len();
    Ok(C12Report {
        a2: a2.clone(),
        a1,
        monic,
        cleared,
        real_roots,
        applies_to_reduced_sextic: false,
    })
}

/// The worked case `a₂ = 1/2`, giving `36z⁶ + 36z² + 18z + 5`.
pub fn c12_demo() -> Result<C12Report> {
    c12_report(&Rational::new(1.into(), 2.into()))
}

/// Full analysis for one triangle and radius.
#[derive(Clone, Debug)]
pub struct QuinticAnalysis {
    pub quintic: BringJerrard,
    /// `b_const` as a continued-fraction convergent within `10⁻⁶`.
    pub target: Rational,
    pub height: u32,
    pub search: SearchOutcome,
    /// Real roots of the numeric quintic.
    pub real_roots: Vec<BigReal>,
    pub roots: Option<QuinticRoots>,
}

pub fn analyze(b: &BigReal, c: &BigReal, r: &BigReal, height: u32, digits: u32) -> Result<QuinticAnalysis> {
    let quintic = bring_jerrard_from_triangle(b, c, r, digits)?;
    let w = digits + GUARD_DIGITS;
    let target = rationalize(&quintic.b_const, &BigReal::ten_pow(-6, w));
    let search = solvability_search(&target, height);
    let roots = match &search.witness {
        Some(wit) => Some(solvable_quintic_roots(wit, digits)?),
        None => None,
    };
    let exact: Polynomial<Rational> = quintic.poly().map(|x| x.to_rational());
    let iso = isolate_real_roots(&exact, None)?;
    let real_roots = iso
        .intervals
        .iter()
        .map(|(lo, hi)| refine_root(&exact, lo, hi, digits))
        .collect::<Result<_>>()?;
    Ok(QuinticAnalysis {
        quintic,
        target,
        height,
        search,
        real_roots,
        roots,
    })
}

/// `BigReal` form of a rational for reports.
pub fn rational_to_big(q: &Rational, digits: u32) -> BigReal {
    <BigReal as Field>::from_rational(q, digits)
}
