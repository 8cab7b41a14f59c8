//! The isosceles right-triangle configuration: three equal circles and an ellipse.
//!
//! The eccentricity solves `ε⁴ + 2pε³ − ε² − 2pε + p² = 0` with `p = √2 − 1`, and the
//! leg-to-radius ratio follows as `b/r = 2 + (1 + 2/ε)√2`. Every constant up to the
//! final radicals is held exactly in `Q(√2)`.

use num_traits::{One, Zero};

use crate::closed_form::{
    cubic_discriminant, depress_cubic, depress_quartic, quartic_closed_form_a, resolvent_cubic, solve_quartic_ferrari,
    FormulaASolution, GUARD_DIGITS,
};
use crate::error::{Error, Result};
use crate::numeric::{BigReal, Complex, Surd2};
use crate::poly::{sturm_count, Polynomial};

/// `p = √2 − 1 = 1/(1 + √2)`.
pub fn p_const() -> Surd2 {
    Surd2::from_fracs(-1, 1, 1, 1)
}

fn s(a: i64, b: i64, c: i64, d: i64) -> Surd2 {
    Surd2::from_fracs(a, b, c, d)
}

/// `p² − 2pε − ε² + 2pε³ + ε⁴`, constant first.
pub fn symmetric_quartic() -> Polynomial<Surd2> {
    let p = p_const();
    let two = s(2, 1, 0, 1);
    Polynomial::new(vec![&p * &p, -(&two * &p), s(-1, 1, 0, 1), &two * &p, Surd2::one()])
}

/// Exact constants of the solution path.
#[derive(Clone, Debug)]
pub struct SymmetricConstants {
    /// Depressed quartic `ξ⁴ + Cξ² + Dξ + E`.
    pub c: Surd2,
    pub d: Surd2,
    pub e: Surd2,
    /// Resolvent cubic `ζ³ + rc ζ² + rd ζ + re`.
    pub rc: Surd2,
    pub rd: Surd2,
    pub re: Surd2,
    /// Depressed resolvent `z³ + γz + δ`.
    pub gamma: Surd2,
    pub delta: Surd2,
    /// `(δ/2)² + (γ/3)³`.
    pub discriminant: Surd2,
    /// Resolvent root from Cardano, `ζ = z − rc/3`.
    pub zeta: BigReal,
    /// The same root as `5(11/12 − 1/√2) − Σ_k ∛(δ/2 + (−1)^k √Δ)`.
    pub zeta_alt: BigReal,
    /// `√(C + 2ζ)`.
    pub s: BigReal,
}

#[derive(Clone, Debug)]
pub struct SymmetricSolution {
    pub p: Surd2,
    pub digits: u32,
    pub epsilon: BigReal,
    pub beta_over_alpha: BigReal,
    /// From the explicit radical expression in `C` and `ζ`.
    pub b_over_r: BigReal,
    /// `2 + (1 + 2/ε)√2`.
    pub b_over_r_from_eps: BigReal,
    /// From the flattened quartic formula.
    pub b_over_r_formula_a: BigReal,
    /// Second real root, outside `(1/√2, 1)`.
    pub inadmissible_root: BigReal,
    pub complex_pair: (Complex, Complex),
    /// Real roots of the quartic inside `(1/√2, 1)`, counted exactly.
    pub roots_in_domain: usize,
    pub constants: SymmetricConstants,
    pub formula_a: FormulaASolution<Surd2>,
    /// `|√(α² + β²) − β − (1 + √2)r|` at `α = 1`.
    pub y_a_residual: BigReal,
}

fn agree(a: &BigReal, b: &BigReal, digits: u32) -> bool {
    (a - b).abs() <= &BigReal::ten_pow(4 - digits as i64, digits + GUARD_DIGITS) * &a.abs().max(BigReal::one())
}

/// Full pipeline at `digits` significant digits (at least 12).
pub fn solve_symmetric(digits: u32) -> Result<SymmetricSolution> {
    if digits < 12 {
        return Err(Error::Range(format!("digits must be at least 12, got {digits}")));
    }
    let work = digits + GUARD_DIGITS;
    let p = p_const();
    let f = symmetric_quartic();
    let (a3, a2, a1, a0) = (f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));

    let dep = depress_quartic(&a3, &a2, &a1, &a0);
    let (rc, rd, re) = resolvent_cubic(&dep.c, &dep.d, &dep.e);
    let (gamma, delta) = depress_cubic(&rc, &rd, &re);
    let disc = cubic_discriminant(&gamma, &delta);

    let fer = solve_quartic_ferrari(&dep, digits)?;
    let zeta = fer.resolvent_zeta.clone();
    let sqrt_disc = disc.to_big_real(work).sqrt()?;
    let half_delta = delta.to_big_real(work) / BigReal::from_i64(2);
    let base = (s(55, 12, 0, 1) - s(0, 1, 5, 2)).to_big_real(work);
    let zeta_alt = &(&base - &(&half_delta - &sqrt_disc).cbrt()) - &(&half_delta + &sqrt_disc).cbrt();
    if !agree(&zeta, &zeta_alt, digits) {
        return Err(Error::Selection("the two resolvent expressions disagree".into()));
    }

    let cw = dep.c.to_big_real(work);
    let two = BigReal::from_i64(2);
    let sq = (&cw + &(&two * &zeta)).sqrt()?;
    let four_q = s(12, 1, -8, 1).to_big_real(work);
    let inner = &(&(&four_q / &sq) - &(&BigReal::from_i64(3) * &cw)) - &(&two * &zeta);
    let one_minus_sqrt2 = s(1, 1, -1, 1).to_big_real(work);
    let denom = &(&one_minus_sqrt2 + &sq) + &inner.sqrt()?;
    let sqrt2 = BigReal::sqrt2(work);
    let four_sqrt2 = &BigReal::from_i64(4) * &sqrt2;
    let two_plus = &two + &sqrt2;
    let b_over_r = &two_plus + &(&four_sqrt2 / &denom);
    let epsilon = &denom / &two;

    let lo = s(0, 1, 1, 2);
    let hi = Surd2::one();
    let roots_in_domain = sturm_count(&f, &lo, &hi)?;
    let lo_w = lo.to_big_real(work);
    if !(epsilon > lo_w && epsilon < BigReal::one()) || roots_in_domain != 1 {
        return Err(Error::Selection(format!(
            "expected one root in (1/√2, 1), found {roots_in_domain}; ε = {}",
            epsilon.to_sig_string(15)
        )));
    }

    let tol = BigReal::ten_pow(-(digits as i64) / 2, work);
    let mut reals: Vec<BigReal> = fer
        .roots
        .iter()
        .filter(|z| z.is_real_within(&tol))
        .map(|z| z.re.clone())
        .collect();
    reals.retain(|x| !agree(x, &epsilon, digits));
    let inadmissible_root = reals
        .first()
        .cloned()
        .ok_or_else(|| Error::Selection("second real root missing".into()))?;
    let complex: Vec<Complex> = fer.roots.iter().filter(|z| !z.is_real_within(&tol)).cloned().collect();
    if complex.len() != 2 {
        return Err(Error::Selection("expected one complex-conjugate pair".into()));
    }
    let complex_pair = if complex[0].im.is_positive() {
        (complex[1].clone(), complex[0].clone())
    } else {
        (complex[0].clone(), complex[1].clone())
    };

    let b_over_r_from_eps = &two + &(&(&BigReal::one() + &(&two / &epsilon)) * &sqrt2);

    let formula_a = quartic_closed_form_a(&a3, &a2, &a1, &a0, digits)?;
    let k = &formula_a.constants;
    let cbrt2 = two.with_digits(work).cbrt();
    let c_term = k.c.scale(&(&BigReal::from_i64(3) * &cbrt2).recip());
    let inner_a = &(&(&Complex::real(s(22, 3, -4, 1).to_big_real(work)) - &c_term) - &k.d) + &k.f;
    let denom_a = &(&Complex::real(one_minus_sqrt2) + &k.s) + &inner_a.sqrt();
    let b_over_r_formula_a = (&Complex::real(two_plus) + &(&Complex::real(four_sqrt2) / &denom_a)).re;

    let beta = (&BigReal::one() - &epsilon.square()).sqrt()?;
    let r = &beta * &epsilon;
    let lhs = (&BigReal::one() + &beta.square()).sqrt()?;
    let rhs = &beta + &(&(&BigReal::one() + &sqrt2) * &r);
    let y_a_residual = (&lhs - &rhs).abs();

    Ok(SymmetricSolution {
        p,
        digits,
        epsilon,
        beta_over_alpha: beta,
        b_over_r,
        b_over_r_from_eps,
        b_over_r_formula_a,
        inadmissible_root,
        complex_pair,
        roots_in_domain,
        constants: SymmetricConstants {
            c: dep.c,
            d: dep.d,
            e: dep.e,
            rc,
            rd,
            re,
            gamma,
            delta,
            discriminant: disc,
            zeta,
            zeta_alt,
            s: sq,
        },
        formula_a,
        y_a_residual,
    })
}

impl SymmetricSolution {
    /// All three b/r expressions agree pairwise to `10^(4 − digits)`.
    pub fn formulas_agree(&self) -> bool {
        agree(&self.b_over_r, &self.b_over_r_from_eps, self.digits)
            && agree(&self.b_over_r, &self.b_over_r_formula_a, self.digits)
            && agree(&self.b_over_r_from_eps, &self.b_over_r_formula_a, self.digits)
    }
}

fn check_unit(eps: &BigReal) -> Result<()> {
    if !eps.is_positive() || *eps >= BigReal::one() {
        return Err(Error::Domain(format!(
            "eccentricity {} outside (0, 1)",
            eps.to_sig_string(12)
        )));
    }
    Ok(())
}

/// Radius of the circles inside the ellipse, `r = αε√(1 − ε²)`.
pub fn r_of_eps(alpha: &BigReal, eps: &BigReal) -> Result<BigReal> {
    check_unit(eps)?;
    if !alpha.is_positive() {
        return Err(Error::Domain("semi-major axis must be positive".into()));
    }
    Ok(&(alpha * eps) * &(&BigReal::one() - &eps.square()).sqrt()?)
}

/// `α/2` up to `ε = 1/√2`, then `αε√(1 − ε²)`.
pub fn r_piecewise(alpha: &BigReal, eps: &BigReal) -> Result<BigReal> {
    if eps.is_negative() || *eps >= BigReal::one() {
        return Err(Error::Domain(format!(
            "eccentricity {} outside [0, 1)",
            eps.to_sig_string(12)
        )));
    }
    if &eps.square() * &BigReal::from_i64(2) <= BigReal::one() {
        return Ok(alpha / &BigReal::from_i64(2));
    }
    r_of_eps(alpha, eps)
}

/// `r₁ = (√2 − 1)(√(α² + 1) − 1)` with `β = 1`; fails if `r₁ < α/2` does not hold.
pub fn r1_of_alpha(alpha: &BigReal) -> Result<BigReal> {
    if alpha.is_negative() {
        return Err(Error::Domain("semi-major axis must be non-negative".into()));
    }
    let d = if alpha.is_exact() {
        crate::numeric::bigreal::FALLBACK_DIGITS
    } else {
        alpha.digits()
    };
    let sqrt2 = BigReal::sqrt2(d);
    let r1 = &(&sqrt2 - &BigReal::one()) * &(&(&alpha.square() + &BigReal::one()).sqrt()? - &BigReal::one());
    if alpha.is_positive() && r1 >= alpha / &BigReal::from_i64(2) {
        return Err(Error::Domain("r₁ < α/2 violated".into()));
    }
    Ok(r1)
}

/// `RR′ = βγ/α` with `γ = √(α² − β²)`; checked against `βε`.
pub fn graphic_r_check(alpha: &BigReal, beta: &BigReal, digits: u32) -> Result<BigReal> {
    if !alpha.is_positive() || !beta.is_positive() || beta > alpha {
        return Err(Error::Domain("need 0 < β ≤ α".into()));
    }
    let a = alpha.with_digits(digits + GUARD_DIGITS);
    let gamma = (&a.square() - &beta.square()).sqrt()?;
    let rr = &(beta * &gamma) / &a;
    let eps = (&BigReal::one() - &(&beta.square() / &a.square())).sqrt()?;
    let r = beta * &eps;
    if !agree(&rr, &r, digits) && !rr.is_zero() {
        return Err(Error::Domain("graphic construction disagrees with βε".into()));
    }
    Ok(rr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    const BR100: &str =
        "6.3988504908313964106495157287278877674472204061565403354592771240691523730333207501758409383551522944";

    #[test]
    fn quartic_values() {
        let f = symmetric_quartic();
        assert_eq!(f.eval(&Surd2::one()), s(3, 1, -2, 1));
        let x = Surd2::from_rational(rat(9476620415, 10_000_000_000));
        assert!(f.eval(&x).abs() < Surd2::from_rational(rat(1, 1_000_000_000)));
    }

    #[test]
    fn exact_constants() {
        let sol = solve_symmetric(30).unwrap();
        let k = &sol.constants;
        assert_eq!(k.c, s(-11, 2, 3, 1));
        assert_eq!(k.gamma, s(-73, 12, 4, 1));
        assert_eq!(k.delta, s(-1133, 108, 22, 3));
        assert_eq!(k.discriminant, s(2639, 108, -311, 18));
        assert_eq!(sol.formula_a.constants.b, s(73, 1, -48, 1));
    }

    #[test]
    fn twelve_digits() {
        let sol = solve_symmetric(12).unwrap();
        assert!((sol.epsilon.to_f64() - 0.9476620415).abs() < 1e-10);
        assert!((sol.inadmissible_root.to_f64() - 0.1762492425).abs() < 1e-10);
        assert!((sol.complex_pair.0.re.to_f64() + 0.9761692044).abs() < 1e-8);
        assert!((sol.complex_pair.1.im.to_f64() - 0.2726245316).abs() < 1e-8);
        assert_eq!(sol.b_over_r.to_sig_string(12), "6.39885049083");
        assert_eq!(sol.roots_in_domain, 1);
        assert!(sol.formulas_agree());
        assert!(sol.y_a_residual < BigReal::ten_pow(-10, 40));
    }

    #[test]
    fn hundred_digits() {
        let sol = solve_symmetric(110).unwrap();
        assert_eq!(sol.b_over_r.to_sig_string_truncated(BR100.len() - 1), BR100);
        assert!(sol.formulas_agree());
    }

    #[test]
    fn r_of_eps_examples() {
        let one = BigReal::one();
        let h = BigReal::sqrt2(40) / BigReal::from_i64(2);
        assert!((&r_of_eps(&one, &h).unwrap() - &BigReal::parse("0.5", 40).unwrap()).abs() < BigReal::ten_pow(-35, 40));
        let r = r_of_eps(&one, &BigReal::parse("0.97", 40).unwrap()).unwrap();
        assert!((r.to_f64() - 0.97 * (1.0f64 - 0.97 * 0.97).sqrt()).abs() < 1e-15);
        let near_one = BigReal::parse("0.999999999999", 40).unwrap();
        assert!(r_of_eps(&BigReal::from_i64(2), &near_one).unwrap() < BigReal::parse("0.00001", 40).unwrap());
        assert!(r_of_eps(&one, &one).is_err());
    }

    #[test]
    fn piecewise_examples() {
        let one = BigReal::one();
        let half = BigReal::parse("0.5", 40).unwrap();
        assert_eq!(r_piecewise(&one, &half).unwrap(), half);
        let h = BigReal::sqrt2(40) / BigReal::from_i64(2);
        assert!((&r_piecewise(&one, &h).unwrap() - &half).abs() < BigReal::ten_pow(-35, 40));
        let r = r_piecewise(&one, &BigReal::parse("0.9", 40).unwrap()).unwrap();
        assert_eq!(r.to_sig_string(6), "0.392301");
    }

    #[test]
    fn r1_examples() {
        assert!(r1_of_alpha(&BigReal::zero()).unwrap().is_zero());
        let r = r1_of_alpha(&BigReal::one()).unwrap();
        assert_eq!(r.to_sig_string(6), "0.171573");
        for a in ["0.01", "0.5", "3", "1000"] {
            assert!(r1_of_alpha(&BigReal::parse(a, 40).unwrap()).is_ok());
        }
    }

    #[test]
    fn graphic_examples() {
        let sol = solve_symmetric(20).unwrap();
        let beta = sol.beta_over_alpha.clone();
        let rr = graphic_r_check(&BigReal::one(), &beta, 20).unwrap();
        assert!(agree(&rr, &(&beta * &sol.epsilon), 20));
        assert!(graphic_r_check(&BigReal::one(), &BigReal::one(), 20).unwrap().is_zero());
        let v = graphic_r_check(&BigReal::from_i64(5), &BigReal::from_i64(3), 20).unwrap();
        assert_eq!(v, BigReal::parse("2.4", 40).unwrap());
    }

    #[test]
    fn monotonicity_on_grid() {
        let alpha = BigReal::one();
        let peak = 1.0 / 2f64.sqrt();
        let mut prev: Option<(f64, BigReal)> = None;
        for i in 1..1000 {
            let e = i as f64 / 1000.0;
            let r = r_of_eps(&alpha, &BigReal::from_f64(e).with_digits(30)).unwrap();
            if let Some((pe, pr)) = &prev {
                if e <= peak {
                    assert!(r > *pr, "not increasing at {e}");
                } else if *pe >= peak {
                    assert!(r < *pr, "not decreasing at {e}");
                }
            }
            prev = Some((e, r));
        }
    }
}
