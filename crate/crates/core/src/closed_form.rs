//! Closed-form solvers for degrees 1 to 4: depression, Cardano, Ferrari through the
//! resolvent cubic, and the flattened single-expression quartic formula.
//!
//! Coefficient algebra (depression, resolvent, discriminant) stays in the input domain,
//! so exact inputs only meet rounding at the final radicals. Radicals run at
//! `digits + 20`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{BigReal, Complex, Real};
use crate::poly::Polynomial;

pub const GUARD_DIGITS: u32 = 20;

/// Depressed quartic `ξ⁴ + Cξ² + Dξ + E` with `x = ξ + shift`.
#[derive(Clone, Debug, PartialEq)]
pub struct DepressedQuartic<T> {
    pub c: T,
    pub d: T,
    pub e: T,
    pub shift: T,
}

/// Depresses the monic quartic `x⁴ + a3x³ + a2x² + a1x + a0`.
pub fn depress_quartic<T: Real>(a3: &T, a2: &T, a1: &T, a0: &T) -> DepressedQuartic<T> {
    let n = |v: i64| T::from_i64(v);
    let a3_2 = a3.clone() * a3.clone();
    let c = a2.clone() - n(3) * a3_2.clone() / n(8);
    let d = a1.clone() - a2.clone() * a3.clone() / n(2) + a3_2.clone() * a3.clone() / n(8);
    let e = a0.clone() - a1.clone() * a3.clone() / n(4) + a2.clone() * a3_2.clone() / n(16)
        - n(3) * a3_2.clone() * a3_2 / n(256);
    DepressedQuartic {
        c,
        d,
        e,
        shift: -(a3.clone() / n(4)),
    }
}

/// Resolvent cubic `ζ³ + cζ² + dζ + e` of a depressed quartic.
pub fn resolvent_cubic<T: Real>(c: &T, d: &T, e: &T) -> (T, T, T) {
    let n = |v: i64| T::from_i64(v);
    let c2 = c.clone() * c.clone();
    let rc = n(5) * c.clone() / n(2);
    let rd = n(2) * c2.clone() - e.clone();
    let re = c.clone() * (c2 - e.clone()) / n(2) - d.clone() * d.clone() / n(8);
    (rc, rd, re)
}

/// `(γ, δ)` of the depressed form `z³ + γz + δ` of `ζ³ + cζ² + dζ + e` under `ζ = z − c/3`.
pub fn depress_cubic<T: Real>(c: &T, d: &T, e: &T) -> (T, T) {
    let n = |v: i64| T::from_i64(v);
    let c2 = c.clone() * c.clone();
    let gamma = d.clone() - c2.clone() / n(3);
    let delta = n(2) * c2 * c.clone() / n(27) - c.clone() * d.clone() / n(3) + e.clone();
    (gamma, delta)
}

/// `(δ/2)² + (γ/3)³`, computed in the input domain.
pub fn cubic_discriminant<T: Real>(gamma: &T, delta: &T) -> T {
    let h = delta.clone() / T::from_i64(2);
    let t = gamma.clone() / T::from_i64(3);
    h.clone() * h + t.clone() * t.clone() * t
}

#[derive(Clone, Debug)]
pub struct CubicSolution {
    /// `u + v`, real whenever the discriminant is non-negative, first in `roots`.
    pub real_root: BigReal,
    pub roots: [Complex; 3],
    pub discriminant: BigReal,
    /// Sign of the discriminant, decided in the input domain.
    pub discriminant_sign: i32,
}

impl CubicSolution {
    /// Roots with a vanishing imaginary part.
    pub fn real_roots(&self) -> Vec<BigReal> {
        let tol = BigReal::ten_pow(-((self.real_root.digits().min(1000) as i64) / 2), 40);
        self.roots
            .iter()
            .filter(|z| z.is_real_within(&tol))
            .map(|z| z.re.clone())
            .collect()
    }
}

fn work_digits(digits: u32) -> u32 {
    digits + GUARD_DIGITS
}

fn cube_root_unity(work: u32) -> Complex {
    let s3 = BigReal::from_i64(3).with_digits(work).sqrt().expect("positive");
    Complex::new(BigReal::from_i64(-1) / BigReal::from_i64(2), s3 / BigReal::from_i64(2))
}

/// Cardano for `z³ + γz + δ`. Real cube roots when the discriminant is non-negative;
/// a complex principal cube root otherwise.
pub fn solve_depressed_cubic<T: Real>(gamma: &T, delta: &T, digits: u32) -> CubicSolution {
    let work = work_digits(digits);
    let disc_t = cubic_discriminant(gamma, delta);
    let sign = if disc_t.is_zero() {
        0
    } else if disc_t < T::zero() {
        -1
    } else {
        1
    };
    let disc = disc_t.to_big_real(work);
    let g = gamma.to_big_real(work);
    let half_d = -(delta.to_big_real(work) / BigReal::from_i64(2));
    let three = BigReal::from_i64(3);
    let omega = cube_root_unity(work);

    if sign >= 0 {
        let s = disc.abs().sqrt().expect("non-negative");
        // the larger-magnitude radicand avoids cancellation; v follows from uv = −γ/3
        let t = if half_d.is_negative() {
            &half_d - &s
        } else {
            &half_d + &s
        };
        let u = t.cbrt();
        let v = if u.is_zero() {
            (&half_d - &s).cbrt()
        } else {
            -(&g / &(&three * &u))
        };
        let real = &u + &v;
        let half_sum = -(&real / &BigReal::from_i64(2));
        let im = &(&u - &v) * &omega.im;
        let roots = [
            Complex::real(real.clone()),
            Complex::new(half_sum.clone(), im.clone()),
            Complex::new(half_sum, -im),
        ];
        return CubicSolution {
            real_root: real,
            roots,
            discriminant: disc,
            discriminant_sign: sign,
        };
    }

    let s = (-&disc).sqrt().expect("positive");
    let u = Complex::new(half_d, s).nth_root(3);
    let omega2 = &omega * &omega;
    let two = BigReal::from_i64(2);
    let r0 = &u.re * &two;
    let r1 = &(&u * &omega).re * &two;
    let r2 = &(&u * &omega2).re * &two;
    CubicSolution {
        real_root: r0.clone(),
        roots: [Complex::real(r0), Complex::real(r1), Complex::real(r2)],
        discriminant: disc,
        discriminant_sign: sign,
    }
}

/// Which square-root pair produced a quartic root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarticBranch {
    /// `½(s ± √(−2D/s − 3C − 2ζ))`
    PlusS,
    /// `½(−s ± √(2D/s − 3C − 2ζ))`
    MinusS,
    /// `D = 0`: `±√y` for the roots `y` of `y² + Cy + E`.
    Biquadratic,
}

#[derive(Clone, Debug)]
pub struct QuarticSolution {
    pub roots: [Complex; 4],
    /// Resolvent root actually used (zero for the biquadratic path).
    pub resolvent_zeta: BigReal,
    pub branch_log: [QuarticBranch; 4],
    /// Resolvent roots tried and rejected before `resolvent_zeta` worked.
    pub rejected_zetas: Vec<BigReal>,
}

fn csqrt_real(x: &BigReal) -> Complex {
    Complex::real(x.clone()).sqrt()
}

/// Ferrari on a depressed quartic; the shift is undone on output.
pub fn solve_quartic_ferrari<T: Real>(q: &DepressedQuartic<T>, digits: u32) -> Result<QuarticSolution> {
    let work = work_digits(digits);
    let two = BigReal::from_i64(2);
    let shift = Complex::real(q.shift.to_big_real(work));
    let c = q.c.to_big_real(work);
    let d = q.d.to_big_real(work);
    let e = q.e.to_big_real(work);
    let scale = q.c.abs_val() + q.e.abs_val() + T::one();
    if q.d.is_negligible(&scale) {
        let disc = csqrt_real(&(&c.square() - &(&BigReal::from_i64(4) * &e)));
        let mc = Complex::real(-&c);
        let y1 = (&mc + &disc).scale(&(BigReal::one() / two.clone()));
        let y2 = (&mc - &disc).scale(&(BigReal::one() / two.clone()));
        let (s1, s2) = (y1.sqrt(), y2.sqrt());
        let roots = [&s1 + &shift, &(-&s1) + &shift, &s2 + &shift, &(-&s2) + &shift];
        return Ok(QuarticSolution {
            roots,
            resolvent_zeta: BigReal::zero(),
            branch_log: [QuarticBranch::Biquadratic; 4],
            rejected_zetas: Vec::new(),
        });
    }
    let (rc, rd, re) = resolvent_cubic(&q.c, &q.d, &q.e);
    let (gamma, delta) = depress_cubic(&rc, &rd, &re);
    let cubic = solve_depressed_cubic(&gamma, &delta, digits);
    let back = rc.to_big_real(work) / BigReal::from_i64(3);
    let mut rejected = Vec::new();
    let mut candidates = vec![&cubic.real_root - &back];
    for z in cubic.real_roots().into_iter().skip(1) {
        candidates.push(&z - &back);
    }
    let three = BigReal::from_i64(3);
    for zeta in candidates {
        let t = &c + &(&two * &zeta);
        if !t.is_positive() {
            rejected.push(zeta);
            continue;
        }
        let s = t.sqrt().expect("positive");
        let base = &(-&(&three * &c)) - &(&two * &zeta);
        let k = &(&two * &d) / &s;
        let r_plus = csqrt_real(&(&base - &k));
        let r_minus = csqrt_real(&(&base + &k));
        let half = BigReal::one() / two.clone();
        let sc = Complex::real(s.clone());
        let roots = [
            &(&sc + &r_plus).scale(&half) + &shift,
            &(&sc - &r_plus).scale(&half) + &shift,
            &(&(-&sc) + &r_minus).scale(&half) + &shift,
            &(&(-&sc) - &r_minus).scale(&half) + &shift,
        ];
        use QuarticBranch::*;
        return Ok(QuarticSolution {
            roots,
            resolvent_zeta: zeta,
            branch_log: [PlusS, PlusS, MinusS, MinusS],
            rejected_zetas: rejected,
        });
    }
    Err(Error::NoRealResolvent)
}

/// Constants of the flattened quartic formula.
#[derive(Clone, Debug)]
pub struct FormulaAConstants<T> {
    pub a: T,
    pub b: T,
    /// `A² − 4B³`
    pub radicand: T,
    pub c: Complex,
    pub d: Complex,
    pub e: Complex,
    pub f: Complex,
    pub s: Complex,
}

#[derive(Clone, Debug)]
pub struct FormulaASolution<T> {
    pub roots: [Complex; 4],
    pub constants: FormulaAConstants<T>,
    /// Power of `ω` applied to the principal cube root for `C` (0 unless `S` vanished).
    pub cube_branch: u32,
    /// True when every cube-root branch degenerated and Ferrari supplied the roots.
    pub ferrari_fallback: bool,
}

/// `A = 2a2³ + 9[3(a1² + a0a3²) − (8a0 + a1a3)a2]`, `B = a2² + 3(4a0 − a1a3)`.
pub fn formula_a_ab<T: Real>(a3: &T, a2: &T, a1: &T, a0: &T) -> (T, T) {
    let n = |v: i64| T::from_i64(v);
    let a = n(2) * a2.clone() * a2.clone() * a2.clone()
        + n(9)
            * (n(3) * (a1.clone() * a1.clone() + a0.clone() * a3.clone() * a3.clone())
                - (n(8) * a0.clone() + a1.clone() * a3.clone()) * a2.clone());
    let b = a2.clone() * a2.clone() + n(3) * (n(4) * a0.clone() - a1.clone() * a3.clone());
    (a, b)
}

/// The single-expression quartic formula on `x⁴ + a3x³ + a2x² + a1x + a0`, with
/// complex principal branches throughout.
pub fn quartic_closed_form_a<T: Real>(a3: &T, a2: &T, a1: &T, a0: &T, digits: u32) -> Result<FormulaASolution<T>> {
    let work = work_digits(digits);
    let (a, b) = formula_a_ab(a3, a2, a1, a0);
    let radicand = a.clone() * a.clone() - T::from_i64(4) * b.clone() * b.clone() * b.clone();
    let (a3w, a2w, a1w) = (a3.to_big_real(work), a2.to_big_real(work), a1.to_big_real(work));
    let n = BigReal::from_i64;
    let cbrt2 = n(2).with_digits(work).cbrt();
    let c0 = (Complex::real(a.to_big_real(work)) + csqrt_real(&radicand.to_big_real(work))).nth_root(3);
    let omega = cube_root_unity(work);
    let bw = Complex::real(b.to_big_real(work));
    let tiny = BigReal::ten_pow(-(work as i64) / 2, work);
    let scale_in = a3w.abs() + a2w.abs() + a1w.abs() + a0.to_big_real(work).abs() + BigReal::one();
    let e_base = &(&a3w.square() / &n(4)) - &(&(&n(2) * &a2w) / &n(3));
    let num_f = &(&(&a2w * &a3w) - &(&n(2) * &a1w)) - &(&a3w.powi(3) / &n(4));
    let inner_base = &(&a3w.square() / &n(2)) - &(&(&n(4) * &a2w) / &n(3));
    let three_cbrt2 = &n(3) * &cbrt2;
    let mut cc = c0;
    for branch in 0..3u32 {
        if branch > 0 {
            cc = &cc * &omega;
        }
        if cc.abs() <= &tiny * &scale_in {
            continue;
        }
        let d = (&bw / &cc).scale(&(&cbrt2 / &n(3)));
        let e = &d + &Complex::real(e_base.clone());
        let c_term = cc.scale(&three_cbrt2.recip());
        let s = (&c_term + &e).sqrt();
        if s.abs() <= &tiny * &scale_in {
            continue;
        }
        let f = &Complex::real(num_f.clone()) / &s;
        let inner = &(&Complex::real(inner_base.clone()) - &c_term) - &d;
        let half = n(2).recip();
        let lead = Complex::real(-(&a3w / &n(2)));
        let rp = (&inner + &f).sqrt();
        let rm = (&inner - &f).sqrt();
        let roots = [
            (&(&lead + &s) + &rp).scale(&half),
            (&(&lead + &s) - &rp).scale(&half),
            (&(&lead - &s) + &rm).scale(&half),
            (&(&lead - &s) - &rm).scale(&half),
        ];
        return Ok(FormulaASolution {
            roots,
            constants: FormulaAConstants {
                a,
                b,
                radicand,
                c: cc,
                d,
                e,
                f,
                s,
            },
            cube_branch: branch,
            ferrari_fallback: false,
        });
    }
    let dep = depress_quartic(a3, a2, a1, a0);
    let fer = solve_quartic_ferrari(&dep, digits)?;
    let z = Complex::zero();
    Ok(FormulaASolution {
        roots: fer.roots,
        constants: FormulaAConstants {
            a,
            b,
            radicand,
            c: z.clone(),
            d: z.clone(),
            e: z.clone(),
            f: z.clone(),
            s: z,
        },
        cube_branch: 0,
        ferrari_fallback: true,
    })
}

/// All roots (with multiplicity) of a polynomial of degree 1 to 4.
pub fn solve_poly<T: Real>(f: &Polynomial<T>, digits: u32) -> Result<Vec<Complex>> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    let m = f.monic()?;
    let work = work_digits(digits);
    let k = |i: usize| m.coeff(i);
    match deg {
        0 => Ok(Vec::new()),
        1 => Ok(vec![Complex::real((-k(0)).to_big_real(work))]),
        2 => {
            let b = k(1).to_big_real(work);
            let disc = k(1) * k(1) - T::from_i64(4) * k(0);
            let s = csqrt_real(&disc.to_big_real(work));
            let half = BigReal::from_i64(2).recip();
            let mb = Complex::real(-b);
            Ok(vec![(&mb + &s).scale(&half), (&mb - &s).scale(&half)])
        }
        3 => {
            let a2 = k(2);
            let (gamma, delta) = {
                let n = |v: i64| T::from_i64(v);
                let g = k(1) - a2.clone() * a2.clone() / n(3);
                let d = n(2) * a2.clone() * a2.clone() * a2.clone() / n(27) - a2.clone() * k(1) / n(3) + k(0);
                (g, d)
            };
            let sol = solve_depressed_cubic(&gamma, &delta, digits);
            let back = Complex::real((a2 / T::from_i64(3)).to_big_real(work));
            Ok(sol.roots.iter().map(|z| z - &back).collect())
        }
        4 => {
            let dep = depress_quartic(&k(3), &k(2), &k(1), &k(0));
            Ok(solve_quartic_ferrari(&dep, digits)?.roots.to_vec())
        }
        n => Err(Error::TerminalTooLarge(n)),
    }
}

/// `max |f(z)|` over the given points, evaluated at `digits + 20`.
pub fn max_residual<T: Real>(f: &Polynomial<T>, roots: &[Complex], digits: u32) -> BigReal {
    let work = work_digits(digits);
    let coeffs: Vec<Complex> = f.coeffs().iter().map(|c| Complex::real(c.to_big_real(work))).collect();
    roots
        .iter()
        .map(|z| {
            coeffs
                .iter()
                .rev()
                .fold(Complex::zero(), |acc, c| &(&acc * z) + c)
                .abs()
        })
        .fold(BigReal::zero(), BigReal::max)
}

/// Residual tolerance `10^(6 − digits) · max|c_i|`.
pub fn residual_tolerance<T: Real>(f: &Polynomial<T>, digits: u32) -> BigReal {
    &BigReal::ten_pow(6 - digits as i64, work_digits(digits)) * &f.max_abs_coeff().to_big_real(work_digits(digits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, Rational, Surd2};

    fn s(a: i64, b: i64, c: i64, d: i64) -> Surd2 {
        Surd2::from_fracs(a, b, c, d)
    }

    fn sym_coeffs() -> (Surd2, Surd2, Surd2, Surd2) {
        let p = s(-1, 1, 1, 1);
        (
            &p * &Surd2::from_fracs(2, 1, 0, 1),
            s(-1, 1, 0, 1),
            -(&p * &Surd2::from_fracs(2, 1, 0, 1)),
            &p * &p,
        )
    }

    fn near(z: &BigReal, v: f64, tol: f64) -> bool {
        (z.to_f64() - v).abs() < tol
    }

    #[test]
    fn depression_examples() {
        let (a3, a2, a1, a0) = sym_coeffs();
        let d = depress_quartic(&a3, &a2, &a1, &a0);
        assert_eq!(d.c, s(-11, 2, 3, 1));
        assert_eq!(d.d, s(-6, 1, 4, 1));
        assert_eq!(d.e, s(33, 16, -5, 4));

        let z = rat(0, 1);
        let d = depress_quartic(&z, &rat(2, 1), &rat(3, 1), &rat(5, 1));
        assert_eq!((d.c, d.d, d.e, d.shift), (rat(2, 1), rat(3, 1), rat(5, 1), z.clone()));

        let d = depress_quartic(&rat(4, 1), &z, &z, &z);
        assert_eq!(
            (d.c, d.d, d.e, d.shift),
            (rat(-6, 1), rat(8, 1), rat(-3, 1), rat(-1, 1))
        );
    }

    #[test]
    fn resolvent_examples() {
        let (a3, a2, a1, a0) = sym_coeffs();
        let d = depress_quartic(&a3, &a2, &a1, &a0);
        let (c, dd, e) = resolvent_cubic(&d.c, &d.d, &d.e);
        assert_eq!(c, s(-55, 4, 30, 4));
        assert_eq!(dd, s(1511, 16, -259, 4));
        assert_eq!(e, s(-14769, 64, 5203, 32));
        let z = rat(0, 1);
        assert_eq!(resolvent_cubic(&z, &z, &z), (z.clone(), z.clone(), z.clone()));
        assert_eq!(resolvent_cubic(&rat(1, 1), &z, &rat(1, 1)), (rat(5, 2), rat(1, 1), z));
    }

    #[test]
    fn cubic_examples() {
        let sol = solve_depressed_cubic(&rat(0, 1), &rat(-8, 1), 30);
        assert_eq!(sol.real_root, BigReal::from_i64(2));
        let sol = solve_depressed_cubic(&rat(-7, 1), &rat(6, 1), 30);
        assert_eq!(sol.discriminant_sign, -1);
        let mut r: Vec<f64> = sol.roots.iter().map(|z| z.re.to_f64()).collect();
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (x, w) in r.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((x - w).abs() < 1e-25);
        }
        for z in &sol.roots {
            assert!(z.im.is_zero());
        }
    }

    #[test]
    fn ferrari_symmetric_quartic() {
        let (a3, a2, a1, a0) = sym_coeffs();
        let dep = depress_quartic(&a3, &a2, &a1, &a0);
        let sol = solve_quartic_ferrari(&dep, 30).unwrap();
        let r = &sol.roots;
        assert!(near(&r[0].re, 0.9476620415, 1e-10) && r[0].im.is_zero());
        assert!(near(&r[1].re, 0.1762492425, 1e-10) && r[1].im.is_zero());
        assert!(near(&r[2].re, -0.9761692044, 1e-10));
        assert!(near(&r[2].im.abs(), 0.2726245316, 1e-10));
        assert_eq!(r[2].conj(), r[3]);
        let f = Polynomial::new(vec![a0, a1, a2, a3, Surd2::from_rational(rat(1, 1))]);
        assert!(max_residual(&f, r, 30) <= residual_tolerance(&f, 30));
    }

    #[test]
    fn ferrari_biquadratic_and_integer_roots() {
        let dep = depress_quartic(&rat(0, 1), &rat(-1, 1), &rat(0, 1), &rat(1, 4));
        let sol = solve_quartic_ferrari(&dep, 30).unwrap();
        assert_eq!(sol.branch_log, [QuarticBranch::Biquadratic; 4]);
        let h = BigReal::sqrt2(40) / BigReal::from_i64(2);
        for z in &sol.roots {
            assert!((&z.re.abs() - &h).abs() < BigReal::ten_pow(-14, 40));
        }

        let f = Polynomial::from_roots(&[rat(1, 1), rat(2, 1), rat(3, 1), rat(4, 1)]);
        let roots = solve_poly(&f, 30).unwrap();
        let mut re: Vec<f64> = roots.iter().map(|z| z.re.to_f64()).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(re, vec![1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn formula_a_constants_and_roots() {
        let (a3, a2, a1, a0) = sym_coeffs();
        let (a, b) = formula_a_ab(&a3, &a2, &a1, &a0);
        assert_eq!(b, s(73, 1, -48, 1));
        assert_eq!(a, s(2266, 1, -1584, 1));
        let sol = quartic_closed_form_a(&a3, &a2, &a1, &a0, 30).unwrap();
        assert_eq!(sol.constants.radicand, s(1728 * 2639, 1, -1728 * 1866, 1));
        assert!(!sol.ferrari_fallback);
        let f = Polynomial::new(vec![a0, a1, a2, a3, Surd2::from_rational(rat(1, 1))]);
        assert!(max_residual(&f, &sol.roots, 30) <= residual_tolerance(&f, 30));
        assert!(sol
            .roots
            .iter()
            .any(|z| near(&z.re, 0.9476620415, 1e-10) && z.im.abs() < BigReal::ten_pow(-25, 40)));
    }

    #[test]
    fn formula_a_fourth_roots_of_unity() {
        let z = rat(0, 1);
        let sol = quartic_closed_form_a(&z, &z, &z, &rat(-1, 1), 30).unwrap();
        let f = Polynomial::new(vec![rat(-1, 1), z.clone(), z.clone(), z, rat(1, 1)]);
        assert!(max_residual(&f, &sol.roots, 30) <= residual_tolerance(&f, 30));
        let mut got: Vec<(i64, i64)> = sol
            .roots
            .iter()
            .map(|w| (w.re.to_f64().round() as i64, w.im.to_f64().round() as i64))
            .collect();
        got.sort();
        assert_eq!(got, vec![(-1, 0), (0, -1), (0, 1), (1, 0)]);
    }

    #[test]
    fn low_degrees() {
        let f: Polynomial<Rational> = Polynomial::new(vec![rat(-2, 1), rat(0, 1), rat(1, 1)]);
        let r = solve_poly(&f, 30).unwrap();
        assert!(near(&r[0].re, std::f64::consts::SQRT_2, 1e-15));
        let g = Polynomial::new(vec![rat(3, 1), rat(-6, 1)]);
        assert_eq!(solve_poly(&g, 30).unwrap()[0].re, BigReal::from_f64(0.5));
        let cubic = Polynomial::from_roots(&[rat(1, 3), rat(-2, 1), rat(5, 7)]);
        let tol = residual_tolerance(&cubic, 30);
        assert!(max_residual(&cubic, &solve_poly(&cubic, 30).unwrap(), 30) <= tol);
    }
}
