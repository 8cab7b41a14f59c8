//! Cross-check geometry in the ellipse's own frame: canonical ellipse at the origin,
//! the right-angle vertex `A` above it where two orthogonal tangents meet.
//!
//! Nothing here calls into [`crate::asym`]; a solved report is only read.

use num_traits::{One, Zero};

use crate::asym::SolveReport;
use crate::closed_form::{solve_poly, GUARD_DIGITS};
use crate::error::{Error, Result};
use crate::numeric::BigReal;
use crate::poly::Polynomial;

fn n(v: i64, like: &BigReal) -> BigReal {
    BigReal::from_i64(v).with_digits(like.digits())
}

/// `y = m·x + n`.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentLine {
    pub m: BigReal,
    pub n: BigReal,
}

/// Intercept of the tangent of slope `m` to the upper half of `x²/α² + y²/β² = 1`.
pub fn tangent_intercept(alpha: &BigReal, beta: &BigReal, m: &BigReal) -> Result<BigReal> {
    (&(&alpha.square() * &m.square()) + &beta.square()).sqrt()
}

pub fn tangent_line(alpha: &BigReal, beta: &BigReal, m: &BigReal) -> Result<TangentLine> {
    Ok(TangentLine {
        m: m.clone(),
        n: tangent_intercept(alpha, beta, m)?,
    })
}

/// Discriminant of the line–ellipse intersection quadratic; zero for a tangent.
pub fn tangency_discriminant(alpha: &BigReal, beta: &BigReal, line: &TangentLine) -> BigReal {
    let (a2, b2) = (alpha.square(), beta.square());
    let p = &(&n(2, alpha) * &(&line.m * &line.n)) * &a2;
    let q = &(&a2 * &line.m.square()) + &b2;
    let c = &a2 * &(&line.n.square() - &b2);
    &p.square() - &(&(&n(4, alpha) * &q) * &c)
}

/// Intersection of the orthogonal tangents of slopes `m` and `−1/m`.
pub fn vertex_a(alpha: &BigReal, beta: &BigReal, m: &BigReal) -> Result<(BigReal, BigReal)> {
    let (a2, b2, m2) = (alpha.square(), beta.square(), m.square());
    let u = (&a2 + &(&b2 * &m2)).sqrt()?;
    let v = (&(&a2 * &m2) + &b2).sqrt()?;
    let d = &n(1, alpha) + &m2;
    Ok((&(&u - &(m * &v)) / &d, &(&(m * &u) + &v) / &d))
}

/// `|x_A² + y_A² − α² − β²|`.
pub fn director_circle_check(alpha: &BigReal, beta: &BigReal, xa: &BigReal, ya: &BigReal) -> BigReal {
    (&(&xa.square() + &ya.square()) - &(&alpha.square() + &beta.square())).abs()
}

/// Contact point of the tangent of slope `m`.
pub fn tangent_point_b(alpha: &BigReal, beta: &BigReal, m: &BigReal) -> Result<(BigReal, BigReal)> {
    let v = tangent_intercept(alpha, beta, m)?;
    Ok((-(&(&alpha.square() * m) / &v), &beta.square() / &v))
}

/// The same contact point written with `α`, `β` eliminated through `ε` and `r`.
pub fn tangent_point_eps(eps: &BigReal, r: &BigReal, m: &BigReal) -> Result<(BigReal, BigReal)> {
    let one_m = &n(1, eps) - &eps.square();
    let root = (&n(1, eps) + &(&m.square() / &one_m)).sqrt()?;
    let y = r / &(eps * &root);
    Ok((-(&(m / &one_m) * &y), y))
}

/// Bisector of the right angle at `A` and the centre of the circle of radius `r` on it.
#[derive(Clone, Debug, PartialEq)]
pub struct Bisector {
    pub slope: BigReal,
    pub intercept: BigReal,
    pub x1: BigReal,
    pub y1: BigReal,
}

/// Bisector `y = (1+m)/(1−m)·x + …` and `C₁ = A − ((1−m), (1+m))·r/√(1+m²)`.
pub fn bisector_and_c1(alpha: &BigReal, beta: &BigReal, m: &BigReal, r: &BigReal) -> Result<Bisector> {
    if !m.is_positive() {
        return Err(Error::Domain("slope must be positive".into()));
    }
    let one = n(1, m);
    let den = &one - m;
    if den.is_zero() {
        return Err(Error::SingularSlope);
    }
    let (a2, b2, m2) = (alpha.square(), beta.square(), m.square());
    let slope = &(&one + m) / &den;
    let intercept = &(&(&(&a2 * &m2) + &b2).sqrt()? - &(&a2 + &(&b2 * &m2)).sqrt()?) / &den;
    let (xa, ya) = vertex_a(alpha, beta, m)?;
    let s = &r.clone() / &(&one + &m2).sqrt()?;
    Ok(Bisector {
        slope,
        intercept,
        x1: &xa - &(&den * &s),
        y1: &ya - &(&(&one + m) * &s),
    })
}

/// `C₁` with `α`, `β` written through `ε` and `r`.
pub fn c1_from_eps(eps: &BigReal, r: &BigReal, m: &BigReal) -> Result<(BigReal, BigReal)> {
    let one = n(1, eps);
    let one_m = &one - &eps.square();
    let m2 = m.square();
    let p = (&(&one / &one_m) + &m2).sqrt()?;
    let q = (&(&m2 / &one_m) + &one).sqrt()?;
    let s = (&one + &m2).sqrt()?;
    let re = r / eps;
    let d = &one + &m2;
    let x = &(&(&re * &(&p - &(m * &q))) - &(&(r * &(&one - m)) * &s)) / &d;
    let y = &(&(&re * &(&(m * &p) + &q)) - &(&(r * &(&one + m)) * &s)) / &d;
    Ok((x, y))
}

/// `(x_A − x, y_A − y)`: between this frame and the vertex frame (origin at `A`, triangle
/// above). Applying it twice is the identity.
pub fn frame_map(a: &(BigReal, BigReal), p: &(BigReal, BigReal)) -> (BigReal, BigReal) {
    (&a.0 - &p.0, &a.1 - &p.1)
}

/// Nearest point of the canonical ellipse to `(px, py)` and its distance.
///
/// With `x = α(1−t²)/(1+t²)`, `y = 2βt/(1+t²)` the foot-point condition is the quartic
/// `2(α²−β²)t(1−t²) − 2α·px·t(1+t²) + β·py(1−t⁴) = 0`; the vertex `(−α, 0)` (`t = ∞`)
/// is checked separately.
pub fn nearest_point_on_ellipse(
    alpha: &BigReal,
    beta: &BigReal,
    px: &BigReal,
    py: &BigReal,
    digits: u32,
) -> Result<(BigReal, BigReal, BigReal)> {
    let w = digits + GUARD_DIGITS;
    let (alpha, beta, px, py) = (
        alpha.with_digits(w),
        beta.with_digits(w),
        px.with_digits(w),
        py.with_digits(w),
    );
    let k = |v: i64| BigReal::from_i64(v).with_digits(w);
    let ab = &(&alpha.square() - &beta.square()) * &k(2);
    let apx = &(&alpha * &px) * &k(2);
    let bpy = &beta * &py;
    // constant, t, t², t³, t⁴
    let f = Polynomial::new(vec![bpy.clone(), &ab - &apx, BigReal::zero(), -(&ab + &apx), -bpy]);
    let point = |t: &BigReal| {
        let d = &k(1) + &t.square();
        (&(&alpha * &(&k(1) - &t.square())) / &d, &(&(&beta * &k(2)) * t) / &d)
    };
    let mut cands = vec![(-alpha.clone(), BigReal::zero())];
    if !f.is_zero() {
        let tol = BigReal::ten_pow(-(digits as i64) / 2, w);
        for z in solve_poly(&f, digits)? {
            if z.im.abs() <= &tol * &z.re.abs().max(BigReal::one()) {
                cands.push(point(&z.re));
            }
        }
    }
    let dist = |p: &(BigReal, BigReal)| &(&p.0 - &px).square() + &(&p.1 - &py).square();
    let best = cands
        .into_iter()
        .min_by(|a, b| dist(a).partial_cmp(&dist(b)).unwrap())
        .unwrap();
    let d = dist(&best).sqrt()?;
    Ok((best.0, best.1, d))
}

/// Inversion in the unit circle, `(x, y) ↦ (x, −y)/(x² + y²)`.
pub fn invert(x: &BigReal, y: &BigReal) -> Result<(BigReal, BigReal)> {
    let d = &x.square() + &y.square();
    if d.is_zero() {
        return Err(Error::Origin);
    }
    Ok((x / &d, &(-y.clone()) / &d))
}

/// `|X²/α² + Y²/β² − (X² + Y²)²|` at the inverse image of an ellipse point.
pub fn inversion_residual(alpha: &BigReal, beta: &BigReal, x: &BigReal, y: &BigReal) -> Result<BigReal> {
    let (xi, yi) = invert(x, y)?;
    let s = &xi.square() + &yi.square();
    Ok((&(&(&xi.square() / &alpha.square()) + &(&yi.square() / &beta.square())) - &s.square()).abs())
}

/// One named comparison of the cross-check.
#[derive(Clone, Debug)]
pub struct OracleCheck {
    pub name: &'static str,
    pub residual: BigReal,
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    /// Vertex `A` in the ellipse frame.
    pub vertex: (BigReal, BigReal),
    pub c1: (BigReal, BigReal),
    /// Contact point with the leg of slope `m`, vertex frame.
    pub leg_contact: (BigReal, BigReal),
    /// Contact point with the circle, vertex frame.
    pub circle_contact: (BigReal, BigReal),
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn passed(&self, tol: &BigReal) -> bool {
        self.checks.iter().all(|c| c.residual <= *tol)
    }

    pub fn max_residual(&self) -> BigReal {
        self.checks
            .iter()
            .map(|c| c.residual.clone())
            .fold(BigReal::zero(), BigReal::max)
    }
}

/// Rebuilds the configuration of a solved report from `α`, `β`, `m = b/c` and `r` alone
/// and compares every quantity in the vertex frame.
pub fn cross_check(rep: &SolveReport, digits: u32) -> Result<OracleReport> {
    let w = digits + GUARD_DIGITS;
    let (alpha, beta) = (rep.ellipse.alpha.with_digits(w), rep.ellipse.beta.with_digits(w));
    let r = rep.r.with_digits(w);
    let m = &rep.triangle.b.with_digits(w) / &rep.triangle.c.with_digits(w);
    let mut checks = Vec::new();
    let mut push = |name, residual: BigReal| {
        checks.push(OracleCheck {
            name,
            residual: residual.abs(),
        })
    };

    let a = vertex_a(&alpha, &beta, &m)?;
    push("director circle", director_circle_check(&alpha, &beta, &a.0, &a.1));
    let origin = (BigReal::zero().with_digits(w), BigReal::zero().with_digits(w));
    let centre = frame_map(&a, &origin);
    push("centre x", &centre.0 - &rep.ellipse.x0);
    push("centre y", &centre.1 - &rep.ellipse.y0);
    let line = tangent_line(&alpha, &beta, &m)?;
    push("tangent discriminant", tangency_discriminant(&alpha, &beta, &line));

    let tb = tangent_point_b(&alpha, &beta, &m)?;
    let te = tangent_point_eps(&rep.eps.with_digits(w), &r, &m)?;
    push("contact point forms", (&tb.0 - &te.0).abs().max((&tb.1 - &te.1).abs()));
    let leg_contact = frame_map(&a, &tb);
    push("contact on leg", &leg_contact.1 - &(&m * &leg_contact.0));
    let mperp = -(&BigReal::one().with_digits(w) / &m);
    let tb2 = tangent_point_b(&alpha, &beta, &mperp)?;
    let other = frame_map(&a, &tb2);
    push("contact on other leg", &other.1 - &(&mperp * &other.0));
    push("hypotenuse tangency", &(&rep.h - &rep.ellipse.y0) - &beta);

    let c1 = match bisector_and_c1(&alpha, &beta, &m, &r) {
        Ok(b) => {
            let (xe, ye) = c1_from_eps(&rep.eps.with_digits(w), &r, &m)?;
            push("centre forms", (&b.x1 - &xe).abs().max((&b.y1 - &ye).abs()));
            push("centre on bisector", &b.y1 - &(&(&b.slope * &b.x1) + &b.intercept));
            (b.x1, b.y1)
        }
        // Vertical bisector: the vertex-frame centre is (0, √2·r).
        Err(Error::SingularSlope) => {
            let s = BigReal::sqrt2(w);
            (a.0.clone(), &a.1 - &(&s * &r))
        }
        Err(e) => return Err(e),
    };
    let c1v = frame_map(&a, &c1);
    push("circle x1", &c1v.0 - &rep.x1);
    push("circle y1", &c1v.1 - &rep.y1);

    let (tx, ty, d) = nearest_point_on_ellipse(&alpha, &beta, &c1.0, &c1.1, digits)?;
    push("circle distance", &(&d - &r) / &r);
    let circle_contact = frame_map(&a, &(tx.clone(), ty.clone()));
    push("contact x", &circle_contact.0 - &rep.x_t);
    push("contact y", &circle_contact.1 - &rep.y_t);
    push("inversion", inversion_residual(&alpha, &beta, &tx, &ty)?);
    Ok(OracleReport {
        vertex: a,
        c1,
        leg_contact,
        circle_contact,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BigReal {
        BigReal::parse(s, 50).unwrap()
    }

    #[test]
    fn intercepts() {
        assert_eq!(tangent_intercept(&b("2"), &b("0.3"), &b("0")).unwrap().to_f64(), 0.3);
        assert_eq!(tangent_intercept(&b("3"), &b("4"), &b("1")).unwrap().to_f64(), 5.0);
        let (al, be, m) = (1.0f64, 0.2431f64, 1.0591663f64 / 2.6931530);
        let nn = tangent_intercept(&b("1"), &b("0.2431"), &(&b("1.0591663") / &b("2.6931530"))).unwrap();
        assert!((nn.to_f64() - (al * al * m * m + be * be).sqrt()).abs() < 1e-15);
        let line = tangent_line(&b("1"), &b("0.2431"), &b("0.39328")).unwrap();
        assert!(tangency_discriminant(&b("1"), &b("0.2431"), &line).abs().to_f64() < 1e-40);
    }

    #[test]
    fn director_circle_cases() {
        assert!(director_circle_check(&b("1"), &b("1"), &b("1"), &b("1")).is_zero());
        let (al, be) = (b("1.3"), b("0.7"));
        let ya = (&al.square() + &be.square()).sqrt().unwrap();
        assert!(director_circle_check(&al, &be, &b("0"), &ya).to_f64() < 1e-45);
        let (xa, ya) = vertex_a(&al, &be, &b("0.4")).unwrap();
        assert!(director_circle_check(&al, &be, &xa, &ya).to_f64() < 1e-45);
    }

    #[test]
    fn contact_point() {
        let (x, y) = tangent_point_b(&b("2"), &b("0.5"), &b("0")).unwrap();
        assert!(x.is_zero());
        assert_eq!(y.to_f64(), 0.5);
        let (al, be, m) = (b("1.1"), b("0.4"), b("0.6"));
        let (x, y) = tangent_point_b(&al, &be, &m).unwrap();
        let on = &(&(&x.square() / &al.square()) + &(&y.square() / &be.square())) - &b("1");
        assert!(on.abs().to_f64() < 1e-45);
    }

    #[test]
    fn eps_form_matches() {
        let (eps, r, m) = (b("0.93"), b("0.21"), b("0.45"));
        let one_m = &b("1") - &eps.square();
        let beta = &r / &eps;
        let alpha = &r / &(&eps * &one_m.sqrt().unwrap());
        let (x1, y1) = tangent_point_b(&alpha, &beta, &m).unwrap();
        let (x2, y2) = tangent_point_eps(&eps, &r, &m).unwrap();
        assert!((&x1 - &x2).abs().to_f64() < 1e-45 && (&y1 - &y2).abs().to_f64() < 1e-45);
        let bis = bisector_and_c1(&alpha, &beta, &m, &r).unwrap();
        let (cx, cy) = c1_from_eps(&eps, &r, &m).unwrap();
        assert!((&bis.x1 - &cx).abs().to_f64() < 1e-45 && (&bis.y1 - &cy).abs().to_f64() < 1e-45);
    }

    #[test]
    fn c1_is_r_from_both_legs() {
        let (al, be, m, r) = (b("1.2"), b("0.5"), b("0.3"), b("0.17"));
        let bis = bisector_and_c1(&al, &be, &m, &r).unwrap();
        let (xa, ya) = vertex_a(&al, &be, &m).unwrap();
        let s = (&b("1") + &m.square()).sqrt().unwrap();
        // leg of slope m through A, and the perpendicular leg
        let d1 = (&(&(&m * &(&bis.x1 - &xa)) - &(&bis.y1 - &ya)) / &s).abs();
        let d2 = (&(&(&bis.x1 - &xa) + &(&m * &(&bis.y1 - &ya))) / &s).abs();
        assert!((&d1 - &r).abs().to_f64() < 1e-45);
        assert!((&d2 - &r).abs().to_f64() < 1e-45);
        assert!((bis.slope.to_f64() - 1.3 / 0.7).abs() < 1e-15);
    }

    #[test]
    fn singular_and_limit_slopes() {
        assert_eq!(
            bisector_and_c1(&b("1"), &b("0.5"), &b("1"), &b("0.1")).unwrap_err(),
            Error::SingularSlope
        );
        let bis = bisector_and_c1(&b("1"), &b("0.5"), &b("1e-30"), &b("0.1")).unwrap();
        assert!((bis.slope.to_f64() - 1.0).abs() < 1e-25);
    }

    #[test]
    fn frame_map_is_involution() {
        let a = (b("0.3"), b("1.7"));
        let p = (b("-0.25"), b("0.125"));
        let q = frame_map(&a, &frame_map(&a, &p));
        assert!((&q.0 - &p.0).abs().to_f64() < 1e-45 && (&q.1 - &p.1).abs().to_f64() < 1e-45);
    }

    #[test]
    fn inversion_special_points() {
        assert!(inversion_residual(&b("2"), &b("0.5"), &b("2"), &b("0"))
            .unwrap()
            .is_zero());
        let (x, y) = invert(&b("2"), &b("0")).unwrap();
        assert_eq!((x.to_f64(), y.to_f64()), (0.5, 0.0));
        assert!(inversion_residual(&b("2"), &b("0.5"), &b("0"), &b("0.5"))
            .unwrap()
            .is_zero());
        let (x, y) = invert(&b("0"), &b("0.5")).unwrap();
        assert_eq!((x.to_f64(), y.to_f64()), (0.0, -2.0));
        assert_eq!(
            inversion_residual(&b("2"), &b("0.5"), &b("0"), &b("0")).unwrap_err(),
            Error::Origin
        );
    }

    #[test]
    fn nearest_point_circle_case() {
        // Circle of radius 2, point (3, 4): nearest (1.2, 1.6), distance 3.
        let (x, y, d) = nearest_point_on_ellipse(&b("2"), &b("2"), &b("3"), &b("4"), 30).unwrap();
        assert!((x.to_f64() - 1.2).abs() < 1e-25 && (y.to_f64() - 1.6).abs() < 1e-25);
        assert!((d.to_f64() - 3.0).abs() < 1e-25);
        let (x, _, d) = nearest_point_on_ellipse(&b("2"), &b("1"), &b("-5"), &b("0"), 30).unwrap();
        assert_eq!((x.to_f64(), d.to_f64()), (-2.0, 3.0));
    }

    #[test]
    fn agrees_with_reference_solution() {
        // Reference legs, hypotenuse recomputed so the right angle is exact.
        let t = crate::asym::TriangleConfig::from_legs(&b("1.0591663"), &b("2.6931530"), 30).unwrap();
        let rep = crate::asym::solve_asymmetric(&t, &b("1e-12"), 200, 30).unwrap();
        let o = cross_check(&rep, 30).unwrap();
        assert!(o.passed(&b("1e-8")), "{:?}", o.checks);
    }
}
