//! The scalene right triangle: an ellipse tangent to the three sides and to a circle
//! centred on the bisector of the right angle.
//!
//! Frame: origin at the right-angle vertex `A`, hypotenuse on the line `y = h`,
//! `B = (c²/a, h)` and `C = (−b²/a, h)`. Every function takes the requested number of
//! significant digits and works `GUARD_DIGITS` beyond it.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::closed_form::{quartic_closed_form_a, solve_poly, FormulaASolution, GUARD_DIGITS};
use crate::error::{Error, Result};
use crate::numeric::{BigReal, Complex, Field, Rational};
use crate::poly::{isolate_real_roots, refine_root, Polynomial};
use crate::top::{top_delta, OverlapSpec};

type RPoly = Polynomial<BigReal>;

/// `b/r` of the isosceles configuration; seeds the iteration.
const SYM_B_OVER_R: &str = "6.3988504908313964106495157287278877674472204061565403354592771240691523730333";

/// Smallest damping factor the iteration will fall to.
const MIN_LAMBDA_HALVINGS: u32 = 10;

fn work(digits: u32) -> u32 {
    digits + GUARD_DIGITS
}

fn num(v: i64, w: u32) -> BigReal {
    BigReal::from_i64(v).with_digits(w)
}

fn tenth(k: i64, w: u32) -> BigReal {
    BigReal::ten_pow(k, w)
}

/// `x − c` as a polynomial.
fn shifted_x(c: &BigReal) -> RPoly {
    Polynomial::new(vec![-c.clone(), BigReal::one().with_digits(c.digits())])
}

fn cst(c: BigReal) -> RPoly {
    Polynomial::constant(c)
}

/// `|p(x)| / max|c_i|`.
pub fn normalized_residual(p: &RPoly, x: &BigReal) -> BigReal {
    let scale = p.max_abs_coeff();
    if scale.is_zero() {
        return BigReal::zero();
    }
    &p.eval(x).abs() / &scale
}

/// Side lengths of a triangle with the right angle at `A`; `a` is the hypotenuse.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleConfig {
    pub a: BigReal,
    pub b: BigReal,
    pub c: BigReal,
}

impl TriangleConfig {
    /// Rejects non-positive sides and `|a² − b² − c²| > 10⁻⁶ a²`.
    pub fn new(a: BigReal, b: BigReal, c: BigReal) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() || !c.is_positive() {
            return Err(Error::InvalidTriangle("side lengths must be positive".into()));
        }
        let w = 40;
        let (aw, bw, cw) = (a.with_digits(w), b.with_digits(w), c.with_digits(w));
        let a2 = aw.square();
        let defect = (&a2 - &(&bw.square() + &cw.square())).abs();
        if defect > &tenth(-6, w) * &a2 {
            return Err(Error::InvalidTriangle(format!(
                "a² − b² − c² = {} is not within 1e-6 of zero relative to a²",
                (&a2 - &(&bw.square() + &cw.square())).to_sig_string(6)
            )));
        }
        Ok(TriangleConfig { a, b, c })
    }

    /// Decimal side lengths parsed at `digits` significant digits.
    pub fn parse(a: &str, b: &str, c: &str, digits: u32) -> Result<Self> {
        let w = work(digits);
        Self::new(BigReal::parse(a, w)?, BigReal::parse(b, w)?, BigReal::parse(c, w)?)
    }

    /// The triangle with legs `b`, `c` and `a = √(b² + c²)`.
    pub fn from_legs(b: &BigReal, c: &BigReal, digits: u32) -> Result<Self> {
        let w = work(digits);
        let (b, c) = (b.with_digits(w), c.with_digits(w));
        let a = (&b.square() + &c.square()).sqrt()?;
        Self::new(a, b, c)
    }

    fn sides(&self, w: u32) -> (BigReal, BigReal, BigReal) {
        (self.a.with_digits(w), self.b.with_digits(w), self.c.with_digits(w))
    }

    /// The same triangle with the legs exchanged.
    pub fn swapped(&self) -> Self {
        TriangleConfig {
            a: self.a.clone(),
            b: self.c.clone(),
            c: self.b.clone(),
        }
    }
}

/// Triangle constants plus the circle centre for one radius.
#[derive(Clone, Debug)]
pub struct DerivedConstants {
    /// Height on the hypotenuse, `bc/a`.
    pub h: BigReal,
    /// `(c² − b²)/2a`.
    pub k: BigReal,
    /// Slope of `AB`, `b/c`.
    pub m: BigReal,
    pub r: BigReal,
    /// `(c − b)r/a`; negative when `b > c`.
    pub x1: BigReal,
    pub y1: BigReal,
    pub digits: u32,
}

/// `h`, `k`, `m` and the circle centre `(x1, y1)` for radius `r`.
pub fn derived_constants(t: &TriangleConfig, r: &BigReal, digits: u32) -> Result<DerivedConstants> {
    if !r.is_positive() {
        return Err(Error::Domain("the radius must be positive".into()));
    }
    let w = work(digits);
    let (a, b, c) = t.sides(w);
    let r = r.with_digits(w);
    let h = &(&b * &c) / &a;
    let k = &(&c.square() - &b.square()) / &(&num(2, w) * &a);
    let m = &b / &c;
    let x1 = &(&(&c - &b) * &r) / &a;
    let y1 = &(&(&c + &b) * &r) / &a;
    let quarter = &a.square() / &num(4, w);
    if (&(&h.square() + &k.square()) - &quarter).abs() > &tenth(-5, w) * &quarter {
        return Err(Error::InvalidTriangle("h² + k² differs from (a/2)²".into()));
    }
    Ok(DerivedConstants {
        h,
        k,
        m,
        r,
        x1,
        y1,
        digits,
    })
}

/// Semi-axes, eccentricity and centre of the ellipse.
#[derive(Clone, Debug)]
pub struct EllipseState {
    pub alpha: BigReal,
    pub beta: BigReal,
    pub eps: BigReal,
    pub x0: BigReal,
    pub y0: BigReal,
}

impl EllipseState {
    /// Centre strictly inside the triangle.
    pub fn centre_inside(&self, k: &DerivedConstants) -> bool {
        self.y0 > &k.m * &self.x0 && &(&k.m * &self.y0) + &self.x0 > BigReal::zero() && self.y0 < k.h
    }

    /// `(x − x0)²/α² + (y − y0)²/β² − 1`.
    pub fn implicit(&self, x: &BigReal, y: &BigReal) -> BigReal {
        let dx = x - &self.x0;
        let dy = y - &self.y0;
        &(&(&dx.square() / &self.alpha.square()) + &(&dy.square() / &self.beta.square())) - &BigReal::one()
    }
}

/// Centre from the tangency to the three sides, semi-axes from `ε` and `r`.
pub fn ellipse_center(k: &DerivedConstants, eps: &BigReal) -> Result<EllipseState> {
    let w = work(k.digits);
    let e = eps.with_digits(w);
    let one = num(1, w);
    if &num(2, w) * &e.square() <= one || e >= one {
        return Err(Error::Domain(format!(
            "eccentricity {} is outside (1/√2, 1)",
            e.to_sig_string(12)
        )));
    }
    let r = &k.r;
    let he = &(&k.h * &e) - r;
    if !he.is_positive() {
        return Err(Error::SingularParametrization);
    }
    let x0 = &k.k * &(&one - &(r / &he));
    let y0 = &k.h - &(r / &e);
    let beta = r / &e;
    let alpha = (r / &(&e * &(&one - &e.square()).sqrt()?)).abs();
    Ok(EllipseState {
        alpha,
        beta,
        eps: e,
        x0,
        y0,
    })
}

/// The sextic in `ε` in both printed forms.
#[derive(Clone, Debug)]
pub struct SexticForms {
    /// In `Q = r/a`, `R = r/h`.
    pub poly: RPoly,
    /// In the sides directly.
    pub compact: RPoly,
}

fn sextic_qr(t: &TriangleConfig, r: &BigReal, w: u32) -> RPoly {
    let (a, b, c) = t.sides(w);
    let r = r.with_digits(w);
    let h = &(&b * &c) / &a;
    let q = &r / &a;
    let rr = &r / &h;
    let n = |v| num(v, w);
    let (q2, r2) = (q.square(), rr.square());
    Polynomial::new(vec![
        &n(4) * &(&q2 * &r2),
        BigReal::zero().with_digits(w),
        -(&n(4) * &r2),
        &(&n(4) * &rr) * &(&n(1) - &(&n(2) * &q2)),
        &(&n(4) * &(&q2 + &r2)) - &n(1),
        -(&n(4) * &rr),
        n(1),
    ])
}

fn sextic_compact(t: &TriangleConfig, r: &BigReal, w: u32) -> RPoly {
    let (a, b, c) = t.sides(w);
    let r = r.with_digits(w);
    let n = |v| num(v, w);
    let bc = &b * &c;
    let r2 = r.square();
    let a2 = a.square();
    Polynomial::new(vec![
        (&(&n(2) * &r2) / &bc).square(),
        BigReal::zero().with_digits(w),
        -(&(&(&n(2) * &a) * &r) / &bc).square(),
        &(&(&n(4) * &r) * &(&a2 - &(&n(2) * &r2))) / &(&a * &bc),
        &(&(&n(4) * &r2) * &(&(&a / &bc).square() + &a2.recip())) - &n(1),
        -(&(&(&n(4) * &a) * &r) / &bc),
        n(1),
    ])
}

/// Both forms of the sextic in `ε`; fails if they are not proportional.
pub fn sextic_coeffs(t: &TriangleConfig, r: &BigReal, digits: u32) -> Result<SexticForms> {
    if !r.is_positive() {
        return Err(Error::Domain("the radius must be positive".into()));
    }
    let w = work(digits);
    let poly = sextic_qr(t, r, w);
    let compact = sextic_compact(t, r, w);
    let (p, q) = (poly.monic()?, compact.monic()?);
    let tol = &tenth(6 - digits as i64, w) * &p.max_abs_coeff();
    for i in 0..=6 {
        if (&p.coeff(i) - &q.coeff(i)).abs() > tol {
            return Err(Error::Domain(format!("sextic forms disagree at ε^{i}")));
        }
    }
    Ok(SexticForms { poly, compact })
}

/// Distinct roots of the sextic in `(1/√2, 1)`, ascending.
pub fn sextic_roots_in_band(sextic: &RPoly, digits: u32) -> Result<Vec<BigReal>> {
    let q: Polynomial<Rational> = sextic.map(|c| c.to_rational());
    // Just below 1/√2; roots in the sliver are filtered afterwards.
    let lo = Rational::new(7_071_067_811i64.into(), 10_000_000_000i64.into());
    let hi = Rational::one();
    let iso = isolate_real_roots(&q, Some((&lo, &hi)))?;
    let sf = q.square_free();
    let w = work(digits);
    let mut out = Vec::new();
    for (a, b) in &iso.intervals {
        let e = refine_root(&sf, a, b, digits)?;
        if &num(2, w) * &e.square() > num(1, w) && e < num(1, w) {
            out.push(e);
        }
    }
    Ok(out)
}

/// The quartic in `r` at fixed `ε`, its four roots and the admissible one.
#[derive(Clone, Debug)]
pub struct QuarticInR {
    pub poly: RPoly,
    pub roots: [Complex; 4],
    pub root: BigReal,
    pub closed_form: FormulaASolution<BigReal>,
}

/// Rearranges the sextic by powers of `r` and solves it in closed form.
///
/// The admissible root is real, positive, below `hε`, puts the centre inside the
/// triangle, and has the smallest sextic residual among such roots.
pub fn quartic_in_r(t: &TriangleConfig, eps: &BigReal, digits: u32) -> Result<QuarticInR> {
    let w = work(digits);
    let e = eps.with_digits(w);
    let one = num(1, w);
    if &num(2, w) * &e.square() <= one || e >= one {
        return Err(Error::Domain(format!(
            "eccentricity {} is outside (1/√2, 1)",
            e.to_sig_string(12)
        )));
    }
    let (a, b, c) = t.sides(w);
    let h = &(&b * &c) / &a;
    let e2 = e.square();
    let e3 = &e2 * &e;
    let e4 = e2.square();
    let one_m = &one - &e2;
    let a2 = a.square();
    let a0 = -(&(&(&(&b * &c) / &num(2, w)).square() * &e4) * &one_m);
    let a1 = &(&(&(&a * &b) * &c) * &e3) * &one_m;
    let a2c = &(&(&(&a2 + &h.square()) * &e2) - &a2) * &e2;
    let a3 = -(&(&num(2, w) * &h) * &e3);
    let poly = Polynomial::new(vec![a0.clone(), a1.clone(), a2c.clone(), a3.clone(), one.clone()]);
    let sol = quartic_closed_form_a(&a3, &a2c, &a1, &a0, digits)?;
    let imag_tol = tenth(-(digits as i64) / 2, w);
    let mut best: Option<(BigReal, BigReal)> = None;
    for z in &sol.roots {
        if !z.is_real_within(&imag_tol.clone().max(&imag_tol * &z.re.abs())) {
            continue;
        }
        let r = z.re.clone();
        if !r.is_positive() {
            continue;
        }
        let Ok(k) = derived_constants(t, &r, digits) else {
            continue;
        };
        let Ok(ell) = ellipse_center(&k, &e) else { continue };
        if !ell.centre_inside(&k) {
            continue;
        }
        let res = normalized_residual(&sextic_qr(t, &r, w), &e);
        if best.as_ref().is_none_or(|(_, b)| res < *b) {
            best = Some((r, res));
        }
    }
    let (root, _) = best.ok_or_else(|| {
        Error::NoAdmissibleRoot(format!(
            "no root of the quartic in r is feasible at ε = {}",
            e.to_sig_string(12)
        ))
    })?;
    Ok(QuarticInR {
        poly,
        roots: sol.roots.clone(),
        root,
        closed_form: sol,
    })
}

struct Pieces {
    /// `β² − (β²/α²)(x − x0)²`
    s1sq: RPoly,
    /// `r² − (x − x1)²`
    s2sq: RPoly,
    /// `y0 − y1`
    p: BigReal,
    dx0: RPoly,
    dx1: RPoly,
    ratio: BigReal,
}

fn pieces(k: &DerivedConstants, e: &EllipseState) -> Pieces {
    let dx0 = shifted_x(&e.x0);
    let dx1 = shifted_x(&k.x1);
    let b2 = e.beta.square();
    let ratio = &b2 / &e.alpha.square();
    let s1sq = &cst(b2) - &(&dx0 * &dx0).scale(&ratio);
    let s2sq = &cst(k.r.square()) - &(&dx1 * &dx1);
    Pieces {
        s1sq,
        s2sq,
        p: &e.y0 - &k.y1,
        dx0,
        dx1,
        ratio,
    }
}

/// Intersection quartic: lower semi-ellipse meets upper semicircle, both radicals squared away.
pub fn build_quartic_u(k: &DerivedConstants, e: &EllipseState) -> RPoly {
    let s = pieces(k, e);
    let p2 = s.p.square();
    let t = &(&cst(p2.clone()) + &s.s1sq) - &s.s2sq;
    &(&t * &t) - &s.s1sq.scale(&(&num(4, p2.digits()) * &p2))
}

/// Equal slopes of ellipse and circle, written with `α² = r²/(ε²(1 − ε²))`.
pub fn build_quartic_v(k: &DerivedConstants, e: &EllipseState) -> RPoly {
    let w = e.eps.digits();
    let e2 = e.eps.square();
    let one_m = &num(1, w) - &e2;
    let r2 = k.r.square();
    let sq0 = &shifted_x(&e.x0) * &shifted_x(&e.x0);
    let sq1 = &shifted_x(&k.x1) * &shifted_x(&k.x1);
    let inner = &sq1.scale(&e2) + &cst(&r2 * &one_m);
    &(&sq0 * &inner).scale(&(&e2 * &one_m)) - &sq1.scale(&r2)
}

/// Implicit-slope identity `(β²/α²)(x − x0)(y − y1) = (x − x1)(y − y0)` on the upper
/// semicircle, squared once.
pub fn build_quartic_w(k: &DerivedConstants, e: &EllipseState) -> RPoly {
    let s = pieces(k, e);
    let l = &s.dx0.scale(&s.ratio) - &s.dx1;
    &(&s.s2sq * &(&l * &l)) - &(&s.dx1 * &s.dx1).scale(&s.p.square())
}

fn max_residual3(u: &RPoly, v: &RPoly, w: &RPoly, x: &BigReal) -> BigReal {
    [u, v, w]
        .iter()
        .map(|p| normalized_residual(p, x))
        .fold(BigReal::zero(), BigReal::max)
}

/// The collapsed quadratic `monic(u′) − monic(monic(v) − monic(w))`.
pub fn top_quadratic(u: &RPoly, v: &RPoly, w: &RPoly) -> Result<RPoly> {
    let dvw = &v.monic()? - &w.monic()?;
    if dvw.is_zero() {
        return Err(Error::InadmissibleAbscissa);
    }
    top_delta(&OverlapSpec::new("u'", u.derivative()), &OverlapSpec::new("v•w", dvw))
}

/// Root of the collapsed quadratic inside `band` with the smallest residual over `u, v, w`.
pub fn tangent_abscissa_via_top(
    u: &RPoly,
    v: &RPoly,
    w: &RPoly,
    band: (&BigReal, &BigReal),
    digits: u32,
) -> Result<BigReal> {
    let q = top_quadratic(u, v, w)?;
    if q.is_zero() || q.degree() == Some(0) || q.is_negligible(&BigReal::one()) {
        return Err(Error::InadmissibleAbscissa);
    }
    let wd = work(digits);
    let slack = &tenth(-(digits as i64) / 2, wd) * &band.0.abs().max(band.1.abs()).max(BigReal::one());
    let (lo, hi) = (band.0 - &slack, band.1 + &slack);
    let mut best: Option<(BigReal, BigReal)> = None;
    for z in solve_poly(&q, digits)? {
        if !z.is_real_within(&slack) {
            continue;
        }
        let x = z.re.clone();
        if x < lo || x > hi {
            continue;
        }
        let res = max_residual3(u, v, w, &x);
        if best.as_ref().is_none_or(|(_, b)| res < *b) {
            best = Some((x, res));
        }
    }
    best.map(|(x, _)| x).ok_or(Error::InadmissibleAbscissa)
}

/// Direct bracketing of `v` inside `band`, used when the collapse yields nothing admissible.
pub fn tangent_abscissa_from_v(
    u: &RPoly,
    v: &RPoly,
    w: &RPoly,
    band: (&BigReal, &BigReal),
    digits: u32,
) -> Result<BigReal> {
    let wd = work(digits);
    let (lo, hi) = (band.0.with_digits(wd), band.1.with_digits(wd));
    let width = &hi - &lo;
    if width.is_negligible(&lo.abs().max(BigReal::one())) {
        let x = &(&lo + &hi) / &num(2, wd);
        if normalized_residual(v, &x) <= tenth(6 - digits as i64, wd) {
            return Ok(x);
        }
        return Err(Error::InadmissibleAbscissa);
    }
    let n = 64;
    let pts: Vec<BigReal> = (0..=n)
        .map(|i| &lo + &(&(&width * &num(i, wd)) / &num(n, wd)))
        .collect();
    let mut best: Option<(BigReal, BigReal)> = None;
    for pair in pts.windows(2) {
        let (fa, fb) = (v.eval(&pair[0]), v.eval(&pair[1]));
        if fa.signum() * fb.signum() > 0 {
            continue;
        }
        let x = refine_root(v, &pair[0], &pair[1], digits)?;
        let res = max_residual3(u, v, w, &x);
        if best.as_ref().is_none_or(|(_, b)| res < *b) {
            best = Some((x, res));
        }
    }
    best.map(|(x, _)| x).ok_or(Error::InadmissibleAbscissa)
}

/// `y1 + √(r² − (x_T − x1)²)`.
pub fn ordinate_from_circle(x_t: &BigReal, k: &DerivedConstants) -> Result<BigReal> {
    let d = &k.r.square() - &(x_t - &k.x1).square();
    if d.is_negative() {
        if d.is_negligible(&k.r.square()) {
            return Ok(k.y1.clone());
        }
        return Err(Error::Domain(format!(
            "x_T = {} lies outside the circle's disc",
            x_t.to_sig_string(12)
        )));
    }
    Ok(&k.y1 + &d.sqrt()?)
}

/// `y0 − β√(1 − (x_T − x0)²/α²)`.
pub fn ordinate_from_ellipse(x_t: &BigReal, e: &EllipseState) -> Result<BigReal> {
    let one = num(1, e.eps.digits());
    let d = &one - &(&(x_t - &e.x0).square() / &e.alpha.square());
    if d.is_negative() {
        if d.is_negligible(&one) {
            return Ok(e.y0.clone());
        }
        return Err(Error::Domain(format!(
            "x_T = {} lies outside the ellipse",
            x_t.to_sig_string(12)
        )));
    }
    Ok(&e.y0 - &(&e.beta * &d.sqrt()?))
}

/// Everything built for one `(r, ε)` pair.
#[derive(Clone, Debug)]
pub struct Configuration {
    pub consts: DerivedConstants,
    pub ellipse: EllipseState,
    pub u: RPoly,
    pub v: RPoly,
    pub w: RPoly,
    pub x_t: BigReal,
    /// On the lower semi-ellipse.
    pub y_t: BigReal,
    /// Distance from the circle centre to `(x_T, y_T)`.
    pub rho: BigReal,
    /// False when `x_T` came from bracketing `v`.
    pub via_top: bool,
}

/// Builds the configuration for a given radius and eccentricity.
pub fn configuration_at(t: &TriangleConfig, r: &BigReal, eps: &BigReal, digits: u32) -> Result<Configuration> {
    let consts = derived_constants(t, r, digits)?;
    let ellipse = ellipse_center(&consts, eps)?;
    if !ellipse.centre_inside(&consts) {
        return Err(Error::NoAdmissibleEpsilon(format!(
            "{} (centre outside the triangle at ε = {})",
            r.to_sig_string(12),
            eps.to_sig_string(12)
        )));
    }
    let u = build_quartic_u(&consts, &ellipse);
    let v = build_quartic_v(&consts, &ellipse);
    let w = build_quartic_w(&consts, &ellipse);
    let zero = BigReal::zero().with_digits(work(digits));
    let (lo, hi) = (zero.clone().min(ellipse.x0.clone()), zero.max(ellipse.x0.clone()));
    let (x_t, via_top) = match tangent_abscissa_via_top(&u, &v, &w, (&lo, &hi), digits) {
        Ok(x) => (x, true),
        Err(Error::InadmissibleAbscissa) => (tangent_abscissa_from_v(&u, &v, &w, (&lo, &hi), digits)?, false),
        Err(e) => return Err(e),
    };
    let y_t = ordinate_from_ellipse(&x_t, &ellipse)?;
    let rho = (&(&x_t - &consts.x1).square() + &(&y_t - &consts.y1).square()).sqrt()?;
    Ok(Configuration {
        consts,
        ellipse,
        u,
        v,
        w,
        x_t,
        y_t,
        rho,
        via_top,
    })
}

/// Solves the sextic for `ε` at radius `r` and keeps the admissible configuration whose
/// `ρ` is closest to `r`.
pub fn configuration(t: &TriangleConfig, r: &BigReal, digits: u32) -> Result<Configuration> {
    if !r.is_positive() {
        return Err(Error::Domain("the radius must be positive".into()));
    }
    let w = work(digits);
    let r = r.with_digits(w);
    let eps = sextic_roots_in_band(&sextic_qr(t, &r, w), digits)?;
    let mut best: Option<(Configuration, BigReal)> = None;
    for e in &eps {
        let Ok(cfg) = configuration_at(t, &r, e, digits) else {
            continue;
        };
        let gap = (&cfg.rho - &r).abs();
        if best.as_ref().is_none_or(|(_, g)| gap < *g) {
            best = Some((cfg, gap));
        }
    }
    best.map(|(c, _)| c)
        .ok_or_else(|| Error::NoAdmissibleEpsilon(r.to_sig_string(12)))
}

/// `ρ(r)`: distance from the circle centre to the tangency point of the ellipse solved at `r`.
pub fn rho(t: &TriangleConfig, r: &BigReal, digits: u32) -> Result<BigReal> {
    Ok(configuration(t, r, digits)?.rho)
}

/// Iteration outcome and the final configuration.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub triangle: TriangleConfig,
    pub eps: BigReal,
    pub r: BigReal,
    pub ellipse: EllipseState,
    pub h: BigReal,
    pub k: BigReal,
    pub x1: BigReal,
    pub y1: BigReal,
    pub x_t: BigReal,
    /// On the upper semicircle.
    pub y_t: BigReal,
    pub iterations: usize,
    /// `sextic`, `tangency`, `ellipse`, `circle`, `distance`, `slope`.
    pub residuals: BTreeMap<&'static str, BigReal>,
    /// Radius after every step, starting with `r0`.
    pub history: Vec<BigReal>,
    /// Final step factor; 1 unless damping engaged.
    pub lambda: BigReal,
    pub damped: bool,
    pub via_top: bool,
}

impl SolveReport {
    pub fn max_residual(&self) -> BigReal {
        self.residuals.values().cloned().fold(BigReal::zero(), BigReal::max)
    }
}

/// Starting radius: the isosceles ratio scaled by the height.
pub fn initial_radius(t: &TriangleConfig, digits: u32) -> Result<BigReal> {
    let w = work(digits);
    let (a, b, c) = t.sides(w);
    let h = &(&b * &c) / &a;
    let r0 = &(&h * &BigReal::sqrt2(w)) / &BigReal::parse(SYM_B_OVER_R, w)?;
    if rho(t, &r0, digits).is_ok() {
        return Ok(r0);
    }
    Ok(&(&h * &num(9, w)) / &num(20, w))
}

/// Fixed-point iteration `r ← r + λ(ρ(r) − r)` until `|Δr| < tol·r`.
///
/// `λ` starts at 1 and halves whenever `|ρ(r) − r|` grows from one step to the next.
pub fn solve_asymmetric(t: &TriangleConfig, tol: &BigReal, max_iter: usize, digits: u32) -> Result<SolveReport> {
    if !tol.is_positive() {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let w = work(digits);
    let tol = tol.with_digits(w);
    let mut r = initial_radius(t, digits)?;
    let mut lambda = num(1, w);
    let floor = num(2, w).powi(MIN_LAMBDA_HALVINGS).recip();
    let mut damped = false;
    let mut prev: Option<BigReal> = None;
    let mut history = vec![r.clone()];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iter {
        iterations += 1;
        let d = &rho(t, &r, digits)? - &r;
        if let Some(p) = &prev {
            if d.abs() > p.abs() && lambda > floor {
                lambda = &lambda / &num(2, w);
                damped = true;
            }
        }
        let next = &r + &(&lambda * &d);
        let step = (&next - &r).abs();
        let bound = &tol * &r;
        prev = Some(d);
        r = next;
        history.push(r.clone());
        if step < bound {
            converged = true;
            break;
        }
    }
    if !converged {
        let n = history.len();
        let last = (&history[n - 1] - &history[n - 2]).abs();
        return Err(Error::NonConvergence {
            iterations,
            last_step: last.to_sig_string(6),
            trace: history.iter().map(|x| x.to_sig_string(16)).collect(),
        });
    }
    let cfg = configuration(t, &r, digits)?;
    let y_t = ordinate_from_circle(&cfg.x_t, &cfg.consts)?;
    let residuals = final_residuals(t, &cfg, &y_t, digits);
    let DerivedConstants { h, k, x1, y1, .. } = cfg.consts.clone();
    Ok(SolveReport {
        triangle: t.clone(),
        eps: cfg.ellipse.eps.clone(),
        r,
        ellipse: cfg.ellipse,
        h,
        k,
        x1,
        y1,
        x_t: cfg.x_t,
        y_t,
        iterations,
        residuals,
        history,
        lambda,
        damped,
        via_top: cfg.via_top,
    })
}

fn final_residuals(
    t: &TriangleConfig,
    cfg: &Configuration,
    y_t: &BigReal,
    digits: u32,
) -> BTreeMap<&'static str, BigReal> {
    let w = work(digits);
    let k = &cfg.consts;
    let e = &cfg.ellipse;
    let r2 = k.r.square();
    let x = &cfg.x_t;
    let mut out = BTreeMap::new();
    out.insert("sextic", normalized_residual(&sextic_qr(t, &k.r, w), &e.eps));
    out.insert("tangency", normalized_residual(&cfg.u.derivative(), x));
    out.insert("ellipse", e.implicit(x, y_t).abs());
    let on_circle = &(&(x - &k.x1).square() + &(&cfg.y_t - &k.y1).square()) - &r2;
    out.insert("circle", &on_circle.abs() / &r2);
    out.insert("distance", &(&cfg.rho - &k.r).abs() / &k.r);
    let lhs = &(&(&e.beta.square() / &e.alpha.square()) * &(x - &e.x0)) * &(y_t - &k.y1);
    let rhs = &(x - &k.x1) * &(y_t - &e.y0);
    out.insert("slope", &(&lhs - &rhs).abs() / &r2);
    out
}

/// The derivative shortcut for the sextic and why it fails.
#[derive(Clone, Debug)]
pub struct DerivativeDemo {
    /// `Σ (p + 2)c_{p+2} εᵖ`.
    pub quartic: RPoly,
    /// Normalized value of that quartic at the solved `ε`.
    pub quartic_at_eps: BigReal,
    /// Normalized value of the sextic's derivative at `ε`.
    pub sextic_derivative_at_eps: BigReal,
    pub sextic_at_eps: BigReal,
    /// Distinct real roots of the sextic, counted by Sturm sequence over its Cauchy interval.
    pub distinct_real_roots: usize,
    pub real_roots: Vec<BigReal>,
}

/// Drops `c1 = 0` and the common factor `ε` from the sextic's derivative and evaluates
/// the result at the solved `ε`.
pub fn derivative_quartic_demo(t: &TriangleConfig, r: &BigReal, eps: &BigReal, digits: u32) -> Result<DerivativeDemo> {
    let forms = sextic_coeffs(t, r, digits)?;
    let s = forms.compact;
    let w = work(digits);
    let e = eps.with_digits(w);
    let quartic = Polynomial::new((0..=4).map(|p| &num(p as i64 + 2, w) * &s.coeff(p + 2)).collect());
    let q: Polynomial<Rational> = s.map(|c| c.to_rational());
    let iso = isolate_real_roots(&q, None)?;
    let sf = q.square_free();
    let real_roots = iso
        .intervals
        .iter()
        .map(|(a, b)| refine_root(&sf, a, b, digits))
        .collect::<Result<Vec<_>>>()?;
    Ok(DerivativeDemo {
        quartic_at_eps: normalized_residual(&quartic, &e),
        sextic_derivative_at_eps: normalized_residual(&s.derivative(), &e),
        sextic_at_eps: normalized_residual(&s, &e),
        quartic,
        distinct_real_roots: iso.len(),
        real_roots,
    })
}
