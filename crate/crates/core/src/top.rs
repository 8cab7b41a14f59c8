//! Overlapped-polynomial reduction: monic transforms, the equal-degree difference,
//! its derivative form for multiple roots, the general degree-equalizing operator,
//! and chains that collapse a family sharing a root to a solvable degree.

use crate::closed_form::{solve_poly, GUARD_DIGITS};
use crate::error::{Error, Result};
use crate::numeric::{rationalize, BigReal, Complex, Real};
use crate::poly::Polynomial;

/// A polynomial with a name and a claimed multiplicity for the shared root.
#[derive(Clone, Debug, PartialEq)]
pub struct OverlapSpec<T> {
    pub name: String,
    pub poly: Polynomial<T>,
    pub multiplicity: usize,
}

impl<T: Real> OverlapSpec<T> {
    pub fn new(name: impl Into<String>, poly: Polynomial<T>) -> Self {
        OverlapSpec {
            name: name.into(),
            poly,
            multiplicity: 1,
        }
    }

    pub fn with_multiplicity(name: impl Into<String>, poly: Polynomial<T>, multiplicity: usize) -> Result<Self> {
        let deg = poly.degree().ok_or(Error::ZeroPolynomial)?;
        if multiplicity == 0 || multiplicity > deg {
            return Err(Error::Domain(format!("multiplicity {multiplicity} not in 1..={deg}")));
        }
        Ok(OverlapSpec {
            name: name.into(),
            poly,
            multiplicity,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepOp {
    /// Equal degrees, simple root.
    Lop1,
    /// Equal degrees, derivatives of order `μ − 1` first.
    Lop2,
    /// Degrees differ; the lower one is multiplied by `x^δ`.
    Top,
    Derivative,
}

impl StepOp {
    pub fn label(self) -> &'static str {
        match self {
            StepOp::Lop1 => "LOP1",
            StepOp::Lop2 => "LOP2",
            StepOp::Top => "TOP",
            StepOp::Derivative => "derivative",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionStep<T> {
    pub level: usize,
    pub operands: (String, String),
    pub op: StepOp,
    pub name: String,
    pub result: Polynomial<T>,
    /// `None` when the difference vanished identically.
    pub degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionTrace<T> {
    pub steps: Vec<ReductionStep<T>>,
    pub terminal: OverlapSpec<T>,
    pub null_detected: bool,
}

/// `f / lead(f)`.
pub fn monic_transform<T: Real>(f: &Polynomial<T>) -> Result<Polynomial<T>> {
    f.monic()
}

/// `monic(S) − monic(T)` for equal degrees.
pub fn lop1_delta<T: Real>(s: &Polynomial<T>, t: &Polynomial<T>) -> Result<Polynomial<T>> {
    let (ds, dt) = (
        s.degree().ok_or(Error::ZeroPolynomial)?,
        t.degree().ok_or(Error::ZeroPolynomial)?,
    );
    if ds != dt {
        return Err(Error::DegreeMismatch(ds, dt));
    }
    Ok(&s.monic()? - &t.monic()?)
}

/// `monic(S^(μ−1)) − monic((x^δ·T)^(μ−1))` with `δ = deg S − deg T` and `μ` the smaller claim.
pub fn top_delta<T: Real>(s: &OverlapSpec<T>, t: &OverlapSpec<T>) -> Result<Polynomial<T>> {
    let ds = s.poly.degree().ok_or(Error::ZeroPolynomial)?;
    let dt = t.poly.degree().ok_or(Error::ZeroPolynomial)?;
    if ds < dt {
        return Err(Error::DegreeMismatch(ds, dt));
    }
    let mu = s.multiplicity.min(t.multiplicity).max(1);
    let sd = s.poly.nth_derivative(mu - 1);
    let td = t.poly.shift_up(ds - dt).nth_derivative(mu - 1);
    Ok(&sd.monic()? - &td.monic()?)
}

fn op_for(delta: usize, mu: usize) -> StepOp {
    match (delta, mu) {
        (0, 1) => StepOp::Lop1,
        (0, _) => StepOp::Lop2,
        _ => StepOp::Top,
    }
}

fn wrap(name: &str) -> String {
    if name.contains('•') {
        format!("({name})")
    } else {
        name.to_string()
    }
}

fn vanishes<T: Real>(p: &Polynomial<T>) -> bool {
    p.is_zero() || p.is_negligible(&T::one())
}

fn sort_specs<T: Real>(v: &mut [OverlapSpec<T>]) {
    v.sort_by(|a, b| (a.poly.degree(), &a.name).cmp(&(b.poly.degree(), &b.name)));
}

fn check_common_root<T: Real>(level: &[OverlapSpec<T>]) -> Result<()> {
    if !T::EXACT || level.len() < 2 {
        return Ok(());
    }
    let g = level.iter().skip(1).fold(level[0].poly.clone(), |g, s| g.gcd(&s.poly));
    if g.degree() == Some(0) {
        let names: Vec<&str> = level.iter().map(|s| s.name.as_str()).collect();
        return Err(Error::NoCommonRoot(format!(
            "gcd of {{{}}} is constant",
            names.join(", ")
        )));
    }
    Ok(())
}

/// Repeatedly combines the family until a plateau of vanishing differences or degree 1.
///
/// Each level is sorted by `(degree, name)`. When degrees differ, every polynomial above
/// the minimum degree is combined with its sorted predecessor and the minimum-degree ones
/// are carried over. When all degrees agree, every pair `(i, j)` with `i < j` is combined.
/// Vanishing differences are recorded but never reused. The working set is capped at
/// `max(3, n)` polynomials.
pub fn reduce_chain<T: Real>(polys: &[OverlapSpec<T>]) -> Result<ReductionTrace<T>> {
    if polys.is_empty() {
        return Err(Error::Domain("reduce_chain needs at least one polynomial".into()));
    }
    for p in polys {
        if p.poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    let cap = polys.len().max(3);
    let mut level: Vec<OverlapSpec<T>> = polys.to_vec();
    sort_specs(&mut level);
    let mut steps = Vec::new();
    let mut null_detected = false;
    let mut depth = 0;
    loop {
        check_common_root(&level)?;
        let min_deg = level[0].poly.degree().expect("nonzero");
        if min_deg == 0 {
            return Err(Error::NoCommonRoot(format!(
                "'{}' is a nonzero constant",
                level[0].name
            )));
        }
        if level.len() < 2 || min_deg <= 1 {
            break;
        }
        depth += 1;
        let all_equal = level.iter().all(|s| s.poly.degree() == Some(min_deg));
        let mut pairs = Vec::new();
        let mut next = Vec::new();
        if all_equal {
            for i in 0..level.len() {
                for j in i + 1..level.len() {
                    pairs.push((i, j));
                }
            }
        } else {
            for (i, s) in level.iter().enumerate() {
                if s.poly.degree() == Some(min_deg) {
                    next.push(s.clone());
                } else {
                    pairs.push((i, i - 1));
                }
            }
        }
        let mut produced = 0;
        for (i, j) in pairs {
            let (a, b) = (&level[i], &level[j]);
            let delta = top_delta(a, b)?;
            let mu = a.multiplicity.min(b.multiplicity).max(1);
            let shift = a.poly.degree().unwrap_or(0) - b.poly.degree().unwrap_or(0);
            let name = format!("{}•{}", wrap(&a.name), wrap(&b.name));
            let zero = vanishes(&delta);
            let result = if zero { Polynomial::zero() } else { delta };
            steps.push(ReductionStep {
                level: depth,
                operands: (a.name.clone(), b.name.clone()),
                op: op_for(shift, mu),
                name: name.clone(),
                degree: result.degree(),
                result: result.clone(),
            });
            if zero {
                null_detected = true;
            } else {
                produced += 1;
                next.push(OverlapSpec {
                    name,
                    poly: result,
                    multiplicity: 1,
                });
            }
        }
        if all_equal && produced == 0 {
            break;
        }
        sort_specs(&mut next);
        next.truncate(cap);
        level = next;
    }
    Ok(ReductionTrace {
        steps,
        terminal: level[0].clone(),
        null_detected,
    })
}

/// One candidate root of the terminal polynomial with its residuals on every input.
#[derive(Clone, Debug)]
pub struct Candidate<T> {
    pub value: BigReal,
    /// Rational reconstruction that annihilates every input exactly (exact domains only).
    pub exact: Option<T>,
    /// `|p(x)| / max|coeff(p)|` per input, in input order.
    pub residuals: Vec<BigReal>,
    pub max_residual: BigReal,
    pub in_filter: bool,
}

#[derive(Clone, Debug)]
pub struct SharedRoot<T> {
    pub value: BigReal,
    pub exact: Option<T>,
    pub candidates: Vec<Candidate<T>>,
    /// All roots of the terminal, including complex ones.
    pub terminal_roots: Vec<Complex>,
    pub trace: ReductionTrace<T>,
}

/// Solves the reduced terminal in closed form and picks the candidate every input shares.
///
/// Exact domains prefer candidates whose rational reconstruction is an exact root of
/// every input; otherwise candidates qualify when their largest normalized residual is
/// within `10^(6 − digits)`. Two qualifying candidates are ambiguous.
pub fn shared_root<T: Real>(
    polys: &[OverlapSpec<T>],
    filter: Option<(&BigReal, &BigReal)>,
    digits: u32,
) -> Result<SharedRoot<T>> {
    let trace = reduce_chain(polys)?;
    let deg = trace.terminal.poly.degree().unwrap_or(0);
    if deg > 4 {
        return Err(Error::TerminalTooLarge(deg));
    }
    let work = digits + GUARD_DIGITS;
    let roots = solve_poly(&trace.terminal.poly, digits)?;
    let imag_tol = BigReal::ten_pow(-(digits as i64) / 2, work);
    let rat_tol = BigReal::ten_pow(4 - digits as i64, work);
    let tol = BigReal::ten_pow(6 - digits as i64, work);
    let scaled: Vec<(Polynomial<BigReal>, BigReal)> = polys
        .iter()
        .map(|s| {
            let p = s.poly.map(|c| c.to_big_real(work));
            let m = p.max_abs_coeff();
            (p, m)
        })
        .collect();
    let mut candidates: Vec<Candidate<T>> = Vec::new();
    for z in &roots {
        if !z.is_real_within(&imag_tol) {
            continue;
        }
        let x = z.re.clone();
        if candidates
            .iter()
            .any(|c| (&c.value - &x).abs() <= &rat_tol * &x.abs().max(BigReal::from_i64(1)))
        {
            continue;
        }
        let exact = if T::EXACT {
            let q = rationalize(&x, &(&rat_tol * &x.abs().max(BigReal::from_i64(1))));
            let t = T::from_rational(&q, digits);
            polys.iter().all(|s| s.poly.eval(&t).is_zero()).then_some(t)
        } else {
            None
        };
        let value = match &exact {
            Some(t) => t.to_big_real(work),
            None => x,
        };
        let residuals: Vec<BigReal> = scaled.iter().map(|(p, m)| &p.eval(&value).abs() / m).collect();
        let max_residual = residuals.iter().cloned().fold(BigReal::from_i64(0), BigReal::max);
        let in_filter = filter.is_none_or(|(lo, hi)| &value > lo && &value < hi);
        candidates.push(Candidate {
            value,
            exact,
            residuals,
            max_residual,
            in_filter,
        });
    }
    let pick = |pred: &dyn Fn(&Candidate<T>) -> bool| -> Vec<usize> {
        candidates
            .iter()
            .enumerate()
            .filter(|(_, c)| c.in_filter && pred(c))
            .map(|(i, _)| i)
            .collect()
    };
    let mut chosen = pick(&|c| c.exact.is_some());
    if chosen.is_empty() {
        chosen = pick(&|c| c.max_residual <= tol);
    }
    match chosen.len() {
        0 => Err(Error::NoSharedRoot),
        1 => {
            let c = &candidates[chosen[0]];
            Ok(SharedRoot {
                value: c.value.clone(),
                exact: c.exact.clone(),
                candidates: candidates.clone(),
                terminal_roots: roots,
                trace,
            })
        }
        n => Err(Error::AmbiguousRoot(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, Rational};

    fn ip(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&n| rat(n, 1)).collect())
    }

    fn qp(c: &[(i64, i64)]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn family() -> Vec<OverlapSpec<Rational>> {
        vec![
            OverlapSpec::new("u", ip(&[2, -14, 33, -38, 40, -24, 9])),
            OverlapSpec::new("v", ip(&[-21, 67, 10, -70, 11, 3])),
            OverlapSpec::new("w", ip(&[1, -4, 0, 14, -17, 6])),
        ]
    }

    #[test]
    fn monic_examples() {
        let m = monic_transform(&family()[0].poly).unwrap();
        assert_eq!(m, qp(&[(2, 9), (-14, 9), (11, 3), (-38, 9), (40, 9), (-8, 3), (1, 1)]));
        assert_eq!(monic_transform(&m).unwrap(), m);
        assert_eq!(monic_transform(&ip(&[7])).unwrap(), ip(&[1]));
    }

    #[test]
    fn lop1_examples() {
        let s = Polynomial::from_roots(&[rat(1, 1), rat(2, 1)]);
        let t = Polynomial::from_roots(&[rat(1, 1), rat(3, 1)]);
        assert_eq!(lop1_delta(&s, &t).unwrap(), ip(&[-1, 1]));
        let f = family();
        let vw = lop1_delta(&f[1].poly, &f[2].poly).unwrap();
        assert_eq!(vw, qp(&[(-43, 6), (23, 1), (10, 3), (-77, 3), (13, 2)]));
        assert!(lop1_delta(&s, &s).unwrap().is_zero());
        assert_eq!(lop1_delta(&f[0].poly, &f[1].poly), Err(Error::DegreeMismatch(6, 5)));
    }

    #[test]
    fn top_examples() {
        let f = family();
        let uw = top_delta(&f[0], &f[2]).unwrap();
        assert_eq!(uw, qp(&[(2, 9), (-31, 18), (13, 3), (-38, 9), (19, 9), (1, 6)]));

        let s = Polynomial::from_roots(&[rat(2, 1), rat(2, 1), rat(-1, 1)]);
        let t = Polynomial::from_roots(&[rat(2, 1), rat(2, 1), rat(5, 1)]);
        let d = top_delta(
            &OverlapSpec::with_multiplicity("s", s.clone(), 2).unwrap(),
            &OverlapSpec::with_multiplicity("t", t, 2).unwrap(),
        )
        .unwrap();
        assert_eq!(d.degree(), Some(1));
        assert_eq!(d.eval(&rat(2, 1)), rat(0, 1));

        let scaled = OverlapSpec::new("k", s.scale(&rat(-7, 3)));
        assert!(top_delta(&OverlapSpec::new("s", s), &scaled).unwrap().is_zero());
    }

    #[test]
    fn chain_reproduces_worked_example() {
        let tr = reduce_chain(&family()).unwrap();
        let by_name = |n: &str| tr.steps.iter().find(|s| s.name == n).unwrap().result.clone();
        assert_eq!(
            by_name("u•w"),
            qp(&[(2, 9), (-31, 18), (13, 3), (-38, 9), (19, 9), (1, 6)])
        );
        assert_eq!(by_name("(u•w)•v"), qp(&[(25, 3), (-98, 3), (68, 3), (-2, 1), (9, 1)]));
        assert_eq!(by_name("(u•w)•w"), qp(&[(7, 6), (-29, 3), (26, 1), (-83, 3), (31, 2)]));
        assert_eq!(by_name("v•w"), qp(&[(-43, 6), (23, 1), (10, 3), (-77, 3), (13, 2)]));
        let c28 = qp(&[(712, 837), (-2516, 837), (704, 837), (436, 279)]);
        let c29 = qp(&[(712, 351), (-2516, 351), (704, 351), (436, 117)]);
        let c30 = qp(&[(1424, 1209), (-5032, 1209), (1408, 1209), (872, 403)]);
        assert_eq!(by_name("((u•w)•v)•((u•w)•w)"), c28);
        assert_eq!(by_name("((u•w)•v)•(v•w)"), c29);
        assert_eq!(by_name("((u•w)•w)•(v•w)"), c30);
        assert!(tr.null_detected);
        assert_eq!(tr.terminal.poly, c28);
        assert_eq!(tr.steps.iter().find(|s| s.name == "u•w").unwrap().op, StepOp::Top);
        assert_eq!(tr.steps.iter().find(|s| s.name == "v•w").unwrap().op, StepOp::Lop1);
    }

    #[test]
    fn shared_root_is_one_third() {
        let sr = shared_root(&family(), None, 40).unwrap();
        assert_eq!(sr.exact, Some(rat(1, 3)));
        let others: Vec<f64> = sr
            .candidates
            .iter()
            .filter(|c| c.exact.is_none())
            .map(|c| c.value.to_f64())
            .collect();
        assert_eq!(others.len(), 2);
        let s = 86633f64.sqrt();
        for want in [(s - 95.0) / 218.0, (-s - 95.0) / 218.0] {
            assert!(others.iter().any(|x| (x - want).abs() < 1e-12));
        }
    }

    #[test]
    fn cubic_alone_with_filter() {
        let c = OverlapSpec::new("c", qp(&[(712, 837), (-2516, 837), (704, 837), (436, 279)]));
        let lo = BigReal::from_i64(0);
        let hi = BigReal::from_i64(1);
        let sr = shared_root(&[c], Some((&lo, &hi)), 30).unwrap();
        assert_eq!(sr.candidates.len(), 3);
        assert_eq!(sr.exact, Some(rat(1, 3)));
    }

    #[test]
    fn root_zero_and_identical_inputs() {
        let fam = vec![
            OverlapSpec::new("a", Polynomial::from_roots(&[rat(0, 1), rat(3, 1), rat(-5, 2)])),
            OverlapSpec::new("b", Polynomial::from_roots(&[rat(0, 1), rat(7, 1)])),
        ];
        assert_eq!(shared_root(&fam, None, 30).unwrap().exact, Some(rat(0, 1)));

        let f = OverlapSpec::new("f", ip(&[1, -3, 0, 2]));
        let tr = reduce_chain(&[f.clone(), f.clone()]).unwrap();
        assert!(tr.null_detected);
        assert_eq!(tr.terminal.poly, f.poly);
    }

    #[test]
    fn no_common_root_diagnostic() {
        let fam = vec![OverlapSpec::new("a", ip(&[-1, 1])), OverlapSpec::new("b", ip(&[-2, 1]))];
        assert!(matches!(reduce_chain(&fam), Err(Error::NoCommonRoot(_))));
    }

    #[test]
    fn synthetic_family_shares_one_third() {
        let r = Polynomial::from_roots(&[rat(1, 3)]);
        let fam = vec![
            OverlapSpec::new("p", &r * &ip(&[3, -1, 4, 1, -5, 9])),
            OverlapSpec::new("q", &r * &ip(&[2, 6, -5, 3, 5])),
            OverlapSpec::new("s", &r * &ip(&[-8, 9, 7, 9, 3, 2])),
        ];
        let tr = reduce_chain(&fam).unwrap();
        assert!(tr.terminal.poly.degree().unwrap() <= 4);
        assert_eq!(tr.terminal.poly.eval(&rat(1, 3)), rat(0, 1));
        assert_eq!(shared_root(&fam, None, 30).unwrap().exact, Some(rat(1, 3)));
    }

    #[test]
    fn float_chain() {
        let fam: Vec<OverlapSpec<BigReal>> = family()
            .iter()
            .map(|s| OverlapSpec::new(s.name.clone(), s.poly.map(|c| BigReal::from_rational(c, 50))))
            .collect();
        let sr = shared_root(&fam, None, 50).unwrap();
        assert!((sr.value.to_f64() - 1.0 / 3.0).abs() < 1e-30);
    }
}
