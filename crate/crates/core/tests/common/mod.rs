//! Random instance generators and independent checks shared by the property suites.
#![allow(dead_code)]

use num_traits::Zero;
use overtop_core::asym::{derived_constants, solve_asymmetric, TriangleConfig};
use overtop_core::closed_form::quartic_closed_form_a;
use overtop_core::oracle::{cross_check, director_circle_check, vertex_a};
use overtop_core::poly::refine::real_roots;
use overtop_core::top::OverlapSpec;
use overtop_core::{rat, reduce_chain, BigReal, Polynomial, Rational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_int_poly(rng: &mut ChaCha8Rng, degree: usize, span: i64) -> Polynomial<Rational> {
    let mut c: Vec<Rational> = (0..degree).map(|_| rat(rng.gen_range(-span..=span), 1)).collect();
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-span..=span);
    }
    c.push(rat(lead, 1));
    Polynomial::new(c)
}

/// Three polynomials `(x − root)·q_i` with random integer cofactors of degree 1 to 5.
pub fn random_family(rng: &mut ChaCha8Rng) -> (Vec<OverlapSpec<Rational>>, Rational) {
    let root = rat(rng.gen_range(-9..=9), rng.gen_range(1..=6));
    let linear = Polynomial::from_roots(std::slice::from_ref(&root));
    let family = ["p", "q", "s"]
        .iter()
        .map(|name| {
            let d = rng.gen_range(1..=5);
            OverlapSpec::new(*name, &linear * &random_int_poly(rng, d, 9))
        })
        .collect();
    (family, root)
}

/// Every intermediate of the chain vanishes exactly at the planted root.
pub fn top_preserves_root(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (family, root) = random_family(rng);
    let trace = reduce_chain(&family).map_err(|e| format!("reduce_chain: {e}"))?;
    for step in &trace.steps {
        if !step.result.eval(&root).is_zero() {
            return Err(format!("step {} does not vanish at {root}", step.name));
        }
    }
    if !trace.terminal.poly.eval(&root).is_zero() {
        return Err(format!("terminal does not vanish at {root}"));
    }
    Ok(())
}

fn random_decimal(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> BigReal {
    let scale = 1_000_000i64;
    let n = rng.gen_range((lo * scale as f64) as i64..=(hi * scale as f64) as i64);
    BigReal::from_rational(&rat(n, scale), 60)
}

/// Relative error of `h² + k² = (a/2)²` for random legs.
pub fn altitude_identity(rng: &mut ChaCha8Rng) -> f64 {
    let b = random_decimal(rng, 0.05, 20.0);
    let c = random_decimal(rng, 0.05, 20.0);
    let t = TriangleConfig::from_legs(&b, &c, 40).unwrap();
    let r = &b.min(c.clone()) / &BigReal::from_i64(10);
    let k = derived_constants(&t, &r, 40).unwrap();
    let lhs = &k.h.square() + &k.k.square();
    let rhs = (&t.a / &BigReal::from_i64(2)).square();
    ((&lhs - &rhs).abs() / rhs).to_f64()
}

/// Random monic-free quartic with integer coefficients and no repeated roots.
pub fn random_squarefree_quartic(rng: &mut ChaCha8Rng) -> Polynomial<Rational> {
    loop {
        let f = random_int_poly(rng, 4, 20);
        if f.gcd(&f.derivative()).degree() == Some(0) {
            return f;
        }
    }
}

/// Largest distance between a Sturm-isolated, bisection-refined real root and the
/// nearest closed-form root, plus the largest closed-form residual.
pub fn closed_form_vs_refine(f: &Polynomial<Rational>, digits: u32) -> (f64, f64) {
    let c = f.coeffs();
    let lead = &c[4];
    let a: Vec<Rational> = c.iter().map(|x| x / lead).collect();
    let sol = quartic_closed_form_a(&a[3], &a[2], &a[1], &a[0], digits).unwrap();
    let refined = real_roots(f, digits).unwrap();
    let mut worst = 0.0f64;
    for x in &refined {
        let d = sol
            .roots
            .iter()
            .map(|z| {
                let dx = &z.re - x;
                (&dx.square() + &z.im.square()).sqrt().unwrap()
            })
            .fold(None, |m: Option<BigReal>, v| Some(m.map_or(v.clone(), |m| m.min(v))))
            .unwrap();
        worst = worst.max(d.to_f64());
    }
    let monic: Polynomial<Rational> = Polynomial::new(a);
    let res = overtop_core::closed_form::max_residual(&monic, &sol.roots, digits).to_f64();
    (worst, res)
}

/// Director circle residual at the orthogonal-tangent vertex for random `(α, β, m)`.
pub fn director_residual(rng: &mut ChaCha8Rng) -> f64 {
    let alpha = random_decimal(rng, 0.1, 10.0);
    let beta = random_decimal(rng, 0.01, 1.0) * alpha.clone();
    let m = random_decimal(rng, 0.01, 20.0);
    let (x, y) = vertex_a(&alpha, &beta, &m).unwrap();
    let scale = &alpha.square() + &beta.square();
    (director_circle_check(&alpha, &beta, &x, &y) / scale).to_f64()
}

/// Right triangle with random legs whose ratio stays in the range where the circles fit.
pub fn random_legs(rng: &mut ChaCha8Rng) -> (BigReal, BigReal) {
    let b = random_decimal(rng, 0.5, 3.0);
    let ratio = random_decimal(rng, 1.0, 2.6);
    let c = &b * &ratio;
    if rng.gen_bool(0.5) {
        (b, c)
    } else {
        (c, b)
    }
}

/// Solves a random triangle and returns the largest oracle residual.
pub fn oracle_residual(b: &BigReal, c: &BigReal, digits: u32) -> Result<f64, String> {
    let t = TriangleConfig::from_legs(b, c, digits).map_err(|e| e.to_string())?;
    let tol = BigReal::parse("1e-12", digits).unwrap();
    let rep = solve_asymmetric(&t, &tol, 200, digits).map_err(|e| e.to_string())?;
    let chk = cross_check(&rep, digits).map_err(|e| e.to_string())?;
    Ok(chk.max_residual().to_f64())
}
