use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use overtop_core::asym::{solve_asymmetric, SolveReport, TriangleConfig};
use overtop_core::closed_form::{max_residual, quartic_closed_form_a, solve_poly};
use overtop_core::oracle::cross_check;
use overtop_core::poly::{format_poly, parse_poly, parse_poly_file, NamedPoly};
use overtop_core::quintic::{analyze, rational_to_big};
use overtop_core::svg::render_figure;
use overtop_core::top::ReductionTrace;
use overtop_core::{reduce_chain, shared_root, solve_symmetric, BigReal, Complex, OverlapSpec, Rational};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "overtop",
    version,
    about = "Overlapped-polynomial reduction and the ellipse-in-triangle solvers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree reduction of a polynomial family sharing a root.
    #[command(subcommand)]
    Top(TopCommand),
    /// Closed-form roots of a polynomial of degree at most four.
    Solve(SolveArgs),
    /// Symmetric configuration.
    #[command(subcommand)]
    Sym(SymCommand),
    /// Asymmetric configuration.
    #[command(subcommand)]
    Asym(AsymCommand),
    /// Independent geometric cross-check of a solved configuration.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Bring-Jerrard quintic factor and its solvability search.
    #[command(subcommand)]
    Quintic(QuinticCommand),
    /// SVG figure of a solved configuration.
    #[command(subcommand)]
    Render(RenderCommand),
}

#[derive(Subcommand)]
enum TopCommand {
    /// Print the reduction trace.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Find the root every polynomial in the file shares.
    SharedRoot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lo: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        hi: Option<String>,
        #[arg(long, default_value_t = 40)]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Ferrari,
    #[value(name = "formulaA")]
    FormulaA,
    Both,
}

#[derive(Args)]
struct SolveArgs {
    /// Coefficients, constant term first.
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long, default_value_t = 40)]
    digits: u32,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum SymCommand {
    Solve {
        #[arg(long, default_value_t = 40)]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Clone)]
struct TriangleArgs {
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[arg(long)]
    c: String,
    #[arg(long, default_value = "1e-10")]
    tol: String,
    #[arg(long = "max-iter", default_value_t = 200)]
    max_iter: usize,
    #[arg(long, default_value_t = 40)]
    digits: u32,
}

#[derive(Subcommand)]
enum AsymCommand {
    Solve {
        #[command(flatten)]
        tri: TriangleArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    Check {
        #[command(flatten)]
        tri: TriangleArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum QuinticCommand {
    Analyze {
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        r: String,
        #[arg(long, default_value_t = 30)]
        height: u32,
        #[arg(long, default_value_t = 40)]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RenderCommand {
    Figure {
        #[command(flatten)]
        tri: TriangleArgs,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 800)]
        size: u32,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

type Outcome = std::result::Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn compute(e: impl std::fmt::Display) -> Failure {
    Failure::Compute(e.to_string())
}

fn check_digits(digits: u32) -> Outcome {
    if digits < 12 {
        return Err(usage(format!("--digits must be at least 12, got {digits}")));
    }
    Ok(())
}

fn parse_real(name: &str, text: &str, digits: u32) -> std::result::Result<BigReal, Failure> {
    BigReal::parse(text, digits + 20).map_err(|_| usage(format!("--{name}: cannot parse '{text}'")))
}

fn fmt(x: &BigReal, digits: u32) -> String {
    x.to_sig_string(digits as usize)
}

fn sci(x: &BigReal) -> String {
    if x.is_zero() {
        "0".into()
    } else {
        format!("{:.2e}", x.to_f64())
    }
}

fn fmt_c(z: &Complex, digits: u32) -> String {
    z.to_sig_string(digits as usize)
}

fn read_family(path: &PathBuf) -> std::result::Result<Vec<NamedPoly>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let polys = parse_poly_file(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    if polys.is_empty() {
        return Err(usage(format!("{} holds no polynomials", path.display())));
    }
    Ok(polys)
}

fn specs(polys: &[NamedPoly]) -> Vec<OverlapSpec<Rational>> {
    polys
        .iter()
        .map(|p| OverlapSpec::new(p.name.clone(), p.poly.clone()))
        .collect()
}

fn coeff_strings(p: &overtop_core::RationalPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn trace_json(tr: &ReductionTrace<Rational>) -> Value {
    let steps: Vec<Value> = tr
        .steps
        .iter()
        .map(|s| {
            json!({
                "operands": [s.operands.0, s.operands.1],
                "op": s.op.label(),
                "name": s.name,
                "degree": s.degree,
                "coeffs": coeff_strings(&s.result),
            })
        })
        .collect();
    json!({
        "steps": steps,
        "terminal": {
            "name": tr.terminal.name,
            "degree": tr.terminal.poly.degree(),
            "coeffs": coeff_strings(&tr.terminal.poly),
        },
        "null_detected": tr.null_detected,
    })
}

fn top_reduce(input: &PathBuf, as_json: bool) -> Outcome {
    let polys = read_family(input)?;
    let tr = reduce_chain(&specs(&polys)).map_err(compute)?;
    if as_json {
        println!("{}", trace_json(&tr));
        return Ok(());
    }
    for s in &tr.steps {
        let deg = s.degree.map_or("-".to_string(), |d| d.to_string());
        let line = format_poly(&NamedPoly::new(s.name.clone(), s.result.clone()));
        println!("[{}] {:<4} deg {:>2}  {}", s.level, s.op.label(), deg, line);
    }
    println!(
        "terminal {}",
        format_poly(&NamedPoly::new(tr.terminal.name.clone(), tr.terminal.poly.clone()))
    );
    println!(
        "null polynomial detected: {}",
        if tr.null_detected { "yes" } else { "no" }
    );
    Ok(())
}

fn top_shared_root(input: &PathBuf, lo: Option<&str>, hi: Option<&str>, digits: u32, as_json: bool) -> Outcome {
    check_digits(digits)?;
    let polys = read_family(input)?;
    let bounds = match (lo, hi) {
        (Some(l), Some(h)) => Some((parse_real("lo", l, digits)?, parse_real("hi", h, digits)?)),
        (None, None) => None,
        _ => return Err(usage("--lo and --hi must be given together")),
    };
    let filter = bounds.as_ref().map(|(l, h)| (l, h));
    let sr = shared_root(&specs(&polys), filter, digits).map_err(compute)?;
    let value = match &sr.exact {
        Some(q) => q.to_string(),
        None => fmt(&sr.value, digits),
    };
    let kind = if sr.exact.is_some() { "exact" } else { "numeric" };
    let chosen = sr.candidates.iter().find(|c| c.value == sr.value);
    if as_json {
        let residuals: Vec<Value> = polys
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let r = chosen.map(|c| sci(&c.residuals[i])).unwrap_or_default();
                json!({ "name": p.name, "residual": r })
            })
            .collect();
        let out = json!({
            "x": value,
            "exact": sr.exact.is_some(),
            "decimal": fmt(&sr.value, digits),
            "terminal_degree": sr.trace.terminal.poly.degree(),
            "terminal_roots": sr.terminal_roots.iter().map(|z| fmt_c(z, digits)).collect::<Vec<_>>(),
            "certificate": residuals,
        });
        println!("{out}");
        return Ok(());
    }
    println!("x = {value} ({kind})");
    if sr.exact.is_some() {
        println!("  = {}", fmt(&sr.value, digits));
    }
    if let Some(c) = chosen {
        for (p, r) in polys.iter().zip(&c.residuals) {
            println!("  {}({value}) -> {}", p.name, sci(r));
        }
    }
    let others: Vec<String> = sr.terminal_roots.iter().map(|z| fmt_c(z, digits)).collect();
    println!("terminal roots: {}", others.join(", "));
    Ok(())
}

fn solve(args: &SolveArgs) -> Outcome {
    check_digits(args.digits)?;
    let p = parse_poly(&format!("p: {}", args.poly))
        .map_err(|e| usage(format!("--poly: {e}")))?
        .poly;
    let deg = p.degree().ok_or_else(|| usage("--poly is the zero polynomial"))?;
    if deg == 0 || deg > 4 {
        return Err(usage(format!("--poly must have degree 1 to 4, got {deg}")));
    }
    let d = args.digits;
    let mut methods: Vec<(&str, Vec<Complex>)> = Vec::new();
    if args.method != Method::FormulaA {
        methods.push(("ferrari", solve_poly(&p, d).map_err(compute)?));
    }
    if args.method != Method::Ferrari {
        if deg != 4 {
            return Err(usage("formulaA needs a quartic"));
        }
        let m = p.monic().map_err(compute)?;
        let c = m.coeffs();
        let sol = quartic_closed_form_a(&c[3], &c[2], &c[1], &c[0], d).map_err(compute)?;
        methods.push(("formulaA", sol.roots.to_vec()));
    }
    if args.json {
        let mut obj = serde_json::Map::new();
        obj.insert("coeffs".into(), json!(coeff_strings(&p)));
        obj.insert("digits".into(), json!(d));
        for (name, roots) in &methods {
            obj.insert(
                (*name).into(),
                json!({
                    "roots": roots.iter().map(|z| fmt_c(z, d)).collect::<Vec<_>>(),
                    "max_residual": sci(&max_residual(&p, roots, d)),
                }),
            );
        }
        println!("{}", Value::Object(obj));
        return Ok(());
    }
    for (name, roots) in &methods {
        println!("{name}:");
        for z in roots {
            println!("  {}", fmt_c(z, d));
        }
        println!("  max residual {}", sci(&max_residual(&p, roots, d)));
    }
    Ok(())
}

fn sym_solve(digits: u32, as_json: bool) -> Outcome {
    check_digits(digits)?;
    let sol = solve_symmetric(digits).map_err(compute)?;
    let k = &sol.constants;
    let fa = &sol.formula_a.constants;
    if as_json {
        let out = json!({
            "epsilon": fmt(&sol.epsilon, digits),
            "b_over_r": fmt(&sol.b_over_r, digits),
            "digits": digits,
            "constants": {
                "C": k.c.to_string(),
                "Delta": k.discriminant.to_string(),
                "zeta": fmt(&k.zeta, digits),
                "B": fa.b.to_string(),
                "F": fmt_c(&fa.f, digits),
            },
        });
        println!("{out}");
        return Ok(());
    }
    println!("epsilon = {}", fmt(&sol.epsilon, digits));
    println!("b/r = {}", fmt(&sol.b_over_r, digits));
    println!("beta/alpha = {}", fmt(&sol.beta_over_alpha, digits));
    println!("inadmissible real root = {}", fmt(&sol.inadmissible_root, digits));
    println!(
        "complex pair = {}, {}",
        fmt_c(&sol.complex_pair.0, digits),
        fmt_c(&sol.complex_pair.1, digits)
    );
    println!("C = {}", k.c);
    println!("D = {}", k.d);
    println!("E = {}", k.e);
    println!("gamma = {}", k.gamma);
    println!("delta = {}", k.delta);
    println!("Delta = {}", k.discriminant);
    println!("zeta = {}", fmt(&k.zeta, digits));
    println!("A = {}", fa.a);
    println!("B = {}", fa.b);
    println!("F = {}", fmt_c(&fa.f, digits));
    println!("formulas agree: {}", if sol.formulas_agree() { "yes" } else { "no" });
    Ok(())
}

fn run_solver(tri: &TriangleArgs) -> std::result::Result<SolveReport, Failure> {
    check_digits(tri.digits)?;
    if tri.max_iter < 1 {
        return Err(usage("--max-iter must be at least 1"));
    }
    let tol = parse_real("tol", &tri.tol, tri.digits)?;
    if !tol.is_positive() {
        return Err(usage("--tol must be positive"));
    }
    let t = TriangleConfig::parse(&tri.a, &tri.b, &tri.c, tri.digits).map_err(|e| usage(e.to_string()))?;
    solve_asymmetric(&t, &tol, tri.max_iter, tri.digits).map_err(compute)
}

fn report_rows(rep: &SolveReport) -> Vec<(&'static str, &BigReal)> {
    let e = &rep.ellipse;
    vec![
        ("epsilon", &rep.eps),
        ("r", &rep.r),
        ("alpha", &e.alpha),
        ("beta", &e.beta),
        ("x0", &e.x0),
        ("y0", &e.y0),
        ("x1", &rep.x1),
        ("y1", &rep.y1),
        ("xT", &rep.x_t),
        ("yT", &rep.y_t),
    ]
}

const JSON_RESIDUALS: [&str; 5] = ["sextic", "ellipse", "circle", "distance", "slope"];

fn asym_solve(tri: &TriangleArgs, as_json: bool) -> Outcome {
    let rep = run_solver(tri)?;
    let d = tri.digits;
    if as_json {
        let mut obj = serde_json::Map::new();
        let t = &rep.triangle;
        obj.insert("a".into(), json!(fmt(&t.a, d)));
        obj.insert("b".into(), json!(fmt(&t.b, d)));
        obj.insert("c".into(), json!(fmt(&t.c, d)));
        for (k, v) in report_rows(&rep) {
            obj.insert(k.into(), json!(fmt(v, d)));
        }
        obj.insert("iterations".into(), json!(rep.iterations));
        let res: serde_json::Map<String, Value> = JSON_RESIDUALS
            .iter()
            .map(|k| ((*k).to_string(), json!(sci(&rep.residuals[k]))))
            .collect();
        obj.insert("residuals".into(), Value::Object(res));
        println!("{}", Value::Object(obj));
        return Ok(());
    }
    for (k, v) in report_rows(&rep) {
        println!("{k:<8} {}", fmt(v, d));
    }
    println!(
        "iterations {}{}",
        rep.iterations,
        if rep.damped { " (damped)" } else { "" }
    );
    for (k, v) in &rep.residuals {
        println!("residual {k:<9} {}", sci(v));
    }
    Ok(())
}

const ORACLE_TOL: &str = "1e-8";

fn oracle_check(tri: &TriangleArgs, as_json: bool) -> Outcome {
    let rep = run_solver(tri)?;
    let chk = cross_check(&rep, tri.digits).map_err(compute)?;
    let tol = BigReal::parse(ORACLE_TOL, tri.digits).expect("constant");
    let passed = chk.passed(&tol);
    if as_json {
        let checks: serde_json::Map<String, Value> = chk
            .checks
            .iter()
            .map(|c| (c.name.to_string(), json!(sci(&c.residual))))
            .collect();
        println!(
            "{}",
            json!({ "passed": passed, "tolerance": ORACLE_TOL, "checks": checks })
        );
    } else {
        for c in &chk.checks {
            let tag = if c.residual <= tol { "ok" } else { "FAIL" };
            println!("{tag:<4} {:<22} {}", c.name, sci(&c.residual));
        }
        println!(
            "{} (tolerance {ORACLE_TOL})",
            if passed {
                "all checks passed"
            } else {
                "oracle disagreement"
            }
        );
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Compute(format!(
            "residual {} above {ORACLE_TOL}",
            sci(&chk.max_residual())
        )))
    }
}

fn quintic_analyze(b: &str, c: &str, r: &str, height: u32, digits: u32, as_json: bool) -> Outcome {
    check_digits(digits)?;
    let (b, c, r) = (
        parse_real("b", b, digits)?,
        parse_real("c", c, digits)?,
        parse_real("r", r, digits)?,
    );
    let an = analyze(&b, &c, &r, height, digits).map_err(|e| match e {
        overtop_core::Error::Range(m) => usage(m),
        other => compute(other),
    })?;
    let q = &an.quintic;
    let witness = an.search.witness.as_ref();
    if as_json {
        let out = json!({
            "a": fmt(&q.a_lin, digits),
            "b": fmt(&q.b_const, digits),
            "target": an.target.to_string(),
            "height": an.height,
            "pairs_examined": an.search.pairs_examined,
            "exhausted": an.search.exhausted(),
            "witness": witness.map(|w| json!({ "epsilon": w.epsilon_sign, "p": w.p.to_string(), "q": w.q.to_string() })),
            "real_roots": an.real_roots.iter().map(|x| fmt(x, digits)).collect::<Vec<_>>(),
            "radical_roots": an.roots.as_ref().map(|s| s.roots.iter().map(|z| fmt_c(z, digits)).collect::<Vec<_>>()),
        });
        println!("{out}");
        return Ok(());
    }
    println!(
        "quintic: z^5 + ({}) z + ({})",
        fmt(&q.a_lin, digits),
        fmt(&q.b_const, digits)
    );
    println!(
        "rational target: {} ~ {}",
        an.target,
        fmt(&rational_to_big(&an.target, digits), 12)
    );
    match witness {
        Some(w) => println!("witness: epsilon = {}, p = {}, q = {}", w.epsilon_sign, w.p, w.q),
        None => println!(
            "no witness up to height {} ({} pairs examined)",
            an.height, an.search.pairs_examined
        ),
    }
    for x in &an.real_roots {
        println!("real root {}", fmt(x, digits));
    }
    if let Some(s) = &an.roots {
        for z in &s.roots {
            println!("radical root {}", fmt_c(z, digits));
        }
    }
    Ok(())
}

fn render(tri: &TriangleArgs, out: &PathBuf, size: u32) -> Outcome {
    let rep = run_solver(tri)?;
    let svg = render_figure(&rep, size).map_err(compute)?;
    fs::write(out, svg).map_err(|e| compute(format!("cannot write {}: {e}", out.display())))
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Top(TopCommand::Reduce { input, json }) => top_reduce(&input, json),
        Command::Top(TopCommand::SharedRoot {
            input,
            lo,
            hi,
            digits,
            json,
        }) => top_shared_root(&input, lo.as_deref(), hi.as_deref(), digits, json),
        Command::Solve(args) => solve(&args),
        Command::Sym(SymCommand::Solve { digits, json }) => sym_solve(digits, json),
        Command::Asym(AsymCommand::Solve { tri, json }) => asym_solve(&tri, json),
        Command::Oracle(OracleCommand::Check { tri, json }) => oracle_check(&tri, json),
        Command::Quintic(QuinticCommand::Analyze {
            b,
            c,
            r,
            height,
            digits,
            json,
        }) => quintic_analyze(&b, &c, &r, height, digits, json),
        Command::Render(RenderCommand::Figure { tri, out, size }) => render(&tri, &out, size),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
