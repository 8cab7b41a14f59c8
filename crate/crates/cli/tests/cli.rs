use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const REFERENCE: [&str; 6] = ["--a", "2.8939431", "--b", "1.0591663", "--c", "2.6931530"];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_overtop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn worked_file() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data/worked.poly")
        .display()
        .to_string()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert_eq!(text.trim().lines().count(), 1, "one JSON object per run");
    serde_json::from_str(&text).unwrap()
}

fn keys(v: &Value) -> Vec<String> {
    let mut k: Vec<String> = v.as_object().unwrap().keys().cloned().collect();
    k.sort();
    k
}

fn num(v: &Value) -> f64 {
    v.as_str().unwrap().parse().unwrap()
}

#[test]
fn shared_root_is_exact() {
    let o = run(&["top", "shared-root", "--in", &worked_file()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("x = 1/3 (exact)\n"));
}

#[test]
fn shared_root_rejects_a_half_open_filter() {
    let o = run(&["top", "shared-root", "--in", &worked_file(), "--lo", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reduce_trace_schema() {
    let v = json(&["top", "reduce", "--in", &worked_file(), "--json"]);
    assert_eq!(keys(&v), ["null_detected", "steps", "terminal"]);
    assert_eq!(v["null_detected"], Value::Bool(true));
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps[0]["op"], "TOP");
    assert_eq!(steps[0]["coeffs"][5], "1/6");
    for s in steps {
        assert_eq!(s["operands"].as_array().unwrap().len(), 2);
        assert!(["TOP", "LOP1", "LOP2", "derivative"].contains(&s["op"].as_str().unwrap()));
        assert!(s["degree"].is_u64() || s["degree"].is_null());
        assert!(s["coeffs"].is_array());
    }
    assert_eq!(v["terminal"]["coeffs"][3], "436/279");
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = run(&["top", "reduce", "--in", "/nonexistent/family.poly"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn quartic_methods_agree() {
    let v = json(&[
        "solve",
        "--poly",
        "-1 0 0 0 1",
        "--digits",
        "20",
        "--method",
        "both",
        "--json",
    ]);
    let mut a: Vec<String> = v["ferrari"]["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    let mut b: Vec<String> = v["formulaA"]["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    a.sort();
    b.sort();
    assert_eq!(a, b);
    assert_eq!(a.len(), 4);
}

#[test]
fn formula_a_needs_a_quartic() {
    let o = run(&["solve", "--poly", "1 2 1", "--method", "formulaA"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["solve", "--poly", "-2 0 1", "--method", "ferrari", "--digits", "15"]);
    assert!(stdout(&o).contains("1.41421356237310"));
}

#[test]
fn symmetric_text_and_json() {
    let o = run(&["sym", "solve", "--digits", "12"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("epsilon = 0.947662041"));
    assert!(text.contains("b/r = 6.39885049083"));
    let v = json(&["sym", "solve", "--digits", "12", "--json"]);
    assert_eq!(keys(&v), ["b_over_r", "constants", "digits", "epsilon"]);
    assert_eq!(keys(&v["constants"]), ["B", "C", "Delta", "F", "zeta"]);
    assert_eq!(v["b_over_r"], "6.39885049083");
    assert_eq!(v["digits"], 12);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["sym", "solve", "--digits", "5"]).status.code(), Some(2));
    assert_eq!(run(&["sym", "solve", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&["asym", "solve", "--a", "1", "--b", "1", "--c", "1"])
            .status
            .code(),
        Some(2)
    );
    let mut args = vec!["asym", "solve", "--tol", "0"];
    args.extend(REFERENCE);
    assert_eq!(run(&args).status.code(), Some(2));
    let mut args = vec!["asym", "solve", "--max-iter", "0"];
    args.extend(REFERENCE);
    assert_eq!(run(&args).status.code(), Some(2));
    assert_eq!(
        run(&["quintic", "analyze", "--b", "3", "--c", "2", "--r", "0.1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn non_convergence_exits_one() {
    let o = run(&[
        "asym",
        "solve",
        "--a",
        "5",
        "--b",
        "3",
        "--c",
        "4",
        "--max-iter",
        "1",
        "--digits",
        "20",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn asymmetric_report() {
    let mut args = vec!["asym", "solve", "--digits", "20", "--json"];
    args.extend(REFERENCE);
    let v = json(&args);
    let want = [
        "a",
        "alpha",
        "b",
        "beta",
        "c",
        "epsilon",
        "iterations",
        "r",
        "residuals",
        "x0",
        "x1",
        "xT",
        "y0",
        "y1",
        "yT",
    ];
    assert_eq!(keys(&v), want);
    assert_eq!(
        keys(&v["residuals"]),
        ["circle", "distance", "ellipse", "sextic", "slope"]
    );
    assert!((num(&v["epsilon"]) - 0.9700).abs() < 5e-5);
    assert!((num(&v["y1"]) - 0.3057).abs() < 5e-5);
    assert!((num(&v["r"]) - 0.235743).abs() < 1e-6);
    for (_, r) in v["residuals"].as_object().unwrap() {
        assert!(num(r) < 1e-8);
    }
    assert_eq!(v["a"], "2.8939431000000000000");
}

#[test]
fn oracle_passes_on_an_exact_right_triangle() {
    let o = run(&["oracle", "check", "--a", "5", "--b", "3", "--c", "4", "--digits", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all checks passed"));
}

#[test]
fn quintic_search_exhausts_on_the_reference_triangle() {
    let v = json(&[
        "quintic",
        "analyze",
        "--b",
        "1.0591663",
        "--c",
        "2.6931530",
        "--r",
        "0.2358",
        "--json",
    ]);
    assert_eq!(v["exhausted"], Value::Bool(true));
    assert!(v["witness"].is_null());
    assert_eq!(v["height"], 30);
    assert_eq!(v["real_roots"].as_array().unwrap().len(), 1);
}

#[test]
fn figure_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("overtop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let paths = [dir.join("a.svg"), dir.join("b.svg")];
    for p in &paths {
        let out = p.display().to_string();
        let o = run(&[
            "render", "figure", "--a", "5", "--b", "3", "--c", "4", "--digits", "20", "--out", &out, "--size", "640",
        ]);
        assert!(o.status.success());
    }
    let a = std::fs::read(&paths[0]).unwrap();
    let b = std::fs::read(&paths[1]).unwrap();
    assert_eq!(a, b);
    assert!(a.starts_with(b"<svg"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn identical_runs_print_identical_bytes() {
    let a = run(&["top", "reduce", "--in", &worked_file()]);
    let b = run(&["top", "reduce", "--in", &worked_file()]);
    assert_eq!(a.stdout, b.stdout);
}
