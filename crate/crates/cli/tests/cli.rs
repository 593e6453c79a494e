use std::process::Command;

use hyperplex_cli::{run_with_env, Outcome, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn run(args: &[&str]) -> (Outcome, Value) {
    let argv = std::iter::once("hyperplex").chain(args.iter().copied());
    let out = run_with_env(argv, None);
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    (out, v)
}

fn quadruple(v: &Value) -> [f64; 4] {
    let q = v["quadruple"].as_array().unwrap();
    std::array::from_fn(|i| q[i].as_f64().unwrap())
}

fn close(a: [f64; 4], b: [f64; 4], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[test]
fn eval_golden() {
    let (out, v) = run(&["eval", "--fn", "exp", "--point", "(0,0),(0,0)"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(v["schema"], "hyperplex.v1");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["error"], Value::Null);
    assert_eq!(quadruple(&v["result"]["value"]), [1.0, 0.0, 0.0, 0.0]);
}

#[test]
fn twine_golden() {
    let (out, v) = run(&["twine", "--curve", "twist", "--p0", "(0,0),(0,0)"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(v["result"]["m"], 1);
    assert_eq!(v["result"]["n"], 1);
    assert_eq!(quadruple(&v["result"]["value"]), [1.0, 0.0, 0.0, -1.0]);
    assert!(v["residuals"]["snap"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn cauchy_golden() {
    let (out, v) = run(&["cauchy", "--fn", "exp", "--curve", "double-circle", "--R", "1", "--p0", "0"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(close(quadruple(&v["result"]["value"]), [1.0, 0.0, 0.0, 0.0], 1e-8));
    assert!(v["diagnostics"]["surface"]["note"].as_str().unwrap().contains("no surface"));
}

#[test]
fn cauchy_with_surface_reports_conditions() {
    let (out, v) =
        run(&["cauchy", "--fn", "sin", "--curve", "twist", "--p0", "0.1,0,0.2,0", "--surface", "disk-surface"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(v["residuals"]["surface_cr"].as_f64().unwrap() <= 1e-7);
    assert!(v["diagnostics"]["surface"]["samples"].as_u64().unwrap() > 0);
}

#[test]
fn every_command_runs() {
    let cases: [&[&str]; 8] = [
        &["eval", "--fn", "blog", "--point", "(0),(i)"],
        &["diff", "--fn", "square@q", "--point", "1,2,3,4"],
        &["diff", "--fn", "sin", "--point", "0.3", "--order", "3"],
        &["integrate", "--fn", "exp", "--curve", "complex-circle", "--R", "2"],
        &["taylor", "--fn", "exp", "--order", "8", "--point", "0.2,0.1,0,0"],
        &["classify", "--fn", "E", "--samples", "16"],
        &["green", "--fn", "cube", "--surface", "flat-patch", "--center", "0.5"],
        &["twine", "--curve", "double-circle", "--R", "1", "--p0", "0", "--tol", "1e-10"],
    ];
    for args in cases {
        let (out, v) = run(args);
        assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stdout);
        assert_eq!(v["command"]["name"], args[0]);
        assert!(v["result"].is_object());
    }
}

#[test]
fn diff_reports_six_representations() {
    let (_, v) = run(&["diff", "--fn", "square@q", "--point", "1,2,3,4"]);
    let reps = v["result"]["representations"].as_object().unwrap();
    assert_eq!(reps.len(), 6);
    for r in reps.values() {
        assert!(close(quadruple(r), [2.0, 4.0, 6.0, -8.0], 1e-7));
    }
    assert_eq!(v["diagnostics"]["certification"]["note"], "sampled, not proven");
}

#[test]
fn classify_membership() {
    let (_, v) = run(&["classify", "--fn", "exp"]);
    assert_eq!(v["result"]["members"], serde_json::json!(["p"]));
    let (_, v) = run(&["classify", "--fn", "normsq"]);
    assert_eq!(v["result"]["members"], serde_json::json!([]));
    assert_eq!(v["result"]["harmonic"], false);
}

#[test]
fn singular_inputs_are_flagged() {
    let (out, v) = run(&["eval", "--fn", "exp", "--point", "(1+i),(1-i)"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(v["diagnostics"]["singular_inputs"], serde_json::json!(["--point"]));
    let (_, v) = run(&["eval", "--fn", "exp", "--point", "(1+i),(2-i)"]);
    assert_eq!(v["diagnostics"]["singular_inputs"], serde_json::json!([]));
}

#[test]
fn usage_errors() {
    let cases: [&[&str]; 8] = [
        &["eval", "--fn", "nope", "--point", "0"],
        &["eval", "--fn", "exp"],
        &["twine", "--curve", "spiral", "--p0", "0"],
        &["twine", "--curve", "double-circle", "--p0", "0"],
        &["twine", "--curve", "twist", "--p0", "0", "--R", "1"],
        &["eval", "--fn", "exp", "--point", "0", "--tol", "-1"],
        &["integrate", "--fn", "exp", "--curve", "double-circle", "--R", "0"],
        &["frobnicate"],
    ];
    for args in cases {
        let (out, v) = run(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert_eq!(v["status"], "error");
        assert_eq!(v["error"]["code"], "UsageError", "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn parse_errors_carry_positions() {
    let (out, v) = run(&["eval", "--fn", "exp", "--point", "(1+2i),(3-4j)"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert_eq!(v["error"]["code"], "ParseError");
    assert_eq!(v["error"]["details"]["position"], 11);
}

#[test]
fn domain_errors_exit_one() {
    let (out, v) = run(&["eval", "--fn", "inv", "--point", "(1),(i)"]);
    assert_eq!(out.code, EXIT_DOMAIN);
    assert_eq!(v["status"], "error");
    assert_eq!(v["result"], Value::Null);
    let (out, v) = run(&["twine", "--curve", "twist", "--p0", "0", "--tol", "1e-10"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(v["result"]["m"], 1);
    let (out, v) = run(&["twine", "--curve", "complex-circle", "--R", "1", "--p0", "(1),(0)"]);
    assert_eq!(out.code, EXIT_DOMAIN, "{}", out.stdout);
    assert!(v["error"]["code"].as_str().unwrap().len() > 1);
}

#[test]
fn environment_tolerance_is_used_and_flag_overrides_it() {
    let argv = ["hyperplex", "integrate", "--fn", "exp", "--curve", "twist", "--p0", "0"];
    let out = run_with_env(argv, Some("1e-6"));
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["diagnostics"]["quadrature"]["tol"].as_f64(), Some(1e-6));
    let out = run_with_env(argv.iter().copied().chain(["--tol", "1e-11"]), Some("1e-6"));
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["diagnostics"]["quadrature"]["tol"].as_f64(), Some(1e-11));
    let out = run_with_env(argv, Some("bogus"));
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn text_output_and_help() {
    let out = run_with_env(["hyperplex", "eval", "--fn", "exp", "--point", "0", "--output", "text"], None);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("status: ok"));
    assert!(out.stdout.lines().any(|l| l.starts_with("result.value: 1")));
    let out = run_with_env(["hyperplex", "--help"], None);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("twine"));
}

#[test]
fn binary_output_is_byte_identical_across_runs() {
    let args = ["cauchy", "--fn", "exp", "--curve", "double-circle", "--R", "1", "--p0", "0"];
    let a = Command::new(env!("CARGO_BIN_EXE_hyperplex")).args(args).env_remove("HYPERPLEX_TOL").output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_hyperplex")).args(args).env_remove("HYPERPLEX_TOL").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let inproc = run_with_env(std::iter::once("hyperplex").chain(args), None);
    assert_eq!(String::from_utf8(a.stdout).unwrap(), inproc.stdout);
}
