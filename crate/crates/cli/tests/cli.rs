use std::path::Path;
use std::process::Command;

use qaw_cli::{main_with, parse_args, render_text, CliError, EXIT_CONFIG, EXIT_FAIL, EXIT_PASS};
use qaw_core::verify::{Mode, Suite, SuiteReport};

fn argv(s: &str) -> Vec<String> {
    std::iter::once("qaw".to_string()).chain(s.split_whitespace().map(String::from)).collect()
}

fn run(s: &str) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = main_with(argv(s), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn read_report(path: &Path) -> SuiteReport {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn defaults() {
    let cfg = parse_args(argv("")).unwrap();
    assert_eq!(cfg.verify.suite, Suite::All);
    assert_eq!(cfg.verify.spins, vec![1, 1, 1]);
    assert_eq!(cfg.verify.mode, Mode::Exact);
    assert!(!cfg.verify.negative_control);
    assert!(cfg.json.is_none() && !cfg.verbose);

    let cfg = parse_args(argv("--mode eval")).unwrap();
    assert_eq!(cfg.verify.mode, Mode::Eval { points: 20, seed: 0 });
}

#[test]
fn parses_four_leg_suite() {
    let cfg = parse_args(argv("--suite aw4 --spins 1,1,1,1")).unwrap();
    assert_eq!(cfg.verify.suite, Suite::Aw4);
    assert_eq!(cfg.verify.spins, vec![1, 1, 1, 1]);
    assert_eq!(cfg.verify.mode, Mode::Exact);
}

#[test]
fn rejects_bad_configurations() {
    for bad in [
        "--suite aw3 --spins 1,1",
        "--suite tau --spins 1,1,1",
        "--suite nonsense",
        "--mode eval --points 0",
        "--mode fast",
        "--spins 1,x,1",
        "--spins -1,1,1",
        "--negative-control --spins 0,0,0",
        "--unknown-flag",
    ] {
        let (code, out, err) = run(bad);
        assert_eq!(code, EXIT_CONFIG, "{bad}");
        assert!(out.is_empty(), "{bad}: {out}");
        assert!(!err.is_empty(), "{bad}");
    }
    assert!(matches!(parse_args(argv("--suite aw3 --spins 1,1")), Err(CliError::Config(_))));
    assert!(matches!(parse_args(argv("--points 0")), Err(CliError::Usage(_))));
}

#[test]
fn help_mentions_two_j_convention() {
    let (code, out, _) = run("--help");
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("two_j"));
    assert!(!out.contains("negative-control"));
}

#[test]
fn default_run_passes_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, err) = run(&format!("--json {}", path.display()));
    assert_eq!(code, EXIT_PASS, "{out}{err}");
    let report = read_report(&path);
    assert!(report.passed);
    assert_eq!(report.suite, "all");
    assert_eq!(out, render_text(&report, false));

    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    for key in ["suite", "version", "config", "checks", "passed"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    for check in v["checks"].as_array().unwrap() {
        for key in ["name", "params", "passed", "residual_terms", "witness", "runtime_ms"] {
            assert!(check.get(key).is_some(), "{key}");
        }
        assert!(check["passed"].is_boolean() && check["residual_terms"].is_u64());
    }
}

#[test]
fn negative_control_exits_with_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("neg.json");
    let (code, out, _) = run(&format!("--suite structure --spins 1,1 --negative-control --json {}", path.display()));
    assert_eq!(code, EXIT_FAIL);
    let report = read_report(&path);
    assert!(!report.passed);
    assert!(report.config.negative_control);
    assert!(out.contains("FAIL structure.relation_ef"));
    assert!(out.contains("witness:"));
}

#[test]
fn text_and_json_verdicts_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eval.json");
    let (code, out, _) = run(&format!(
        "--suite structure --spins 1,2 --mode eval --points 4 --negative-control --json {}",
        path.display()
    ));
    assert_eq!(code, EXIT_FAIL);
    let report = read_report(&path);
    for c in &report.checks {
        let line = out.lines().find(|l| l.split_whitespace().nth(1) == Some(c.name.as_str())).unwrap();
        assert_eq!(line.starts_with("PASS"), c.passed, "{line}");
    }
    assert_eq!(report.config.points, 4);
}

#[test]
fn eval_runs_are_reproducible() {
    let (code_a, a, _) = run("--suite tau --spins 2,1 --mode eval --points 3 --seed 9");
    let (code_b, b, _) = run("--suite tau --spins 2,1 --mode eval --points 3 --seed 9");
    assert_eq!(code_a, EXIT_PASS);
    assert_eq!(code_a, code_b);
    assert_eq!(a, b);
}

#[test]
fn verbose_lists_parameters() {
    let (code, out, _) = run("--suite aw3-symbolic --verbose");
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("runtime_ms="));
    assert!(out.contains("aw3-symbolic.bracket_c12_c23"));
}

#[test]
fn binary_honours_thread_cap_and_exit_status() {
    let bin = env!("CARGO_BIN_EXE_qaw");
    let ok = Command::new(bin).args(["--suite", "aw4", "--spins", "1,1,1,1"]).env("QAW_THREADS", "1").output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_PASS), "{}", String::from_utf8_lossy(&ok.stderr));

    let bad =
        Command::new(bin).args(["--suite", "aw4", "--spins", "1,1,1,1"]).env("QAW_THREADS", "zero").output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_CONFIG));

    let arity = Command::new(bin).args(["--suite", "aw3", "--spins", "1,1"]).output().unwrap();
    assert_eq!(arity.status.code(), Some(EXIT_CONFIG));
    assert!(String::from_utf8_lossy(&arity.stderr).contains("aw3"));
}
