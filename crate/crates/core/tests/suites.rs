use qaw_core::algebra::c13_zero_symbolic;
use qaw_core::arith::Exact;
use qaw_core::repr::{casimir_on, TensorContext};
use qaw_core::verify::{bracket_calibration_exact, run_suite, Suite, SuiteReport, VerifyConfig, VerifyError};

fn without_timing(mut r: SuiteReport) -> SuiteReport {
    for c in &mut r.checks {
        c.runtime_ms = 0;
    }
    r
}

fn verdicts(r: &SuiteReport) -> Vec<(String, bool)> {
    r.checks.iter().map(|c| (c.name.clone(), c.passed)).collect()
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!(matches!("bogus".parse::<Suite>(), Err(VerifyError::UnknownSuite(_))));
}

#[test]
fn arity_is_checked_before_running() {
    let bad = [
        (Suite::Aw3, vec![1, 1]),
        (Suite::Aw4, vec![1, 1, 1]),
        (Suite::Theorem, vec![1, 1, 1, 1]),
        (Suite::Tau, vec![1, 1, 1]),
        (Suite::RMatrix, vec![1]),
        (Suite::All, vec![1, 1]),
        (Suite::Structure, vec![]),
    ];
    for (suite, spins) in bad {
        let err = run_suite(&VerifyConfig::exact(suite, &spins)).unwrap_err();
        assert!(matches!(err, VerifyError::Arity { .. }), "{suite} {spins:?}: {err}");
    }
    let zero_points = VerifyConfig::eval(Suite::Aw3, &[1, 1, 1], 0, 0);
    assert!(matches!(run_suite(&zero_points), Err(VerifyError::InvalidConfig(_))));
}

#[test]
fn full_suite_passes_on_spin_half_legs() {
    let r = run_suite(&VerifyConfig::exact(Suite::All, &[1, 1, 1])).unwrap();
    let failed: Vec<_> = r.failed().map(|c| (&c.name, &c.witness)).collect();
    assert!(r.passed, "{failed:?}");
    for name in [
        "aw3-symbolic.bracket_c12_c23",
        "aw3.bracket_c13one_c23",
        "rmatrix.yang_baxter",
        "rmatrix.truncation",
        "tau.left_coaction",
        "theorem.c13_zero_two_way",
        "structure.casimir_scalar",
        "all.coverage",
    ] {
        assert!(r.check(name).is_some_and(|c| c.passed), "{name}");
    }
    assert_eq!(r.config.mode, "exact");
    assert!(r.checks.windows(2).all(|w| w[0].name < w[1].name));
}

#[test]
fn trivial_context_passes() {
    let r = run_suite(&VerifyConfig::exact(Suite::Structure, &[0, 0, 0])).unwrap();
    assert!(r.passed);
    let r = run_suite(&VerifyConfig::exact(Suite::Theorem, &[2, 0, 0])).unwrap();
    assert!(r.passed);
    let r = run_suite(&VerifyConfig::exact(Suite::Aw4, &[1, 1, 1, 0])).unwrap();
    assert!(r.passed);
}

#[test]
fn exact_mode_is_deterministic() {
    let cfg = VerifyConfig::exact(Suite::All, &[1, 2, 1]);
    let a = without_timing(run_suite(&cfg).unwrap());
    let b = without_timing(run_suite(&cfg).unwrap());
    assert_eq!(a, b);
}

#[test]
fn eval_mode_reproduces_exact_verdicts() {
    let exact = run_suite(&VerifyConfig::exact(Suite::Aw3, &[1, 1, 1])).unwrap();
    let eval = run_suite(&VerifyConfig::eval(Suite::Aw3, &[1, 1, 1], 20, 3)).unwrap();
    assert_eq!(verdicts(&exact), verdicts(&eval));
    for c in &eval.checks {
        assert_eq!(c.params.sample_points, 20);
        assert_eq!(c.params.failing_points, 0, "{}", c.name);
    }
}

#[test]
fn eval_mode_is_deterministic_for_fixed_seed() {
    let cfg = VerifyConfig::eval(Suite::Tau, &[1, 2], 5, 11);
    let a = without_timing(run_suite(&cfg).unwrap());
    let b = without_timing(run_suite(&cfg).unwrap());
    assert_eq!(a, b);
}

#[test]
fn negative_control_fails_in_both_modes() {
    let mut cfg = VerifyConfig::exact(Suite::Structure, &[1, 1]);
    cfg.negative_control = true;
    let r = run_suite(&cfg).unwrap();
    assert!(!r.passed);
    let ef = r.check("structure.relation_ef").unwrap();
    assert!(ef.residual_terms > 0 && ef.witness.is_some());

    let mut cfg = VerifyConfig::eval(Suite::Structure, &[1, 1], 20, 0);
    cfg.negative_control = true;
    let r = run_suite(&cfg).unwrap();
    assert!(r.check("structure.relation_ef").unwrap().params.failing_points >= 19);
}

#[test]
fn negative_control_needs_a_nontrivial_leg() {
    let mut cfg = VerifyConfig::exact(Suite::Structure, &[0, 0]);
    cfg.negative_control = true;
    assert!(matches!(run_suite(&cfg), Err(VerifyError::InvalidConfig(_))));
}

#[test]
fn report_json_has_contract_fields() {
    let r = run_suite(&VerifyConfig::exact(Suite::Tau, &[1, 1])).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["suite", "version", "config", "checks", "passed"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let check = &v["checks"][0];
    for key in ["name", "params", "passed", "residual_terms", "witness", "runtime_ms"] {
        assert!(check.get(key).is_some(), "{key}");
    }
    let back: SuiteReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}

#[test]
fn bracket_calibration_selects_one_convention() {
    let (chosen, alternative) = bracket_calibration_exact(&[1, 1, 1]).unwrap();
    assert!(chosen.is_zero());
    assert!(!alternative.is_zero());
}

#[test]
fn symbolic_c13_zero_collapses_on_trivial_legs() {
    for two_j in [1, 2, 3] {
        let ctx = TensorContext::new(&[two_j, 0, 0], Exact).unwrap();
        let m = ctx.represent(&c13_zero_symbolic()).unwrap();
        assert_eq!(m, casimir_on(&ctx, &[1]).unwrap(), "two_j = {two_j}");
    }
}
