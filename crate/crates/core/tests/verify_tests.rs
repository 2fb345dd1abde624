use halfturn_ice::verify::{self, merge_reports, run_suite, SuiteParams, VerificationReport};
use halfturn_ice::{Error, IntPoly};

#[test]
fn suites_are_deterministic() {
    for id in ["ybe", "theorem3", "three-term", "refined-1"] {
        let p = SuiteParams::with_seed(7);
        let a = run_suite(id, &p).unwrap().to_json_line(false);
        let b = run_suite(id, &p).unwrap().to_json_line(false);
        assert_eq!(a, b, "{id}");
        assert!(a.contains("\"seed\":7"), "{a}");
    }
}

#[test]
fn reports_round_trip_through_json() {
    let r = run_suite("four-enum", &SuiteParams::default()).unwrap();
    assert!(r.passed());
    let back = VerificationReport::from_json(&r.to_json(false)).unwrap();
    assert_eq!(back.to_json_line(false), r.to_json_line(false));
    assert_eq!(r.to_json(false)["schemaVersion"], verify::SCHEMA_VERSION);
}

#[test]
fn failing_report_carries_witness() {
    let ok = verify::verify_ybe_default();
    assert!(ok.passed() && ok.witness.is_none());
    let bad = verify::verify_ybe(&IntPoly::var("x"), &IntPoly::var("y"), &IntPoly::var("x")).unwrap();
    assert!(!bad.passed());
    assert!(bad.witness.is_some());
}

#[test]
fn guard_failures_become_failing_reports() {
    let mut p = SuiteParams::default();
    p.ice.max_states = 5;
    let r = run_suite("factorization", &p).unwrap();
    assert!(!r.passed());
    assert!(r.witness.unwrap()["error"].as_str().unwrap().contains("exceeds the configured bound"));
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(matches!(run_suite("nope", &SuiteParams::default()), Err(Error::UnknownSuite(_))));
}

#[test]
fn merge_keeps_last_report_in_catalog_order() {
    let p = SuiteParams::default();
    let a = run_suite("four-enum", &p).unwrap().to_json_line(false);
    let b = run_suite("ybe", &p).unwrap().to_json_line(false);
    let merged = merge_reports(&[a.clone(), String::new(), b, a]).unwrap();
    let ids: Vec<&str> = merged.iter().map(|r| r.suite_id.as_str()).collect();
    assert_eq!(ids, ["ybe", "four-enum"]);
    assert!(merge_reports(&["{not json".to_string()]).is_err());
}

#[test]
fn theorem_entry_points() {
    for which in 1..=3 {
        let r = verify::verify_theorem(which, 1, 3, 42).unwrap();
        assert!(r.passed(), "{}", r.to_json_line(false));
    }
    assert!(verify::verify_theorem(4, 1, 1, 42).is_err());
}
