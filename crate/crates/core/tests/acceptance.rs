//! Acceptance suite: sixteen criteria, one pass/fail line each.
//!
//! Runs without the libtest harness so the lines are always printed; the
//! process exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use halfturn_ice::verify::{self, SuiteParams, VerificationReport};
use halfturn_ice::IntPoly;

type Criterion = (&'static str, Box<dyn FnOnce() -> Outcome>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn params(n: Option<usize>, m: Option<usize>, points: Option<usize>) -> SuiteParams {
    SuiteParams { n_max: n, m_max: m, points, ..SuiteParams::default() }
}

/// Runs the listed suites; passes when every report passes.
fn suites(list: &[(&str, SuiteParams)]) -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for (id, p) in list {
        let r = verify::run_suite(id, p).expect("known suite");
        ok &= r.passed();
        details.push(summary(&r));
    }
    Outcome { ok, detail: details.join("; ") }
}

fn summary(r: &VerificationReport) -> String {
    match &r.witness {
        None => format!("{} {} checks", r.suite_id, r.checks_run),
        Some(w) => format!("{} FAILED after {} checks: {w}", r.suite_id, r.checks_run),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    if took > limit {
        out.ok = false;
        out.detail = format!("{} (took {took:.1?}, limit {limit:?})", out.detail);
    } else {
        out.detail = format!("{} ({took:.1?})", out.detail);
    }
    out
}

fn criterion_15() -> Outcome {
    let mut out = suites(&[("ybe", SuiteParams::default())]);
    let r = verify::verify_ybe_default();
    let components_ok = r.passed() && r.checks_run == 64;
    // with an unrelated third parameter the relation must break
    let bad = verify::verify_ybe(&IntPoly::var("x"), &IntPoly::var("y"), &IntPoly::var("x")).expect("monomials");
    out.ok &= components_ok && !bad.passed();
    out.detail = format!(
        "{}; {} of 64 components equal under z = a·x̄·ȳ; z = x {}",
        out.detail,
        if r.passed() { r.checks_run } else { 0 },
        if bad.passed() { "wrongly passes" } else { "fails as expected" }
    );
    out
}

fn criterion_16() -> Outcome {
    let reports = verify::run_all(&SuiteParams::default());
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(summary).collect();
    let ok = failed.is_empty() && reports.len() == verify::suite_ids().len();
    let detail = if failed.is_empty() {
        format!("{} suites pass", reports.len())
    } else {
        format!("failing: {}", failed.join("; "))
    };
    Outcome { ok, detail }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "counting oracle",
            Box::new(|| timed(Duration::from_secs(120), || suites(&[("counts-closed", params(Some(6), Some(3), None))]))),
        ),
        (
            "central-entry split",
            Box::new(|| suites(&[("counts-closed", params(Some(1), Some(3), None))])),
        ),
        (
            "inversion generating functions",
            Box::new(|| timed(Duration::from_secs(10), || suites(&[("genfunc", params(Some(8), None, None))]))),
        ),
        (
            "vertex-count lemmas",
            Box::new(|| {
                suites(&[
                    ("lemma2-counts", params(Some(5), None, None)),
                    ("lemma7-12-counts", params(Some(7), None, None)),
                ])
            }),
        ),
        (
            "recursions",
            Box::new(|| {
                suites(&[
                    ("dwbc-recursion", params(Some(4), None, None)),
                    ("ht-even-recursion", params(None, Some(2), None)),
                    ("ht-odd-recursion", params(None, Some(2), None)),
                    ("ht2-recursion", params(None, Some(2), None)),
                    ("special-recursion", params(Some(4), Some(2), Some(10))),
                ])
            }),
        ),
        (
            "leading terms",
            Box::new(|| {
                suites(&[
                    ("leading-C-S", params(Some(3), None, None)),
                    ("ht-even-leading", params(None, Some(2), None)),
                    ("ht-odd-leading", params(None, Some(2), None)),
                ])
            }),
        ),
        ("factorization", Box::new(|| suites(&[("factorization", params(None, Some(2), None))]))),
        (
            "odd half-turn function from Z and the quotient",
            Box::new(|| timed(Duration::from_secs(300), || suites(&[("theorem1", params(None, Some(2), None))]))),
        ),
        ("central-entry split of the odd function", Box::new(|| suites(&[("theorem2", params(None, Some(2), None))]))),
        (
            "determinant forms at a = ζ",
            Box::new(|| {
                suites(&[
                    ("theorem3", params(None, Some(2), Some(20))),
                    ("det-oracle", params(Some(3), Some(2), Some(20))),
                ])
            }),
        ),
        ("three-term relations", Box::new(|| suites(&[("three-term", params(Some(2), Some(2), Some(10)))]))),
        ("refined 1-enumerations", Box::new(|| suites(&[("refined-1", params(Some(6), Some(3), None))]))),
        ("x-enumerations", Box::new(|| suites(&[("xenum", params(Some(4), Some(2), None))]))),
        ("4-enumeration", Box::new(|| suites(&[("four-enum", params(None, Some(3), None))]))),
        ("Yang-Baxter relation", Box::new(criterion_15)),
        ("full verification run", Box::new(|| timed(Duration::from_secs(600), criterion_16))),
    ];

    let mut failures = 0;
    for (k, (name, run)) in criteria.into_iter().enumerate() {
        let out = run();
        if !out.ok {
            failures += 1;
        }
        println!("criterion {:>2} {:<4} {name}: {}", k + 1, if out.ok { "PASS" } else { "FAIL" }, out.detail);
    }
    println!("{} of 16 criteria pass", 16 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
