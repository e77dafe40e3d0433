//! Runs acceptance criteria 1–13 and prints one line per criterion.
//!
//! Two criteria cannot be met as stated (see README, "Known failures").
//! They are run at their stated tolerances and reported as FAIL; this
//! target succeeds only if every other criterion passes and those two fail
//! in exactly the way the analysis predicts.

use std::process::ExitCode;

use szeta::job::Suite;
use szeta::verify::{run_suite, CriterionResult};

/// `(criterion, failing check, expected measured value, slack)`.
const KNOWN_FAILURES: &[(u8, &str, f64, f64)] = &[
    // the Binet remainder at λ = 200i is 1.0016× the first omitted term
    (6, "|remainder| / first omitted", 1.0016, 5e-4),
    // the √t coefficient is Γ(−1/2)·(−β/π) = 2/√π, twice √π/π
    (12, "relative √t prefactor vs √π/π", 1.0, 0.02),
];

fn expected_failure(r: &CriterionResult) -> Option<(&'static str, f64, f64)> {
    KNOWN_FAILURES
        .iter()
        .find(|k| k.0 == r.id)
        .map(|&(_, check, value, slack)| (check, value, slack))
}

fn main() -> ExitCode {
    let results = run_suite(Suite::All);
    let mut unexpected = Vec::new();
    for r in &results {
        println!("{}", r.line());
        for c in r.checks.iter().filter(|c| !c.passed) {
            println!("             failed check: {} = {:e} (tolerance {:e})", c.name, c.measured, c.tolerance);
        }
        match expected_failure(r) {
            None if !r.passed => unexpected.push(format!("criterion {} failed", r.id)),
            None => {}
            Some((check, value, slack)) => {
                let failed = r.failed_checks();
                let measured = r.check(check).map_or(f64::NAN, |c| c.measured);
                if failed != [check] || measured.is_nan() || (measured - value).abs() > slack {
                    unexpected.push(format!(
                        "criterion {}: expected only `{check}` to fail at {value} ± {slack}, got {failed:?} with {measured}",
                        r.id
                    ));
                } else {
                    println!("             known failure, matches analysis ({check} ≈ {value})");
                }
            }
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            println!("UNEXPECTED: {u}");
        }
        ExitCode::FAILURE
    }
}
