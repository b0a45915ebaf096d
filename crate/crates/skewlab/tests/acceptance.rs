//! Acceptance criteria 1 to 12, one line each. Runs without the libtest
//! harness so the lines always reach the output; exits non-zero if any
//! criterion fails.

use std::process::ExitCode;

use skewlab::suites::{run_suites, Suite};

fn main() -> ExitCode {
    let results = run_suites(&Suite::ALL);
    let mut failed = 0;
    for r in &results {
        println!("{r}");
        if !r.passed() {
            failed += 1;
        }
    }
    let total: f64 = results.iter().map(|r| r.elapsed.as_secs_f64()).sum();
    println!(
        "acceptance: {} of {} criteria passed ({total:.1}s of suite time)",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
