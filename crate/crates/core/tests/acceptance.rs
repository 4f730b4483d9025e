//! Acceptance battery: runs every named verification check in order and
//! prints one pass/fail line per check (no harness, so the lines always
//! appear in `cargo test` output). Exits nonzero if any check fails.

use monoidalg::checks;

fn main() {
    let reports = checks::run_all();
    let mut failed = 0usize;
    for report in &reports {
        let status = if report.passed { "PASS" } else { "FAIL" };
        println!("[{status}] {}", report.name);
        if !report.passed {
            failed += 1;
            for line in &report.details {
                println!("    {line}");
            }
        }
    }
    println!(
        "{}/{} acceptance checks passed",
        reports.len() - failed,
        reports.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
