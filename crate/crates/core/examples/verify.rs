//! Check the solver against the brute-force oracle on a batch of small
//! random instances, best box and the full set of optima.
//!
//! cargo run --example verify

use boxsep::cli::{run_verify, VerifyConfig};

pub fn run() -> String {
    let cfg = VerifyConfig { count: 400, threads: 2, ..VerifyConfig::default() };
    let report = run_verify(&cfg).unwrap();
    let mut out = format!("{} checked, {} bounded, {} failures\n", report.checked, report.bounded, report.failures.len());
    for f in &report.failures {
        out.push_str(f);
        out.push('\n');
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
