//! Runs every verification suite and prints a summary line for each.

use stablesq::verify::{run_all, VerifyConfig};

fn main() {
    let reports = run_all(&VerifyConfig::default());
    for r in &reports {
        println!("{}", r.summary());
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
}
