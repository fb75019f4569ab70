//! Computes the m(n, d, k) table and compares it with the published values.

use stablesq::reference::{D_RANGE, K_RANGE, N_RANGE};
use stablesq::search::verify_table;
use stablesq::SearchConfig;

fn main() -> stablesq::Result<()> {
    let report = verify_table(N_RANGE, D_RANGE, K_RANGE, &SearchConfig::from_env())?;
    print!("{}", report.to_text());
    println!("{} published cells match, {} mismatches", report.matched(), report.mismatches().count());
    Ok(())
}
