//! The maximisers of codim U^2 and the closed form for n, d >= k.

use stablesq::search::{closed_form_m, compute_m};
use stablesq::stable::extremal_subspace;

fn main() -> stablesq::Result<()> {
    let (n, d) = (5, 6);
    for k in 1..=5 {
        let res = compute_m(n, d, k)?;
        let u = extremal_subspace(n, d, k)?;
        println!(
            "m({n},{d},{k}) = {} (closed form {}), {} witness(es), extremal codim U^2 = {}",
            res.value.unwrap(),
            closed_form_m(n, d, k)?,
            res.witness_count,
            u.codim_square()?
        );
        println!("    {u}");
    }
    // beyond the closed-form regime the maximisers change shape
    let res = compute_m(3, 4, 5)?;
    println!("m(3,4,5) = {}", res.value.unwrap());
    for w in &res.witnesses {
        println!("    {w}");
    }
    Ok(())
}
