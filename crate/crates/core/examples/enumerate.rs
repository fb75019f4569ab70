//! Strongly stable subspaces of a small component, with their squares.

use stablesq::stable::{count_strongly_stable, enumerate_strongly_stable, stable_codim_square};

fn main() -> stablesq::Result<()> {
    let (n, d) = (3, 4);
    for k in 1..=4 {
        let e = enumerate_strongly_stable(n, d, k)?;
        println!("n={n} d={d} k={k}: {} subspaces", e.len());
        for u in &e.subspaces {
            println!("    codim U^2 = {:>2}  {u}", stable_codim_square(u));
        }
    }
    for d in 2..=6 {
        println!("codim 6 in A(4)_{d}: {} strongly stable subspaces", count_strongly_stable(4, d, 6)?);
    }
    Ok(())
}
