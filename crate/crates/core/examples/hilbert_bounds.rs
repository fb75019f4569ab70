//! Macaulay representations, growth bounds and Gotzmann persistence.

use stablesq::macaulay::{gotzmann_persists, macaulay_growth_bound, macaulay_rep};
use stablesq::monomial::Monomial;
use stablesq::MonomialSubspace;

fn main() -> stablesq::Result<()> {
    let rep = macaulay_rep(100, 4)?;
    println!("100 in degree 4: coefficients {:?}, h^<4> = {}", rep.coeffs(), macaulay_growth_bound(100, 4)?);

    // all quadrics but x3^2: maximal growth in degree 2, so it persists
    let u = MonomialSubspace::from_complement(3, 2, [Monomial::var_power(3, 3, 2)])?;
    let hf = u.ideal_hilbert_function(8)?;
    println!("{u}: HF {:?}", hf.values);
    println!("Gotzmann at degree 2: {:?}", gotzmann_persists(&hf, 2)?);

    // x1^2, x1 x2, x2^2: constant HF 3, below the growth bound 4
    let keep = [[2, 0, 0], [1, 1, 0], [0, 2, 0]].map(|e| Monomial::new(&e).unwrap());
    let v = MonomialSubspace::from_members(3, 2, keep)?;
    let hf = v.ideal_hilbert_function(8)?;
    println!("{v}: HF {:?}, Macaulay violation {:?}", hf.values, hf.first_macaulay_violation());
    println!("Gotzmann at degree 2: {:?}", gotzmann_persists(&hf, 2)?);
    Ok(())
}
