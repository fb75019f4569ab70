//! Exact rational subspaces: apolar complements, initial subspaces and
//! Hilbert functions of non-monomial ideals.

use stablesq::qlinalg::{seeded_rng, random_linear_form, Form, RationalSubspace, DEFAULT_COEFF_BOUND};
use stablesq::MonomialOrder;

fn main() -> stablesq::Result<()> {
    let w = RationalSubspace::span_forms(3, 2, MonomialOrder::Lex, &[Form::parse("x1^2 + x2^2", 3)?])?;
    let u = w.apolar_perp();
    println!("U = {u:?}");
    println!("codim U^2 = {}", u.product_rational(&u)?.codim());
    let init = u.initial_subspace();
    println!("in(U) = {init}, codim in(U)^2 = {}", init.codim_square()?);

    let mut rng = seeded_rng(0);
    let l = random_linear_form(3, &mut rng, DEFAULT_COEFF_BOUND);
    let v = u.quotient_by_linear_form(&l)?;
    println!("(U : l) has codim {} in degree 1", v.codim());
    println!("HF of A/<U>: {:?}", u.hilbert_function_rational(5)?.values);
    Ok(())
}
