use std::collections::BTreeSet;

use proptest::prelude::*;
use stablesq::monomial::{enumerate_monomials, Monomial};
use stablesq::qlinalg::{RationalSubspace, Form};
use stablesq::search::{closed_form_m, compute_m};
use stablesq::stable::{extremal_subspace, is_strongly_stable, stable_codim_square};
use stablesq::{MonomialOrder, MonomialSubspace};

/// codim U^2 by multiplying out every pair of members.
fn naive_codim_square(u: &MonomialSubspace) -> u64 {
    let members = u.members();
    let mut sq = BTreeSet::new();
    for a in &members {
        for b in &members {
            sq.insert(a.mul(b));
        }
    }
    enumerate_monomials(u.n(), 2 * u.degree()).unwrap().len() as u64 - sq.len() as u64
}

fn arb_subspace() -> impl Strategy<Value = MonomialSubspace> {
    (2usize..=4, 1u32..=3).prop_flat_map(|(n, d)| {
        let basis = enumerate_monomials(n, d).unwrap();
        let len = basis.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let comp = basis.iter().zip(&keep).filter(|(_, k)| **k).map(|(m, _)| *m);
            MonomialSubspace::from_complement(n, d, comp).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn square_matches_naive_products(u in arb_subspace()) {
        let sq = u.square().unwrap();
        prop_assert_eq!(sq.codim(), naive_codim_square(&u));
        if is_strongly_stable(&u) {
            prop_assert_eq!(stable_codim_square(&u), sq.codim());
        }
    }

    #[test]
    fn rational_square_matches_monomial_square(u in arb_subspace()) {
        let r = RationalSubspace::from_monomial_subspace(&u, MonomialOrder::Lex).unwrap();
        prop_assert_eq!(r.dim(), u.dim());
        let sq = r.product_rational(&r).unwrap();
        prop_assert_eq!(sq.codim(), u.codim_square().unwrap());
        prop_assert_eq!(r.initial_subspace(), u.clone());
    }

    #[test]
    fn apolar_perp_is_an_involution(u in arb_subspace()) {
        let r = RationalSubspace::from_monomial_subspace(&u, MonomialOrder::Grlex).unwrap();
        let perp = r.apolar_perp();
        prop_assert_eq!(perp.dim(), u.codim());
        prop_assert_eq!(perp.apolar_perp().dim(), r.dim());
        prop_assert!(perp.apolar_perp().is_subspace_of(&r));
    }

    #[test]
    fn form_text_round_trip(coeffs in proptest::collection::vec(-20i64..=20, 6)) {
        let basis = enumerate_monomials(3, 2).unwrap();
        let f = Form::from_terms(3, 2, basis.into_iter().zip(coeffs.iter().map(|c| stablesq::qlinalg::q(*c)))).unwrap();
        prop_assert_eq!(Form::parse(&f.to_string(), 3).unwrap(), f);
    }
}

#[test]
fn extremal_witness_attains_closed_form() {
    for n in 2..=5usize {
        for d in 2..=5u32 {
            for k in 1..=(n as u64).min(u64::from(d)) {
                let u = extremal_subspace(n, d, k).unwrap();
                assert_eq!(naive_codim_square(&u), closed_form_m(n, d, k).unwrap());
                assert_eq!(compute_m(n, d, k).unwrap().value, Some(closed_form_m(n, d, k).unwrap()));
            }
        }
    }
}

#[test]
fn subspace_json_round_trip() {
    let u = extremal_subspace(4, 3, 2).unwrap();
    let text = serde_json::to_string(&u).unwrap();
    assert_eq!(text, r#"{"n":4,"d":3,"complement":[[2,1,0,0],[3,0,0,0]]}"#);
    let back: MonomialSubspace = serde_json::from_str(&text).unwrap();
    assert_eq!(back, u);
    assert_eq!(Monomial::parse("x1^2*x2", 4).unwrap(), Monomial::new(&[2, 1, 0, 0]).unwrap());
}
