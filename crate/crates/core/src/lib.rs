//! Exact computations on squares of subspaces of forms.
//!
//! The crate works in the polynomial ring `A(n) = Q[x1, ..., xn]` with the
//! variable convention `x1 < x2 < ... < xn`. It enumerates strongly stable
//! monomial subspaces, computes `m(n, d, k)` (the largest possible
//! `codim U^2` over subspaces `U ⊂ A(n)_d` of codimension `k`), checks the
//! Hilbert-function bounds of Macaulay, Gotzmann and Green on concrete
//! subspaces, does exact rational linear algebra for non-monomial examples,
//! and evaluates face-dimension formulas for Gram spectrahedra.

pub mod cli;
pub mod error;
pub mod gram;
pub mod io;
pub mod macaulay;
pub mod monomial;
pub mod qlinalg;
pub mod reference;
pub mod search;
pub mod stable;
pub mod subspace;
pub mod verify;

pub use error::{Error, Result};
pub use macaulay::{HilbertFunction, MacaulayRep};
pub use monomial::{Monomial, MonomialOrder};
pub use search::{SearchConfig, SearchResult};
pub use stable::StableEnumeration;
pub use subspace::MonomialSubspace;
