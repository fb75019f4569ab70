//! Monomial subspaces of a single graded component `A(n)_d`.
//!
//! A monomial subspace is stored through its complement: the (usually tiny)
//! set of degree-`d` monomials it does not contain. For a monomial subspace
//! the complement also spans the orthogonal complement under the apolarity
//! pairing.

use std::collections::HashSet;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::macaulay::HilbertFunction;
use crate::monomial::{dim_component, enumerate_monomials, Monomial, MAX_VARS};

/// A subspace of `A(n)_d` spanned by monomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialSubspace {
    n: usize,
    d: u32,
    /// Sorted descending, no duplicates.
    complement: Vec<Monomial>,
}

impl MonomialSubspace {
    /// Builds a subspace from its complement. Duplicates are merged.
    pub fn from_complement(n: usize, d: u32, complement: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        check_shape(n, d)?;
        let mut complement: Vec<Monomial> = complement.into_iter().collect();
        for m in &complement {
            if m.n() != n || m.degree() != d {
                return Err(invalid(format!("monomial {m} does not lie in A({n})_{d}")));
            }
        }
        complement.sort_unstable_by(|a, b| b.cmp(a));
        complement.dedup();
        Ok(Self { n, d, complement })
    }

    /// Builds a subspace from its spanning monomials.
    pub fn from_members(n: usize, d: u32, members: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        check_shape(n, d)?;
        let members: HashSet<Monomial> = members.into_iter().collect();
        for m in &members {
            if m.n() != n || m.degree() != d {
                return Err(invalid(format!("monomial {m} does not lie in A({n})_{d}")));
            }
        }
        let complement = enumerate_monomials(n, d)?.into_iter().filter(|m| !members.contains(m)).collect();
        Ok(Self { n, d, complement })
    }

    /// Internal constructor for complements that are already canonical.
    pub(crate) fn from_sorted_complement(n: usize, d: u32, complement: Vec<Monomial>) -> Self {
        debug_assert!(complement.windows(2).all(|w| w[0] > w[1]));
        Self { n, d, complement }
    }

    /// All of `A(n)_d`.
    pub fn full(n: usize, d: u32) -> Result<Self> {
        check_shape(n, d)?;
        Ok(Self { n, d, complement: Vec::new() })
    }

    /// The zero subspace of `A(n)_d`.
    pub fn zero(n: usize, d: u32) -> Result<Self> {
        check_shape(n, d)?;
        Ok(Self { n, d, complement: enumerate_monomials(n, d)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    /// Monomials not in the subspace, sorted descending.
    pub fn complement(&self) -> &[Monomial] {
        &self.complement
    }

    pub fn codim(&self) -> u64 {
        self.complement.len() as u64
    }

    pub fn ambient_dim(&self) -> u64 {
        dim_component(self.n, self.d as usize)
    }

    pub fn dim(&self) -> u64 {
        self.ambient_dim() - self.codim()
    }

    pub fn is_full(&self) -> bool {
        self.complement.is_empty()
    }

    #[inline]
    pub fn in_complement(&self, m: &Monomial) -> bool {
        self.complement.binary_search_by(|probe| m.cmp(probe)).is_ok()
    }

    #[inline]
    pub fn contains(&self, m: &Monomial) -> bool {
        m.n() == self.n && m.degree() == self.d && !self.in_complement(m)
    }

    /// Spanning monomials, sorted descending.
    pub fn members(&self) -> Vec<Monomial> {
        enumerate_monomials(self.n, self.d)
            .expect("shape checked at construction")
            .into_iter()
            .filter(|m| !self.in_complement(m))
            .collect()
    }

    /// `U ⊆ V` for subspaces of the same component.
    pub fn is_subspace_of(&self, other: &MonomialSubspace) -> bool {
        self.n == other.n && self.d == other.d && other.complement.iter().all(|m| self.in_complement(m))
    }

    /// Monomial `U` is base-point-free iff it contains `x_i^d` for every `i`.
    pub fn is_base_point_free(&self) -> bool {
        (1..=self.n).all(|i| self.contains(&Monomial::var_power(self.n, i, self.d)))
    }

    /// The product `U * V`, spanned by all `M * T` with `M in U`, `T in V`.
    ///
    /// Picks whichever of the two strategies touches fewer monomials: the
    /// pairwise expansion of members, or the complement side where a product
    /// monomial is missing iff every factorization has a factor outside `U`
    /// or outside `V`.
    pub fn product(&self, other: &MonomialSubspace) -> Result<MonomialSubspace> {
        if self.n != other.n {
            return Err(invalid(format!("product of subspaces in {} and {} variables", self.n, other.n)));
        }
        let pairwise_cost = self.dim().saturating_mul(other.dim());
        let candidates = self
            .codim()
            .saturating_mul(other.ambient_dim())
            .saturating_add(other.codim().saturating_mul(self.ambient_dim()));
        if candidates < pairwise_cost {
            self.product_by_factorization(other)
        } else {
            self.product_pairwise(other)
        }
    }

    /// Product through the pairwise expansion of spanning monomials.
    pub fn product_pairwise(&self, other: &MonomialSubspace) -> Result<MonomialSubspace> {
        if self.n != other.n {
            return Err(invalid("product of subspaces in different numbers of variables"));
        }
        let left = self.members();
        let right = other.members();
        let mut hit: HashSet<Monomial> = HashSet::with_capacity(left.len() * right.len() / 2 + 1);
        for a in &left {
            for b in &right {
                hit.insert(a.mul(b));
            }
        }
        MonomialSubspace::from_members(self.n, self.d + other.d, hit)
    }

    /// Product through factorizations of candidate monomials.
    pub fn product_by_factorization(&self, other: &MonomialSubspace) -> Result<MonomialSubspace> {
        if self.n != other.n {
            return Err(invalid("product of subspaces in different numbers of variables"));
        }
        let n = self.n;
        let target = self.d + other.d;
        if self.dim() == 0 || other.dim() == 0 {
            return MonomialSubspace::zero(n, target);
        }
        // A missing monomial has some factorization with a factor in one of the complements.
        let mut candidates: HashSet<Monomial> = HashSet::new();
        if !self.complement.is_empty() {
            let others = enumerate_monomials(n, other.d)?;
            for s in &self.complement {
                candidates.extend(others.iter().map(|t| s.mul(t)));
            }
        }
        if !other.complement.is_empty() {
            let mine = enumerate_monomials(n, self.d)?;
            for s in &other.complement {
                candidates.extend(mine.iter().map(|t| s.mul(t)));
            }
        }
        let missing = candidates.into_iter().filter(|c| {
            c.for_each_divisor(self.d, |m| {
                if !self.in_complement(&m) && !other.in_complement(&c.div(&m).expect("divisor")) {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })
            .is_continue()
        });
        MonomialSubspace::from_complement(n, target, missing)
    }

    /// `U^2`.
    pub fn square(&self) -> Result<MonomialSubspace> {
        self.product(self)
    }

    /// `codim U^2` in `A(n)_{2d}`.
    pub fn codim_square(&self) -> Result<u64> {
        Ok(self.square()?.codim())
    }

    /// `U * A_e` as a subspace of `A(n)_{d+e}`.
    pub fn times_component(&self, e: u32) -> MonomialSubspace {
        let mut layer = self.complement.clone();
        for _ in 0..e {
            layer = next_ideal_layer(self.n, &layer);
        }
        MonomialSubspace::from_sorted_complement(self.n, self.d + e, layer)
    }

    /// Hilbert function `h_i = dim (A/<U>)_i` for `i = 0..=max_degree`.
    ///
    /// Below degree `d` nothing is in the ideal. From degree `d` on, the
    /// monomials outside `<U>` in degree `i+1` are exactly those whose every
    /// degree-`i` divisor lies outside `<U>`, so the complement is grown one
    /// degree at a time.
    pub fn ideal_hilbert_function(&self, max_degree: u32) -> Result<HilbertFunction> {
        if max_degree < self.d {
            return Err(invalid(format!("max_degree {max_degree} below generating degree {}", self.d)));
        }
        let mut values: Vec<u64> = (0..self.d).map(|i| dim_component(self.n, i as usize)).collect();
        let mut layer = self.complement.clone();
        values.push(layer.len() as u64);
        for _ in self.d..max_degree {
            layer = next_ideal_layer(self.n, &layer);
            values.push(layer.len() as u64);
        }
        Ok(HilbertFunction::new(values, Some(self.d)))
    }

    /// `(U : x_i)`: all degree `d-1` monomials `M` with `x_i * M in U`.
    pub fn variable_quotient(&self, i: usize) -> Result<MonomialSubspace> {
        if self.d == 0 {
            return Err(invalid("variable quotient needs degree at least 1"));
        }
        if !(1..=self.n).contains(&i) {
            return Err(invalid(format!("variable index {i} out of range 1..={}", self.n)));
        }
        let comp = self.complement.iter().filter_map(|m| m.div_var(i));
        MonomialSubspace::from_complement(self.n, self.d - 1, comp)
    }

    /// `U^(l) = x_{n+1} A(n+1)_{d-1} + U`, iterated `l` times.
    ///
    /// The complement is unchanged; it just gains `l` variables with
    /// exponent zero.
    pub fn lift(&self, l: usize) -> Result<MonomialSubspace> {
        if self.n + l > MAX_VARS {
            return Err(invalid(format!("lifting to {} variables exceeds {MAX_VARS}", self.n + l)));
        }
        let comp = self.complement.iter().map(|m| m.embed(l)).collect();
        Ok(MonomialSubspace::from_sorted_complement(self.n + l, self.d, comp))
    }

    /// `U ∩ A(m)_d`, read as a subspace of `A(m)_d`.
    pub fn restrict_vars(&self, m: usize) -> Result<MonomialSubspace> {
        if !(2..=self.n).contains(&m) {
            return Err(invalid(format!("restriction needs 2 <= m <= n = {}, got {m}", self.n)));
        }
        let comp = self.complement.iter().filter_map(|c| c.truncate(m));
        MonomialSubspace::from_complement(m, self.d, comp)
    }
}

fn check_shape(n: usize, d: u32) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(invalid(format!("variable count must be in 1..={MAX_VARS}, got {n}")));
    }
    if d > 127 {
        return Err(invalid(format!("degree {d} too large")));
    }
    Ok(())
}

/// Monomials of degree `i+1` outside `<U>` given those of degree `i`
/// (`layer`, sorted descending). Output sorted descending.
fn next_ideal_layer(n: usize, layer: &[Monomial]) -> Vec<Monomial> {
    let contains = |m: &Monomial| layer.binary_search_by(|p| m.cmp(p)).is_ok();
    let mut out: HashSet<Monomial> = HashSet::new();
    for m in layer {
        for j in 1..=n {
            let up = m.times_var(j);
            if out.contains(&up) {
                continue;
            }
            if (1..=n).all(|v| up.div_var(v).is_none_or(|down| contains(&down))) {
                out.insert(up);
            }
        }
    }
    let mut out: Vec<Monomial> = out.into_iter().collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

impl fmt::Debug for MonomialSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({})_{} minus {{", self.n, self.d)?;
        for (i, m) in self.complement.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for MonomialSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Complement-encoded JSON form `{ "n": .., "d": .., "complement": [[..], ..] }`.
#[derive(Serialize, Deserialize)]
struct SubspaceJson {
    n: usize,
    d: u32,
    complement: Vec<Monomial>,
}

impl Serialize for MonomialSubspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceJson { n: self.n, d: self.d, complement: self.complement.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialSubspace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SubspaceJson::deserialize(d)?;
        MonomialSubspace::from_complement(raw.n, raw.d, raw.complement).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    fn sub(n: usize, d: u32, comp: &[&[u32]]) -> MonomialSubspace {
        MonomialSubspace::from_complement(n, d, comp.iter().map(|e| m(e))).unwrap()
    }

    /// Every non-empty set of variables supports some member.
    fn bpf_by_support(u: &MonomialSubspace) -> bool {
        let members = u.members();
        (1u32..(1 << u.n())).all(|mask| {
            members.iter().any(|mm| mm.exponents().iter().enumerate().all(|(i, &e)| e == 0 || mask & (1 << i) != 0))
        })
    }

    fn all_subspaces(n: usize, d: u32) -> Vec<MonomialSubspace> {
        let basis = enumerate_monomials(n, d).unwrap();
        (0u64..(1 << basis.len()))
            .map(|mask| {
                let comp = basis.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, b)| *b);
                MonomialSubspace::from_complement(n, d, comp).unwrap()
            })
            .collect()
    }

    #[test]
    fn codim_basics() {
        assert_eq!(MonomialSubspace::full(3, 4).unwrap().codim(), 0);
        assert_eq!(MonomialSubspace::zero(3, 2).unwrap().dim(), 0);
        let u = sub(3, 3, &[&[3, 0, 0]]);
        assert_eq!(u.codim(), 1);
        assert_eq!(u.dim(), 9);
        assert!(MonomialSubspace::from_complement(3, 3, [m(&[2, 0, 0])]).is_err());
    }

    #[test]
    fn square_examples() {
        let u = sub(2, 2, &[&[1, 1]]);
        let sq = u.square().unwrap();
        assert_eq!(sq.codim(), 2);
        assert_eq!(sq.complement(), &[m(&[1, 3]), m(&[3, 1])]);
        assert_eq!(MonomialSubspace::full(3, 3).unwrap().codim_square().unwrap(), 0);
        let ext = sub(3, 3, &[&[3, 0, 0], &[2, 1, 0], &[2, 0, 1]]);
        assert_eq!(ext.codim_square().unwrap(), 10);
    }

    #[test]
    fn product_strategies_agree() {
        for u in all_subspaces(2, 3) {
            for v in [sub(2, 2, &[&[2, 0]]), sub(2, 2, &[&[1, 1]]), MonomialSubspace::full(2, 2).unwrap()] {
                assert_eq!(u.product_pairwise(&v).unwrap(), u.product_by_factorization(&v).unwrap());
            }
        }
        for u in all_subspaces(3, 2) {
            assert_eq!(u.product_pairwise(&u).unwrap(), u.product_by_factorization(&u).unwrap(), "{u}");
        }
        assert!(sub(2, 2, &[]).product(&sub(3, 2, &[])).is_err());
    }

    #[test]
    fn product_is_commutative_and_monotone() {
        let subs = all_subspaces(3, 2);
        let v = sub(3, 2, &[&[1, 1, 0], &[0, 0, 2]]);
        for u in subs.iter().step_by(3) {
            let uv = u.product(&v).unwrap();
            assert_eq!(uv, v.product(u).unwrap());
            for w in subs.iter().step_by(5) {
                if u.is_subspace_of(w) {
                    assert!(uv.is_subspace_of(&w.product(&v).unwrap()));
                }
            }
        }
    }

    #[test]
    fn base_point_free_examples() {
        assert!(sub(2, 2, &[&[1, 1]]).is_base_point_free());
        assert!(!sub(3, 4, &[&[4, 0, 0]]).is_base_point_free());
        assert!(MonomialSubspace::full(4, 3).unwrap().is_base_point_free());
    }

    #[test]
    fn base_point_criterion_matches_support_oracle() {
        for (n, d) in [(1, 1), (1, 3), (2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)] {
            for u in all_subspaces(n, d) {
                assert_eq!(u.is_base_point_free(), bpf_by_support(&u), "{u}");
            }
        }
    }

    #[test]
    fn hilbert_function_examples() {
        let u = sub(3, 2, &[&[1, 1, 0], &[1, 0, 1]]);
        let hf = u.ideal_hilbert_function(4).unwrap();
        assert_eq!(hf.values, vec![1, 3, 2, 0, 0]);
        let full = MonomialSubspace::full(3, 3).unwrap().ideal_hilbert_function(5).unwrap();
        assert_eq!(full.values, vec![1, 3, 6, 0, 0, 0]);
        let u = sub(2, 2, &[&[2, 0]]);
        assert_eq!(u.ideal_hilbert_function(5).unwrap().values, vec![1, 2, 1, 1, 1, 1]);
        assert!(u.ideal_hilbert_function(1).is_err());
    }

    #[test]
    fn hilbert_function_matches_pairwise_products() {
        for u in all_subspaces(3, 2).into_iter().step_by(7) {
            let hf = u.ideal_hilbert_function(5).unwrap();
            let mut layer = u.clone();
            for i in 2..=5u32 {
                assert_eq!(hf.values[i as usize], layer.codim(), "{u} degree {i}");
                layer = layer.product_pairwise(&MonomialSubspace::full(3, 1).unwrap()).unwrap();
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let ext4 = sub(3, 4, &[&[4, 0, 0], &[3, 1, 0], &[3, 0, 1]]);
        let ext3 = sub(3, 3, &[&[3, 0, 0], &[2, 1, 0], &[2, 0, 1]]);
        assert_eq!(ext4.variable_quotient(1).unwrap(), ext3);
        assert_eq!(MonomialSubspace::full(3, 4).unwrap().variable_quotient(2).unwrap(), MonomialSubspace::full(3, 3).unwrap());
        assert!(MonomialSubspace::full(3, 0).unwrap().variable_quotient(1).is_err());
        assert!(ext4.variable_quotient(4).is_err());
    }

    #[test]
    fn lift_and_restrict() {
        let u = sub(2, 2, &[&[1, 1]]);
        assert_eq!(u.lift(0).unwrap(), u);
        let lifted = u.lift(1).unwrap();
        assert_eq!(lifted.n(), 3);
        assert_eq!(lifted.codim(), 1);
        assert_eq!(lifted.codim_square().unwrap(), 2);

        let w = sub(3, 3, &[&[3, 0, 0], &[2, 1, 0]]);
        let r = w.restrict_vars(2).unwrap();
        assert_eq!(r, sub(2, 3, &[&[3, 0], &[2, 1]]));
        assert_eq!(w.restrict_vars(3).unwrap(), w);
        assert!(w.restrict_vars(1).is_err());
        assert!(w.restrict_vars(4).is_err());
    }

    #[test]
    fn json_round_trip() {
        let u = sub(3, 3, &[&[3, 0, 0], &[2, 1, 0]]);
        let text = serde_json::to_string(&u).unwrap();
        assert_eq!(text, r#"{"n":3,"d":3,"complement":[[2,1,0],[3,0,0]]}"#);
        let back: MonomialSubspace = serde_json::from_str(&text).unwrap();
        assert_eq!(back, u);
    }
}
