//! Strongly stable monomial subspaces.
//!
//! `U ⊂ A(n)_d` is strongly stable when `M in U`, `x_i | M` and `j > i` imply
//! `x_j M / x_i in U`. Equivalently the complement is closed under the
//! reverse moves `x_j M / x_i`, `j < i`: it is an order ideal ("downset") of
//! the Borel move poset, and every non-empty one contains `x1^d`.
//!
//! Enumeration at fixed codimension `k` is a reverse search over downsets of
//! size `k`: the parent of a downset drops its lex-largest maximal element,
//! so every downset is produced exactly once without a global dedup table.

use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::monomial::{dim_component, Monomial};
use crate::subspace::MonomialSubspace;

/// Complement-side check: the complement is closed under `x_j M / x_i`, `j < i`.
pub fn is_strongly_stable(u: &MonomialSubspace) -> bool {
    let n = u.n();
    u.complement().iter().all(|m| (2..=n).all(|i| (1..i).all(|j| m.shift_var(i, j).is_none_or(|t| u.in_complement(&t)))))
}

/// Member-side check straight from the definition.
pub fn is_strongly_stable_by_members(u: &MonomialSubspace) -> bool {
    let n = u.n();
    u.members()
        .iter()
        .all(|m| (1..n).all(|i| (i + 1..=n).all(|j| m.shift_var(i, j).is_none_or(|t| u.contains(&t)))))
}

/// All strongly stable subspaces of `A(n)_d` of codimension `k`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StableEnumeration {
    pub n: usize,
    pub d: u32,
    pub k: u64,
    pub subspaces: Vec<MonomialSubspace>,
    /// Sorted and free of duplicates.
    pub canonical: bool,
}

impl StableEnumeration {
    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }
}

/// Default cap on the number of enumerated subspaces.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[inline]
fn down_covers(m: &Monomial) -> impl Iterator<Item = Monomial> + '_ {
    (2..=m.n()).filter_map(move |i| m.shift_var(i, i - 1))
}

#[inline]
fn up_covers(m: &Monomial) -> impl Iterator<Item = Monomial> + '_ {
    (1..m.n()).filter_map(move |i| m.shift_var(i, i + 1))
}

/// A partially built downset during the reverse search.
#[derive(Clone, Debug)]
pub(crate) struct Downset {
    elems: Vec<Monomial>,
}

impl Downset {
    fn contains(&self, m: &Monomial) -> bool {
        self.elems.contains(m)
    }

    fn is_maximal(&self, m: &Monomial) -> bool {
        up_covers(m).all(|u| !self.contains(&u))
    }

    /// Children in the reverse-search tree.
    fn children(&self) -> Vec<Monomial> {
        let mut cands: Vec<Monomial> = Vec::new();
        for y in &self.elems {
            for e in up_covers(y) {
                if !self.contains(&e) && !cands.contains(&e) && down_covers(&e).all(|c| self.contains(&c)) {
                    cands.push(e);
                }
            }
        }
        cands.retain(|e| {
            self.elems.iter().all(|y| {
                // y stays maximal after adding e unless e covers it
                !self.is_maximal(y) || down_covers(e).any(|c| c == *y) || *e > *y
            })
        });
        cands
    }

    pub(crate) fn into_complement(mut self, n: usize, d: u32) -> MonomialSubspace {
        self.elems.sort_unstable_by(|a, b| b.cmp(a));
        MonomialSubspace::from_sorted_complement(n, d, self.elems)
    }
}

/// Reverse-search driver shared by enumeration and search.
pub(crate) struct StableWalker {
    pub n: usize,
    pub d: u32,
    pub k: usize,
}

impl StableWalker {
    pub fn new(n: usize, d: u32, k: u64) -> Result<Self> {
        MonomialSubspace::full(n, d)?;
        Ok(Self { n, d, k: k as usize })
    }

    /// Whether any codim-`k` subspace exists at all.
    pub fn in_range(&self) -> bool {
        (self.k as u64) <= dim_component(self.n, self.d as usize)
    }

    pub fn root(&self) -> Downset {
        if self.k == 0 {
            Downset { elems: Vec::new() }
        } else {
            Downset { elems: vec![Monomial::x1_power(self.n, self.d)] }
        }
    }

    /// All tree nodes at `depth` (size) below `node`, or the leaves reached
    /// earlier when `depth >= k`.
    pub fn frontier(&self, depth: usize) -> Vec<Downset> {
        if !self.in_range() {
            return Vec::new();
        }
        let mut level = vec![self.root()];
        let target = depth.min(self.k).max(level[0].elems.len());
        while level.first().is_some_and(|s| s.elems.len() < target) {
            level = level
                .into_iter()
                .flat_map(|node| {
                    node.children().into_iter().map(move |e| {
                        let mut next = node.clone();
                        next.elems.push(e);
                        next
                    })
                })
                .collect();
        }
        level
    }

    /// Visits every size-`k` downset below `node`.
    pub fn walk<B>(&self, node: &mut Downset, visit: &mut impl FnMut(&Downset) -> ControlFlow<B>) -> ControlFlow<B> {
        if node.elems.len() == self.k {
            return visit(node);
        }
        for e in node.children() {
            node.elems.push(e);
            let r = self.walk(node, visit);
            node.elems.pop();
            r?;
        }
        ControlFlow::Continue(())
    }
}

/// Enumerates every strongly stable subspace of `A(n)_d` with codimension `k`,
/// in canonical order. Out-of-range `k` yields an empty enumeration.
pub fn enumerate_strongly_stable(n: usize, d: u32, k: u64) -> Result<StableEnumeration> {
    enumerate_strongly_stable_with_budget(n, d, k, DEFAULT_BUDGET)
}

pub fn enumerate_strongly_stable_with_budget(n: usize, d: u32, k: u64, budget: u64) -> Result<StableEnumeration> {
    let walker = StableWalker::new(n, d, k)?;
    let mut subspaces = Vec::new();
    if walker.in_range() {
        let mut root = walker.root();
        let flow = walker.walk(&mut root, &mut |node| {
            if subspaces.len() as u64 >= budget {
                return ControlFlow::Break(());
            }
            subspaces.push(node.clone().into_complement(n, d));
            ControlFlow::Continue(())
        });
        if flow.is_break() {
            return Err(Error::BudgetExceeded {
                budget,
                detail: format!("enumeration of codim-{k} strongly stable subspaces of A({n})_{d} has more than {budget} members"),
            });
        }
    }
    subspaces.sort_unstable_by(|a, b| a.complement().cmp(b.complement()));
    Ok(StableEnumeration { n, d, k, subspaces, canonical: true })
}

/// Counts the strongly stable subspaces of codimension `k` without storing them.
pub fn count_strongly_stable(n: usize, d: u32, k: u64) -> Result<u64> {
    let walker = StableWalker::new(n, d, k)?;
    if !walker.in_range() {
        return Ok(0);
    }
    let mut count = 0u64;
    let mut root = walker.root();
    let _ = walker.walk::<()>(&mut root, &mut |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    Ok(count)
}

/// The complement of `{x1^d, x1^(d-1) x2, ..., x1^(d-1) xk}`, for `k <= n` and `k <= d`.
pub fn extremal_subspace(n: usize, d: u32, k: u64) -> Result<MonomialSubspace> {
    if k as usize > n || k > u64::from(d) {
        return Err(Error::Regime(format!(
            "extremal subspace needs n, d >= k (got n={n}, d={d}, k={k})"
        )));
    }
    let mut comp = Vec::with_capacity(k as usize);
    if k >= 1 {
        let x1d = Monomial::x1_power(n, d);
        comp.push(x1d);
        for i in 2..=k as usize {
            comp.push(x1d.shift_var(1, i).expect("x1 divides"));
        }
    }
    MonomialSubspace::from_complement(n, d, comp)
}

/// A strongly stable subspace one dimension larger that contains `u`.
///
/// Starts from `x1^d` (always outside a non-zero `u`) and repeatedly moves to
/// `x_(j+1) M / x_j` for the smallest `j` whose move stays outside `u`; the
/// first monomial with no such move is adjoined. The zero subspace is
/// extended by `xn^d`.
pub fn extend_stable(u: &MonomialSubspace) -> Result<MonomialSubspace> {
    if !is_strongly_stable(u) {
        return Err(invalid("extend_stable needs a strongly stable subspace"));
    }
    if u.codim() == 0 {
        return Err(invalid("the full space cannot be extended"));
    }
    let n = u.n();
    let d = u.degree();
    let added = if u.dim() == 0 {
        Monomial::var_power(n, n, d)
    } else {
        let mut cur = Monomial::x1_power(n, d);
        loop {
            let next = (1..n).filter(|&j| cur.exponent(j) > 0).find_map(|j| {
                let up = cur.shift_var(j, j + 1).expect("x_j divides");
                u.in_complement(&up).then_some(up)
            });
            match next {
                Some(up) => cur = up,
                None => break cur,
            }
        }
    };
    let comp: Vec<Monomial> = u.complement().iter().copied().filter(|m| *m != added).collect();
    Ok(MonomialSubspace::from_sorted_complement(n, d, comp))
}

/// `x1 U + C[x2..xn]_(d+1)`: complement `x1 * S`. Preserves strong stability
/// and satisfies `(V : x1) = U`.
pub fn raise_degree(u: &MonomialSubspace) -> MonomialSubspace {
    let comp = u.complement().iter().map(|m| m.times_var(1)).collect();
    MonomialSubspace::from_sorted_complement(u.n(), u.degree() + 1, comp)
}

/// Complement of `U^2` for a strongly stable `U`.
///
/// `U^2` is strongly stable as well, so its complement is a downset rooted
/// at `x1^(2d)`; it is grown by a search over up-moves. A degree-`2d`
/// monomial `N` is outside `U^2` iff every degree-`d` divisor `M` of `N` has
/// `M` or `N / M` in the complement of `U`.
pub fn stable_square_complement(u: &MonomialSubspace) -> Vec<Monomial> {
    let n = u.n();
    let d = u.degree();
    if u.codim() == 0 {
        return Vec::new();
    }
    let outside_square = |big: &Monomial| {
        big.for_each_divisor(d, |m| {
            if u.in_complement(&m) || u.in_complement(&big.div(&m).expect("divisor")) {
                ControlFlow::Continue(())
            } else {
                ControlFlow::Break(())
            }
        })
        .is_continue()
    };
    let root = Monomial::x1_power(n, 2 * d);
    let mut found: HashSet<Monomial> = HashSet::new();
    found.insert(root);
    let mut stack = vec![root];
    while let Some(cur) = stack.pop() {
        for up in up_covers(&cur) {
            if found.contains(&up) || !down_covers(&up).all(|c| found.contains(&c)) {
                continue;
            }
            if outside_square(&up) {
                found.insert(up);
                stack.push(up);
            }
        }
    }
    let mut out: Vec<Monomial> = found.into_iter().collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `codim U^2` for a strongly stable `U`.
pub fn stable_codim_square(u: &MonomialSubspace) -> u64 {
    stable_square_complement(u).len() as u64
}

/// `U^2` for a strongly stable `U`.
pub fn stable_square(u: &MonomialSubspace) -> MonomialSubspace {
    MonomialSubspace::from_sorted_complement(u.n(), 2 * u.degree(), stable_square_complement(u))
}
