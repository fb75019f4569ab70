//! Computation of `m(n, d, k)` and of the base-point-free monomial analogue.
//!
//! `m(n, d, k)` is attained by a strongly stable subspace, so the search runs
//! over the strongly stable enumeration only. The base-point-free variant is
//! restricted to monomial candidates and is therefore only a lower bound for
//! the true value over all base-point-free subspaces.

use std::fmt::Write as _;
use std::ops::{ControlFlow, RangeInclusive};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::monomial::{binomial_u64, dim_component, enumerate_monomials, Monomial};
use crate::reference::{reference_m, ReferenceCell};
use crate::stable::{self, StableWalker, DEFAULT_BUDGET};
use crate::subspace::MonomialSubspace;

/// Environment variable overriding the candidate budget.
pub const BUDGET_ENV: &str = "STABLESQ_BUDGET";

/// Default number of witnesses kept per result.
pub const DEFAULT_WITNESS_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Maximum number of candidate subspaces examined by one search.
    pub budget: u64,
    pub witness_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, witness_cap: DEFAULT_WITNESS_CAP }
    }
}

impl SearchConfig {
    /// Default configuration with the budget taken from `STABLESQ_BUDGET` when set.
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(b) = std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            cfg.budget = b;
        }
        cfg
    }
}

/// Which candidate family a search ranged over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Restriction {
    StronglyStable,
    BpfMonomial,
}

/// Result of a maximisation of `codim U^2`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    pub d: u32,
    pub k: u64,
    /// `None` when the candidate family is empty.
    pub value: Option<u64>,
    /// Maximisers in canonical order, capped by the configured witness cap.
    pub witnesses: Vec<MonomialSubspace>,
    /// Total number of maximisers.
    pub witness_count: u64,
    /// Number of candidates examined.
    pub searched: u64,
    pub restricted_to: Restriction,
}

impl SearchResult {
    /// A base-point-free monomial search only bounds the true `m0` from below.
    pub fn is_lower_bound(&self) -> bool {
        self.restricted_to == Restriction::BpfMonomial
    }
}

/// Running maximum with a capped, canonically ordered witness list.
#[derive(Clone, Debug, Default)]
struct Best {
    value: Option<u64>,
    witnesses: Vec<MonomialSubspace>,
    count: u64,
}

impl Best {
    fn offer(&mut self, value: u64, witness: impl FnOnce() -> MonomialSubspace, cap: usize) {
        match self.value {
            Some(v) if v > value => return,
            Some(v) if v == value => self.count += 1,
            _ => {
                self.value = Some(value);
                self.witnesses.clear();
                self.count = 1;
            }
        }
        self.witnesses.push(witness());
        if self.witnesses.len() > 2 * cap.max(1) {
            self.trim(cap);
        }
    }

    fn trim(&mut self, cap: usize) {
        self.witnesses.sort_unstable_by(|a, b| a.complement().cmp(b.complement()));
        self.witnesses.truncate(cap);
    }

    fn merge(mut self, other: Best, cap: usize) -> Best {
        match (self.value, other.value) {
            (_, None) => {}
            (None, Some(_)) => self = other,
            (Some(a), Some(b)) if b > a => self = other,
            (Some(a), Some(b)) if a == b => {
                self.count += other.count;
                self.witnesses.extend(other.witnesses);
            }
            _ => {}
        }
        self.trim(cap);
        self
    }
}

fn budget_error(budget: u64, what: String) -> Error {
    Error::BudgetExceeded { budget, detail: what }
}

/// `m(n, d, k)` with the default configuration.
pub fn compute_m(n: usize, d: u32, k: u64) -> Result<SearchResult> {
    compute_m_with(n, d, k, &SearchConfig::from_env())
}

/// `m(n, d, k)`: the maximum of `codim U^2` over strongly stable `U` of
/// codimension `k`, together with every maximiser.
pub fn compute_m_with(n: usize, d: u32, k: u64, cfg: &SearchConfig) -> Result<SearchResult> {
    let dim = dim_component(n, d as usize);
    if k == 0 || k > dim {
        return Err(invalid(format!("m(n,d,k) needs 1 <= k <= dim A({n})_{d} = {dim}, got k = {k}")));
    }
    let walker = StableWalker::new(n, d, k)?;
    let searched = AtomicU64::new(0);
    let exceeded = AtomicBool::new(false);
    let cap = cfg.witness_cap;
    let frontier = walker.frontier(4);
    let best = frontier
        .into_par_iter()
        .map(|mut node| {
            let mut best = Best::default();
            let _ = walker.walk(&mut node, &mut |leaf| {
                if searched.fetch_add(1, Ordering::Relaxed) >= cfg.budget {
                    exceeded.store(true, Ordering::Relaxed);
                    return ControlFlow::Break(());
                }
                let u = leaf.clone().into_complement(n, d);
                let value = stable::stable_codim_square(&u);
                best.offer(value, || u, cap);
                ControlFlow::Continue(())
            });
            best
        })
        .reduce(Best::default, |a, b| a.merge(b, cap));
    if exceeded.load(Ordering::Relaxed) {
        return Err(budget_error(
            cfg.budget,
            format!("more than {} strongly stable subspaces of codim {k} in A({n})_{d}", cfg.budget),
        ));
    }
    Ok(SearchResult {
        n,
        d,
        k,
        value: best.value,
        witnesses: best.witnesses,
        witness_count: best.count,
        searched: searched.load(Ordering::Relaxed),
        restricted_to: Restriction::StronglyStable,
    })
}

/// `C(k+2, 3) + (n-k) k`, the value of `m(n, d, k)` whenever `n, d >= k`.
pub fn closed_form_m(n: usize, d: u32, k: u64) -> Result<u64> {
    if k == 0 || (n as u64) < k || u64::from(d) < k {
        return Err(Error::Regime(format!("closed form for m(n,d,k) needs k >= 1 and n,d >= k (got n={n}, d={d}, k={k})")));
    }
    Ok(binomial_u64(k + 2, 3) + (n as u64 - k) * k)
}

/// `n r - C(n, 2)`: lower bound on `dim U^2` for base-point-free `U` of dimension `r`.
pub fn small_subspace_bound(n: usize, r: u64) -> Result<u64> {
    let n64 = n as u64;
    if n == 0 || r < n64 {
        return Err(invalid(format!("base-point-free forces dim U >= n (got n={n}, r={r})")));
    }
    Ok(n64 * r - binomial_u64(n64, 2))
}

/// `k^2 + C(k+2, 3)`: upper bound on `codim U^2` for base-point-free `U` of
/// codimension `k <= d - 1`, independent of `n` and `d`.
pub fn main_bound(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(invalid("main bound needs k >= 1"));
    }
    Ok(k * k + binomial_u64(k + 2, 3))
}

/// Index of degree-`2d` monomials with few degree-`d` divisors, used to
/// compute `codim U^2` from a small complement.
///
/// A monomial `N` lies outside `U^2` iff every factorization `N = M T` has
/// `M` or `T` in the complement `S`; that forces `N` to have at most `2|S|`
/// distinct divisors of degree `d`, one of them in `S`.
pub struct SquareIndex {
    n: usize,
    d: u32,
    basis: Vec<Monomial>,
    /// For each thin monomial: its factorizations as basis-index pairs.
    factorizations: Vec<Vec<(u32, u32)>>,
    /// For each basis index: thin monomials it divides.
    by_divisor: Vec<Vec<u32>>,
}

impl SquareIndex {
    /// Index for complements of size at most `max_codim`.
    pub fn new(n: usize, d: u32, max_codim: usize) -> Result<Self> {
        let basis = enumerate_monomials(n, d)?;
        let index_of = |m: &Monomial| basis.binary_search_by(|p| m.cmp(p)).expect("basis monomial") as u32;
        let limit = 2 * max_codim;
        let mut factorizations = Vec::new();
        let mut by_divisor = vec![Vec::new(); basis.len()];
        for big in enumerate_monomials(n, 2 * d)? {
            let mut divs = Vec::new();
            let flow = big.for_each_divisor(d, |m| {
                divs.push(m);
                if divs.len() > limit {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            if flow.is_break() {
                continue;
            }
            let id = factorizations.len() as u32;
            let pairs: Vec<(u32, u32)> =
                divs.iter().map(|m| (index_of(m), index_of(&big.div(m).expect("divisor")))).collect();
            for &(a, _) in &pairs {
                by_divisor[a as usize].push(id);
            }
            factorizations.push(pairs);
        }
        Ok(Self { n, d, basis, factorizations, by_divisor })
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// `codim U^2` for the subspace whose complement is `comp` (basis indices, sorted).
    pub fn codim_square(&self, comp: &[u32]) -> u64 {
        let in_comp = |i: u32| comp.binary_search(&i).is_ok();
        let mut seen: Vec<u32> = Vec::new();
        let mut count = 0;
        for &s in comp {
            for &id in &self.by_divisor[s as usize] {
                if seen.contains(&id) {
                    continue;
                }
                seen.push(id);
                if self.factorizations[id as usize].iter().all(|&(a, b)| in_comp(a) || in_comp(b)) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn subspace(&self, comp: &[u32]) -> MonomialSubspace {
        MonomialSubspace::from_complement(self.n, self.d, comp.iter().map(|&i| self.basis[i as usize]))
            .expect("basis monomials")
    }
}

/// Lower bound for `m0(n, d, k)` from base-point-free monomial subspaces.
pub fn compute_m0_monomial(n: usize, d: u32, k: u64) -> Result<SearchResult> {
    compute_m0_monomial_with(n, d, k, &SearchConfig::from_env())
}

/// Maximum of `codim U^2` over every base-point-free monomial `U ⊂ A(n)_d`
/// of codimension `k` (complements avoiding all `x_i^d`).
pub fn compute_m0_monomial_with(n: usize, d: u32, k: u64, cfg: &SearchConfig) -> Result<SearchResult> {
    let dim = dim_component(n, d as usize);
    if k == 0 || k > dim {
        return Err(invalid(format!("m0 needs 1 <= k <= dim A({n})_{d} = {dim}, got k = {k}")));
    }
    let index = SquareIndex::new(n, d, k as usize)?;
    let allowed: Vec<u32> =
        (0..index.basis().len() as u32).filter(|&i| !index.basis()[i as usize].is_pure_power()).collect();
    let total = binomial_u64(allowed.len() as u64, k);
    if total > cfg.budget {
        return Err(budget_error(
            cfg.budget,
            format!("{total} base-point-free monomial subspaces of codim {k} in A({n})_{d}"),
        ));
    }
    let k = k as usize;
    let cap = cfg.witness_cap;
    let best = (0..allowed.len())
        .into_par_iter()
        .map(|first| {
            let mut best = Best::default();
            if allowed.len() - first < k {
                return best;
            }
            let mut pick = vec![first];
            combos(&allowed, first + 1, k, &mut pick, &mut |idx| {
                let mut comp: Vec<u32> = idx.iter().map(|&i| allowed[i]).collect();
                comp.sort_unstable();
                let v = index.codim_square(&comp);
                best.offer(v, || index.subspace(&comp), cap);
            });
            best
        })
        .reduce(Best::default, |a, b| a.merge(b, cap));
    Ok(SearchResult {
        n,
        d,
        k: k as u64,
        value: best.value,
        witnesses: best.witnesses,
        witness_count: best.count,
        searched: total,
        restricted_to: Restriction::BpfMonomial,
    })
}

fn combos(pool: &[u32], start: usize, k: usize, pick: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    let need = k - pick.len();
    for i in start..=pool.len().saturating_sub(need) {
        if i >= pool.len() {
            break;
        }
        pick.push(i);
        combos(pool, i + 1, k, pick, f);
        pick.pop();
    }
}

/// One step of the degree-reduction chain: a maximiser `U` in degree `d` and
/// its quotient `V = (U : x1)` in degree `d - 1`.
#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub d: u32,
    pub witness: MonomialSubspace,
    pub quotient: MonomialSubspace,
    pub codim_square: u64,
    pub quotient_codim_square: u64,
    pub quotient_is_stable: bool,
    /// `V` strongly stable of the same codimension with `codim V^2 <= codim U^2`.
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeStabilityReport {
    pub n: usize,
    pub k: u64,
    /// `(d, m(n, d, k))` for each degree in the range.
    pub values: Vec<(u32, u64)>,
    pub constant: bool,
    pub chain: Vec<ChainStep>,
}

impl DegreeStabilityReport {
    pub fn passed(&self) -> bool {
        self.constant && self.chain.iter().all(|s| s.holds)
    }
}

/// Computes `m(n, d, k)` for each `d` in the range (all `d >= k`) and checks
/// that it does not depend on `d`, recording the `(U : x1)` chain.
pub fn verify_degree_stability(
    n: usize,
    k: u64,
    degrees: RangeInclusive<u32>,
    cfg: &SearchConfig,
) -> Result<DegreeStabilityReport> {
    if u64::from(*degrees.start()) < k {
        return Err(Error::Regime(format!("degree stability needs d >= k (got d = {}, k = {k})", degrees.start())));
    }
    let mut values = Vec::new();
    let mut chain = Vec::new();
    for d in degrees {
        let res = compute_m_with(n, d, k, cfg)?;
        let value = res.value.expect("non-empty enumeration");
        values.push((d, value));
        if u64::from(d) > k {
            for w in &res.witnesses {
                let quotient = w.variable_quotient(1)?;
                let quotient_is_stable = stable::is_strongly_stable(&quotient);
                let qv = stable::stable_codim_square(&quotient);
                let holds = quotient_is_stable && quotient.codim() == k && qv <= value;
                chain.push(ChainStep {
                    d,
                    witness: w.clone(),
                    quotient,
                    codim_square: value,
                    quotient_codim_square: qv,
                    quotient_is_stable,
                    holds,
                });
            }
        }
    }
    let constant = values.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(DegreeStabilityReport { n, k, values, constant, chain })
}

/// How a computed cell compares with the published table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "status", content = "detail")]
pub enum CellStatus {
    Match,
    Mismatch,
    /// Outside the published range.
    Unreferenced,
    /// `k >= dim A(n)_d`: no non-zero subspace of that codimension.
    Excluded,
    /// Not computed, e.g. because the budget ran out.
    Gap(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCell {
    pub n: usize,
    pub d: u32,
    pub k: u64,
    pub value: Option<u64>,
    pub witness_count: u64,
    pub searched: u64,
    pub reference: Option<u64>,
    pub status: CellStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub cells: Vec<TableCell>,
}

impl TableReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &TableCell> {
        self.cells.iter().filter(|c| c.status == CellStatus::Mismatch)
    }

    pub fn gaps(&self) -> impl Iterator<Item = &TableCell> {
        self.cells.iter().filter(|c| matches!(c.status, CellStatus::Gap(_)))
    }

    /// No mismatches and no gaps among referenced cells.
    pub fn all_match(&self) -> bool {
        self.mismatches().next().is_none() && self.gaps().next().is_none()
    }

    pub fn matched(&self) -> usize {
        self.cells.iter().filter(|c| matches!(c.status, CellStatus::Match)).count()
    }

    pub fn get(&self, n: usize, d: u32, k: u64) -> Option<&TableCell> {
        self.cells.iter().find(|c| c.n == n && c.d == d && c.k == k)
    }

    /// CSV with header `n,d,k,value,witness_count`; blank value for excluded or gap cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,d,k,value,witness_count\n");
        for c in &self.cells {
            let v = c.value.map(|v| v.to_string()).unwrap_or_default();
            let _ = writeln!(out, "{},{},{},{},{}", c.n, c.d, c.k, v, c.witness_count);
        }
        out
    }

    /// One block per `n` with rows `k` and columns `d`, as in the published layout.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut ns: Vec<usize> = self.cells.iter().map(|c| c.n).collect();
        ns.dedup();
        ns.sort_unstable();
        ns.dedup();
        for n in ns {
            let mut ds: Vec<u32> = self.cells.iter().filter(|c| c.n == n).map(|c| c.d).collect();
            ds.sort_unstable();
            ds.dedup();
            let mut ks: Vec<u64> = self.cells.iter().filter(|c| c.n == n).map(|c| c.k).collect();
            ks.sort_unstable();
            ks.dedup();
            let _ = writeln!(out, "n = {n}");
            let _ = write!(out, "{:>6}", "k\\d");
            for d in &ds {
                let _ = write!(out, "{d:>5}");
            }
            out.push('\n');
            for k in &ks {
                let _ = write!(out, "{k:>6}");
                for d in &ds {
                    let cell = self.get(n, *d, *k).and_then(|c| c.value).map_or("-".to_string(), |v| v.to_string());
                    let _ = write!(out, "{cell:>5}");
                }
                out.push('\n');
            }
            out.push('\n');
        }
        out
    }

    /// Per-cell comparison with the published values.
    pub fn diff_report(&self) -> String {
        let mut out = String::new();
        for c in &self.cells {
            let got = c.value.map_or("-".to_string(), |v| v.to_string());
            let want = c.reference.map_or("-".to_string(), |v| v.to_string());
            let status = match &c.status {
                CellStatus::Match => "ok".to_string(),
                CellStatus::Mismatch => "MISMATCH".to_string(),
                CellStatus::Unreferenced => "unreferenced".to_string(),
                CellStatus::Excluded => "excluded".to_string(),
                CellStatus::Gap(why) => format!("GAP ({why})"),
            };
            let _ = writeln!(out, "n={} d={} k={}: computed {got}, published {want}: {status}", c.n, c.d, c.k);
        }
        let referenced = self.cells.iter().filter(|c| c.status != CellStatus::Unreferenced).count();
        let _ = writeln!(
            out,
            "{} of {referenced} published cells match, {} mismatches, {} gaps",
            self.matched(),
            self.mismatches().count(),
            self.gaps().count()
        );
        out
    }
}

/// Computes the `m` table over the given ranges and compares each cell with
/// the published values. Budget failures leave explicit gaps.
pub fn verify_table(
    ns: RangeInclusive<usize>,
    ds: RangeInclusive<u32>,
    ks: RangeInclusive<u64>,
    cfg: &SearchConfig,
) -> Result<TableReport> {
    let mut cells = Vec::new();
    for n in ns {
        for d in ds.clone() {
            for k in ks.clone() {
                let dim = dim_component(n, d as usize);
                let reference = reference_m(n, d, k);
                let ref_value = match reference {
                    Some(ReferenceCell::Value(v)) => Some(v),
                    _ => None,
                };
                if k == 0 || k >= dim {
                    let status = match reference {
                        None => CellStatus::Unreferenced,
                        Some(ReferenceCell::Blank) => CellStatus::Match,
                        Some(ReferenceCell::Value(_)) => CellStatus::Mismatch,
                    };
                    let status = if status == CellStatus::Unreferenced { CellStatus::Excluded } else { status };
                    cells.push(TableCell {
                        n,
                        d,
                        k,
                        value: None,
                        witness_count: 0,
                        searched: 0,
                        reference: ref_value,
                        status,
                    });
                    continue;
                }
                let cell = match compute_m_with(n, d, k, cfg) {
                    Ok(res) => {
                        let status = match reference {
                            None => CellStatus::Unreferenced,
                            Some(ReferenceCell::Value(v)) if Some(v) == res.value => CellStatus::Match,
                            Some(_) => CellStatus::Mismatch,
                        };
                        TableCell {
                            n,
                            d,
                            k,
                            value: res.value,
                            witness_count: res.witness_count,
                            searched: res.searched,
                            reference: ref_value,
                            status,
                        }
                    }
                    Err(Error::BudgetExceeded { detail, .. }) => TableCell {
                        n,
                        d,
                        k,
                        value: None,
                        witness_count: 0,
                        searched: 0,
                        reference: ref_value,
                        status: CellStatus::Gap(detail),
                    },
                    Err(e) => return Err(e),
                };
                cells.push(cell);
            }
        }
    }
    Ok(TableReport { cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stable::extremal_subspace;

    fn quiet() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn m_examples() {
        assert_eq!(compute_m_with(3, 4, 5, &quiet()).unwrap().value, Some(17));
        assert_eq!(compute_m_with(4, 5, 6, &quiet()).unwrap().value, Some(31));
        for n in 2..=6 {
            assert_eq!(compute_m_with(n, 4, 1, &quiet()).unwrap().value, Some(n as u64));
        }
        assert!(compute_m_with(3, 2, 0, &quiet()).is_err());
        assert!(compute_m_with(3, 2, 7, &quiet()).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_m(3, 3, 3).unwrap(), 10);
        assert_eq!(closed_form_m(5, 5, 5).unwrap(), 35);
        for n in 1..=7 {
            assert_eq!(closed_form_m(n, 4, 1).unwrap(), n as u64);
        }
        assert!(matches!(closed_form_m(2, 5, 3), Err(Error::Regime(_))));
        assert!(matches!(closed_form_m(5, 2, 3), Err(Error::Regime(_))));
    }

    #[test]
    fn unique_witness_is_extremal() {
        let res = compute_m_with(4, 4, 3, &quiet()).unwrap();
        assert_eq!(res.witness_count, 1);
        assert_eq!(res.witnesses, vec![extremal_subspace(4, 4, 3).unwrap()]);
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = SearchConfig { budget: 3, witness_cap: 4 };
        assert!(matches!(compute_m_with(4, 4, 5, &cfg), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(compute_m0_monomial_with(4, 4, 3, &cfg), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn witness_cap_keeps_total_count() {
        let cfg = SearchConfig { budget: DEFAULT_BUDGET, witness_cap: 2 };
        let res = compute_m0_monomial_with(4, 3, 1, &cfg).unwrap();
        assert_eq!(res.value, Some(1));
        assert!(res.witness_count > 2);
        assert_eq!(res.witnesses.len(), 2);
        let full = compute_m0_monomial_with(4, 3, 1, &quiet()).unwrap();
        assert_eq!(&full.witnesses[..2], &res.witnesses[..]);
    }

    #[test]
    fn m0_examples() {
        for n in 2..=4 {
            assert_eq!(compute_m0_monomial_with(n, 3, 2, &quiet()).unwrap().value, Some(4), "n={n}");
            for d in 3..=5 {
                assert_eq!(compute_m0_monomial_with(n, d, 1, &quiet()).unwrap().value, Some(1));
            }
        }
        let r = compute_m0_monomial_with(2, 2, 1, &quiet()).unwrap();
        assert_eq!(r.value, Some(2));
        assert!(r.is_lower_bound());
        assert_eq!(compute_m0_monomial_with(2, 2, 2, &quiet()).unwrap().value, None);
    }

    #[test]
    fn square_index_matches_generic_product() {
        for (n, d) in [(2, 3), (3, 2), (3, 3), (4, 2)] {
            let index = SquareIndex::new(n, d, 3).unwrap();
            let len = index.basis().len() as u32;
            for a in 0..len {
                for b in a + 1..len {
                    for c in [None, Some((b + 1) % len)] {
                        let mut comp = vec![a, b];
                        if let Some(c) = c {
                            if c != a && c != b {
                                comp.push(c);
                            }
                        }
                        comp.sort_unstable();
                        let u = index.subspace(&comp);
                        assert_eq!(index.codim_square(&comp), u.codim_square().unwrap(), "{u}");
                    }
                }
            }
        }
    }

    #[test]
    fn small_bounds() {
        assert_eq!(small_subspace_bound(2, 2).unwrap(), 3);
        assert_eq!(small_subspace_bound(3, 5).unwrap(), 12);
        assert!(small_subspace_bound(3, 2).is_err());
        assert_eq!(main_bound(1).unwrap(), 2);
        assert_eq!(main_bound(2).unwrap(), 8);
        assert_eq!(main_bound(3).unwrap(), 19);
        for k in 1..20u64 {
            assert_eq!(6 * main_bound(k).unwrap(), k * k * k + 9 * k * k + 2 * k);
        }
        assert!(main_bound(0).is_err());
    }

    #[test]
    fn degree_stability_examples() {
        let r = verify_degree_stability(3, 5, 5..=9, &quiet()).unwrap();
        assert!(r.passed());
        assert!(r.values.iter().all(|&(_, v)| v == 16));
        let r = verify_degree_stability(4, 4, 4..=9, &quiet()).unwrap();
        assert!(r.values.iter().all(|&(_, v)| v == 20));
        assert!(r.passed());
        let r = verify_degree_stability(5, 1, 1..=6, &quiet()).unwrap();
        assert!(r.values.iter().all(|&(_, v)| v == 5));
        assert!(verify_degree_stability(3, 5, 4..=6, &quiet()).is_err());
    }

    #[test]
    fn table_cells() {
        let t = verify_table(3..=3, 2..=3, 5..=7, &quiet()).unwrap();
        assert!(t.all_match(), "{}", t.diff_report());
        assert_eq!(t.get(3, 2, 6).unwrap().status, CellStatus::Match);
        assert_eq!(t.get(3, 2, 6).unwrap().value, None);
        assert!(t.to_csv().starts_with("n,d,k,value,witness_count\n"));
        let t = verify_table(5..=6, 2..=6, 6..=7, &quiet()).unwrap();
        assert_eq!(t.get(5, 6, 7).unwrap().value, Some(49));
        assert_eq!(t.get(6, 2, 6).unwrap().value, Some(56));
        assert!(t.all_match());
    }
}
