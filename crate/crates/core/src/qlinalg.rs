//! Exact linear algebra over `Q` on subspaces of a graded component.
//!
//! A [`RationalSubspace`] is stored as a reduced row-echelon basis whose
//! columns are the degree-`d` monomials sorted descending under a monomial
//! order. The pivot of each row is then its initial monomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::macaulay::HilbertFunction;
use crate::monomial::{dim_component, enumerate_monomials, Monomial, MonomialOrder};
use crate::subspace::MonomialSubspace;

pub type Q = BigRational;

/// Default ceiling on the number of columns a product may have.
pub const DEFAULT_COLUMN_LIMIT: u64 = 20_000;

/// Default coefficient bound for random instances.
pub const DEFAULT_COEFF_BOUND: i64 = 100;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let den: BigInt = den.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(num, den))
}

fn fmt_q(v: &Q) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// A homogeneous polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    n: usize,
    d: u32,
    terms: BTreeMap<Monomial, Q>,
}

impl Form {
    pub fn zero(n: usize, d: u32) -> Self {
        Self { n, d, terms: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_terms(m.n(), m.degree(), [(m, q(1))]).expect("shape matches")
    }

    /// Sums the given terms; all monomials must lie in `A(n)_d`.
    pub fn from_terms(n: usize, d: u32, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Result<Self> {
        let mut f = Self::zero(n, d);
        for (m, c) in terms {
            if m.n() != n || m.degree() != d {
                return Err(invalid(format!("term {m} does not lie in A({n})_{d}")));
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    /// `sum c_i x_i`.
    pub fn linear(coeffs: &[Q]) -> Result<Self> {
        let n = coeffs.len();
        Self::from_terms(n, 1, coeffs.iter().enumerate().map(|(i, c)| (Monomial::var_power(n, i + 1, 1), c.clone())))
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn mul(&self, other: &Form) -> Result<Form> {
        if self.n != other.n {
            return Err(invalid("cannot multiply forms in different numbers of variables"));
        }
        let mut out = Form::zero(self.n, self.d + other.d);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> Form {
        let mut out = Form::zero(self.n, self.d);
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        if self.n != other.n || self.d != other.d {
            return Err(invalid("cannot add forms of different shapes"));
        }
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(*m, v.clone());
        }
        Ok(out)
    }

    /// `d/dx_i`, a form of degree `d - 1`.
    pub fn partial(&self, i: usize) -> Result<Form> {
        if self.d == 0 {
            return Err(invalid("cannot differentiate a constant"));
        }
        let mut out = Form::zero(self.n, self.d - 1);
        for (m, c) in &self.terms {
            if let Some(down) = m.div_var(i) {
                out.add_term(down, c * q(i64::from(m.exponent(i))));
            }
        }
        Ok(out)
    }

    /// Coefficient vector over `columns`.
    pub fn to_vector(&self, columns: &[Monomial]) -> Vec<Q> {
        columns.iter().map(|m| self.coeff(m)).collect()
    }

    /// Parses `3/2*x1^2*x3 - x2^3 + 4*x1*x2*x3` as a form in `n` variables.
    pub fn parse(text: &str, n: usize) -> Result<Form> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        let mut terms = Vec::new();
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, piece.strip_prefix('+').unwrap_or(piece)),
            };
            let mut coeff = q(sign);
            let mut factors = Vec::new();
            for f in body.split('*') {
                if f.starts_with('x') {
                    factors.push(f);
                } else {
                    coeff *= parse_q(f)?;
                }
            }
            let mono = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
            terms.push((Monomial::parse(&mono, n)?, coeff));
        }
        let d = terms[0].0.degree();
        if terms.iter().any(|(m, _)| m.degree() != d) {
            return Err(Error::Parse(format!("polynomial {text:?} is not homogeneous")));
        }
        Form::from_terms(n, d, terms)
    }

    /// Restriction to the hyperplane `l = 0`, written in the `n - 1`
    /// variables that remain after eliminating the last variable with a
    /// non-zero coefficient in `l`.
    pub fn restrict_to_hyperplane(&self, l: &[Q]) -> Result<Form> {
        if l.len() != self.n || self.n < 2 {
            return Err(invalid("hyperplane restriction needs a linear form in n >= 2 variables"));
        }
        let j = l.iter().rposition(|c| !c.is_zero()).ok_or_else(|| invalid("linear form is zero"))?;
        let m = self.n - 1;
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != j).collect();
        let sub_coeffs: Vec<Q> = keep.iter().map(|&i| -(&l[i] / &l[j])).collect();
        let replacement = Form::linear(&sub_coeffs)?;
        let mut out = Form::zero(m, self.d);
        for (mono, c) in &self.terms {
            let rest: Vec<u32> = keep.iter().map(|&i| mono.exponent(i + 1)).collect();
            let mut term = Form::from_terms(m, self.d - mono.exponent(j + 1), [(Monomial::new(&rest)?, c.clone())])?;
            for _ in 0..mono.exponent(j + 1) {
                term = term.mul(&replacement)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Whether the form equals `c * L^d` for a linear form `L` and `c != 0`:
    /// exactly when its first partial derivatives span at most a line.
    pub fn is_power_of_linear_form(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        if self.d <= 1 {
            return Ok(true);
        }
        let partials: Vec<Form> = (1..=self.n).map(|i| self.partial(i)).collect::<Result<_>>()?;
        let space = RationalSubspace::span_forms(self.n, self.d - 1, MonomialOrder::Lex, &partials)?;
        Ok(space.dim() <= 1)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_one = m.degree() == 0;
            if abs.is_one() && !is_one {
                write!(f, "{m}")?;
            } else if is_one {
                f.write_str(&fmt_q(&abs))?;
            } else {
                write!(f, "{}*{m}", fmt_q(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Incrementally maintained reduced row-echelon form.
#[derive(Clone, Debug)]
struct Echelon {
    width: usize,
    /// Sorted by pivot column.
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    fn new(width: usize) -> Self {
        Self { width, rows: Vec::new() }
    }

    fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Reduces `v` against the current rows in place.
    fn reduce(&self, v: &mut [Q]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    fn insert(&mut self, mut v: Vec<Q>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    /// Basis of `{x : R x = 0}` for the row space `R`.
    fn nullspace(&self) -> Vec<Vec<Q>> {
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        (0..self.width)
            .filter(|c| pivots.binary_search(c).is_err())
            .map(|free| {
                let mut v = vec![Q::zero(); self.width];
                v[free] = q(1);
                for (p, row) in &self.rows {
                    v[*p] = -row[free].clone();
                }
                v
            })
            .collect()
    }
}

/// The degree-`d` monomials sorted descending under `order`.
pub fn ordered_basis(n: usize, d: u32, order: MonomialOrder) -> Result<Vec<Monomial>> {
    let mut basis = enumerate_monomials(n, d)?;
    basis.sort_by(|a, b| order.compare_unchecked(b, a));
    Ok(basis)
}

/// A subspace of `A(n)_d` over `Q` in reduced row-echelon form.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalSubspace {
    n: usize,
    d: u32,
    order: MonomialOrder,
    columns: Vec<Monomial>,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl RationalSubspace {
    fn from_echelon(n: usize, d: u32, order: MonomialOrder, columns: Vec<Monomial>, e: Echelon) -> Self {
        let (pivots, rows) = e.rows.into_iter().unzip();
        Self { n, d, order, columns, rows, pivots }
    }

    /// Span of coefficient vectors over [`ordered_basis`]`(n, d, order)`.
    pub fn span(vectors: Vec<Vec<Q>>, n: usize, d: u32, order: MonomialOrder) -> Result<Self> {
        let columns = ordered_basis(n, d, order)?;
        let mut e = Echelon::new(columns.len());
        for v in vectors {
            if v.len() != columns.len() {
                return Err(invalid(format!(
                    "vector of length {} does not match dim A({n})_{d} = {}",
                    v.len(),
                    columns.len()
                )));
            }
            if !e.is_full() {
                e.insert(v);
            }
        }
        Ok(Self::from_echelon(n, d, order, columns, e))
    }

    /// Span of forms in `A(n)_d`.
    pub fn span_forms(n: usize, d: u32, order: MonomialOrder, forms: &[Form]) -> Result<Self> {
        let columns = ordered_basis(n, d, order)?;
        let mut e = Echelon::new(columns.len());
        for f in forms {
            if f.n != n || f.d != d {
                return Err(invalid(format!("form {f} does not lie in A({n})_{d}")));
            }
            if !e.is_full() {
                e.insert(f.to_vector(&columns));
            }
        }
        Ok(Self::from_echelon(n, d, order, columns, e))
    }

    pub fn from_monomial_subspace(u: &MonomialSubspace, order: MonomialOrder) -> Result<Self> {
        let forms: Vec<Form> = u.members().into_iter().map(Form::monomial).collect();
        Self::span_forms(u.n(), u.degree(), order, &forms)
    }

    pub fn full(n: usize, d: u32, order: MonomialOrder) -> Result<Self> {
        Self::from_monomial_subspace(&MonomialSubspace::full(n, d)?, order)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dim(&self) -> u64 {
        self.rows.len() as u64
    }

    pub fn ambient_dim(&self) -> u64 {
        self.columns.len() as u64
    }

    pub fn codim(&self) -> u64 {
        self.ambient_dim() - self.dim()
    }

    pub fn forms(&self) -> Vec<Form> {
        self.rows
            .iter()
            .map(|r| {
                Form::from_terms(self.n, self.d, self.columns.iter().copied().zip(r.iter().cloned()))
                    .expect("columns lie in the component")
            })
            .collect()
    }

    fn echelon(&self) -> Echelon {
        Echelon { width: self.columns.len(), rows: self.pivots.iter().copied().zip(self.rows.iter().cloned()).collect() }
    }

    pub fn contains(&self, f: &Form) -> bool {
        if f.n != self.n || f.d != self.d {
            return false;
        }
        let mut v = f.to_vector(&self.columns);
        self.echelon().reduce(&mut v);
        v.iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &RationalSubspace) -> bool {
        self.forms().iter().all(|f| other.contains(f))
    }

    /// Same subspace with columns ordered by `order`.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        Self::span_forms(self.n, self.d, order, &self.forms())
    }

    /// `in(U)`: the span of the initial monomials under the column order.
    pub fn initial_subspace(&self) -> MonomialSubspace {
        MonomialSubspace::from_members(self.n, self.d, self.pivots.iter().map(|&p| self.columns[p]))
            .expect("shape already validated")
    }

    /// The monomial subspace equal to `U`, when `U` is spanned by monomials.
    pub fn to_monomial_subspace(&self) -> Option<MonomialSubspace> {
        let monomial = self.rows.iter().all(|r| r.iter().filter(|x| !x.is_zero()).count() == 1);
        monomial.then(|| self.initial_subspace())
    }

    /// Orthogonal complement under the apolarity pairing
    /// `<x^a, x^b> = a! [a = b]`.
    pub fn apolar_perp(&self) -> Self {
        let weights: Vec<Q> = self
            .columns
            .iter()
            .map(|m| {
                let mut w = BigInt::one();
                for i in 1..=self.n {
                    for t in 2..=m.exponent(i) {
                        w *= t;
                    }
                }
                Q::from_integer(w)
            })
            .collect();
        let mut e = Echelon::new(self.columns.len());
        for r in &self.rows {
            e.insert(r.iter().zip(&weights).map(|(x, w)| x * w).collect());
        }
        let mut out = Echelon::new(self.columns.len());
        for v in e.nullspace() {
            out.insert(v);
        }
        Self::from_echelon(self.n, self.d, self.order, self.columns.clone(), out)
    }

    /// `U V`, refusing products with more than [`DEFAULT_COLUMN_LIMIT`] columns.
    pub fn product_rational(&self, other: &RationalSubspace) -> Result<Self> {
        self.product_with_limit(other, DEFAULT_COLUMN_LIMIT)
    }

    pub fn product_with_limit(&self, other: &RationalSubspace, column_limit: u64) -> Result<Self> {
        if self.n != other.n || self.order != other.order {
            return Err(invalid("product needs the same number of variables and the same order"));
        }
        let deg = self.d + other.d;
        let width = dim_component(self.n, deg as usize);
        if width > column_limit {
            return Err(Error::TooLarge(format!(
                "dim A({})_{deg} = {width} exceeds the column limit {column_limit}",
                self.n
            )));
        }
        let columns = ordered_basis(self.n, deg, self.order)?;
        let index: HashMap<Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let left = sparse_rows(self);
        let right = sparse_rows(other);
        let product = |a: &[(Monomial, Q)], b: &[(Monomial, Q)]| {
            let mut v = vec![Q::zero(); columns.len()];
            for (ma, ca) in a {
                for (mb, cb) in b {
                    v[index[&ma.mul(mb)]] += ca * cb;
                }
            }
            v
        };
        // rank mod p never exceeds the rank over Q, so full rank mod p is a proof
        if let Some(rank) = rank_mod_p(left.iter().flat_map(|a| right.iter().map(|b| product(a, b))), columns.len()) {
            if rank == columns.len() {
                return Self::full(self.n, deg, self.order);
            }
        }
        let mut e = Echelon::new(columns.len());
        'outer: for a in &left {
            for b in &right {
                e.insert(product(a, b));
                if e.is_full() {
                    break 'outer;
                }
            }
        }
        Ok(Self::from_echelon(self.n, deg, self.order, columns, e))
    }

    /// `U + l A_{d-1}`.
    pub fn add_linear_multiples(&self, l: &[Q]) -> Result<Self> {
        let lin = linear_form_checked(self.n, l)?;
        if self.d == 0 {
            return Err(invalid("degree must be at least 1"));
        }
        let mut e = self.echelon();
        for m in enumerate_monomials(self.n, self.d - 1)? {
            if e.is_full() {
                break;
            }
            e.insert(lin.mul(&Form::monomial(m))?.to_vector(&self.columns));
        }
        Ok(Self::from_echelon(self.n, self.d, self.order, self.columns.clone(), e))
    }

    /// `(U : l) = {q in A_{d-1} : l q in U}`.
    pub fn quotient_by_linear_form(&self, l: &[Q]) -> Result<Self> {
        let lin = linear_form_checked(self.n, l)?;
        if self.d == 0 {
            return Err(invalid("degree must be at least 1"));
        }
        let domain = ordered_basis(self.n, self.d - 1, self.order)?;
        // f lies in U iff f_j = sum_p f_{pivot p} R_p[j] for every free column j
        let free: Vec<usize> = (0..self.columns.len()).filter(|c| self.pivots.binary_search(c).is_err()).collect();
        let images: Vec<Vec<Q>> = domain
            .iter()
            .map(|m| lin.mul(&Form::monomial(*m)).map(|f| f.to_vector(&self.columns)))
            .collect::<Result<_>>()?;
        let mut e = Echelon::new(domain.len());
        for &j in &free {
            let row: Vec<Q> = images
                .iter()
                .map(|img| {
                    let mut v = img[j].clone();
                    for (p, r) in self.pivots.iter().zip(&self.rows) {
                        if !img[*p].is_zero() && !r[j].is_zero() {
                            v -= &img[*p] * &r[j];
                        }
                    }
                    v
                })
                .collect();
            e.insert(row);
        }
        let mut out = Echelon::new(domain.len());
        for v in e.nullspace() {
            out.insert(v);
        }
        Ok(Self::from_echelon(self.n, self.d - 1, self.order, domain, out))
    }

    /// Hilbert function of `A/<U>` up to `max_degree`, via `A_1^i U`.
    pub fn hilbert_function_rational(&self, max_degree: u32) -> Result<HilbertFunction> {
        if max_degree < self.d {
            return Err(invalid(format!("max_degree {max_degree} below generating degree {}", self.d)));
        }
        let mut values: Vec<u64> = (0..self.d).map(|i| dim_component(self.n, i as usize)).collect();
        values.push(self.codim());
        let linear = RationalSubspace::full(self.n, 1, self.order)?;
        let mut current = self.clone();
        for deg in self.d + 1..=max_degree {
            if current.codim() == 0 {
                values.push(0);
                continue;
            }
            current = current.product_rational(&linear)?;
            debug_assert_eq!(current.d, deg);
            values.push(current.codim());
        }
        Ok(HilbertFunction::new(values, Some(self.d)))
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            n: self.n,
            d: self.d,
            order: self.order.name(),
            rows: self.rows.iter().map(|r| r.iter().map(fmt_q).collect()).collect(),
        }
    }

    pub fn from_json(m: &MatrixJson) -> Result<Self> {
        let order: MonomialOrder = m.order.parse()?;
        let rows = m.rows.iter().map(|r| r.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        Self::span(rows, m.n, m.d, order)
    }
}

const PRIME: u64 = 0x1fff_ffff_ffff_ffff;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(PRIME)) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    acc
}

fn reduce_mod(x: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let r = ((x % &p) + &p) % &p;
    r.to_u64_digits().1.first().copied().unwrap_or(0)
}

/// Image of `x` in `Z/p`, or `None` when `p` divides the denominator.
fn q_mod_p(x: &Q) -> Option<u64> {
    let den = reduce_mod(x.denom());
    (den != 0).then(|| mul_mod(reduce_mod(x.numer()), pow_mod(den, PRIME - 2)))
}

/// Rank of the rows modulo a fixed large prime; stops early at full rank.
fn rank_mod_p(rows: impl Iterator<Item = Vec<Q>>, width: usize) -> Option<usize> {
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for row in rows {
        let mut v: Vec<u64> = row.iter().map(q_mod_p).collect::<Option<_>>()?;
        for (p, b) in &basis {
            if v[*p] != 0 {
                let c = v[*p];
                for (x, y) in v.iter_mut().zip(b) {
                    *x = (*x + PRIME - mul_mod(c, *y)) % PRIME;
                }
            }
        }
        if let Some(p) = v.iter().position(|&x| x != 0) {
            let inv = pow_mod(v[p], PRIME - 2);
            for x in v.iter_mut() {
                *x = mul_mod(*x, inv);
            }
            basis.push((p, v));
            if basis.len() == width {
                break;
            }
        }
    }
    Some(basis.len())
}

fn sparse_rows(u: &RationalSubspace) -> Vec<Vec<(Monomial, Q)>> {
    u.rows
        .iter()
        .map(|r| u.columns.iter().zip(r).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, c.clone())).collect())
        .collect()
}

fn linear_form_checked(n: usize, l: &[Q]) -> Result<Form> {
    if l.len() != n {
        return Err(invalid(format!("linear form has {} coefficients, expected {n}", l.len())));
    }
    if l.iter().all(Zero::is_zero) {
        return Err(invalid("linear form must be non-zero"));
    }
    Form::linear(l)
}

impl fmt::Debug for RationalSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalSubspace(n={}, d={}, {}, dim {}) [", self.n, self.d, self.order, self.dim())?;
        for (i, form) in self.forms().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{form}")?;
        }
        f.write_str("]")
    }
}

/// Matrix exchange format: rows of `"p/q"` strings over the descending basis
/// of the named order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub d: u32,
    pub order: String,
    pub rows: Vec<Vec<String>>,
}

/// Deterministic generator for randomized checks.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer coefficients drawn uniformly from `[-bound, bound]`, resampled
/// until non-zero.
pub fn random_linear_form(n: usize, rng: &mut impl Rng, bound: i64) -> Vec<Q> {
    loop {
        let l: Vec<Q> = (0..n).map(|_| q(rng.gen_range(-bound..=bound))).collect();
        if l.iter().any(|c| !c.is_zero()) {
            return l;
        }
    }
}

pub fn random_form(n: usize, d: u32, rng: &mut impl Rng, bound: i64) -> Result<Form> {
    let basis = enumerate_monomials(n, d)?;
    Form::from_terms(n, d, basis.into_iter().map(|m| (m, q(rng.gen_range(-bound..=bound)))))
}

/// Span of `dim` random forms, resampled until it has exactly that dimension.
pub fn random_subspace(
    n: usize,
    d: u32,
    dim: u64,
    order: MonomialOrder,
    rng: &mut impl Rng,
    bound: i64,
) -> Result<RationalSubspace> {
    let ambient = dim_component(n, d as usize);
    if dim > ambient {
        return Err(invalid(format!("dimension {dim} exceeds dim A({n})_{d} = {ambient}")));
    }
    for _ in 0..100 {
        let forms: Vec<Form> = (0..dim).map(|_| random_form(n, d, rng, bound)).collect::<Result<_>>()?;
        let u = RationalSubspace::span_forms(n, d, order, &forms)?;
        if u.dim() == dim {
            return Ok(u);
        }
    }
    Err(invalid("could not sample a subspace of the requested dimension"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::dim_component;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    fn perp_example() -> RationalSubspace {
        let w = RationalSubspace::span_forms(3, 2, MonomialOrder::Lex, &[Form::parse("x1^2 + x2^2", 3).unwrap()]).unwrap();
        w.apolar_perp()
    }

    #[test]
    fn parse_and_display() {
        let f = Form::parse("3/2*x1^2*x3 - x2^3 + 4*x1*x2*x3", 3).unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.coeff(&mono(&[2, 0, 1])), Q::new(3.into(), 2.into()));
        assert_eq!(Form::parse(&f.to_string(), 3).unwrap(), f);
        assert!(Form::parse("x1 + x2^2", 3).is_err());
        assert!(Form::parse("x1 + x2 - x1 - x2", 3).unwrap().is_zero());
    }

    #[test]
    fn span_examples() {
        let a = RationalSubspace::span_forms(
            2,
            2,
            MonomialOrder::Lex,
            &[Form::parse("x1^2 + x2^2", 2).unwrap(), Form::parse("x1^2 - x2^2", 2).unwrap()],
        )
        .unwrap();
        let b = RationalSubspace::span_forms(
            2,
            2,
            MonomialOrder::Lex,
            &[Form::parse("x1^2", 2).unwrap(), Form::parse("x2^2", 2).unwrap()],
        )
        .unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a, b);
        assert!(RationalSubspace::span(vec![vec![q(1)]], 2, 2, MonomialOrder::Lex).is_err());
        assert_eq!(perp_example().dim(), 5);
    }

    #[test]
    fn pivots_increase_and_are_initial() {
        let mut rng = seeded_rng(7);
        for order in [MonomialOrder::Lex, MonomialOrder::Grlex, MonomialOrder::Block { split: 2 }] {
            let u = random_subspace(3, 3, 4, order, &mut rng, 5).unwrap();
            assert!(u.pivots().windows(2).all(|w| w[0] < w[1]));
            for (row, &p) in u.rows().iter().zip(u.pivots()) {
                assert!(row[..p].iter().all(Zero::is_zero));
                assert!(row[p].is_one());
            }
        }
    }

    #[test]
    fn monomial_round_trip() {
        let u = MonomialSubspace::from_complement(3, 2, [mono(&[2, 0, 0]), mono(&[1, 1, 0])]).unwrap();
        for order in [MonomialOrder::Lex, MonomialOrder::Grlex, MonomialOrder::Block { split: 1 }] {
            let r = RationalSubspace::from_monomial_subspace(&u, order).unwrap();
            assert_eq!(r.to_monomial_subspace(), Some(u.clone()));
            assert_eq!(r.initial_subspace(), u);
        }
    }

    #[test]
    fn perp_initial_and_square() {
        let u = perp_example();
        let sq = u.product_rational(&u).unwrap();
        assert_eq!(sq.codim(), 2);
        let init = u.initial_subspace();
        assert_eq!(init.complement(), &[mono(&[2, 0, 0])]);
        assert_eq!(init.codim_square().unwrap(), 3);
        assert!(init.square().unwrap().is_subspace_of(&sq.initial_subspace()));
        assert_ne!(init.square().unwrap(), sq.initial_subspace());
    }

    #[test]
    fn product_agrees_with_monomial_product() {
        let basis = enumerate_monomials(3, 2).unwrap();
        for mask in (0u32..64).step_by(5) {
            let comp = basis.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, m)| *m);
            let u = MonomialSubspace::from_complement(3, 2, comp).unwrap();
            let r = RationalSubspace::from_monomial_subspace(&u, MonomialOrder::Grlex).unwrap();
            let sq = r.product_rational(&r).unwrap();
            assert_eq!(sq.to_monomial_subspace(), Some(u.square().unwrap()), "{u}");
        }
    }

    #[test]
    fn hilbert_function_example() {
        let forms: Vec<Form> = ["x1^3", "x2^3", "x3^3", "x4^3", "x1^2*x2 + x3^2*x4"]
            .iter()
            .map(|s| Form::parse(s, 4).unwrap())
            .collect();
        let u = RationalSubspace::span_forms(4, 3, MonomialOrder::Grlex, &forms).unwrap();
        assert_eq!(u.codim(), 15);
        let hf = u.hilbert_function_rational(7).unwrap();
        assert_eq!(hf.values, vec![1, 4, 10, 15, 15, 7, 1, 0]);
        let full = RationalSubspace::full(3, 2, MonomialOrder::Lex).unwrap();
        assert_eq!(full.hilbert_function_rational(4).unwrap().values, vec![1, 3, 0, 0, 0]);
    }

    #[test]
    fn hilbert_function_matches_initial() {
        let mut rng = seeded_rng(11);
        for _ in 0..3 {
            let u = random_subspace(3, 2, 4, MonomialOrder::Lex, &mut rng, 3).unwrap();
            let a = u.hilbert_function_rational(5).unwrap();
            let b = u.initial_subspace().ideal_hilbert_function(5).unwrap();
            assert!(a.values.iter().zip(&b.values).all(|(x, y)| x <= y));
            assert_eq!(a.values[2], b.values[2]);
        }
    }

    #[test]
    fn quotient_examples() {
        let mut rng = seeded_rng(3);
        let full = RationalSubspace::full(3, 3, MonomialOrder::Lex).unwrap();
        let l = random_linear_form(3, &mut rng, 100);
        assert_eq!(full.quotient_by_linear_form(&l).unwrap().codim(), 0);
        assert!(full.quotient_by_linear_form(&[q(0), q(0), q(0)]).is_err());
        let u = random_subspace(3, 3, dim_component(3, 3) - 1, MonomialOrder::Lex, &mut rng, 100).unwrap();
        assert_eq!(u.quotient_by_linear_form(&l).unwrap().codim(), 1);

        // x = x1, y = x2, z = x3; complement of x^2y, x^2z, xy^2
        let w = MonomialSubspace::from_complement(3, 3, [mono(&[2, 1, 0]), mono(&[2, 0, 1]), mono(&[1, 2, 0])]).unwrap();
        let u = RationalSubspace::from_monomial_subspace(&w, MonomialOrder::Lex).unwrap();
        let v = u.quotient_by_linear_form(&l).unwrap();
        assert_eq!(v.dim(), 3);
        for s in ["x2*x3", "x3^2"] {
            assert!(v.contains(&Form::parse(s, 3).unwrap()));
        }
        // on x3 = 0 only one quadric survives, so V(x3, p) is a base point
        let restricted: Vec<Form> = v.forms().iter().map(|f| f.restrict_to_hyperplane(&[q(0), q(0), q(1)]).unwrap()).collect();
        assert_eq!(RationalSubspace::span_forms(2, 2, MonomialOrder::Lex, &restricted).unwrap().dim(), 1);
    }

    #[test]
    fn quotient_definition_holds() {
        let mut rng = seeded_rng(5);
        let u = random_subspace(3, 3, 6, MonomialOrder::Grlex, &mut rng, 4).unwrap();
        let l = random_linear_form(3, &mut rng, 4);
        let lin = Form::linear(&l).unwrap();
        let v = u.quotient_by_linear_form(&l).unwrap();
        for f in v.forms() {
            assert!(u.contains(&lin.mul(&f).unwrap()));
        }
        // exact sequence: codim (U:l) + codim (U + l A_2) = codim U
        let c = u.add_linear_multiples(&l).unwrap().codim();
        assert_eq!(v.codim() + c, u.codim());
    }

    #[test]
    fn powers_of_linear_forms() {
        let l = Form::parse("x1 + 2*x2 - x3", 3).unwrap();
        let cube = l.mul(&l).unwrap().mul(&l).unwrap().scale(&q(-7));
        assert!(cube.is_power_of_linear_form().unwrap());
        assert!(!Form::parse("x1^2*x2", 3).unwrap().is_power_of_linear_form().unwrap());
        assert!(!Form::parse("x1^2 + x2^2", 2).unwrap().is_power_of_linear_form().unwrap());
        let r = Form::parse("x1*x3 - x2^2", 3).unwrap().restrict_to_hyperplane(&[q(1), q(0), q(-1)]).unwrap();
        assert_eq!(r.n(), 2);
        assert_eq!(r, Form::parse("x1^2 - x2^2", 2).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let u = perp_example();
        let j = u.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back = RationalSubspace::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, u);
        let bad = MatrixJson { n: 2, d: 1, order: "lex".into(), rows: vec![vec!["1/0".into(), "1".into()]] };
        assert!(RationalSubspace::from_json(&bad).is_err());
    }

    #[test]
    fn column_limit() {
        let u = RationalSubspace::full(3, 2, MonomialOrder::Lex).unwrap();
        assert!(matches!(u.product_with_limit(&u, 10), Err(Error::TooLarge(_))));
    }
}
