//! Macaulay representations and the growth bounds built on them.
//!
//! Every non-negative integer `a` has a unique `d`-th Macaulay representation
//! `a = C(k(d), d) + C(k(d-1), d-1) + ... + C(k(1), 1)` with
//! `k(d) > k(d-1) > ... > k(1) >= 0`. The shift operator adds `s` to every top
//! and `t` to every bottom. Binomials are evaluated in arbitrary precision.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// `C(a, b)` with `C(a, b) = 0` whenever `a < b`, `b < 0` or `a < 0`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || a < 0 || a < b {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= BigUint::from((a - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// The `d`-th Macaulay representation of an integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayRep {
    degree: u32,
    /// `coeffs[0] = k(d)`, ..., `coeffs[d-1] = k(1)`.
    coeffs: Vec<u64>,
}

impl MacaulayRep {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Tops `k(d), k(d-1), ..., k(1)`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Pairs `(k(j), j)` from `j = d` down to `j = 1`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.coeffs.iter().enumerate().map(move |(idx, &k)| (k, self.degree - idx as u32))
    }

    /// The represented integer.
    pub fn value(&self) -> BigUint {
        self.terms().map(|(k, j)| binomial(k as i64, i64::from(j))).sum()
    }

    /// `a_(d)|^s_t`: the sum of `C(k(j) + s, j + t)`.
    pub fn shift(&self, s: i64, t: i64) -> BigUint {
        self.terms().map(|(k, j)| binomial(k as i64 + s, i64::from(j) + t)).sum()
    }
}

/// Greedy `d`-th Macaulay representation of `a`. Once the remainder hits zero
/// the remaining tops are `k(j) = min(k(j+1) - 1, j - 1)`, which keeps the
/// sequence strictly decreasing and contributes nothing.
pub fn macaulay_rep(a: u64, d: u32) -> Result<MacaulayRep> {
    if d == 0 {
        return Err(invalid("Macaulay representation needs degree d >= 1"));
    }
    let mut rem = BigUint::from(a);
    let mut coeffs = Vec::with_capacity(d as usize);
    let mut upper: Option<u64> = None; // k(j+1)
    for j in (1..=d).rev() {
        let j64 = u64::from(j);
        let k = if rem.is_zero() {
            let cap = upper.map_or(j64 - 1, |u| u - 1);
            cap.min(j64 - 1)
        } else {
            // largest k with C(k, j) <= rem; grow then step back
            let mut k = j64;
            while binomial((k + 1) as i64, j as i64) <= rem {
                k += 1;
            }
            k
        };
        rem -= binomial(k as i64, j as i64);
        if let Some(u) = upper {
            debug_assert!(k < u, "tops must decrease strictly");
        }
        coeffs.push(k);
        upper = Some(k);
    }
    Ok(MacaulayRep { degree: d, coeffs })
}

/// Shift of a representation, `rep|^s_t`.
pub fn macaulay_shift(rep: &MacaulayRep, s: i64, t: i64) -> BigUint {
    rep.shift(s, t)
}

/// Macaulay's bound on the next value of a Hilbert function: `h_(i)|^1_1`.
pub fn macaulay_growth_bound(h: u64, i: u32) -> Result<BigUint> {
    Ok(macaulay_rep(h, i)?.shift(1, 1))
}

/// Green's hyperplane-restriction bound `h_(d)|^-1_0`.
pub fn green_restriction_bound(h: u64, d: u32) -> Result<BigUint> {
    Ok(macaulay_rep(h, d)?.shift(-1, 0))
}

/// A Hilbert function `h_0, h_1, ..., h_N` of a quotient `A/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunction {
    pub values: Vec<u64>,
    /// Degree in which the ideal is generated, when known.
    pub generated_in_degree: Option<u32>,
}

impl HilbertFunction {
    pub fn new(values: Vec<u64>, generated_in_degree: Option<u32>) -> Self {
        Self { values, generated_in_degree }
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.values.get(i).copied()
    }

    pub fn max_degree(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    /// Checks Macaulay's growth bound `h_{i+1} <= h_(i)|^1_1` at every
    /// recorded degree `i >= 1`; returns the first violating degree.
    pub fn first_macaulay_violation(&self) -> Option<usize> {
        (1..self.values.len().saturating_sub(1)).find(|&i| {
            let bound = macaulay_rep(self.values[i], i as u32).expect("i >= 1").shift(1, 1);
            BigUint::from(self.values[i + 1]) > bound
        })
    }

    /// Checks that once `h_j <= j` the function never increases again.
    pub fn first_nonincrease_violation(&self) -> Option<usize> {
        let start = (1..self.values.len()).find(|&j| self.values[j] <= j as u64)?;
        (start..self.values.len() - 1).find(|&i| self.values[i + 1] > self.values[i])
    }
}

/// Outcome of checking Gotzmann persistence at degree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GotzmannVerdict {
    /// `h_{d+1}` is below the maximal growth value, so nothing is forced.
    NotMaximalGrowth { h_next: u64, bound: BigUint },
    /// Maximal growth at `d` and every recorded later value matches.
    Persistent,
    /// Maximal growth at `d` but a later value deviates. The theorem is
    /// unconditional, so this signals a bug in whatever produced `hf`.
    TheoremViolated { degree: usize, expected: BigUint, found: u64 },
}

impl GotzmannVerdict {
    /// True unless the theorem was violated.
    pub fn is_consistent(&self) -> bool {
        !matches!(self, GotzmannVerdict::TheoremViolated { .. })
    }

    pub fn is_persistent(&self) -> bool {
        matches!(self, GotzmannVerdict::Persistent)
    }
}

/// Gotzmann persistence check for an ideal generated in degrees `<= d`.
pub fn gotzmann_persists(hf: &HilbertFunction, d: u32) -> Result<GotzmannVerdict> {
    let du = d as usize;
    if d == 0 {
        return Err(invalid("persistence degree must be at least 1"));
    }
    if hf.values.len() < du + 2 {
        return Err(invalid(format!(
            "Hilbert function of length {} too short to test persistence at degree {d}",
            hf.values.len()
        )));
    }
    let rep = macaulay_rep(hf.values[du], d)?;
    let bound = rep.shift(1, 1);
    let h_next = hf.values[du + 1];
    if BigUint::from(h_next) != bound {
        return Ok(GotzmannVerdict::NotMaximalGrowth { h_next, bound });
    }
    for l in 2..hf.values.len() - du {
        let expected = rep.shift(l as i64, l as i64);
        let found = hf.values[du + l];
        if BigUint::from(found) != expected {
            return Ok(GotzmannVerdict::TheoremViolated { degree: du + l, expected, found });
        }
    }
    Ok(GotzmannVerdict::Persistent)
}

/// Convenience conversion for tests and reports.
pub fn to_u64(v: &BigUint) -> Option<u64> {
    v.to_u64()
}
