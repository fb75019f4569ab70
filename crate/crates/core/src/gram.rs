//! Face dimensions of Gram spectrahedra.
//!
//! A face whose relative interior consists of Gram matrices with image `U`
//! has dimension `C(dim U + 1, 2) - dim U^2`, so everything here reduces to
//! the dimension of a square.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::monomial::{binomial_u64, dim_component};
use crate::qlinalg::RationalSubspace;
use crate::search::{closed_form_m, compute_m_with, main_bound, SearchConfig};
use crate::subspace::MonomialSubspace;

/// Face data attached to a subspace `U ⊂ A(n)_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceProfile {
    pub n: usize,
    pub d: u32,
    pub rank: u64,
    pub corank: u64,
    pub dim_u2: u64,
    pub face_dim: u64,
}

impl FaceProfile {
    pub fn new(n: usize, d: u32, rank: u64, dim_u2: u64) -> Result<Self> {
        let ambient = dim_component(n, d as usize);
        if rank > ambient {
            return Err(invalid(format!("rank {rank} exceeds dim A({n})_{d} = {ambient}")));
        }
        let face_dim = face_dim(rank, dim_u2)?;
        Ok(Self { n, d, rank, corank: ambient - rank, dim_u2, face_dim })
    }

    pub fn from_monomial(u: &MonomialSubspace) -> Result<Self> {
        let sq = u.square()?;
        Self::new(u.n(), u.degree(), u.dim(), sq.dim())
    }

    pub fn from_rational(u: &RationalSubspace) -> Result<Self> {
        let sq = u.product_rational(u)?;
        Self::new(u.n(), u.degree(), u.dim(), sq.dim())
    }
}

/// `C(r+1, 2) - dim U^2`.
pub fn face_dim(rank: u64, dim_u2: u64) -> Result<u64> {
    let top = binomial_u64(rank + 1, 2);
    top.checked_sub(dim_u2)
        .ok_or_else(|| invalid(format!("dim U^2 = {dim_u2} exceeds C(r+1,2) = {top} for r = {rank}")))
}

fn face_base(n: usize, d: u32, k: u64) -> Result<i64> {
    let dim_d = dim_component(n, d as usize);
    if k >= dim_d {
        return Err(invalid(format!("corank {k} must be below dim A({n})_{d} = {dim_d}")));
    }
    let dim_2d = dim_component(n, 2 * d as usize);
    Ok(binomial_u64(dim_d - k + 1, 2) as i64 - dim_2d as i64)
}

/// Largest face dimension of corank `k` for a non-singular form, valid for
/// `1 <= k <= d - 1`.
pub fn nonsingular_face_bound(n: usize, d: u32, k: u64) -> Result<i64> {
    if k == 0 || k >= u64::from(d) {
        return Err(invalid(format!("the non-singular bound needs 1 <= k <= d - 1 (got d = {d}, k = {k})")));
    }
    Ok(face_base(n, d, k)? + main_bound(k)? as i64)
}

/// Face dimension of the corank-`k` face of a singular form whose image is
/// an `m(n, d, k)` maximiser.
pub fn singular_face_dim(n: usize, d: u32, k: u64) -> Result<i64> {
    singular_face_dim_with(n, d, k, &SearchConfig::from_env())
}

pub fn singular_face_dim_with(n: usize, d: u32, k: u64, cfg: &SearchConfig) -> Result<i64> {
    let base = face_base(n, d, k)?;
    if k == 0 {
        return Err(invalid("corank must be at least 1"));
    }
    let m = match closed_form_m(n, d, k) {
        Ok(m) => m,
        Err(_) => compute_m_with(n, d, k, cfg)?.value.expect("k < dim"),
    };
    Ok(base + m as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramRow {
    pub n: usize,
    pub d: u32,
    pub k: u64,
    pub singular_dim: i64,
    pub nonsingular_bound: i64,
    pub gap: i64,
}

/// Singular and non-singular face dimensions over a grid with `1 <= k <= d - 1`.
/// Cells outside that regime are skipped.
pub fn gram_table(
    ns: RangeInclusive<usize>,
    ds: RangeInclusive<u32>,
    ks: RangeInclusive<u64>,
    cfg: &SearchConfig,
) -> Result<Vec<GramRow>> {
    let mut rows = Vec::new();
    for n in ns {
        for d in ds.clone() {
            for k in ks.clone() {
                if k == 0 || k >= u64::from(d) || k >= dim_component(n, d as usize) {
                    continue;
                }
                let singular_dim = singular_face_dim_with(n, d, k, cfg)?;
                let nonsingular_bound = nonsingular_face_bound(n, d, k)?;
                rows.push(GramRow { n, d, k, singular_dim, nonsingular_bound, gap: singular_dim - nonsingular_bound });
            }
        }
    }
    Ok(rows)
}

pub fn gram_csv(rows: &[GramRow]) -> String {
    let mut out = String::from("n,d,k,singular_dim,nonsingular_bound,gap\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{},{}", r.n, r.d, r.k, r.singular_dim, r.nonsingular_bound, r.gap);
    }
    out
}
