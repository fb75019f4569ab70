//! Reading and writing subspaces and matrices.
//!
//! Subspaces come in two encodings. JSON stores the complement:
//!
//! ```text
//! { "n": 3, "d": 2, "complement": [[2, 0, 0], [1, 1, 0]] }
//! ```
//!
//! The text form has a header line `n d codim` followed by one complement
//! exponent tuple per line. Blank lines and lines starting with `#` are ignored.
//!
//! ```text
//! 3 2 2
//! 2 0 0
//! 1 1 0
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::qlinalg::{MatrixJson, RationalSubspace};
use crate::stable::StableEnumeration;
use crate::subspace::MonomialSubspace;

/// A subspace read from user input.
#[derive(Clone, Debug)]
pub enum SubspaceInput {
    Monomial(MonomialSubspace),
    Rational(RationalSubspace),
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_subspace_text(text: &str) -> Result<MonomialSubspace> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| parse_err("empty subspace text"))?;
    let head: Vec<u64> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|e| parse_err(format!("header {header:?}: {e}"))))
        .collect::<Result<_>>()?;
    let [n, d, codim] = head[..] else {
        return Err(parse_err(format!("header must be `n d codim`, got {header:?}")));
    };
    let mut comp = Vec::new();
    for line in lines {
        let exps: Vec<u32> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|e| parse_err(format!("line {line:?}: {e}"))))
            .collect::<Result<_>>()?;
        if exps.len() as u64 != n {
            return Err(parse_err(format!("line {line:?} has {} exponents, expected {n}", exps.len())));
        }
        comp.push(Monomial::new(&exps)?);
    }
    let u = MonomialSubspace::from_complement(n as usize, d as u32, comp)?;
    if u.codim() != codim {
        return Err(parse_err(format!("header declares codim {codim} but {} distinct monomials follow", u.codim())));
    }
    Ok(u)
}

pub fn subspace_to_text(u: &MonomialSubspace) -> String {
    let mut out = format!("{} {} {}\n", u.n(), u.degree(), u.codim());
    for m in u.complement() {
        let tuple: Vec<String> = m.exponents().iter().map(|e| e.to_string()).collect();
        out.push_str(&tuple.join(" "));
        out.push('\n');
    }
    out
}

/// Accepts a complement JSON object, a matrix JSON object (`rows` of
/// rational strings), or the text form.
pub fn parse_subspace(text: &str) -> Result<SubspaceInput> {
    let trimmed = text.trim_start();
    if !trimmed.starts_with('{') {
        return parse_subspace_text(text).map(SubspaceInput::Monomial);
    }
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("rows").is_some() {
        let m: MatrixJson = serde_json::from_value(value)?;
        return RationalSubspace::from_json(&m).map(SubspaceInput::Rational);
    }
    Ok(SubspaceInput::Monomial(serde_json::from_value(value)?))
}

pub fn read_subspace(path: &Path) -> Result<SubspaceInput> {
    parse_subspace(&std::fs::read_to_string(path)?)
}

/// Enumeration dump: instance header plus the complement-encoded subspaces.
pub fn enumeration_json(e: &StableEnumeration) -> Result<String> {
    Ok(serde_json::to_string_pretty(e)?)
}

pub fn enumeration_text(e: &StableEnumeration) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# n = {}, d = {}, k = {}: {} strongly stable subspaces", e.n, e.d, e.k, e.len());
    for u in &e.subspaces {
        let comp: Vec<String> = u.complement().iter().map(|m| m.to_string()).collect();
        let _ = writeln!(out, "{{{}}}", comp.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let u = parse_subspace_text("# comment\n3 2 2\n2 0 0\n1,1,0\n").unwrap();
        assert_eq!(u.codim(), 2);
        assert_eq!(parse_subspace_text(&subspace_to_text(&u)).unwrap(), u);
        assert!(parse_subspace_text("3 2 3\n2 0 0\n1 1 0\n").is_err());
        assert!(parse_subspace_text("3 2 1\n2 0\n").is_err());
        assert!(parse_subspace_text("3 2 1\n1 0 0\n").is_err());
        assert!(parse_subspace_text("").is_err());
    }

    #[test]
    fn json_forms() {
        let SubspaceInput::Monomial(u) = parse_subspace(r#"{"n":3,"d":2,"complement":[[2,0,0]]}"#).unwrap() else {
            panic!("expected a monomial subspace");
        };
        assert_eq!((u.n(), u.codim()), (3, 1));
        let m = r#"{"n":3,"d":1,"order":"lex","rows":[["1","1/2","0"]]}"#;
        let SubspaceInput::Rational(r) = parse_subspace(m).unwrap() else {
            panic!("expected a rational subspace");
        };
        assert_eq!(r.dim(), 1);
        assert!(parse_subspace("{").is_err());
    }
}
