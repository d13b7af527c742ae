//! Graph polynomials, computed exactly.

mod charpoly;
mod chromatic;
mod matching;
mod subsets;
mod tutte;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use charpoly::{char_poly, MatrixKind};
pub use chromatic::{block_counts, chromatic, count_colorings, gen_chromatic};
pub use matching::{matching_defect, matching_generating, matching_numbers, MatchingNumbers};
pub use subsets::{dominating, gen_ind, gen_span, independence, maxcl};
pub use tutte::tutte;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{BiPoly, UniPoly};
use crate::properties::GraphProperty;

/// A graph polynomial selectable by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyKind {
    /// Adjacency characteristic polynomial.
    Char,
    /// Laplacian characteristic polynomial.
    CharL,
    /// Defect matching polynomial.
    Mu,
    /// Generating matching polynomial.
    MGen,
    Chrom,
    GenChrom(GraphProperty),
    Ind(GraphProperty),
    Span(GraphProperty),
    Tutte,
    Indep,
    Dom,
    MaxCl,
}

impl PolyKind {
    /// Kinds whose value is monic of degree `n(G)`, so the order of a graph
    /// can be read off its polynomial.
    pub fn degree_is_order(&self) -> bool {
        matches!(self, PolyKind::Char | PolyKind::CharL | PolyKind::Mu | PolyKind::Chrom)
    }
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyKind::Char => f.write_str("char"),
            PolyKind::CharL => f.write_str("charL"),
            PolyKind::Mu => f.write_str("mu"),
            PolyKind::MGen => f.write_str("mgen"),
            PolyKind::Chrom => f.write_str("chrom"),
            PolyKind::GenChrom(c) => write!(f, "genchrom:{c}"),
            PolyKind::Ind(c) => write!(f, "ind:{c}"),
            PolyKind::Span(c) => write!(f, "span:{c}"),
            PolyKind::Tutte => f.write_str("tutte"),
            PolyKind::Indep => f.write_str("indep"),
            PolyKind::Dom => f.write_str("dom"),
            PolyKind::MaxCl => f.write_str("maxcl"),
        }
    }
}

impl FromStr for PolyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        for (prefix, make) in [
            ("genchrom:", PolyKind::GenChrom as fn(GraphProperty) -> PolyKind),
            ("ind:", PolyKind::Ind),
            ("span:", PolyKind::Span),
        ] {
            if let Some(rest) = s.strip_prefix(prefix) {
                return Ok(make(rest.parse()?));
            }
        }
        Ok(match s {
            "char" => PolyKind::Char,
            "charL" => PolyKind::CharL,
            "mu" => PolyKind::Mu,
            "mgen" => PolyKind::MGen,
            "chrom" => PolyKind::Chrom,
            "tutte" => PolyKind::Tutte,
            "indep" => PolyKind::Indep,
            "dom" => PolyKind::Dom,
            "maxcl" => PolyKind::MaxCl,
            _ => {
                return Err(Error::input(format!(
                    "unknown polynomial kind '{s}'; expected char, charL, mu, mgen, chrom, \
                     genchrom:<prop>, ind:<prop>, span:<prop>, tutte, indep, dom or maxcl"
                )))
            }
        })
    }
}

/// Value of a graph polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum PolyValue {
    Uni(UniPoly),
    Bi(BiPoly),
}

impl PolyValue {
    pub fn as_uni(&self) -> Option<&UniPoly> {
        match self {
            PolyValue::Uni(p) => Some(p),
            PolyValue::Bi(_) => None,
        }
    }
}

impl fmt::Display for PolyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyValue::Uni(p) => p.fmt(f),
            PolyValue::Bi(p) => p.fmt(f),
        }
    }
}

/// Computes `kind` on `g`.
pub fn compute(g: &Graph, kind: &PolyKind, caps: &Caps) -> Result<PolyValue> {
    Ok(match kind {
        PolyKind::Tutte => PolyValue::Bi(tutte(g, caps)?),
        _ => PolyValue::Uni(compute_uni(g, kind, caps)?),
    })
}

/// Computes a univariate kind; `tutte` is rejected.
pub fn compute_uni(g: &Graph, kind: &PolyKind, caps: &Caps) -> Result<UniPoly> {
    Ok(match kind {
        PolyKind::Char => char_poly(g, MatrixKind::Adjacency),
        PolyKind::CharL => char_poly(g, MatrixKind::Laplacian),
        PolyKind::Mu => matching_defect(g),
        PolyKind::MGen => matching_generating(g),
        PolyKind::Chrom => chromatic(g),
        PolyKind::GenChrom(c) => gen_chromatic(g, c, caps)?,
        PolyKind::Ind(c) => gen_ind(g, c, caps)?,
        PolyKind::Span(c) => gen_span(g, c, caps)?,
        PolyKind::Indep => independence(g, caps)?,
        PolyKind::Dom => dominating(g, caps)?,
        PolyKind::MaxCl => maxcl(g),
        PolyKind::Tutte => return Err(Error::input("tutte is bivariate")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_names_round_trip() {
        for s in [
            "char", "charL", "mu", "mgen", "chrom", "tutte", "indep", "dom", "maxcl",
            "genchrom:connected", "ind:cycle:5", "span:cycleE:4", "ind:not(connected)",
        ] {
            let k: PolyKind = s.parse().unwrap();
            assert_eq!(k.to_string(), s);
        }
        assert!("bogus".parse::<PolyKind>().is_err());
    }
}
