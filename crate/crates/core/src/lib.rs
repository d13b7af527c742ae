//! Exact-arithmetic workbench for graph polynomials.
//!
//! The crate computes characteristic, matching, chromatic, Tutte,
//! independence, domination and subgraph-generating polynomials exactly;
//! fits C-finite recurrences to polynomial sequences over graph families;
//! recognises polynomials by exhaustive search over small graphs; and
//! compares the distinctive power of graph invariants over bounded universes
//! of isomorphism classes.

pub mod caps;
pub mod cli;
pub mod dpower;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod orthopoly;
pub mod poly;
pub mod properties;
pub mod recognition;
pub mod recurrence;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{Graph, SimilaritySignature};
pub use poly::{BiPoly, Rational, UniPoly};
