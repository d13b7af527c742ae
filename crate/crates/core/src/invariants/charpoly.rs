use num_bigint::BigInt;
use serde::Serialize;

use crate::graph::Graph;
use crate::poly::{determinant, interpolate, Rational, UniPoly};

/// Which matrix the determinant polynomial is taken of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MatrixKind {
    Adjacency,
    /// Degree diagonal minus adjacency.
    Laplacian,
}

/// `det(X I - M)` for the adjacency or Laplacian matrix `M`.
///
/// The determinant is evaluated exactly at `X = 0..=n` by fraction-free
/// elimination and the degree-`n` interpolant is returned.
pub fn char_poly(g: &Graph, kind: MatrixKind) -> UniPoly {
    let n = g.n();
    let values: Vec<Rational> = (0..=n)
        .map(|x| {
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let mut e: i64 = if g.has_edge(i, j) { 1 } else { 0 };
                            if i == j {
                                e = x as i64;
                                if kind == MatrixKind::Laplacian {
                                    e -= g.degree(i) as i64;
                                }
                            } else if kind == MatrixKind::Adjacency {
                                e = -e;
                            }
                            BigInt::from(e)
                        })
                        .collect()
                })
                .collect();
            Rational::from_integer(determinant(&m))
        })
        .collect();
    let p = interpolate(&values);
    assert!(p.is_monic() && p.is_integral(), "characteristic polynomial must be monic over Z");
    p
}
