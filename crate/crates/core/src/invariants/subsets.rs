//! Sums over vertex subsets and edge subsets.

use num_bigint::BigInt;

use crate::caps::Caps;
use crate::error::{check_cap, Result};
use crate::graph::{mask_vertices, Graph};
use crate::poly::UniPoly;
use crate::properties::{builtin, GraphProperty};

fn poly_from_counts(counts: &[u64]) -> UniPoly {
    UniPoly::from_bigints(counts.iter().map(|&c| BigInt::from(c)))
}

/// `Σ_{A ⊆ V, G[A] ∈ C} X^|A|`. The empty set contributes `1` exactly when
/// `c.contains_null`.
pub fn gen_ind(g: &Graph, c: &GraphProperty, caps: &Caps) -> Result<UniPoly> {
    check_cap("vertex count for vertex-subset sums", g.n(), caps.vertex_subsets)?;
    let mut counts = vec![0u64; g.n() + 1];
    if c.contains_null {
        counts[0] = 1;
    }
    for mask in 1..=g.vertex_mask() {
        if c.evaluate(&g.induced_mask(mask)) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(poly_from_counts(&counts))
}

/// Independence polynomial: `gen_ind` over edgeless induced subgraphs,
/// counting the empty set.
pub fn independence(g: &Graph, caps: &Caps) -> Result<UniPoly> {
    gen_ind(g, &builtin("edgeless")?, caps)
}

/// `Σ_{B ⊆ E, G<B> ∈ D} X^|B|` over spanning subgraphs.
///
/// The usual setting asks `D` to be closed under adding isolated vertices;
/// that is not enforced here. Callers that report the value should tag it
/// when `d.closure_verified()` is false.
pub fn gen_span(g: &Graph, d: &GraphProperty, caps: &Caps) -> Result<UniPoly> {
    let edges = g.edges();
    let m = edges.len();
    check_cap("edge count for edge-subset sums", m, caps.edge_subsets)?;
    let mut counts = vec![0u64; m + 1];
    let bare = Graph::empty(g.n())?;
    for mask in 0u64..1 << m {
        let mut sub = bare.clone();
        for i in mask_vertices(mask) {
            let (u, v) = edges[i];
            sub.add_edge(u, v)?;
        }
        if d.evaluate(&sub) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(poly_from_counts(&counts))
}

/// Domination polynomial over dominating vertex sets. The empty set never
/// dominates a graph with at least one vertex.
pub fn dominating(g: &Graph, caps: &Caps) -> Result<UniPoly> {
    check_cap("vertex count for vertex-subset sums", g.n(), caps.vertex_subsets)?;
    let full = g.vertex_mask();
    let mut counts = vec![0u64; g.n() + 1];
    for mask in 1..=full {
        let covered = mask_vertices(mask).fold(mask, |acc, v| acc | g.neighbors(v));
        if covered == full {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(poly_from_counts(&counts))
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, counts: &mut [u64]) {
    if p == 0 && x == 0 {
        counts[r.count_ones() as usize] += 1;
        return;
    }
    let pivot = mask_vertices(p | x)
        .max_by_key(|&u| (g.neighbors(u) & p).count_ones())
        .expect("p or x nonempty");
    for v in mask_vertices(p & !g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r | 1 << v, p & nv, x & nv, counts);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// `Σ_i mcl_i X^i` over the maximal cliques of `g`.
pub fn maxcl(g: &Graph) -> UniPoly {
    let mut counts = vec![0u64; g.n() + 1];
    bron_kerbosch(g, 0, g.vertex_mask(), 0, &mut counts);
    poly_from_counts(&counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, make_family, FamilySpec};

    fn fam(s: &str) -> Graph {
        make_family(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    fn prop(s: &str) -> GraphProperty {
        s.parse().unwrap()
    }

    const CAPS: Caps = Caps::DEFAULT;

    #[test]
    fn gen_ind_examples() {
        for n in 1..6 {
            let g = fam(&format!("path:{n}"));
            let nn = n as i64;
            assert_eq!(gen_ind(&g, &prop("set(K1)"), &CAPS).unwrap(), UniPoly::from_ints(&[0, nn]));
            assert_eq!(
                gen_ind(&g, &prop("set(K2,E2)"), &CAPS).unwrap(),
                UniPoly::from_ints(&[0, 0, nn * (nn - 1) / 2])
            );
        }
        let g52 = fam("du(cycle:5,cycle:5)");
        assert_eq!(gen_ind(&g52, &prop("cycle:5"), &CAPS).unwrap(), p("0 0 0 0 0 2"));
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence(&fam("path:3"), &CAPS).unwrap(), p("1 3 1"));
        assert_eq!(independence(&fam("clique:5"), &CAPS).unwrap(), p("1 5"));
        assert_eq!(independence(&fam("empty:2"), &CAPS).unwrap(), p("1 2 1"));
    }

    #[test]
    fn gen_span_examples() {
        assert_eq!(gen_span(&fam("clique:3"), &prop("match"), &CAPS).unwrap(), p("1 3"));
        let g = fam("du(cycle:4,cycle:4)");
        assert_eq!(gen_span(&g, &prop("cycleE:4"), &CAPS).unwrap(), p("0 0 0 0 2"));
        // two tailed 5-cycles (each holding a C4) plus a C5
        let t = crate::graph::tailed_cycle(5).unwrap();
        let hat = disjoint_union(&[t.clone(), t, fam("cycle:5")]).unwrap();
        assert_eq!(gen_span(&hat, &prop("cycleE:4"), &CAPS).unwrap(), p("0 0 0 0 2"));
    }

    #[test]
    fn dominating_examples() {
        assert_eq!(dominating(&fam("clique:2"), &CAPS).unwrap(), p("0 2 1"));
        assert_eq!(dominating(&fam("empty:2"), &CAPS).unwrap(), p("0 0 1"));
        assert_eq!(dominating(&fam("path:3"), &CAPS).unwrap(), p("0 1 3 1"));
    }

    #[test]
    fn maxcl_examples() {
        assert_eq!(maxcl(&fam("clique:5")), p("0 0 0 0 0 1"));
        assert_eq!(maxcl(&fam("path:3")), p("0 0 2"));
        assert_eq!(maxcl(&fam("empty:3")), p("0 3"));
    }

    #[test]
    fn caps_fail_fast() {
        let big = fam("path:21");
        assert!(matches!(gen_ind(&big, &prop("connected"), &CAPS), Err(crate::Error::Cap { .. })));
        assert!(matches!(gen_span(&fam("clique:7"), &prop("match"), &CAPS), Err(crate::Error::Cap { .. })));
    }
}
