//! Tutte polynomial as a rank-nullity sum over edge subsets.

use num_bigint::BigInt;

use crate::caps::Caps;
use crate::error::{check_cap, Result};
use crate::graph::Graph;
use crate::poly::BiPoly;

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Rank of an edge subset: `n` minus the number of components it leaves.
fn rank(n: usize, edges: &[(usize, usize)], mask: u64) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut r = 0;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                r += 1;
            }
        }
    }
    r
}

/// `T(G;X,Y) = Σ_{A ⊆ E} (X-1)^{r(E)-r(A)} (Y-1)^{|A|-r(A)}`.
pub fn tutte(g: &Graph, caps: &Caps) -> Result<BiPoly> {
    let edges = g.edges();
    let m = edges.len();
    check_cap("edge count for edge-subset sums", m, caps.edge_subsets)?;
    let n = g.n();
    let full_rank = n - g.component_count();
    let mut counts = vec![vec![0u64; m + 1]; full_rank + 1];
    for mask in 0u64..1 << m {
        let r = rank(n, &edges, mask);
        counts[full_rank - r][mask.count_ones() as usize - r] += 1;
    }
    let mut out = BiPoly::zero();
    for (a, row) in counts.iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            if c != 0 {
                let term = &BiPoly::shifted_monomial(a, b) * &BiPoly::monomial(BigInt::from(c), 0, 0);
                out = &out + &term;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    fn fam(s: &str) -> Graph {
        make_family(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    const CAPS: Caps = Caps::DEFAULT;

    #[test]
    fn examples() {
        assert_eq!(tutte(&fam("cycle:3"), &CAPS).unwrap(), "0 1;1 0;1 0".parse().unwrap());
        assert_eq!(tutte(&fam("empty:4"), &CAPS).unwrap(), BiPoly::one());
        assert_eq!(tutte(&fam("path:4"), &CAPS).unwrap(), BiPoly::monomial(BigInt::from(1), 3, 0));
    }

    #[test]
    fn spanning_tree_count() {
        // T(1,1) counts spanning trees: K4 has 16
        let t = tutte(&fam("clique:4"), &CAPS).unwrap();
        let total: BigInt = t.grid().iter().flatten().sum();
        assert_eq!(total, BigInt::from(16));
    }

    #[test]
    fn cap() {
        assert!(tutte(&fam("clique:7"), &CAPS).is_err());
    }
}
