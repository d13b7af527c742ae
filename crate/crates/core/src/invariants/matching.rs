use std::collections::HashMap;

use num_bigint::BigInt;

use crate::graph::Graph;
use crate::poly::UniPoly;

/// `m_k`: the number of `k`-matchings, for `k = 0..=n/2` (trailing zeros
/// dropped, so the last entry is the largest nonzero count).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingNumbers(pub Vec<u128>);

fn count(g: &Graph, mask: u64, memo: &mut HashMap<u64, Vec<u128>>) -> Vec<u128> {
    if mask == 0 {
        return vec![1];
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    // matchings avoiding v, then those using an edge vu
    let mut out = count(g, rest, memo);
    let mut nbrs = g.neighbors(v) & rest;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        let sub = count(g, rest & !(1 << u), memo);
        if out.len() < sub.len() + 1 {
            out.resize(sub.len() + 1, 0);
        }
        for (k, c) in sub.iter().enumerate() {
            out[k + 1] += c;
        }
    }
    memo.insert(mask, out.clone());
    out
}

/// Relabels vertices in breadth-first order so that the lowest-vertex
/// branching below sweeps the graph with a narrow boundary.
fn bfs_relabel(g: &Graph) -> Graph {
    let n = g.n();
    let mut perm = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if perm[start] != usize::MAX {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([start]);
        perm[start] = next;
        next += 1;
        while let Some(v) = queue.pop_front() {
            for u in crate::graph::mask_vertices(g.neighbors(v)) {
                if perm[u] == usize::MAX {
                    perm[u] = next;
                    next += 1;
                    queue.push_back(u);
                }
            }
        }
    }
    g.relabel(&perm).expect("bfs order is a permutation")
}

/// Counts matchings by branching on the lowest remaining vertex, memoised
/// on the set of remaining vertices.
pub fn matching_numbers(g: &Graph) -> MatchingNumbers {
    let g = bfs_relabel(g);
    let mut memo = HashMap::new();
    let mut m = count(&g, g.vertex_mask(), &mut memo);
    while m.len() > 1 && m.last() == Some(&0) {
        m.pop();
    }
    MatchingNumbers(m)
}

/// Defect matching polynomial `Σ (-1)^k m_k X^(n-2k)`.
pub fn matching_defect(g: &Graph) -> UniPoly {
    let n = g.n();
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (k, &c) in matching_numbers(g).0.iter().enumerate() {
        let c = BigInt::from(c);
        coeffs[n - 2 * k] = if k % 2 == 0 { c } else { -c };
    }
    UniPoly::from_bigints(coeffs)
}

/// Generating matching polynomial `Σ m_k X^k`.
pub fn matching_generating(g: &Graph) -> UniPoly {
    UniPoly::from_bigints(matching_numbers(g).0.into_iter().map(BigInt::from))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    fn fam(s: &str) -> Graph {
        make_family(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    #[test]
    fn numbers() {
        assert_eq!(matching_numbers(&fam("clique:3")).0, vec![1, 3]);
        assert_eq!(matching_numbers(&fam("cycle:4")).0, vec![1, 4, 2]);
        assert_eq!(matching_numbers(&fam("empty:5")).0, vec![1]);
        // perfect matchings of K6: 5!! = 15
        assert_eq!(matching_numbers(&fam("clique:6")).0, vec![1, 15, 45, 15]);
    }

    #[test]
    fn defect_polynomials() {
        assert_eq!(matching_defect(&fam("cycle:3")), p("0 -3 0 1"));
        assert_eq!(matching_defect(&fam("clique:4")), p("3 0 -6 0 1"));
        assert_eq!(matching_defect(&fam("cbipartite:2,2")), p("2 0 -4 0 1"));
    }

    #[test]
    fn generating_polynomials() {
        assert_eq!(matching_generating(&fam("clique:3")), p("1 3"));
        assert_eq!(matching_generating(&fam("empty:5")), p("1"));
        assert_eq!(matching_generating(&fam("cycle:4")), p("1 4 2"));
    }
}
