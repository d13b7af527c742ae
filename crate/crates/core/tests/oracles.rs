//! Polynomials checked against independent brute-force counts.

use graphpoly::graph::{enumerate_graphs, enumerate_up_to, make_family, FamilySpec, Graph};
use graphpoly::invariants::{
    block_counts, char_poly, chromatic, dominating, gen_chromatic, gen_ind, gen_span, independence, matching_defect,
    matching_generating, matching_numbers, maxcl, tutte, MatrixKind,
};
use graphpoly::orthopoly::laguerre;
use graphpoly::poly::{binomial, factorial, rat, BiPoly, Rational, UniPoly};
use graphpoly::properties::{builtin, complement_property, GraphProperty};
use graphpoly::Caps;
use num_bigint::BigInt;

const CAPS: Caps = Caps::DEFAULT;

fn fam(s: &str) -> Graph {
    make_family(&s.parse::<FamilySpec>().unwrap()).unwrap()
}

fn prop(s: &str) -> GraphProperty {
    s.parse().unwrap()
}

/// k-matchings by testing every edge subset for pairwise disjointness.
fn brute_matchings(g: &Graph) -> Vec<u64> {
    let edges = g.edges();
    let mut counts = vec![0u64; g.n() / 2 + 1];
    for mask in 0u64..1 << edges.len() {
        let mut used = 0u64;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used >> u & 1 == 1 || used >> v & 1 == 1 {
                    ok = false;
                    break;
                }
                used |= 1 << u | 1 << v;
            }
        }
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

#[test]
fn matching_numbers_match_edge_subset_count() {
    for g in enumerate_up_to(6, 7).unwrap() {
        let brute = brute_matchings(&g);
        let fast = matching_numbers(&g).0;
        for (k, &b) in brute.iter().enumerate() {
            assert_eq!(fast.get(k).copied().unwrap_or(0), b as u128, "{g:?} k={k}");
        }
    }
}

#[test]
fn matching_numbers_on_larger_families() {
    // m_k(C_n) = n/(n-k) C(n-k, k)
    for n in 3..30u64 {
        let m = matching_numbers(&fam(&format!("cycle:{n}"))).0;
        for k in 0..=n / 2 {
            let expected = BigInt::from(n) * binomial(n - k, k) / BigInt::from(n - k);
            assert_eq!(BigInt::from(m[k as usize]), expected, "C_{n} k={k}");
        }
    }
}

#[test]
fn laguerre_normalization_from_bipartite_matchings() {
    // K_{n,n} has C(n,k)^2 k! k-matchings; this fixes the scale factor
    for n in 1..=4usize {
        let g = fam(&format!("cbipartite:{n},{n}"));
        let counts = brute_matchings(&g);
        for (k, &c) in counts.iter().enumerate() {
            let expected = binomial(n as u64, k as u64).pow(2) * factorial(k as u32);
            assert_eq!(BigInt::from(c), expected);
        }
        let mu = matching_defect(&g);
        let sign = rat(if n % 2 == 0 { 1 } else { -1 });
        let l = laguerre(n).substitute(&UniPoly::from_ints(&[0, 0, 1])).scale(&sign);
        assert_eq!(mu, l.scale(&Rational::from_integer(factorial(n as u32))), "n={n}");
        assert_eq!(mu == l, n == 1, "form without n! at n={n}");
    }
}

#[test]
fn defect_and_generating_share_counts() {
    for g in enumerate_up_to(6, 7).unwrap() {
        let m = matching_numbers(&g).0;
        let gen = matching_generating(&g);
        let defect = matching_defect(&g);
        for (k, &mk) in m.iter().enumerate() {
            let c = rat(mk as i64);
            assert_eq!(gen.coeff(k), c);
            let sign = if k % 2 == 0 { c } else { -c };
            assert_eq!(defect.coeff(g.n() - 2 * k), sign);
        }
    }
}

/// Proper colourings with k colours by exhaustive assignment.
fn proper_colorings(g: &Graph, k: u64) -> u64 {
    let n = g.n();
    let edges = g.edges();
    let total = k.pow(n as u32);
    (0..total)
        .filter(|&code| {
            let colour = |v: usize| code / k.pow(v as u32) % k;
            edges.iter().all(|&(u, v)| colour(u) != colour(v))
        })
        .count() as u64
}

#[test]
fn chromatic_matches_proper_coloring_counts() {
    for g in enumerate_up_to(5, 7).unwrap() {
        let p = chromatic(&g);
        for k in 0..=4 {
            assert_eq!(p.eval(&rat(k as i64)), rat(proper_colorings(&g, k) as i64), "{g:?} k={k}");
        }
    }
    for spec in ["wheel:5", "ladder:4", "mobius:4", "grid:2x4", "cyclesq:7"] {
        let g = fam(spec);
        let p = chromatic(&g);
        for k in 1..=3 {
            assert_eq!(p.eval(&rat(k as i64)), rat(proper_colorings(&g, k) as i64), "{spec} k={k}");
        }
    }
}

#[test]
fn chromatic_of_named_families() {
    let x = UniPoly::x();
    let xm1 = UniPoly::from_ints(&[-1, 1]);
    let xm2 = UniPoly::from_ints(&[-2, 1]);
    // wheel: X ((X-2)^n + (-1)^n (X-2))
    for n in 3..12u32 {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let expected = &x * &(&xm2.pow(n) + &xm2.scale(&rat(sign)));
        assert_eq!(chromatic(&fam(&format!("wheel:{n}"))), expected, "W_{n}");
    }
    // ladders: (X^2-3X+3)^n + (X-1)((3-X)^n + (1-X)^n) + X^2 - 3X + 1
    let q = UniPoly::from_ints(&[3, -3, 1]);
    for n in 3..10u32 {
        let expected = &(&q.pow(n)
            + &(&xm1 * &(&UniPoly::from_ints(&[3, -1]).pow(n) + &UniPoly::from_ints(&[1, -1]).pow(n))))
            + &UniPoly::from_ints(&[1, -3, 1]);
        assert_eq!(chromatic(&fam(&format!("ladder:{n}"))), expected, "L_{n}");
    }
}

#[test]
fn char_poly_closed_forms() {
    // K_n: (X - n + 1)(X + 1)^(n-1)
    for n in 1..9u32 {
        let expected = &UniPoly::linear_root(rat(n as i64 - 1)) * &UniPoly::from_ints(&[1, 1]).pow(n - 1);
        assert_eq!(char_poly(&fam(&format!("clique:{n}")), MatrixKind::Adjacency), expected);
    }
    // Laplacian: constant term zero and X-coefficient = ± n * spanning trees
    let k4 = char_poly(&fam("clique:4"), MatrixKind::Laplacian);
    assert_eq!(k4, "0 -64 48 -12 1".parse().unwrap());
    for g in enumerate_up_to(5, 7).unwrap() {
        assert_eq!(char_poly(&g, MatrixKind::Laplacian).coeff(0), rat(0));
    }
}

#[test]
fn char_poly_is_multiplicative() {
    let graphs = enumerate_up_to(4, 7).unwrap();
    for g in &graphs {
        for h in graphs.iter().step_by(3) {
            let u = graphpoly::graph::disjoint_union(&[g.clone(), h.clone()]).unwrap();
            assert_eq!(
                char_poly(&u, MatrixKind::Adjacency),
                &char_poly(g, MatrixKind::Adjacency) * &char_poly(h, MatrixKind::Adjacency)
            );
        }
    }
}

#[test]
fn tutte_evaluations() {
    for g in enumerate_up_to(5, 7).unwrap() {
        let t = tutte(&g, &CAPS).unwrap();
        let eval = |x: i64, y: i64| -> BigInt {
            let mut s = BigInt::from(0);
            for (i, row) in t.grid().iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    s += c * BigInt::from(x).pow(i as u32) * BigInt::from(y).pow(j as u32);
                }
            }
            s
        };
        // T(2,2) = 2^m
        assert_eq!(eval(2, 2), BigInt::from(1u64 << g.edge_count()));
        // T(2,1) counts forests (acyclic edge subsets)
        let edges = g.edges();
        let forests = (0u64..1 << edges.len())
            .filter(|&mask| {
                let chosen: Vec<(usize, usize)> =
                    (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
                let h = g.spanning_subgraph(&chosen).unwrap();
                h.edge_count() + h.component_count() == h.n()
            })
            .count();
        assert_eq!(eval(2, 1), BigInt::from(forests));
        // χ(G;X) = (-1)^(n-k) X^k T(1-X, 0), checked at X = 3
        let k = g.component_count();
        let sign = if (g.n() - k) % 2 == 0 { 1 } else { -1 };
        let via_tutte = BigInt::from(sign) * BigInt::from(3).pow(k as u32) * eval(-2, 0);
        assert_eq!(Rational::from_integer(via_tutte), chromatic(&g).eval(&rat(3)));
    }
    assert_eq!(tutte(&fam("cycle:3"), &CAPS).unwrap(), BiPoly::from_ints(&[&[0, 1], &[1], &[1]]));
}

#[test]
fn independence_and_domination_by_subset_listing() {
    for g in enumerate_up_to(5, 7).unwrap() {
        let n = g.n();
        let mut indep = vec![0i64; n + 1];
        let mut dom = vec![0i64; n + 1];
        for mask in 0u64..1 << n {
            let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if verts.iter().all(|&u| verts.iter().all(|&v| !g.has_edge(u, v))) {
                indep[verts.len()] += 1;
            }
            if (0..n).all(|v| mask >> v & 1 == 1 || verts.iter().any(|&u| g.has_edge(u, v))) {
                dom[verts.len()] += 1;
            }
        }
        assert_eq!(independence(&g, &CAPS).unwrap(), UniPoly::from_ints(&indep));
        assert_eq!(dominating(&g, &CAPS).unwrap(), UniPoly::from_ints(&dom));
        assert_eq!(gen_ind(&g, &builtin("edgeless").unwrap(), &CAPS).unwrap(), independence(&g, &CAPS).unwrap());
        assert_eq!(gen_span(&g, &prop("match"), &CAPS).unwrap(), matching_generating(&g));
    }
}

#[test]
fn maximal_cliques_by_subset_listing() {
    for g in enumerate_up_to(6, 7).unwrap() {
        let n = g.n();
        let is_clique = |m: u64| (0..n).all(|u| m >> u & 1 == 0 || (0..n).all(|v| u == v || m >> v & 1 == 0 || g.has_edge(u, v)));
        let mut counts = vec![0i64; n + 1];
        for m in 1u64..1 << n {
            if is_clique(m) && (0..n).all(|v| m >> v & 1 == 1 || !is_clique(m | 1 << v)) {
                counts[m.count_ones() as usize] += 1;
            }
        }
        assert_eq!(maxcl(&g), UniPoly::from_ints(&counts), "{g:?}");
    }
}

#[test]
fn generalized_chromatic_on_cycle_unions() {
    let falling = |k: i64, lambda: i64| (0..k).map(|i| lambda - i).product::<i64>();
    for i in 3..=5 {
        for k in 1..=2 {
            let parts = vec![fam(&format!("cycle:{i}")); k];
            let g = graphpoly::graph::disjoint_union(&parts).unwrap();
            for j in 3..=5 {
                let p = gen_chromatic(&g, &prop(&format!("cycle:{j}")), &CAPS).unwrap();
                if i == j {
                    for lambda in k as i64..8 {
                        assert_eq!(p.eval(&rat(lambda)), rat(falling(k as i64, lambda)));
                    }
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }
}

#[test]
fn block_counts_are_stirling_numbers_for_empty_graphs() {
    // every partition of E_n has edgeless blocks
    let s = block_counts(&fam("empty:6"), &prop("edgeless"), &CAPS).unwrap();
    let stirling: Vec<BigInt> = [0, 1, 31, 90, 65, 15, 1].iter().map(|&v| BigInt::from(v)).collect();
    assert_eq!(s, stirling);
}

#[test]
fn complement_identity_for_more_properties() {
    for g in enumerate_up_to(5, 7).unwrap() {
        for name in ["clique", "disconnected", "match", "set(K1,K2,E2)", "cycleE:4", "not(forest)"] {
            let c = prop(name);
            let sum = &gen_ind(&g, &c, &CAPS).unwrap() + &gen_ind(&g, &complement_property(&c), &CAPS).unwrap();
            assert_eq!(sum, UniPoly::from_ints(&[1, 1]).pow(g.n() as u32), "{name} on {g:?}");
        }
    }
}

#[test]
fn forests_have_equal_matching_and_char_polys() {
    for g in enumerate_graphs(7, 7).unwrap().iter() {
        let is_forest = g.edge_count() + g.component_count() == g.n();
        if is_forest {
            assert_eq!(matching_defect(g), char_poly(g, MatrixKind::Adjacency));
        }
    }
    // a cycle is the smallest case where they differ
    assert_ne!(matching_defect(&fam("cycle:3")), char_poly(&fam("cycle:3"), MatrixKind::Adjacency));
}
