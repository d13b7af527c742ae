//! Ordinary and generalized chromatic polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::error::{check_cap, Result};
use crate::graph::{mask_vertices, Graph};
use crate::poly::{factorial, rat, FallingFactorialForm, UniPoly};
use crate::properties::GraphProperty;

/// `b[j]` = number of partitions of `V` into exactly `j` nonempty blocks,
/// each inducing a graph in `c`.
pub fn block_counts(g: &Graph, c: &GraphProperty, caps: &Caps) -> Result<Vec<BigInt>> {
    let n = g.n();
    check_cap("vertex count for set-partition sums", n, caps.partition)?;
    let full = g.vertex_mask();
    let size = 1usize << n;
    let valid: Vec<bool> = (0..size)
        .map(|m| m != 0 && c.evaluate(&g.induced_mask(m as u64)))
        .collect();
    // parts[mask][j]: partitions of `mask` into j valid blocks; the block
    // holding the lowest vertex of `mask` is chosen first.
    let mut parts: Vec<Vec<BigInt>> = vec![Vec::new(); size];
    parts[0] = vec![BigInt::one()];
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); mask.count_ones() as usize + 1];
        let mut sub = rest;
        loop {
            let block = sub | low;
            if valid[block] {
                for (j, v) in parts[mask ^ block].iter().enumerate() {
                    if !v.is_zero() {
                        acc[j + 1] += v;
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        parts[mask] = acc;
    }
    Ok(std::mem::take(&mut parts[full as usize]))
}

/// Generalized chromatic polynomial `χ_C(G;X) = Σ_j b_j X_(j)`.
///
/// Empty colour classes are allowed and are not tested against `c`; this
/// is the convention under which the falling-factorial sum is a polynomial
/// identity in the number of colours. See [`count_colorings`] for the
/// strict variant.
pub fn gen_chromatic(g: &Graph, c: &GraphProperty, caps: &Caps) -> Result<UniPoly> {
    let b = block_counts(g, c, caps)?;
    Ok(FallingFactorialForm::new(b.into_iter().map(crate::poly::Rational::from_integer).collect())
        .to_monomial())
}

/// Number of maps `V -> [k]` whose colour classes induce graphs in `c`.
///
/// With `strict` unset, empty classes are exempt. With `strict` set, an
/// empty class must itself belong to `c`, which is decided by
/// `c.contains_null`.
pub fn count_colorings(g: &Graph, c: &GraphProperty, k: usize, strict: bool, caps: &Caps) -> Result<BigInt> {
    let b = block_counts(g, c, caps)?;
    if strict && !c.contains_null {
        return Ok(b.get(k).map_or_else(BigInt::zero, |bk| bk * factorial(k as u32)));
    }
    let mut total = BigInt::zero();
    for (j, bj) in b.iter().enumerate().take(k + 1) {
        let falling: BigInt = (0..j).map(|i| BigInt::from(k - i)).product();
        total += bj * falling;
    }
    Ok(total)
}

/// Vertex order that keeps the set of processed vertices with unprocessed
/// neighbours small.
fn frontier_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut done = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in mask_vertices(g.vertex_mask() & !done) {
            let after = done | 1 << v;
            let width = mask_vertices(after)
                .filter(|&u| g.neighbors(u) & !after != 0)
                .count();
            // prefer vertices already touching the processed part
            let detached = usize::from(g.neighbors(v) & done == 0 && done != 0);
            let key = (width, detached, v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let v = best.expect("unprocessed vertex").2;
        order.push(v);
        done |= 1 << v;
    }
    order
}

fn normalize(labels: &[u8]) -> Vec<u8> {
    let mut map = [u8::MAX; 64];
    let mut next = 0u8;
    labels
        .iter()
        .map(|&l| {
            if map[l as usize] == u8::MAX {
                map[l as usize] = next;
                next += 1;
            }
            map[l as usize]
        })
        .collect()
}

/// Ordinary chromatic polynomial by a dynamic program over the colour
/// pattern of the frontier (processed vertices that still have unprocessed
/// neighbours). Works for any order the bitsets support, with cost driven
/// by the frontier width rather than by `n`.
pub fn chromatic(g: &Graph) -> UniPoly {
    let order = frontier_order(g);
    let mut done = 0u64;
    let mut active: Vec<usize> = Vec::new();
    let mut states: HashMap<Vec<u8>, UniPoly> = HashMap::from([(Vec::new(), UniPoly::one())]);
    for &v in &order {
        let mut next: HashMap<Vec<u8>, UniPoly> = HashMap::new();
        for (labels, weight) in &states {
            let blocks = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
            let mut blocked = vec![false; blocks];
            for (i, &u) in active.iter().enumerate() {
                if g.has_edge(u, v) {
                    blocked[labels[i] as usize] = true;
                }
            }
            for (b, &is_blocked) in blocked.iter().enumerate() {
                if !is_blocked {
                    let mut l = labels.clone();
                    l.push(b as u8);
                    let e = next.entry(l).or_insert_with(UniPoly::zero);
                    *e = &*e + weight;
                }
            }
            let mut l = labels.clone();
            l.push(blocks as u8);
            let fresh = weight * &UniPoly::linear_root(rat(blocks as i64));
            let e = next.entry(l).or_insert_with(UniPoly::zero);
            *e = &*e + &fresh;
        }
        active.push(v);
        done |= 1 << v;
        let keep: Vec<bool> = active.iter().map(|&u| g.neighbors(u) & !done != 0).collect();
        active = active.iter().zip(&keep).filter(|(_, &k)| k).map(|(&u, _)| u).collect();
        states = HashMap::new();
        for (labels, weight) in next {
            let kept: Vec<u8> = labels.iter().zip(&keep).filter(|(_, &k)| k).map(|(&l, _)| l).collect();
            let e = states.entry(normalize(&kept)).or_insert_with(UniPoly::zero);
            *e = &*e + &weight;
        }
    }
    let result: UniPoly = states.into_values().sum();
    debug_assert!(result.is_integral());
    result
}
