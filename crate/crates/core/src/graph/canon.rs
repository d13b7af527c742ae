use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::Graph;
use crate::error::{check_cap, Result};

/// Hard ceiling for canonical forms: the bit string must fit in a `u128`.
const CANON_HARD_LIMIT: usize = 16;

/// Lexicographically minimal upper-triangle adjacency string over all vertex
/// permutations. Bits are read column by column, `(0,1), (0,2), (1,2),
/// (0,3), ...`, and the first bit is the most significant one, so for equal
/// `n` integer order equals lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    fn len(&self) -> usize {
        self.n() * (self.n().saturating_sub(1)) / 2
    }

    pub fn bit_string(&self) -> String {
        let len = self.len();
        (0..len)
            .map(|i| if self.bits >> (len - 1 - i) & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// The graph whose labelling realises the minimal string.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n()).expect("canonical forms have n >= 1");
        let len = self.len();
        let mut idx = 0;
        for col in 1..self.n() {
            for row in 0..col {
                if self.bits >> (len - 1 - idx) & 1 == 1 {
                    g.add_edge(row, col).expect("in range");
                }
                idx += 1;
            }
        }
        g
    }
}

struct Search<'a> {
    g: &'a Graph,
    pos: Vec<usize>,
    cols: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, used: u64) {
        let n = self.g.n();
        if depth == n {
            if self.best.as_ref().is_none_or(|b| self.cols < *b) {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut col = 0u32;
            for i in 0..depth {
                col = col << 1 | self.g.has_edge(self.pos[i], v) as u32;
            }
            self.pos[depth] = v;
            self.cols[depth] = col;
            if let Some(best) = &self.best {
                if self.cols[..=depth] > best[..=depth] {
                    continue;
                }
            }
            self.run(depth + 1, used | 1 << v);
        }
    }
}

/// Canonical form by branch and bound over vertex orderings.
pub fn canonical_form(g: &Graph, cap: usize) -> Result<CanonicalForm> {
    check_cap("canonical-form order", g.n(), cap.min(CANON_HARD_LIMIT))?;
    let n = g.n();
    let mut search = Search {
        g,
        pos: vec![0; n],
        cols: vec![0; n],
        best: None,
    };
    search.run(0, 0);
    let best = search.best.expect("at least one ordering");
    let mut bits = 0u128;
    for (depth, col) in best.iter().enumerate().skip(1) {
        bits = bits << depth | *col as u128;
    }
    Ok(CanonicalForm { n: n as u8, bits })
}

type ClassCache = Mutex<HashMap<usize, Arc<Vec<Graph>>>>;

fn cache() -> &'static ClassCache {
    static CACHE: OnceLock<ClassCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// One representative per isomorphism class on `n` vertices, sorted by
/// canonical form. Representatives are the canonically labelled graphs.
///
/// Classes on `n` vertices are generated by adding a vertex, with every
/// possible neighbourhood, to each class on `n - 1` vertices; every graph
/// arises this way by deleting any of its vertices.
pub fn enumerate_graphs(n: usize, cap: usize) -> Result<Arc<Vec<Graph>>> {
    if n == 0 {
        return Err(crate::error::Error::input("enumeration needs n >= 1"));
    }
    check_cap("enumeration order", n, cap.min(CANON_HARD_LIMIT))?;
    if let Some(hit) = cache().lock().expect("cache lock").get(&n) {
        return Ok(hit.clone());
    }
    let classes: Vec<Graph> = if n == 1 {
        vec![Graph::empty(1)?]
    } else {
        let smaller = enumerate_graphs(n - 1, cap)?;
        let forms: BTreeSet<CanonicalForm> = smaller
            .par_iter()
            .flat_map_iter(|h| {
                (0u64..1 << (n - 1)).map(move |nbrs| {
                    let mut g = h.with_isolated_vertex().expect("n within limits");
                    for u in super::mask_vertices(nbrs) {
                        g.add_edge(u, n - 1).expect("in range");
                    }
                    canonical_form(&g, CANON_HARD_LIMIT).expect("n within limits")
                })
            })
            .collect();
        forms.into_iter().map(|f| f.to_graph()).collect()
    };
    let classes = Arc::new(classes);
    cache()
        .lock()
        .expect("cache lock")
        .insert(n, classes.clone());
    Ok(classes)
}

/// All classes on `1..=n_max` vertices, ordered by `(n, canonical form)`.
pub fn enumerate_up_to(n_max: usize, cap: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_graphs(n, cap)?.iter().cloned());
    }
    Ok(out)
}
