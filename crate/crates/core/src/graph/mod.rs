//! Simple undirected graphs on at most 64 vertices, stored as adjacency
//! bitsets, plus the surgery, isomorphism and enumeration tools the rest of
//! the crate needs.

mod canon;
mod family;
mod io;

pub use canon::{canonical_form, enumerate_graphs, enumerate_up_to, CanonicalForm};
pub use family::{make_family, tailed_cycle, FamilySpec};
pub use io::{parse_graph_file, write_graph_file};

use serde::Serialize;

use crate::error::{Error, Result};

/// Bitset vertex masks limit graphs to this many vertices.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph; `adj[v]` has bit `u` set iff `uv` is an edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Vertex, edge and component counts; graphs with equal signatures are
/// called similar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimilaritySignature {
    pub n: usize,
    pub m: usize,
    pub k: usize,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn mask_vertices(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("graphs need at least one vertex"));
        }
        if n > MAX_VERTICES {
            return Err(Error::input(format!(
                "graph on {n} vertices exceeds the {MAX_VERTICES}-vertex limit"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.adj[v] = full_mask(n) & !(1 << v);
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::input(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::input(format!("loop at vertex {u} not allowed")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in mask_vertices(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Connected components of the subgraph induced on `mask`.
    pub(crate) fn components_in(&self, mask: u64) -> Vec<u64> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in mask_vertices(frontier) {
                    next |= self.adj[v];
                }
                next &= mask & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components_in(self.vertex_mask()).len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn signature(&self) -> SimilaritySignature {
        SimilaritySignature {
            n: self.n,
            m: self.edge_count(),
            k: self.component_count(),
        }
    }

    /// Subgraph induced on a nonempty vertex bitmask, vertices renumbered in
    /// increasing order.
    pub(crate) fn induced_mask(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = mask_vertices(mask).collect();
        let mut adj = vec![0u64; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            for (j, &u) in verts.iter().enumerate() {
                if self.has_edge(v, u) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph {
            n: verts.len(),
            adj,
        }
    }

    /// `G[A]`; vertices of `A` are renumbered in increasing order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(Error::input(format!(
                    "vertex {v} not in graph on {} vertices",
                    self.n
                )));
            }
            mask |= 1 << v;
        }
        if mask == 0 {
            return Err(Error::input("induced subgraph needs a nonempty vertex set"));
        }
        Ok(self.induced_mask(mask))
    }

    /// `G<B>`: all vertices of `G`, edges exactly `B`.
    pub fn spanning_subgraph(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(self.n)?;
        for &(u, v) in edges {
            if u >= self.n || v >= self.n || !self.has_edge(u, v) {
                return Err(Error::input(format!("{u}-{v} is not an edge of the graph")));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        if perm.len() != self.n {
            return Err(Error::input("permutation length differs from vertex count"));
        }
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::input("not a permutation"));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Graph adding an isolated vertex.
    pub fn with_isolated_vertex(&self) -> Result<Graph> {
        disjoint_union(&[self.clone(), Graph::empty(1)?])
    }

    /// Graph on the same vertices with exactly the non-edges as edges.
    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| full & !self.adj[v] & !(1 << v))
                .collect(),
        }
    }
}

/// Serialized as graph-file text.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&write_graph_file(self))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Disjoint union; vertices of `gs[i]` follow those of `gs[i-1]`.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    if gs.is_empty() {
        return Err(Error::input("disjoint union of an empty list"));
    }
    let n: usize = gs.iter().map(Graph::n).sum();
    let mut out = Graph::empty(n)?;
    let mut offset = 0;
    for g in gs {
        for (u, v) in g.edges() {
            out.add_edge(u + offset, v + offset)?;
        }
        offset += g.n;
    }
    Ok(out)
}

/// Disjoint union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = disjoint_union(&[g.clone(), h.clone()])?;
    for u in 0..g.n {
        for v in 0..h.n {
            out.add_edge(u, g.n + v)?;
        }
    }
    Ok(out)
}

/// Exact isomorphism test: backtracking over degree-compatible vertex
/// images, checking adjacency to every vertex mapped so far.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n != h.n || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    // map high-degree vertices first; they constrain the search most
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut image = vec![usize::MAX; g.n];
    iso_extend(g, h, &order, 0, &mut image, 0)
}

fn iso_extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.n {
        if used >> w & 1 == 1 || h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if consistent {
            image[v] = w;
            if iso_extend(g, h, order, depth + 1, image, used | 1 << w) {
                return true;
            }
        }
    }
    image[v] = usize::MAX;
    false
}
