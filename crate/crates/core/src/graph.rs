//! Immutable simple undirected graphs with bitset adjacency rows.
//!
//! All counting primitives (degrees into sets, common neighbourhoods,
//! cross-edge counts, triangle census) are word-parallel AND+popcount loops
//! over the rows. Graphs are immutable after construction; edits produce new
//! graphs so a staged pipeline can hold every stage at once.

use crate::error::{Error, Result};
use crate::vertex_set::{and_popcount, words_for, VertexSet};

/// Simple undirected graph on vertices `0..n` with cached edge count.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    row_words: usize,
    // flat n * row_words adjacency matrix, one bitset row per vertex
    bits: Vec<u64>,
    deg: Vec<u32>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Self {
        let row_words = words_for(n);
        Graph {
            n,
            m: 0,
            row_words,
            bits: vec![0; n * row_words],
            deg: vec![0; n],
        }
    }

    /// Builds a graph from an edge list. Rejects loops, out-of-range
    /// endpoints, and duplicate edges (in either orientation).
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge_mut(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge_mut(u, v)
                    .expect("complete graph edges are valid");
            }
        }
        g
    }

    /// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge_mut(v, (v + 1) % n)
                .expect("cycle edges are valid");
        }
        g
    }

    // Internal: construction-time mutation only. Public surface is immutable.
    pub(crate) fn add_edge_mut(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "edge ({u},{v}) outside vertex range 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::invalid(format!("duplicate edge ({u},{v})")));
        }
        self.bits[u * self.row_words + v / 64] |= 1u64 << (v % 64);
        self.bits[v * self.row_words + u / 64] |= 1u64 << (u % 64);
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.m += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cached edge count.
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.row_words..(v + 1) * self.row_words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.deg[v] as usize
    }

    /// Neighbourhood of `v` as a fresh set.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    /// Ascending iterator over neighbours of `v`.
    pub fn neighbors_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// All edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors_iter(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// deg_g(v, s) = |N(v) ∩ s|.
    pub fn degree_in(&self, v: usize, s: &VertexSet) -> Result<usize> {
        if v >= self.n {
            return Err(Error::invalid(format!(
                "vertex {v} outside range 0..{}",
                self.n
            )));
        }
        if s.universe() != self.n {
            return Err(Error::invalid("set universe differs from graph order"));
        }
        Ok(and_popcount(self.row(v), s.words()))
    }

    /// N(u) ∩ N(v) ∩ s for distinct vertices u, v.
    pub fn common_neighbors(&self, u: usize, v: usize, s: &VertexSet) -> Result<VertexSet> {
        if u == v {
            return Err(Error::invalid(format!("common_neighbors with u = v = {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::invalid("vertex outside range"));
        }
        let words = self
            .row(u)
            .iter()
            .zip(self.row(v))
            .zip(s.words())
            .map(|((a, b), c)| a & b & c)
            .collect();
        Ok(VertexSet::from_words(self.n, words))
    }

    /// deg_g(u, v, s) = |N(u) ∩ N(v) ∩ s| without materializing the set.
    pub fn common_degree(&self, u: usize, v: usize, s: &VertexSet) -> Result<usize> {
        if u == v {
            return Err(Error::invalid(format!("common_degree with u = v = {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::invalid("vertex outside range"));
        }
        Ok(self
            .row(u)
            .iter()
            .zip(self.row(v))
            .zip(s.words())
            .map(|((a, b), c)| (a & b & c).count_ones() as usize)
            .sum())
    }

    /// e(u, v) for disjoint sets: each cross edge counted once.
    pub fn edges_between(&self, u: &VertexSet, v: &VertexSet) -> Result<usize> {
        if !u.is_disjoint(v) {
            return Err(Error::invalid("edges_between requires disjoint sets"));
        }
        let mut total = 0;
        for x in u.iter() {
            total += and_popcount(self.row(x), v.words());
        }
        Ok(total)
    }

    /// e(u): edges with both ends in u.
    pub fn edges_within(&self, u: &VertexSet) -> usize {
        let mut twice = 0;
        for x in u.iter() {
            twice += and_popcount(self.row(x), u.words());
        }
        twice / 2
    }

    /// d(u, v) = e(u, v) / (|u| |v|) for disjoint nonempty sets.
    pub fn density(&self, u: &VertexSet, v: &VertexSet) -> Result<f64> {
        if u.is_empty() || v.is_empty() {
            return Err(Error::invalid("density requires nonempty sets"));
        }
        let e = self.edges_between(u, v)?;
        Ok(e as f64 / (u.card() as f64 * v.card() as f64))
    }

    /// Exact triangle count plus the lexicographically first triangle, if any.
    ///
    /// Iterates edges u < v and popcounts N(u) ∩ N(v) restricted to w > v, so
    /// each triangle u < v < w is counted exactly once.
    pub fn triangle_census(&self) -> (u64, Option<(usize, usize, usize)>) {
        let mut count = 0u64;
        let mut witness = None;
        let rw = self.row_words;
        for u in 0..self.n {
            let row_u = self.row(u);
            for v in self.neighbors_iter(u) {
                if v <= u {
                    continue;
                }
                let row_v = self.row(v);
                // mask off w <= v so only w > v survive
                let first_word = v / 64;
                let mut local = 0u64;
                let mut first_common = None;
                for wi in first_word..rw {
                    let mut w = row_u[wi] & row_v[wi];
                    if wi == first_word {
                        let shift = v % 64;
                        if shift == 63 {
                            w = 0;
                        } else {
                            w &= !0u64 << (shift + 1);
                        }
                    }
                    if w != 0 && first_common.is_none() {
                        first_common = Some(wi * 64 + w.trailing_zeros() as usize);
                    }
                    local += w.count_ones() as u64;
                }
                if local > 0 && witness.is_none() {
                    witness = Some((u, v, first_common.expect("nonzero intersection")));
                }
                count += local;
            }
        }
        (count, witness)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangle_census().0 == 0
    }

    /// New graph with the listed edges removed. Removing a non-edge
    /// (including a repeated listing) is an error.
    pub fn remove_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::invalid(format!("({u},{v}) is not an edge")));
            }
            g.bits[u * g.row_words + v / 64] &= !(1u64 << (v % 64));
            g.bits[v * g.row_words + u / 64] &= !(1u64 << (u % 64));
            g.deg[u] -= 1;
            g.deg[v] -= 1;
            g.m -= 1;
        }
        Ok(g)
    }

    /// New graph keeping exactly the edges (u < v) the predicate accepts.
    pub fn filter_edges<F: FnMut(usize, usize) -> bool>(&self, mut keep: F) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            if keep(u, v) {
                g.add_edge_mut(u, v).expect("edges of a valid graph");
            }
        }
        g
    }

    /// True if every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        if self.n != other.n {
            return false;
        }
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Minimum degree; 0 for the empty-vertex graph.
    pub fn min_degree(&self) -> usize {
        self.deg.iter().copied().min().unwrap_or(0) as usize
    }

    #[cfg(debug_assertions)]
    pub(crate) fn debug_validate(&self) {
        let mut twice = 0usize;
        for v in 0..self.n {
            assert!(!self.has_edge(v, v), "loop at {v}");
            let pc: usize = self.row(v).iter().map(|w| w.count_ones() as usize).sum();
            assert_eq!(pc, self.deg[v] as usize, "stale degree at {v}");
            twice += pc;
        }
        assert_eq!(twice, 2 * self.m, "stale edge count");
        for u in 0..self.n {
            for v in self.neighbors_iter(u) {
                assert!(self.has_edge(v, u), "asymmetric edge ({u},{v})");
            }
        }
    }
}
