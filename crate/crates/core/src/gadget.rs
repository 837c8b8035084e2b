//! Triangle-free, non-r-partite gadgets and the small-graph chromatic oracle
//! that certifies them.
//!
//! The gadget realization is the iterated Mycielskian of K2: it preserves
//! triangle-freeness and raises the chromatic number by exactly one per
//! application, giving the smallest standard construction for each target r.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Vertex cap for the exhaustive chromatic oracle.
pub const CHROMATIC_CAP: usize = 25;

/// A certified triangle-free graph that is not r-partite.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub graph: Graph,
    /// Number of vertices, v(F).
    pub ell: usize,
    /// Exact chromatic number, verified by the oracle.
    pub chi: usize,
    /// The target: chi = r + 1, so F admits no proper r-coloring.
    pub r: usize,
}

/// Mycielskian of `g`: 2n+1 vertices, 3m+n edges; triangle-free if `g` is,
/// and chi goes up by exactly one.
///
/// Vertices 0..n are the originals, n..2n their shadows, 2n the apex.
pub fn mycielskian(g: &Graph) -> Result<Graph> {
    if g.m() == 0 {
        return Err(Error::invalid("mycielskian requires at least one edge"));
    }
    let n = g.n();
    let mut out = Graph::empty(2 * n + 1);
    for (u, v) in g.edges() {
        out.add_edge_mut(u, v)?;
        out.add_edge_mut(u + n, v)?;
        out.add_edge_mut(u, v + n)?;
    }
    for v in 0..n {
        out.add_edge_mut(v + n, 2 * n)?;
    }
    Ok(out)
}

/// Exact chromatic number by DSATUR-ordered branch and bound.
///
/// Capped at 25 vertices; larger graphs are rejected rather than answered
/// heuristically.
pub fn chromatic_number_exact(g: &Graph) -> Result<usize> {
    if g.n() > CHROMATIC_CAP {
        return Err(Error::capacity(format!(
            "chromatic oracle capped at {CHROMATIC_CAP} vertices, got {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.m() == 0 {
        return Ok(1);
    }
    let lb = greedy_clique_size(g).max(2);
    for k in lb..=g.n() {
        if can_color(g, k) {
            return Ok(k);
        }
    }
    unreachable!("every graph on n vertices is n-colorable")
}

/// True if `g` admits a proper coloring with at most k colors.
pub fn can_color(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    color_rec(g, k, &mut colors, 0, 0)
}

fn color_rec(g: &Graph, k: usize, colors: &mut [usize], assigned: usize, max_used: usize) -> bool {
    let n = g.n();
    if assigned == n {
        return true;
    }
    // DSATUR: branch on the uncolored vertex with the most distinctly
    // colored neighbors, ties by degree then index.
    let mut best = usize::MAX;
    let mut best_key = (0usize, 0usize);
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut seen = 0u64;
        for u in g.neighbors_iter(v) {
            if colors[u] != usize::MAX {
                seen |= 1 << colors[u];
            }
        }
        let key = (seen.count_ones() as usize, g.degree(v));
        if best == usize::MAX || key > best_key {
            best = v;
            best_key = key;
        }
    }
    let v = best;
    let mut forbidden = 0u64;
    for u in g.neighbors_iter(v) {
        if colors[u] != usize::MAX {
            forbidden |= 1 << colors[u];
        }
    }
    // allowing at most one fresh color prunes color permutations
    let limit = k.min(max_used + 1);
    for c in 0..limit {
        if forbidden >> c & 1 == 1 {
            continue;
        }
        colors[v] = c;
        if color_rec(g, k, colors, assigned + 1, max_used.max(c + 1)) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// Greedy maximal clique, used as a chromatic lower bound.
fn greedy_clique_size(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for start in 0..n {
        let mut clique = vec![start];
        let mut cand: Vec<usize> = g.neighbors_iter(start).collect();
        while let Some(&v) = cand.iter().max_by_key(|&&v| g.degree(v)) {
            clique.push(v);
            cand.retain(|&u| u != v && g.has_edge(u, v));
        }
        best = best.max(clique.len());
    }
    best
}

/// The gadget for target r: the (r-1)-fold Mycielski iterate of K2.
///
/// r=2 gives C5, r=3 the 11-vertex Grotzsch graph, r=4 a 23-vertex graph.
/// Triangle-freeness and chi = r+1 are certified by the exhaustive oracle,
/// which caps r at 4 (ell = 23 <= 25).
pub fn gadget_for(r: usize) -> Result<Gadget> {
    if r < 2 {
        return Err(Error::invalid(format!(
            "gadget target r = {r} must be >= 2"
        )));
    }
    let mut f = Graph::from_edges(2, [(0, 1)])?;
    for _ in 0..(r - 1) {
        f = mycielskian(&f)?;
    }
    if f.n() > CHROMATIC_CAP {
        return Err(Error::capacity(format!(
            "gadget for r = {r} has {} vertices, beyond the certification cap",
            f.n()
        )));
    }
    if !f.is_triangle_free() {
        return Err(Error::parameter("gadget construction produced a triangle"));
    }
    let chi = chromatic_number_exact(&f)?;
    if chi != r + 1 {
        return Err(Error::parameter(format!(
            "gadget chromatic number {chi} != r + 1 = {}",
            r + 1
        )));
    }
    Ok(Gadget {
        ell: f.n(),
        chi,
        r,
        graph: f,
    })
}

/// Splits `b` into `ell` parts of near-equal size (diff <= 1), assigned as
/// contiguous blocks of b's ascending elements; larger parts come first.
pub fn blow_up_parts(b: &VertexSet, ell: usize) -> Result<Vec<VertexSet>> {
    if ell == 0 {
        return Err(Error::invalid("part count must be at least 1"));
    }
    if ell > b.card() {
        return Err(Error::invalid(format!(
            "cannot split {} vertices into {ell} nonempty parts",
            b.card()
        )));
    }
    let items = b.to_vec();
    let base = items.len() / ell;
    let extra = items.len() % ell;
    let mut parts = Vec::with_capacity(ell);
    let mut offset = 0;
    for i in 0..ell {
        let size = base + usize::from(i < extra);
        parts.push(VertexSet::from_indices(
            b.universe(),
            items[offset..offset + size].iter().copied(),
        ));
        offset += size;
    }
    Ok(parts)
}
