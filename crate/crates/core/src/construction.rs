//! The staged construction: starting from a sample of G(n,p), sparsify the
//! first block, impose a gadget blow-up on it, prune degree outliers, then
//! purge every A-B edge lying in a triangle. The result is triangle-free by
//! construction, keeps high minimum degree, and its first block stays far
//! from r-partite.

use rand::Rng;

use crate::error::{Error, Result};
use crate::gadget::{blow_up_parts, gadget_for, Gadget};
use crate::graph::Graph;
use crate::random::{stream, Domain, GnppLayout, Seed};
use crate::vertex_set::VertexSet;

/// All derived constants of the pipeline.
///
/// The gadget choice fixes ell and hence K = 8 r ell and
/// eps = gamma / (400 r^2 ell^2); every downstream constant scales with the
/// gadget size, so a different gadget realization changes them all.
#[derive(Clone, Debug)]
pub struct ConstructionParams {
    pub gamma: f64,
    pub r: usize,
    pub n: usize,
    pub p: f64,
    pub gadget: Gadget,
    /// K = 8 r ell.
    pub k_const: f64,
    /// eps = gamma / (400 r^2 ell^2).
    pub epsilon: f64,
    /// The tunable small constant; see `theoretical_c` for the value the
    /// asymptotic argument picks and `DEFAULT_C` for the desk-scale default.
    pub c: f64,
    /// c' = min(1/K, c/10^4).
    pub c_prime: f64,
    /// p' = c K^2 p^-2 n^-1.
    pub p_prime: f64,
    /// True iff n^{-1/2}/c' <= p <= c'.
    pub hypothesis_ok: bool,
    pub seed: Seed,
}

/// Desk-scale default for the tunable constant c.
pub const DEFAULT_C: f64 = 1e-3;

/// The value the asymptotic existence argument picks implicitly:
/// c = min(eps/2, K^-2). At desk scale it empties the sparsified block
/// (p p' n < 1), so it is exposed for exploration but not used as the
/// default.
pub fn theoretical_c(epsilon: f64, k_const: f64) -> f64 {
    (epsilon / 2.0).min(1.0 / (k_const * k_const))
}

/// Derives every pipeline constant from (gamma, r, n, p, c).
pub fn derive_params(
    gamma: f64,
    r: usize,
    n: usize,
    p: f64,
    c: f64,
    seed: Seed,
) -> Result<ConstructionParams> {
    if !(gamma > 0.0 && gamma < 0.5) {
        return Err(Error::invalid(format!("gamma = {gamma} outside (0, 1/2)")));
    }
    if r < 2 {
        return Err(Error::invalid(format!("r = {r} must be >= 2")));
    }
    if n < 2 {
        return Err(Error::invalid(format!("n = {n} must be >= 2")));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::invalid(format!("p = {p} outside (0, 1)")));
    }
    if c <= 0.0 || c.is_nan() {
        return Err(Error::invalid(format!("c = {c} must be positive")));
    }
    let gadget = gadget_for(r)?;
    let ell = gadget.ell as f64;
    let k_const = 8.0 * r as f64 * ell;
    let epsilon = gamma / (400.0 * (r * r) as f64 * ell * ell);
    let c_prime = (1.0 / k_const).min(c / 1e4);
    let p_prime = c * k_const * k_const / (p * p * n as f64);
    if p_prime > 1.0 {
        return Err(Error::parameter(format!(
            "p' = {p_prime:.6} > 1; choose larger p or smaller c"
        )));
    }
    let hypothesis_ok = (n as f64).powf(-0.5) / c_prime <= p && p <= c_prime;
    Ok(ConstructionParams {
        gamma,
        r,
        n,
        p,
        gadget,
        k_const,
        epsilon,
        c,
        c_prime,
        p_prime,
        hypothesis_ok,
        seed,
    })
}

/// Trace of one pipeline run: the layout, the gadget parts, all four staged
/// graphs, and what each stage deleted.
#[derive(Clone, Debug)]
pub struct ConstructionTrace {
    pub layout: GnppLayout,
    pub parts: Vec<VertexSet>,
    pub g1: Graph,
    pub g2: Graph,
    pub g3: Graph,
    pub h: Graph,
    /// A-internal edges removed entering stage 1.
    pub deleted_a_internal: usize,
    /// B-internal edges lost to sparsification in stage 1.
    pub deleted_sparsify: usize,
    /// B-internal edges outside the gadget blow-up, removed in stage 2.
    pub deleted_blowup: usize,
    /// B-internal edges incident to degree outliers, removed in stage 3.
    pub deleted_degree: usize,
    /// A-B edges purged by the triangle sweep in the final stage.
    pub deleted_triangle: usize,
    /// Final-stage deletions charged per vertex.
    pub h_deletions_per_vertex: Vec<u32>,
}

impl ConstructionTrace {
    pub fn min_degree_h(&self) -> usize {
        self.h.min_degree()
    }

    pub fn triangles_h(&self) -> u64 {
        self.h.triangle_census().0
    }
}

/// Stage 1: drop every A-internal edge; keep each B-internal edge
/// independently with probability p'. A-B edges are untouched. When the
/// input is G(n,p) the output is distributed as G(n,p,p').
pub fn stage_g1(gamma_graph: &Graph, params: &ConstructionParams) -> Result<Graph> {
    if gamma_graph.n() != params.n {
        return Err(Error::invalid(format!(
            "graph has {} vertices, params expect {}",
            gamma_graph.n(),
            params.n
        )));
    }
    let layout = GnppLayout::new(params.n);
    let mut rng = stream(params.seed, Domain::Sparsify);
    let b = &layout.b;
    Ok(gamma_graph.filter_edges(|u, v| {
        let bu = b.contains(u);
        let bv = b.contains(v);
        if bu && bv {
            // coin per surviving B-internal edge, in edge iteration order
            rng.gen::<f64>() < params.p_prime
        } else {
            bu || bv // A-B kept, A-A dropped
        }
    }))
}

/// Stage 2: keep a B-internal edge only if its endpoints lie in distinct
/// parts joined by a gadget edge; A-B edges all survive.
pub fn stage_g2(g1: &Graph, parts: &[VertexSet], gadget: &Gadget) -> Result<Graph> {
    let n = g1.n();
    if parts.is_empty() || parts.len() != gadget.ell {
        return Err(Error::invalid(format!(
            "expected {} parts, got {}",
            gadget.ell,
            parts.len()
        )));
    }
    // part index per vertex; usize::MAX marks vertices outside B
    let mut part_of = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        for v in part.iter() {
            if part_of[v] != usize::MAX {
                return Err(Error::invalid("parts are not disjoint"));
            }
            part_of[v] = i;
        }
    }
    Ok(g1.filter_edges(|u, v| {
        let (pu, pv) = (part_of[u], part_of[v]);
        if pu == usize::MAX || pv == usize::MAX {
            return true; // at most one endpoint in B
        }
        pu != pv && gadget.graph.has_edge(pu, pv)
    }))
}

/// Stage 3: remove every B-internal edge incident to a vertex whose stage-2
/// degree in B lies outside (p p' n / 10, p p' n). Thresholds are evaluated
/// once on the stage-2 degrees, not iteratively.
pub fn stage_g3(g2: &Graph, params: &ConstructionParams) -> Result<Graph> {
    let layout = GnppLayout::new(params.n);
    let b = &layout.b;
    let cap = params.p * params.p_prime * params.n as f64;
    let floor = cap / 10.0;
    let mut out_of_window = VertexSet::empty(g2.n());
    for v in b.iter() {
        let d = g2.degree_in(v, b)? as f64;
        if d >= cap || d <= floor {
            out_of_window.insert(v);
        }
    }
    Ok(g2.filter_edges(|u, v| {
        if b.contains(u) && b.contains(v) {
            !out_of_window.contains(u) && !out_of_window.contains(v)
        } else {
            true
        }
    }))
}

/// Final stage: delete every A-B edge that closes a triangle with a third
/// vertex in B. The only stage that touches A-B edges. The output is
/// triangle-free: A is independent, triangles through one A-vertex are
/// purged here, and B-internal triangles would need a triangle in the
/// gadget.
pub fn stage_h(g3: &Graph, layout: &GnppLayout) -> Result<(Graph, Vec<u32>, usize)> {
    if g3.edges_within(&layout.a) != 0 {
        return Err(Error::invalid("A must be independent before the purge"));
    }
    let b = &layout.b;
    let mut doomed = Vec::new();
    for a in layout.a.iter() {
        for bv in g3.neighbors_iter(a) {
            if !b.contains(bv) {
                continue;
            }
            // triangle a-bv-b' with b' in B
            if g3.common_degree(a, bv, b)? > 0 {
                doomed.push((a.min(bv), a.max(bv)));
            }
        }
    }
    let mut tallies = vec![0u32; g3.n()];
    for &(u, v) in &doomed {
        tallies[u] += 1;
        tallies[v] += 1;
    }
    let count = doomed.len();
    let h = g3.remove_edges(&doomed)?;
    Ok((h, tallies, count))
}

/// Runs the full pipeline on a sampled graph and records every stage.
pub fn construct(gamma_graph: &Graph, params: &ConstructionParams) -> Result<ConstructionTrace> {
    if gamma_graph.n() != params.n {
        return Err(Error::invalid(format!(
            "graph has {} vertices, params expect {}",
            gamma_graph.n(),
            params.n
        )));
    }
    let layout = GnppLayout::new(params.n);
    let parts = blow_up_parts(&layout.b, params.gadget.ell)?;

    let a_internal = gamma_graph.edges_within(&layout.a);
    let b_internal_before = gamma_graph.edges_within(&layout.b);

    let g1 = stage_g1(gamma_graph, params)?;
    let deleted_sparsify = b_internal_before - g1.edges_within(&layout.b);

    let g2 = stage_g2(&g1, &parts, &params.gadget)?;
    let deleted_blowup = g1.m() - g2.m();

    let g3 = stage_g3(&g2, params)?;
    let deleted_degree = g2.m() - g3.m();

    let (h, h_deletions_per_vertex, deleted_triangle) = stage_h(&g3, &layout)?;

    #[cfg(debug_assertions)]
    h.debug_validate();
    debug_assert!(h.is_subgraph_of(&g3));
    debug_assert!(g3.is_subgraph_of(&g2));
    debug_assert!(g2.is_subgraph_of(&g1));
    debug_assert!(g1.is_subgraph_of(gamma_graph));
    debug_assert_eq!(h.triangle_census().0, 0);

    Ok(ConstructionTrace {
        layout,
        parts,
        g1,
        g2,
        g3,
        h,
        deleted_a_internal: a_internal,
        deleted_sparsify,
        deleted_blowup,
        deleted_degree,
        deleted_triangle,
        h_deletions_per_vertex,
    })
}
