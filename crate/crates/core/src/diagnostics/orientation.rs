//! The biased edge orientation and greedy in-star extraction used to bound
//! the edges inside one side of a maximum cut.

use crate::diagnostics::stars::StarCertificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// An orientation of the edges of H'[X] together with the bias set.
#[derive(Clone, Debug)]
pub struct Orientation {
    pub n: usize,
    /// Every H'[X] edge exactly once, as (tail, head).
    pub edges: Vec<(usize, usize)>,
    pub tilde: VertexSet,
}

impl Orientation {
    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(_, h)| h == v).count()
    }
}

/// The vertices of X carrying at least a gamma fraction of their H-degree
/// inside X. Vertices with deg_H(x) = 0 are excluded: the source context
/// divides by the degree and isolated vertices never arise there, so the
/// convention is documented rather than load-bearing.
pub fn tilde_set(h: &Graph, x: &VertexSet, gamma: f64) -> VertexSet {
    let mut out = VertexSet::empty(h.n());
    for v in x.iter() {
        let deg = h.degree(v);
        if deg == 0 {
            continue;
        }
        let deg_in = h.degree_in(v, x).expect("vertex of x is in range");
        if deg_in as f64 >= gamma * deg as f64 {
            out.insert(v);
        }
    }
    out
}

/// Directs every H'[X] edge.
///
/// The candidate head x is the endpoint in the bias set when exactly one
/// endpoint is in it, otherwise the lower-indexed endpoint. The edge points
/// at x iff at least 2/3 of the common Gamma-neighbourhood in Y was deleted
/// from x's H'-neighbourhood; otherwise it points at the other endpoint.
/// When deg_Gamma(x, x', Y) = 0 the condition holds vacuously (0 >= 0) and
/// the edge points at x.
pub fn orient_edges(
    gamma: &Graph,
    h_prime: &Graph,
    x_side: &VertexSet,
    y_side: &VertexSet,
    tilde: &VertexSet,
) -> Result<Orientation> {
    if gamma.n() != h_prime.n() {
        return Err(Error::invalid("graphs have different orders"));
    }
    if !x_side.is_disjoint(y_side) {
        return Err(Error::invalid("X and Y must be disjoint"));
    }
    if !h_prime.is_subgraph_of(gamma) {
        return Err(Error::invalid("H' must be a subgraph of Gamma"));
    }
    let mut edges = Vec::new();
    for (u, v) in h_prime.edges() {
        if !x_side.contains(u) || !x_side.contains(v) {
            continue;
        }
        let (cand, other) = match (tilde.contains(u), tilde.contains(v)) {
            (true, false) => (u, v),
            (false, true) => (v, u),
            _ => (u.min(v), u.max(v)), // both or neither: lower index
        };
        let common = gamma.common_neighbors(cand, other, y_side)?;
        let deleted = common.difference(&h_prime.neighbors(cand));
        let head = if 3 * deleted.card() >= 2 * common.card() {
            cand
        } else {
            other
        };
        let tail = if head == cand { other } else { cand };
        edges.push((tail, head));
    }
    Ok(Orientation {
        n: gamma.n(),
        edges,
        tilde: tilde.clone(),
    })
}

/// Greedy maximal collection of vertex-disjoint s-in-stars with centers
/// outside `exclude`.
///
/// Scans candidate centers in ascending order and takes the s lowest-indexed
/// unused in-neighbours as leaves. One ascending pass is maximal: supplies
/// only shrink, so a center skipped for lack of leaves can never qualify
/// later.
pub fn greedy_in_stars(
    orientation: &Orientation,
    s: usize,
    exclude: &VertexSet,
) -> Result<Vec<StarCertificate>> {
    if s == 0 {
        return Err(Error::invalid("star size s must be at least 1"));
    }
    let n = orientation.n;
    // in-neighbour lists, ascending by construction of `edges`
    let mut in_nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(tail, head) in &orientation.edges {
        in_nbrs[head].push(tail);
    }
    for list in &mut in_nbrs {
        list.sort_unstable();
    }

    let mut used = VertexSet::empty(n);
    let mut stars = Vec::new();
    for (center, nbrs) in in_nbrs.iter().enumerate() {
        if used.contains(center) || exclude.contains(center) {
            continue;
        }
        let avail: Vec<usize> = nbrs
            .iter()
            .copied()
            .filter(|&t| !used.contains(t))
            .take(s)
            .collect();
        if avail.len() == s {
            used.insert(center);
            for &t in &avail {
                used.insert(t);
            }
            stars.push(StarCertificate {
                center,
                leaves: avail,
                ambient: VertexSet::empty(n),
                q: 0.0,
                epsilon: 0.0,
                witness: VertexSet::empty(n),
            });
        }
    }
    Ok(stars)
}
