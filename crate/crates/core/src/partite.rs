//! Distance to bipartiteness / r-partiteness: exact branch-and-bound for
//! small graphs, multi-restart local search for large ones, and the
//! majority-coloring map used by the far-from-r-partite lower-bound gadget.

use rand::Rng;

use crate::construction::{ConstructionParams, ConstructionTrace};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::random::{stream, Domain, Seed};
use crate::vertex_set::VertexSet;

/// Vertex cap for the exact 2-cut solver.
pub const MAX_CUT_CAP: usize = 28;

/// A (not necessarily proper) assignment of colors 0..r to every vertex.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RColoring {
    pub r: usize,
    pub color: Vec<u8>,
}

impl RColoring {
    /// Number of monochromatic edges of `g` under this coloring.
    pub fn monochromatic_edges(&self, g: &Graph) -> usize {
        g.edges()
            .iter()
            .filter(|&&(u, v)| self.color[u] == self.color[v])
            .count()
    }
}

/// Outcome of a cut computation. `cut_value + distance = m` always; `exact`
/// means no coloring has fewer monochromatic edges.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CutResult {
    pub coloring: RColoring,
    pub cut_value: usize,
    pub distance: usize,
    pub exact: bool,
}

fn cut_result(g: &Graph, coloring: RColoring, exact: bool) -> CutResult {
    let distance = coloring.monochromatic_edges(g);
    CutResult {
        cut_value: g.m() - distance,
        distance,
        coloring,
        exact,
    }
}

/// Documented size caps per r for the exact solver.
pub fn exact_cap(r: usize) -> usize {
    match r {
        0 | 1 => 0,
        2 => MAX_CUT_CAP,
        3 => 18,
        4 => 14,
        5 => 12,
        _ => 10,
    }
}

/// Maximum cut via branch and bound; distance = m - cut is the minimum number
/// of edge deletions to reach a bipartite graph.
pub fn max_cut_exact(g: &Graph) -> Result<CutResult> {
    max_rcut_exact(g, 2)
}

/// Exact minimum-monochromatic r-coloring (maximum r-cut).
pub fn max_rcut_exact(g: &Graph, r: usize) -> Result<CutResult> {
    if r < 2 {
        return Err(Error::invalid(format!("r = {r} must be >= 2")));
    }
    if r > 64 {
        return Err(Error::invalid("r > 64 not supported by the exact solver"));
    }
    let cap = exact_cap(r);
    if g.n() > cap {
        return Err(Error::capacity(format!(
            "exact r = {r} solver capped at {cap} vertices, got {}",
            g.n()
        )));
    }

    let n = g.n();
    if n == 0 {
        return Ok(cut_result(
            g,
            RColoring {
                r,
                color: Vec::new(),
            },
            true,
        ));
    }

    // static order: descending degree, ties by index
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }

    // start from the greedy coloring in that order so pruning bites early
    let mut greedy = vec![0u8; n];
    for &v in &order {
        let mut conflicts = vec![0usize; r];
        for u in g.neighbors_iter(v) {
            if pos[u] < pos[v] {
                conflicts[greedy[u] as usize] += 1;
            }
        }
        greedy[v] = argmin(&conflicts) as u8;
    }
    let best = RColoring {
        r,
        color: greedy.clone(),
    }
    .monochromatic_edges(g);
    let best_colors = greedy;

    // suffix_edges[i] = edges with both endpoints at order position >= i,
    // for the residual part of the lower bound
    let mut suffix_edges = vec![0usize; n + 1];
    for (u, v) in g.edges() {
        suffix_edges[pos[u].min(pos[v])] += 1;
    }
    for i in (0..n).rev() {
        suffix_edges[i] += suffix_edges[i + 1];
    }

    let mut ctx = SolverCtx {
        g,
        r,
        order: &order,
        suffix_edges: &suffix_edges,
        colors: vec![u8::MAX; n],
        best,
        best_colors,
    };
    ctx.branch(0, 0, 0);

    Ok(cut_result(
        g,
        RColoring {
            r,
            color: ctx.best_colors,
        },
        true,
    ))
}

fn argmin(xs: &[usize]) -> usize {
    let mut best = 0;
    for (i, &x) in xs.iter().enumerate() {
        if x < xs[best] {
            best = i;
        }
    }
    best
}

struct SolverCtx<'a> {
    g: &'a Graph,
    r: usize,
    order: &'a [usize],
    suffix_edges: &'a [usize],
    colors: Vec<u8>,
    best: usize,
    best_colors: Vec<u8>,
}

impl SolverCtx<'_> {
    /// No r-partition of k vertices cuts more than (1 - 1/r) k^2 / 2 of the
    /// edges among them, so at least e - that many stay monochromatic.
    fn residual(&self, idx: usize) -> usize {
        let k = self.order.len() - idx;
        let internal = self.suffix_edges[idx];
        let cut_cap = ((1.0 - 1.0 / self.r as f64) * (k * k) as f64 / 2.0).floor() as usize;
        internal.saturating_sub(cut_cap)
    }

    fn branch(&mut self, idx: usize, mono: usize, max_used: usize) {
        if mono + self.residual(idx) >= self.best {
            return; // extensions only add monochromatic edges
        }
        if idx == self.order.len() {
            self.best = mono;
            self.best_colors.copy_from_slice(&self.colors);
            return;
        }
        // lower bound: the cheapest color against already-assigned
        // neighbors, summed over unassigned vertices (edge sets disjoint
        // from the residual's, so the two terms add)
        let mut bound = mono + self.residual(idx);
        for &v in &self.order[idx..] {
            let mut cheapest = usize::MAX;
            let mut conflicts = vec![0usize; self.r];
            for u in self.g.neighbors_iter(v) {
                if self.colors[u] != u8::MAX {
                    conflicts[self.colors[u] as usize] += 1;
                }
            }
            for &c in &conflicts {
                cheapest = cheapest.min(c);
            }
            bound += cheapest;
            if bound >= self.best {
                return;
            }
        }

        let v = self.order[idx];
        let mut conflicts = vec![0usize; self.r];
        for u in self.g.neighbors_iter(v) {
            if self.colors[u] != u8::MAX {
                conflicts[self.colors[u] as usize] += 1;
            }
        }
        // canonical colorings: at most one previously-unused color
        let limit = self.r.min(max_used + 1);
        // explore cheapest colors first
        let mut cand: Vec<usize> = (0..limit).collect();
        cand.sort_by_key(|&c| conflicts[c]);
        for c in cand {
            self.colors[v] = c as u8;
            self.branch(idx + 1, mono + conflicts[c], max_used.max(c + 1));
            self.colors[v] = u8::MAX;
        }
    }
}

/// Greedy init + first-improvement recoloring + a bipartition-repair pass,
/// best over `restarts` independent streams. The returned distance is a
/// certified upper bound: the coloring itself witnesses its monochromatic
/// count.
pub fn rcut_local_search(g: &Graph, r: usize, restarts: usize, seed: Seed) -> Result<CutResult> {
    if r < 2 {
        return Err(Error::invalid(format!("r = {r} must be >= 2")));
    }
    if r > 255 {
        return Err(Error::invalid("r > 255 not supported"));
    }
    let n = g.n();
    if n == 0 || g.m() == 0 {
        return Ok(cut_result(
            g,
            RColoring {
                r,
                color: vec![0; n],
            },
            false,
        ));
    }

    let restarts = restarts.max(1);
    let mut best: Option<(usize, Vec<u8>)> = None;
    for t in 0..restarts {
        let mut rng = stream(seed.derive(t as u64), Domain::LocalSearch);
        let colors = one_restart(g, r, &mut rng);
        let mono = RColoring {
            r,
            color: colors.clone(),
        }
        .monochromatic_edges(g);
        if best.as_ref().is_none_or(|(b, _)| mono < *b) {
            best = Some((mono, colors));
        }
    }
    let (_, colors) = best.expect("at least one restart");
    Ok(cut_result(g, RColoring { r, color: colors }, false))
}

fn one_restart(g: &Graph, r: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Vec<u8> {
    let n = g.n();
    // greedy init in a random order: each vertex takes the least-conflicting
    // color among already-placed neighbors, ties to the smallest color
    let mut order: Vec<usize> = (0..n).collect();
    for i in 0..n {
        let j = rng.gen_range(i..n);
        order.swap(i, j);
    }
    let mut color = vec![u8::MAX; n];
    for &v in &order {
        let mut conflicts = vec![0usize; r];
        for u in g.neighbors_iter(v) {
            if color[u] != u8::MAX {
                conflicts[color[u] as usize] += 1;
            }
        }
        color[v] = argmin(&conflicts) as u8;
    }

    // conflict counts per vertex and color, maintained incrementally
    let mut cnt = vec![0u32; n * r];
    for (u, v) in g.edges() {
        cnt[u * r + color[v] as usize] += 1;
        cnt[v * r + color[u] as usize] += 1;
    }

    loop {
        hill_climb(g, r, &mut color, &mut cnt);
        if !bipartition_repair(g, r, &mut color, &mut cnt) {
            break;
        }
    }
    color
}

/// First-improvement single-vertex recoloring until a full pass is quiet.
fn hill_climb(g: &Graph, r: usize, color: &mut [u8], cnt: &mut [u32]) {
    let n = g.n();
    loop {
        let mut moved = false;
        for v in 0..n {
            let cur = color[v] as usize;
            let row = &cnt[v * r..(v + 1) * r];
            let mut best_c = cur;
            let mut best_val = row[cur];
            for (c, &val) in row.iter().enumerate() {
                if val < best_val {
                    best_val = val;
                    best_c = c;
                }
            }
            if best_c != cur {
                recolor(g, r, color, cnt, v, best_c as u8);
                moved = true;
            }
        }
        if !moved {
            return;
        }
    }
}

fn recolor(g: &Graph, r: usize, color: &mut [u8], cnt: &mut [u32], v: usize, to: u8) {
    let from = color[v];
    color[v] = to;
    for u in g.neighbors_iter(v) {
        cnt[u * r + from as usize] -= 1;
        cnt[u * r + to as usize] += 1;
    }
}

/// For each color pair, re-2-color the components of the induced subgraph by
/// BFS layering and keep the variant with fewer internal monochromatic edges.
/// Escapes the pairwise local optima single-vertex moves cannot leave.
/// Returns true if anything improved.
fn bipartition_repair(g: &Graph, r: usize, color: &mut [u8], cnt: &mut [u32]) -> bool {
    let n = g.n();
    let mut improved = false;
    for c1 in 0..r {
        for c2 in (c1 + 1)..r {
            let mut seen = vec![false; n];
            for root in 0..n {
                let rc = color[root] as usize;
                if seen[root] || (rc != c1 && rc != c2) {
                    continue;
                }
                // collect the component of root in the {c1,c2}-induced graph
                let mut comp = Vec::new();
                let mut queue = std::collections::VecDeque::new();
                let mut side_of = std::collections::HashMap::new();
                seen[root] = true;
                queue.push_back((root, 0u8));
                while let Some((v, s)) = queue.pop_front() {
                    comp.push(v);
                    side_of.insert(v, s);
                    for u in g.neighbors_iter(v) {
                        let uc = color[u] as usize;
                        if (uc == c1 || uc == c2) && !seen[u] {
                            seen[u] = true;
                            queue.push_back((u, 1 - s));
                        }
                    }
                }
                if comp.len() < 2 {
                    continue;
                }
                // current internal mono edges vs BFS layering variant
                let mut cur_mono = 0usize;
                let mut bfs_mono = 0usize;
                for &v in &comp {
                    for u in g.neighbors_iter(v) {
                        if u <= v {
                            continue;
                        }
                        if let Some(&su) = side_of.get(&u) {
                            let sv = side_of[&v];
                            if color[u] == color[v] {
                                cur_mono += 1;
                            }
                            if su == sv {
                                bfs_mono += 1;
                            }
                        }
                    }
                }
                if bfs_mono < cur_mono {
                    for &v in &comp {
                        let want = if side_of[&v] == 0 { c1 as u8 } else { c2 as u8 };
                        if color[v] != want {
                            recolor(g, r, color, cnt, v, want);
                        }
                    }
                    improved = true;
                }
            }
        }
    }
    improved
}

/// Majority coloring of the parts: part i takes the smallest color j whose
/// class covers at least |B_i| / r of the part (exact rational comparison).
/// Total by pigeonhole.
pub fn majority_coloring(coloring: &RColoring, parts: &[VertexSet]) -> Vec<u8> {
    let r = coloring.r;
    let mut out = Vec::with_capacity(parts.len());
    for part in parts {
        let mut counts = vec![0usize; r];
        for v in part.iter() {
            counts[coloring.color[v] as usize] += 1;
        }
        let size = part.card();
        let chosen = (0..r)
            .find(|&j| counts[j] * r >= size)
            .expect("pigeonhole: some class covers a 1/r fraction");
        out.push(chosen as u8);
    }
    out
}

/// One examined coloring of B in the spot check.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SpotcheckRow {
    /// "random" or "heuristic".
    pub kind: String,
    /// Monochromatic edges of G2[B] under the coloring.
    pub mono_edges: usize,
    /// A gadget edge ij whose parts got the same majority color, if any.
    pub mono_pair: Option<(usize, usize)>,
    /// e_G2(B'_i, B'_j) for that pair's majority classes.
    pub majority_class_edges: usize,
    /// Sizes of the two majority classes.
    pub class_sizes: (usize, usize),
}

/// Spot-check report: every examined r-coloring of B, the forced
/// monochromatic gadget pair the majority argument finds, and whether every
/// coloring stayed above the 2c p^-1 n edge threshold.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SpotcheckReport {
    pub threshold: f64,
    pub rows: Vec<SpotcheckRow>,
    pub heuristic_distance: usize,
    /// True if every examined coloring leaves more than `threshold`
    /// monochromatic-forced edges.
    pub all_above_threshold: bool,
}

/// Samples random r-colorings of B plus the local-search best coloring,
/// applies the majority map, and reports the forced-pair edge counts in
/// G2[B] against the 2c p^-1 n threshold.
pub fn far_from_rpartite_spotcheck(
    trace: &ConstructionTrace,
    params: &ConstructionParams,
    samples: usize,
    seed: Seed,
) -> Result<SpotcheckReport> {
    let gadget = &params.gadget;
    let r = gadget.r;
    let n = trace.g2.n();
    let threshold = 2.0 * params.c * n as f64 / params.p;
    let b = &trace.layout.b;
    let parts = &trace.parts;

    // restrict G2 to B-internal edges; vertex ids are unchanged
    let g2b = trace.g2.filter_edges(|u, v| b.contains(u) && b.contains(v));

    let mut rows = Vec::new();
    let mut rng = stream(seed, Domain::Diagnostics);
    let b_vertices = b.to_vec();

    let examine = |kind: &str, coloring: &RColoring, rows: &mut Vec<SpotcheckRow>| {
        let mono_edges = coloring.monochromatic_edges(&g2b);
        let majority = majority_coloring(coloring, parts);
        let mono_pair = gadget
            .graph
            .edges()
            .into_iter()
            .find(|&(i, j)| majority[i] == majority[j]);
        let (majority_class_edges, class_sizes) = match mono_pair {
            Some((i, j)) => {
                let class_i = VertexSet::from_indices(
                    n,
                    parts[i]
                        .iter()
                        .filter(|&v| coloring.color[v] == majority[i]),
                );
                let class_j = VertexSet::from_indices(
                    n,
                    parts[j]
                        .iter()
                        .filter(|&v| coloring.color[v] == majority[j]),
                );
                (
                    trace.g2.edges_between(&class_i, &class_j).unwrap_or(0),
                    (class_i.card(), class_j.card()),
                )
            }
            None => (0, (0, 0)),
        };
        rows.push(SpotcheckRow {
            kind: kind.to_string(),
            mono_edges,
            mono_pair,
            majority_class_edges,
            class_sizes,
        });
    };

    for _ in 0..samples {
        let mut color = vec![0u8; n];
        for &v in &b_vertices {
            color[v] = rng.gen_range(0..r) as u8;
        }
        let coloring = RColoring { r, color };
        examine("random", &coloring, &mut rows);
    }

    let heur = rcut_local_search(&g2b, r, 32, seed)?;
    examine("heuristic", &heur.coloring, &mut rows);

    let all_above = rows
        .iter()
        .all(|row| row.mono_pair.is_none() || (row.majority_class_edges as f64) > threshold);

    Ok(SpotcheckReport {
        threshold,
        rows,
        heuristic_distance: heur.distance,
        all_above_threshold: all_above,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_max_cut(g: &Graph) -> usize {
        let n = g.n();
        assert!((1..=20).contains(&n));
        let edges = g.edges();
        let mut best = 0;
        for mask in 0..(1u32 << (n - 1)) {
            // vertex n-1 fixed on side 0
            let cut = edges
                .iter()
                .filter(|&&(u, v)| {
                    let su = if u == n - 1 { 0 } else { mask >> u & 1 };
                    let sv = if v == n - 1 { 0 } else { mask >> v & 1 };
                    su != sv
                })
                .count();
            best = best.max(cut);
        }
        best
    }

    fn petersen() -> Graph {
        // outer C5, inner pentagram, spokes
        Graph::from_edges(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (5, 7),
                (7, 9),
                (6, 9),
                (6, 8),
                (5, 8),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn exact_cut_examples() {
        let c5 = max_cut_exact(&Graph::cycle(5)).unwrap();
        assert_eq!((c5.cut_value, c5.distance), (4, 1));

        let k4 = max_cut_exact(&Graph::complete(4)).unwrap();
        assert_eq!((k4.cut_value, k4.distance), (4, 2));

        let p = max_cut_exact(&petersen()).unwrap();
        assert_eq!((p.cut_value, p.distance), (12, 3));
        assert_eq!(brute_force_max_cut(&petersen()), 12);

        assert!(max_cut_exact(&Graph::empty(40)).is_err());
    }

    #[test]
    fn exact_cut_matches_brute_force_on_random_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.gen_range(2..=12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let exact = max_cut_exact(&g).unwrap();
            assert_eq!(exact.cut_value, brute_force_max_cut(&g), "n = {n}");
            assert_eq!(exact.cut_value + exact.distance, g.m());
        }
    }

    fn brute_force_min_mono(g: &Graph, r: usize) -> usize {
        let n = g.n();
        let edges = g.edges();
        let mut assign = vec![0usize; n];
        let mut best = usize::MAX;
        loop {
            let mono = edges
                .iter()
                .filter(|&&(u, v)| assign[u] == assign[v])
                .count();
            best = best.min(mono);
            let mut i = 0;
            loop {
                if i == n {
                    return best;
                }
                assign[i] += 1;
                if assign[i] < r {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn rcut_exact_examples() {
        let k4 = max_rcut_exact(&Graph::complete(4), 3).unwrap();
        assert_eq!(k4.distance, 1);

        let grotzsch = crate::gadget::mycielskian(&Graph::cycle(5)).unwrap();
        let d = max_rcut_exact(&grotzsch, 3).unwrap();
        assert!(d.distance >= 1, "chi = 4 forces at least one deletion");
        assert_eq!(d.distance, brute_force_min_mono(&grotzsch, 3));

        let bip = Graph::from_edges(6, [(0, 3), (1, 4), (2, 5), (0, 4)]).unwrap();
        assert_eq!(max_rcut_exact(&bip, 2).unwrap().distance, 0);
        assert_eq!(max_rcut_exact(&bip, 3).unwrap().distance, 0);

        assert!(max_rcut_exact(&Graph::empty(20), 3).is_err());
        assert!(max_rcut_exact(&Graph::cycle(5), 1).is_err());
    }

    #[test]
    fn rcut_exact_matches_brute_force() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..15 {
            let n = rng.gen_range(2..=8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            for r in [2, 3] {
                let exact = max_rcut_exact(&g, r).unwrap();
                assert_eq!(exact.distance, brute_force_min_mono(&g, r));
            }
        }
    }

    #[test]
    fn local_search_dominates_and_often_matches_exact() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let mut matches = 0;
        let total = 100;
        for i in 0..total {
            let n = rng.gen_range(4..=14);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let exact = max_cut_exact(&g).unwrap();
            let heur = rcut_local_search(&g, 2, 8, Seed::new(i)).unwrap();
            assert!(heur.distance >= exact.distance, "upper bound violated");
            assert_eq!(heur.cut_value + heur.distance, g.m());
            if heur.distance == exact.distance {
                matches += 1;
            }
        }
        assert!(
            matches >= 80,
            "local search matched exact on only {matches}/{total}"
        );
    }

    #[test]
    fn local_search_finds_zero_on_trees() {
        use rand::SeedableRng;
        let mut hits = 0;
        for s in 0..100u64 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(s);
            let n = 30;
            // random tree: attach v to a uniform earlier vertex
            let mut edges = Vec::new();
            for v in 1..n {
                edges.push((rng.gen_range(0..v), v));
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let res = rcut_local_search(&g, 2, 4, Seed::new(s)).unwrap();
            if res.distance == 0 {
                hits += 1;
            }
        }
        assert!(hits >= 95, "reached distance 0 on only {hits}/100 trees");
    }

    #[test]
    fn local_search_c5() {
        let res = rcut_local_search(&Graph::cycle(5), 2, 8, Seed::new(0)).unwrap();
        assert_eq!(res.distance, 1);
    }

    #[test]
    fn majority_examples() {
        // all-zero part
        let parts = vec![VertexSet::from_range(4, 0..4)];
        let coloring = RColoring {
            r: 2,
            color: vec![0, 0, 0, 0],
        };
        assert_eq!(majority_coloring(&coloring, &parts), vec![0]);

        // split (0,0,1,1): both colors qualify, smallest wins
        let coloring = RColoring {
            r: 2,
            color: vec![0, 0, 1, 1],
        };
        assert_eq!(majority_coloring(&coloring, &parts), vec![0]);

        // |B_1| = 3, r = 3, colors (2,2,1): threshold is count*3 >= 3, so
        // color 1 qualifies with a single vertex and beats color 2
        let parts = vec![VertexSet::from_range(3, 0..3)];
        let coloring = RColoring {
            r: 3,
            color: vec![2, 2, 1],
        };
        assert_eq!(majority_coloring(&coloring, &parts), vec![1]);
    }

    proptest::proptest! {
        #[test]
        fn majority_is_total(seed in 0u64..500) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(3..40);
            let r = rng.gen_range(2..6);
            let ell = rng.gen_range(1..=n.min(6));
            let b = VertexSet::full(n);
            let parts = crate::gadget::blow_up_parts(&b, ell).unwrap();
            let color: Vec<u8> = (0..n).map(|_| rng.gen_range(0..r) as u8).collect();
            let coloring = RColoring { r, color };
            let majority = majority_coloring(&coloring, &parts);
            proptest::prop_assert_eq!(majority.len(), ell);
            for (i, &c) in majority.iter().enumerate() {
                let count = parts[i].iter().filter(|&v| coloring.color[v] == c).count();
                proptest::prop_assert!(count * r >= parts[i].card());
                // minimality of the chosen color
                for smaller in 0..c {
                    let sc = parts[i]
                        .iter()
                        .filter(|&v| coloring.color[v] == smaller)
                        .count();
                    proptest::prop_assert!(sc * r < parts[i].card());
                }
            }
        }
    }

    #[test]
    fn cut_identity_property() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let n = rng.gen_range(2..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let res = max_cut_exact(&g).unwrap();
            assert_eq!(res.cut_value + res.distance, g.m());
            assert_eq!(
                res.distance,
                res.coloring.monochromatic_edges(&g),
                "coloring certifies its own distance"
            );
        }
    }

    #[test]
    fn distance_zero_iff_chromatic_at_most_r() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..20 {
            let n = rng.gen_range(2..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let chi = crate::gadget::chromatic_number_exact(&g).unwrap();
            for r in 2..=4 {
                let d = max_rcut_exact(&g, r).unwrap().distance;
                assert_eq!(d == 0, chi <= r, "n={n} r={r} chi={chi} d={d}");
            }
        }
    }
}
