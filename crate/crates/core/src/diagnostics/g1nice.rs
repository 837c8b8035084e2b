//! Monte Carlo checker for the five typical properties of the two-block
//! model G(n,p,p') that the construction relies on.
//!
//! Clauses (a)-(d) are checked exhaustively over vertices; clause (e)
//! quantifies over all large disjoint subset pairs of B, so it is sampled
//! and the report records how many pairs were examined.

use crate::construction::ConstructionParams;
use crate::diagnostics::report::{ClauseReport, ClauseTracker, PropertyReport, Relation};
use crate::error::{Error, Result};
use crate::random::{sample_disjoint_pair, stream, Domain, GnppLayout, Seed};

/// Checks clauses (a)-(e) on a graph with the two-block layout.
///
/// `epsilon` is the band half-width for clause (a) (a free parameter of the
/// check, default 0.2 in the CLI); all other thresholds come from `params`.
pub fn check_g1nice(
    g1: &crate::graph::Graph,
    layout: &GnppLayout,
    params: &ConstructionParams,
    epsilon: f64,
    samples: usize,
    seed: Seed,
) -> Result<PropertyReport> {
    if g1.n() != layout.n {
        return Err(Error::invalid("graph and layout sizes differ"));
    }
    if g1.edges_within(&layout.a) != 0 {
        return Err(Error::invalid("layout mismatch: A is not independent"));
    }
    let n = g1.n() as f64;
    let p = params.p;
    let pp = params.p_prime;
    let c = params.c;
    let k_const = params.k_const;
    let (a_set, b_set) = (&layout.a, &layout.b);

    // (a) deg(b,A), deg(a,B) = (1/2 +- eps) p n for every vertex
    let mut clause_a = ClauseTracker::new(Relation::Le, epsilon * p * n);
    for b in b_set.iter() {
        let d = g1.degree_in(b, a_set)? as f64;
        clause_a.observe(
            (d - 0.5 * p * n).abs(),
            epsilon * p * n,
            format!("deg({b},A) = {d}"),
        );
    }
    for a in a_set.iter() {
        let d = g1.degree_in(a, b_set)? as f64;
        clause_a.observe(
            (d - 0.5 * p * n).abs(),
            epsilon * p * n,
            format!("deg({a},B) = {d}"),
        );
    }

    // (b) for each a in A, at most p' p^3 n^2 edges inside N(a,B)
    let mut clause_b = ClauseTracker::new(Relation::Le, pp * p.powi(3) * n * n);
    for a in a_set.iter() {
        let nbhd = g1.neighbors(a).intersection(b_set);
        let e = g1.edges_within(&nbhd) as f64;
        clause_b.observe(e, pp * p.powi(3) * n * n, format!("a = {a}"));
    }

    // (c) for each b in B with deg(b,B) >= p'pn/10, the number of a in A
    // closing a triangle abb' is at most pn(1 - (1-p)^deg(b,B))
    let mut clause_c = ClauseTracker::new(Relation::Le, 0.0);
    for b in b_set.iter() {
        let deg_bb = g1.degree_in(b, b_set)? as f64;
        if deg_bb < pp * p * n / 10.0 {
            continue;
        }
        let mut tri_a = 0usize;
        for a in g1.neighbors_iter(b) {
            if a_set.contains(a) && g1.common_degree(a, b, b_set)? > 0 {
                tri_a += 1;
            }
        }
        let threshold = p * n * (1.0 - (1.0 - p).powf(deg_bb));
        clause_c.observe(tri_a as f64, threshold, format!("b = {b}"));
    }

    // (d) at most c p^-1 n edges in B touch a vertex with deg(b,B) outside
    // (p p' n / 10, p p' n)
    let cap = p * pp * n;
    let mut bad = crate::vertex_set::VertexSet::empty(g1.n());
    for b in b_set.iter() {
        let d = g1.degree_in(b, b_set)? as f64;
        if d >= cap || d <= cap / 10.0 {
            bad.insert(b);
        }
    }
    let good = b_set.difference(&bad);
    let bad_edges = g1.edges_within(&bad) + g1.edges_between(&bad, &good)?;
    let clause_d = ClauseReport::new(
        "d",
        Relation::Le,
        bad_edges as f64,
        c * n / p,
        b_set.card(),
        usize::from(bad_edges as f64 > c * n / p),
        format!("{} window violators", bad.card()),
    );

    // (e) e(U,V) > 2 c p^-1 n for sampled disjoint U,V in B with
    // |U|,|V| >= 2n/K
    let min_size = (2.0 * n / k_const).ceil() as usize;
    let mut clause_e = ClauseTracker::new(Relation::Gt, 2.0 * c * n / p);
    if 2 * min_size <= b_set.card() && min_size >= 1 {
        let mut rng = stream(seed, Domain::Diagnostics);
        let max_size = b_set.card() / 2;
        for _ in 0..samples {
            use rand::Rng;
            let k1 = rng.gen_range(min_size..=max_size);
            let k2 = rng.gen_range(min_size..=max_size.min(b_set.card() - k1));
            let (u, v) = sample_disjoint_pair(&mut rng, b_set, k1, k2);
            let e = g1.edges_between(&u, &v)? as f64;
            clause_e.observe(e, 2.0 * c * n / p, format!("|U|={k1}, |V|={k2}"));
        }
    }

    Ok(PropertyReport {
        lemma: "g1nice".into(),
        clauses: vec![
            clause_a.into_clause("a"),
            clause_b.into_clause("b"),
            clause_c.into_clause("c"),
            clause_d,
            clause_e.into_clause("e"),
        ],
        seed: seed.value,
    })
}
