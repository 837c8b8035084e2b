//! Checkers for the typical G(n,p) properties: per-vertex degree bands,
//! subset edge caps, cross-pair density bands, degree-into-set outliers, and
//! the atypical-edge bound.
//!
//! Degree clauses are exhaustive; set-quantified clauses are evaluated on
//! caller-supplied sets plus sampled random sets of qualifying sizes, with
//! sample counts recorded so a pass is never read as a proof.

use rand::Rng;

use crate::diagnostics::report::{ClauseTracker, PropertyReport, Relation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::random::{sample_disjoint_pair, sample_subset, stream, Domain, Seed};
use crate::vertex_set::VertexSet;

/// Clauses (a)-(d) on a G(n,p) sample.
///
/// `given` optionally supplies one (A, B) pair checked in addition to the
/// sampled sets.
pub fn check_basics(
    gamma: &Graph,
    p: f64,
    epsilon: f64,
    m_param: usize,
    given: Option<(&VertexSet, &VertexSet)>,
    samples: usize,
    seed: Seed,
) -> Result<PropertyReport> {
    if !(epsilon > 0.0 && epsilon < 1.5) {
        return Err(Error::invalid(format!(
            "epsilon = {epsilon} outside (0, 3/2)"
        )));
    }
    if m_param == 0 {
        return Err(Error::invalid("M must be at least 1"));
    }
    let n = gamma.n();
    let nf = n as f64;
    let full = VertexSet::full(n);
    let mut rng = stream(seed, Domain::Diagnostics);
    let min_size = nf / m_param as f64;
    let min_size_int = (min_size.ceil() as usize).max(1);

    // (a) deg(v) = (1 +- eps) p n for every vertex
    let mut clause_a = ClauseTracker::new(Relation::Le, epsilon * p * nf);
    for v in 0..n {
        clause_a.observe(
            (gamma.degree(v) as f64 - p * nf).abs(),
            epsilon * p * nf,
            format!("deg({v}) = {}", gamma.degree(v)),
        );
    }

    // (b) e(A) <= max(|A|^2 p, 9n) for sampled A of any size
    let mut clause_b = ClauseTracker::new(Relation::Le, 9.0 * nf);
    let check_b = |set: &VertexSet, clause_b: &mut ClauseTracker| {
        let bound = ((set.card() * set.card()) as f64 * p).max(9.0 * nf);
        let e = set_edges(gamma, set);
        clause_b.observe(e as f64, bound, format!("|A| = {}", set.card()));
    };
    if let Some((a, _)) = given {
        check_b(a, &mut clause_b);
    }
    for _ in 0..samples {
        let k = rng.gen_range(1..=n);
        let set = sample_subset(&mut rng, &full, k);
        check_b(&set, &mut clause_b);
    }

    // (c) e(A,B) = (1 +- eps) p |A| |B| for sampled disjoint pairs with
    // |A|, |B| >= n/M
    let mut clause_c = ClauseTracker::new(Relation::Le, 0.0);
    let check_c = |a: &VertexSet, b: &VertexSet, clause_c: &mut ClauseTracker| -> Result<()> {
        let expect = p * a.card() as f64 * b.card() as f64;
        let e = gamma.edges_between(a, b)? as f64;
        clause_c.observe(
            (e - expect).abs(),
            epsilon * expect,
            format!("|A| = {}, |B| = {}", a.card(), b.card()),
        );
        Ok(())
    };
    if let Some((a, b)) = given {
        if a.is_disjoint(b) && a.card() as f64 >= min_size && b.card() as f64 >= min_size {
            check_c(a, b, &mut clause_c)?;
        }
    }
    if 2 * min_size_int <= n {
        for _ in 0..samples {
            let max1 = n - min_size_int;
            let k1 = rng.gen_range(min_size_int..=max1.min(n / 2));
            let k2 = rng.gen_range(min_size_int..=(n - k1));
            let (a, b) = sample_disjoint_pair(&mut rng, &full, k1, k2);
            check_c(&a, &b, &mut clause_c)?;
        }
    }

    // (d) for sampled A with |A| >= n/M, all but at most 10 M eps^-2 p^-1
    // vertices have (1 +- eps) p |A| neighbours in A
    let outlier_cap = 10.0 * m_param as f64 / (epsilon * epsilon * p);
    let mut clause_d = ClauseTracker::new(Relation::Le, outlier_cap);
    let check_d = |set: &VertexSet, clause_d: &mut ClauseTracker| -> Result<()> {
        let expect = p * set.card() as f64;
        let mut outliers = 0usize;
        for v in 0..n {
            let d = gamma.degree_in(v, set)? as f64;
            if (d - expect).abs() > epsilon * expect {
                outliers += 1;
            }
        }
        clause_d.observe(
            outliers as f64,
            outlier_cap,
            format!("|A| = {}", set.card()),
        );
        Ok(())
    };
    if let Some((a, _)) = given {
        if a.card() >= min_size_int {
            check_d(a, &mut clause_d)?;
        }
    }
    if min_size_int <= n {
        for _ in 0..samples {
            let k = rng.gen_range(min_size_int..=n);
            let set = sample_subset(&mut rng, &full, k);
            check_d(&set, &mut clause_d)?;
        }
    }

    Ok(PropertyReport {
        lemma: "basics".into(),
        clauses: vec![
            clause_a.into_clause("a"),
            clause_b.into_clause("b"),
            clause_c.into_clause("c"),
            clause_d.into_clause("d"),
        ],
        seed: seed.value,
    })
}

fn set_edges(g: &Graph, s: &VertexSet) -> usize {
    g.edges_within(s)
}

/// Atypical edges of Gamma with respect to a disjoint pair (A, B): edges uv
/// failing any of the three displayed conditions (degree into A, degree into
/// B, common degree into B). Returns the violating edges plus the bound
/// 10^3 M eps^-2 p^-1 n they are compared against, with M inferred as the
/// smallest integer for which |A|, |B| >= n/M.
pub struct AtypicalResult {
    pub edges: Vec<(usize, usize)>,
    pub count: usize,
    pub bound: f64,
    pub m_param: usize,
}

pub fn atypical_edges(
    gamma: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    epsilon: f64,
    p: f64,
) -> Result<AtypicalResult> {
    if !a.is_disjoint(b) {
        return Err(Error::invalid("atypical_edges requires disjoint sets"));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::invalid("atypical_edges requires nonempty sets"));
    }
    let n = gamma.n() as f64;
    let m_param = (n / a.card().min(b.card()) as f64).ceil() as usize;
    let pa = p * a.card() as f64;
    let pb = p * b.card() as f64;
    let common_floor = (1.0 - epsilon) * p * p * b.card() as f64;

    // per-vertex degree bands, precomputed once
    let mut deg_ok = vec![false; gamma.n()];
    for (v, ok) in deg_ok.iter_mut().enumerate() {
        let da = gamma.degree_in(v, a)? as f64;
        let db = gamma.degree_in(v, b)? as f64;
        *ok = (da - pa).abs() <= epsilon * pa && (db - pb).abs() <= epsilon * pb;
    }

    let mut bad = Vec::new();
    for (u, v) in gamma.edges() {
        let ok = deg_ok[u] && deg_ok[v] && gamma.common_degree(u, v, b)? as f64 >= common_floor;
        if !ok {
            bad.push((u, v));
        }
    }
    let bound = 1e3 * m_param as f64 * n / (epsilon * epsilon * p);
    Ok(AtypicalResult {
        count: bad.len(),
        edges: bad,
        bound,
        m_param,
    })
}
