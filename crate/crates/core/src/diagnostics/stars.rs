//! Bad stars: certificates, the canonical deleted-neighbourhood witness, and
//! the greedy disjoint packing that desk-tests the few-bad-stars bound.
//!
//! Badness checking is witness-based. Searching all candidate witness sets
//! is exponential and the arguments only ever use the canonical witness
//! N_Gamma(x,A) \ N_H(x,A), so the packing count is a lower bound on the
//! true packing number; that is the direction needed to probe the
//! fewer-than-p^{-1}/2 bound.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A claimed (q,eps)-bad s-star: center, leaves, ambient set, and witness.
#[derive(Clone, Debug)]
pub struct StarCertificate {
    pub center: usize,
    pub leaves: Vec<usize>,
    /// The ambient set the star is bad for.
    pub ambient: VertexSet,
    pub q: f64,
    pub epsilon: f64,
    /// Witness S, a subset of N_Gamma(center, ambient).
    pub witness: VertexSet,
}

/// The deleted neighbourhood N_Gamma(x, A) \ N_H(x, A): exactly the witness
/// the arguments use when H arose from Gamma by deletions.
pub fn canonical_witness(gamma: &Graph, h: &Graph, x: usize, a: &VertexSet) -> Result<VertexSet> {
    if x >= gamma.n() {
        return Err(Error::invalid(format!("vertex {x} out of range")));
    }
    if gamma.n() != h.n() {
        return Err(Error::invalid("graphs have different orders"));
    }
    let in_gamma = gamma.neighbors(x).intersection(a);
    let in_h = h.neighbors(x).intersection(a);
    Ok(in_gamma.difference(&in_h))
}

/// Checks the supplied witness only: |S| <= q p |A| and every leaf y has
/// deg_Gamma(y, S) >= (1+eps) q p^2 |A|. Does not search over other S.
pub fn is_bad_star(gamma: &Graph, cert: &StarCertificate, p: f64) -> Result<bool> {
    let n = gamma.n();
    if cert.center >= n {
        return Err(Error::invalid("center out of range"));
    }
    let mut seen = VertexSet::empty(n);
    for &leaf in &cert.leaves {
        if leaf >= n {
            return Err(Error::invalid(format!("leaf {leaf} out of range")));
        }
        if !seen.insert(leaf) {
            return Err(Error::invalid(format!("duplicate leaf {leaf}")));
        }
        if !gamma.has_edge(cert.center, leaf) {
            return Err(Error::invalid(format!(
                "leaf {leaf} is not adjacent to center {}",
                cert.center
            )));
        }
    }
    let center_nbhd = gamma.neighbors(cert.center).intersection(&cert.ambient);
    if !cert.witness.is_subset_of(&center_nbhd) {
        return Err(Error::invalid(
            "witness is not contained in the center's neighbourhood in the ambient set",
        ));
    }

    let a_size = cert.ambient.card() as f64;
    if (cert.witness.card() as f64) > cert.q * p * a_size {
        return Ok(false);
    }
    let leaf_floor = (1.0 + cert.epsilon) * cert.q * p * p * a_size;
    for &leaf in &cert.leaves {
        if (gamma.degree_in(leaf, &cert.witness)? as f64) < leaf_floor {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of the greedy disjoint bad-star packing.
#[derive(Clone, Debug)]
pub struct BadStarPacking {
    pub stars: Vec<StarCertificate>,
    /// The bound the count is compared against: p^{-1}/2.
    pub bound: f64,
    /// True iff s >= 100 q^-1 eps^-2 p^-1 (the regime of the bound).
    pub hypothesis_ok: bool,
}

impl BadStarPacking {
    pub fn count(&self) -> usize {
        self.stars.len()
    }

    pub fn below_bound(&self) -> bool {
        (self.stars.len() as f64) < self.bound
    }
}

/// Greedily packs vertex-disjoint s-stars outside `a` whose canonical
/// witnesses certify (q,eps)-badness for `a`.
///
/// Centers are scanned in ascending order; a star is taken as soon as s
/// unused qualifying leaves exist (the s smallest), so one pass is maximal:
/// the available-leaf supply only shrinks. Off-regime (q, s) pairs are
/// flagged via `hypothesis_ok` rather than rejected.
pub fn count_disjoint_bad_stars(
    gamma: &Graph,
    h: &Graph,
    a: &VertexSet,
    q: f64,
    epsilon: f64,
    s: usize,
    p: f64,
) -> Result<BadStarPacking> {
    if s == 0 {
        return Err(Error::invalid("star size s must be at least 1"));
    }
    if !h.is_subgraph_of(gamma) {
        return Err(Error::invalid("H must be a subgraph of Gamma"));
    }
    let n = gamma.n();
    let a_size = a.card() as f64;
    let leaf_floor = (1.0 + epsilon) * q * p * p * a_size;
    let witness_cap = q * p * a_size;
    let hypothesis_ok = s as f64 >= 100.0 / (q * epsilon * epsilon * p);

    let outside = a.complement();
    let mut used = VertexSet::empty(n);
    let mut stars = Vec::new();

    for x in outside.iter() {
        if used.contains(x) {
            continue;
        }
        let witness = canonical_witness(gamma, h, x, a)?;
        if (witness.card() as f64) > witness_cap {
            continue;
        }
        // qualifying leaves: unused Gamma-neighbours outside A with enough
        // degree into the witness
        let mut leaves = Vec::new();
        for y in gamma.neighbors_iter(x) {
            if !outside.contains(y) || used.contains(y) || y == x {
                continue;
            }
            if (gamma.degree_in(y, &witness)? as f64) >= leaf_floor {
                leaves.push(y);
                if leaves.len() == s {
                    break;
                }
            }
        }
        if leaves.len() == s {
            used.insert(x);
            for &y in &leaves {
                used.insert(y);
            }
            stars.push(StarCertificate {
                center: x,
                leaves,
                ambient: a.clone(),
                q,
                epsilon,
                witness,
            });
        }
    }

    Ok(BadStarPacking {
        stars,
        bound: 0.5 / p,
        hypothesis_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{sample_gnp, Seed};

    #[test]
    fn canonical_witness_cases() {
        let gamma = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let a = VertexSet::from_range(6, 1..4);
        // H = Gamma: witness empty
        let w = canonical_witness(&gamma, &gamma, 0, &a).unwrap();
        assert!(w.is_empty());
        // all x-A edges deleted: witness = N_Gamma(x, A)
        let h = gamma.remove_edges(&[(0, 1), (0, 2), (0, 3)]).unwrap();
        let w = canonical_witness(&gamma, &h, 0, &a).unwrap();
        assert_eq!(w.to_vec(), vec![1, 2, 3]);
    }

    fn planted_instance() -> (Graph, VertexSet, Graph) {
        // ambient A = 0..20; center 20; witness S = {0..7} fully joined to
        // three leaves 21,22,23; center adjacent to all of S and the leaves
        let n = 30;
        let mut edges = Vec::new();
        for sv in 0..8 {
            edges.push((sv, 20));
            for leaf in 21..24 {
                edges.push((sv, leaf));
            }
        }
        for leaf in 21..24 {
            edges.push((20, leaf));
        }
        let gamma = Graph::from_edges(n, edges).unwrap();
        let a = VertexSet::from_range(n, 0..20);
        // H deletes exactly the center-S edges, making S canonical
        let h = gamma
            .remove_edges(&(0..8).map(|sv| (sv, 20)).collect::<Vec<_>>())
            .unwrap();
        (gamma, a, h)
    }

    #[test]
    fn planted_star_is_bad() {
        let (gamma, a, h) = planted_instance();
        let witness = canonical_witness(&gamma, &h, 20, &a).unwrap();
        assert_eq!(witness.card(), 8);
        // q p |A| = 0.5*0.8*20 = 8 >= |S|; leaf floor (1+0.25)*0.5*0.64*20 = 8
        let cert = StarCertificate {
            center: 20,
            leaves: vec![21, 22, 23],
            ambient: a.clone(),
            q: 0.5,
            epsilon: 0.25,
            witness,
        };
        assert!(is_bad_star(&gamma, &cert, 0.8).unwrap());

        // a leaf one short of the floor flips the verdict
        let mut small = cert.clone();
        small.witness.remove(0);
        assert!(
            !is_bad_star(&gamma, &small, 0.8).unwrap(),
            "deg(y,S) = 7 < 8"
        );
    }

    #[test]
    fn empty_witness_fails_unless_floor_zero() {
        let gamma = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let a = VertexSet::from_range(4, 1..3);
        let cert = StarCertificate {
            center: 0,
            leaves: vec![3],
            ambient: a.clone(),
            q: 0.5,
            epsilon: 0.1,
            witness: VertexSet::empty(4),
        };
        assert!(!is_bad_star(&gamma, &cert, 0.5).unwrap());
        // with p = 0 the leaf floor is 0 and the empty witness qualifies
        assert!(is_bad_star(&gamma, &cert, 0.0).unwrap());
    }

    #[test]
    fn malformed_certificates_error() {
        let gamma = Graph::from_edges(4, [(0, 1), (0, 2)]).unwrap();
        let a = VertexSet::from_range(4, 1..4);
        let base = StarCertificate {
            center: 0,
            leaves: vec![1],
            ambient: a.clone(),
            q: 0.5,
            epsilon: 0.1,
            witness: VertexSet::empty(4),
        };
        let mut dup = base.clone();
        dup.leaves = vec![1, 1];
        assert!(is_bad_star(&gamma, &dup, 0.5).is_err());

        let mut nonadj = base.clone();
        nonadj.leaves = vec![3];
        assert!(is_bad_star(&gamma, &nonadj, 0.5).is_err());

        let mut outside = base;
        outside.witness = VertexSet::from_indices(4, [3]);
        assert!(is_bad_star(&gamma, &outside, 0.5).is_err());
    }

    #[test]
    fn witness_monotonicity_in_leaf_degrees() {
        // enlarging the witness (within the cap) never turns the leaf-degree
        // clause from satisfied to violated
        let (gamma, a, h) = planted_instance();
        let full = canonical_witness(&gamma, &h, 20, &a).unwrap();
        let mut shrunk = full.clone();
        shrunk.remove(7);
        for &leaf in &[21usize, 22, 23] {
            let d_small = gamma.degree_in(leaf, &shrunk).unwrap();
            let d_full = gamma.degree_in(leaf, &full).unwrap();
            assert!(d_full >= d_small);
        }
    }

    #[test]
    fn packing_h_equals_gamma_is_empty() {
        let gamma = sample_gnp(200, 0.1, Seed::new(4)).unwrap();
        let a = VertexSet::from_range(200, 0..100);
        let packing = count_disjoint_bad_stars(&gamma, &gamma, &a, 0.5, 0.3, 3, 0.1).unwrap();
        // canonical witnesses are all empty and the leaf floor is positive
        assert_eq!(packing.count(), 0);
        assert!(packing.below_bound());
        assert!(!packing.hypothesis_ok, "s = 3 is far below the regime");
    }

    #[test]
    fn packing_finds_planted_star() {
        let (gamma, a, h) = planted_instance();
        let packing = count_disjoint_bad_stars(&gamma, &h, &a, 0.5, 0.25, 3, 0.8).unwrap();
        assert_eq!(packing.count(), 1);
        assert_eq!(packing.stars[0].center, 20);
        assert_eq!(packing.stars[0].leaves, vec![21, 22, 23]);
    }

    #[test]
    fn packing_stars_are_disjoint() {
        let gamma = sample_gnp(300, 0.15, Seed::new(8)).unwrap();
        let a = VertexSet::from_range(300, 0..150);
        // H deletes every A-edge at even centers, creating large witnesses
        let h = gamma.filter_edges(|u, v| {
            let (lo, hi) = (u.min(v), u.max(v));
            !(hi >= 150 && hi % 2 == 0 && lo < 150)
        });
        let packing = count_disjoint_bad_stars(&gamma, &h, &a, 0.9, 0.05, 2, 0.15).unwrap();
        let mut seen = VertexSet::empty(300);
        for star in &packing.stars {
            assert!(seen.insert(star.center), "center reused");
            for &l in &star.leaves {
                assert!(seen.insert(l), "leaf reused");
            }
            assert!(is_bad_star(&gamma, star, 0.15).unwrap());
        }
    }
}
