//! Classification of vertices against a cluster partition: the degree-
//! atypical set W and, for every index set I, the class N_I of vertices with
//! many neighbours in exactly the clusters of I.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Output of the classification. Classes are keyed by the bitmask of I over
/// clusters 1..=t (bit i-1 set iff i in I); vertices of W appear in no
/// class, and W plus the classes partition the vertex set.
#[derive(Clone, Debug)]
pub struct Classification {
    pub w: VertexSet,
    pub classes: BTreeMap<u64, VertexSet>,
    /// Clusters counted (t), excluding the exceptional part.
    pub t: usize,
    /// For each nonempty class with the reduced graph supplied: whether the
    /// reduced graph restricted to I contains an edge.
    pub reduced_edge_in: BTreeMap<u64, bool>,
}

impl Classification {
    pub fn class(&self, members: &[usize]) -> Option<&VertexSet> {
        let mut mask = 0u64;
        for &i in members {
            mask |= 1 << (i - 1);
        }
        self.classes.get(&mask)
    }
}

/// Classifies every vertex of H against the partition V_0, V_1, ..., V_t.
///
/// W collects vertices with more than (1+eps) p |V_i| neighbours in some
/// cluster i >= 1 or more than 2 eps p n neighbours in V_0; the remaining
/// vertices land in N_I for I = the set of clusters where they exceed
/// 10 d p |V_i| neighbours. Degrees are measured in H.
pub fn classify_partition(
    h: &Graph,
    partition: &[VertexSet],
    d: f64,
    epsilon: f64,
    p: f64,
    reduced_edges: Option<&[(usize, usize)]>,
) -> Result<Classification> {
    if partition.is_empty() {
        return Err(Error::invalid("partition needs at least V_0"));
    }
    let t = partition.len() - 1;
    if t > 64 {
        return Err(Error::invalid("more than 64 clusters unsupported"));
    }
    let n = h.n();
    // verify it is a partition of V(H)
    let mut cover = VertexSet::empty(n);
    for part in partition {
        if part.universe() != n {
            return Err(Error::invalid("partition universe differs from graph"));
        }
        if !cover.is_disjoint(part) {
            return Err(Error::invalid("partition parts overlap"));
        }
        cover = cover.union(part);
    }
    if cover.card() != n {
        return Err(Error::invalid("partition does not cover the vertex set"));
    }

    let nf = n as f64;
    let mut w = VertexSet::empty(n);
    let mut classes: BTreeMap<u64, VertexSet> = BTreeMap::new();
    for v in 0..n {
        let deg0 = h.degree_in(v, &partition[0])? as f64;
        let mut in_w = deg0 > 2.0 * epsilon * p * nf;
        if !in_w {
            for part in &partition[1..] {
                let deg = h.degree_in(v, part)? as f64;
                if deg > (1.0 + epsilon) * p * part.card() as f64 {
                    in_w = true;
                    break;
                }
            }
        }
        if in_w {
            w.insert(v);
            continue;
        }
        let mut mask = 0u64;
        for (i, part) in partition[1..].iter().enumerate() {
            let deg = h.degree_in(v, part)? as f64;
            if deg > 10.0 * d * p * part.card() as f64 {
                mask |= 1 << i;
            }
        }
        classes
            .entry(mask)
            .or_insert_with(|| VertexSet::empty(n))
            .insert(v);
    }

    let mut reduced_edge_in = BTreeMap::new();
    if let Some(redges) = reduced_edges {
        for &mask in classes.keys() {
            let has = redges.iter().any(|&(i, j)| {
                i >= 1
                    && j >= 1
                    && i <= t
                    && j <= t
                    && mask >> (i - 1) & 1 == 1
                    && mask >> (j - 1) & 1 == 1
            });
            reduced_edge_in.insert(mask, has);
        }
    }

    Ok(Classification {
        w,
        classes,
        t,
        reduced_edge_in,
    })
}

/// Empirical analogue of the no-small-class observation: with minimum degree
/// at least (1/3 + gamma) p n, every class with |I| <= t/3 should be empty.
/// Returns the offending classes (empty when the observation holds).
pub fn small_classes(classification: &Classification) -> Vec<u64> {
    classification
        .classes
        .iter()
        .filter(|(mask, set)| !set.is_empty() && 3 * mask.count_ones() as usize <= classification.t)
        .map(|(&mask, _)| mask)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{sample_gnp, Seed};

    fn equal_partition(n: usize, t: usize) -> Vec<VertexSet> {
        // empty exceptional part plus t equal clusters
        let mut parts = vec![VertexSet::empty(n)];
        let per = n / t;
        for i in 0..t {
            let hi = if i == t - 1 { n } else { (i + 1) * per };
            parts.push(VertexSet::from_range(n, i * per..hi));
        }
        parts
    }

    #[test]
    fn empty_graph_all_in_empty_class() {
        let h = Graph::empty(12);
        let parts = equal_partition(12, 3);
        let c = classify_partition(&h, &parts, 0.1, 0.2, 0.5, None).unwrap();
        assert!(c.w.is_empty());
        assert_eq!(c.classes.len(), 1);
        assert_eq!(c.classes[&0].card(), 12);
    }

    #[test]
    fn single_cluster_heavy_vertex() {
        // vertex 8 adjacent to most of V_1 but not enough for W
        let n = 12;
        let mut parts = vec![VertexSet::empty(n)];
        parts.push(VertexSet::from_range(n, 0..6));
        parts.push(VertexSet::from_range(n, 6..12));
        let h = Graph::from_edges(n, [(8, 0), (8, 1), (8, 2)]).unwrap();
        // p = 0.5, d = 0.05: class threshold 10*0.05*0.5*6 = 1.5;
        // W threshold (1+eps) p |V_i| = 1.2*0.5*6 = 3.6 (eps = 0.2)
        let c = classify_partition(&h, &parts, 0.05, 0.2, 0.5, None).unwrap();
        assert!(c.w.is_empty());
        let heavy = c.class(&[1]).unwrap();
        assert!(heavy.contains(8));
        // its three neighbours have one neighbour each: below 1.5
        assert!(c.classes[&0].contains(0));
    }

    #[test]
    fn w_collects_over_threshold_vertices() {
        let n = 12;
        let mut parts = vec![VertexSet::empty(n)];
        parts.push(VertexSet::from_range(n, 0..6));
        parts.push(VertexSet::from_range(n, 6..12));
        // vertex 11 adjacent to 5 of V_1: above (1+0.2)*0.5*6 = 3.6
        let h = Graph::from_edges(n, [(11, 0), (11, 1), (11, 2), (11, 3), (11, 4)]).unwrap();
        let c = classify_partition(&h, &parts, 0.05, 0.2, 0.5, None).unwrap();
        assert!(c.w.contains(11));

        // exceptional-part degrees count toward W too
        let mut parts0 = vec![VertexSet::from_range(n, 0..6)];
        parts0.push(VertexSet::from_range(n, 6..12));
        // threshold 2 eps p n = 2*0.2*0.5*12 = 2.4; vertex 11 has 5 there
        let c0 = classify_partition(&h, &parts0, 0.05, 0.2, 0.5, None).unwrap();
        assert!(c0.w.contains(11));
    }

    #[test]
    fn classes_partition_everything() {
        let n = 1000;
        let p = 0.2;
        let h = sample_gnp(n, p, Seed::new(41))
            .unwrap()
            .filter_edges(|u, v| (u * 7 + v) % 3 != 0);
        let parts = equal_partition(n, 4);
        let c = classify_partition(&h, &parts, 0.1, 0.3, p, None).unwrap();
        let mut union = c.w.clone();
        let mut total = c.w.card();
        for set in c.classes.values() {
            assert!(union.is_disjoint(set), "classes overlap");
            union = union.union(set);
            total += set.card();
        }
        assert_eq!(total, n);
        assert_eq!(union.card(), n);
    }

    #[test]
    fn reduced_graph_edges_are_reported() {
        let n = 12;
        let parts = equal_partition(n, 3);
        let h = Graph::from_edges(n, [(0, 4), (0, 5), (0, 8), (0, 9)]).unwrap();
        // small d puts vertex 0 in class {2,3}
        let c = classify_partition(&h, &parts, 0.01, 0.9, 0.5, Some(&[(2, 3)])).unwrap();
        let mask = *c.classes.iter().find(|(_, set)| set.contains(0)).unwrap().0;
        assert_eq!(mask, 0b110);
        assert!(c.reduced_edge_in[&mask]);

        let c2 = classify_partition(&h, &parts, 0.01, 0.9, 0.5, Some(&[(1, 2)])).unwrap();
        assert!(!c2.reduced_edge_in[&mask]);
    }

    #[test]
    fn small_classes_flags_light_index_sets() {
        // t = 3: classes with |I| <= 1 count as small
        let n = 12;
        let parts = equal_partition(n, 3);
        let h = Graph::from_edges(n, [(0, 4), (0, 5), (1, 4), (1, 8), (1, 9)]).unwrap();
        let c = classify_partition(&h, &parts, 0.05, 0.9, 0.5, None).unwrap();
        let offending = small_classes(&c);
        // vertex 0 sits in N_{2} (|I| = 1 <= t/3): flagged; vertex 1 in
        // N_{2,3} (|I| = 2): not flagged
        assert!(offending.contains(&0b010));
        assert!(!offending.contains(&0b110));
    }

    #[test]
    fn rejects_non_partition() {
        let h = Graph::empty(6);
        let overlapping = vec![
            VertexSet::from_range(6, 0..4),
            VertexSet::from_range(6, 3..6),
        ];
        assert!(classify_partition(&h, &overlapping, 0.1, 0.2, 0.5, None).is_err());
        let incomplete = vec![VertexSet::from_range(6, 0..4)];
        assert!(classify_partition(&h, &incomplete, 0.1, 0.2, 0.5, None).is_err());
    }
}
