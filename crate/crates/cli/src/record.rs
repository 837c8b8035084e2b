//! One row per (cell, seed) of a sweep. The CSV header is fixed; the
//! trailing wall_ms column is the only field allowed to differ between
//! reruns of the same config.

use serde::{Deserialize, Serialize};

/// CSV schema version written to the sidecar.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub n: usize,
    pub p: f64,
    pub gamma: f64,
    pub r: usize,
    pub c: f64,
    /// Seed value of this run; `construct --seed <seed>` with the same cell
    /// parameters reproduces the graphs exactly.
    pub seed: u64,
    pub ok: bool,
    pub error: String,
    pub hypothesis_ok: Option<bool>,
    pub ell: Option<usize>,
    pub p_prime: Option<f64>,
    pub m_gamma: Option<usize>,
    pub m_g1: Option<usize>,
    pub m_g2: Option<usize>,
    pub m_g3: Option<usize>,
    pub m_h: Option<usize>,
    pub del_a_internal: Option<usize>,
    pub del_sparsify: Option<usize>,
    pub del_blowup: Option<usize>,
    pub del_degree: Option<usize>,
    pub del_triangle: Option<usize>,
    pub min_degree_h: Option<usize>,
    /// The promised bound (1/2 - gamma) p n.
    pub min_degree_bound: Option<f64>,
    pub triangles_h: Option<u64>,
    pub distance: Option<usize>,
    pub cut_value: Option<usize>,
    pub distance_exact: Option<bool>,
    pub restarts: Option<usize>,
    /// Wall time of the run; timing-only field, excluded from determinism
    /// comparisons.
    pub wall_ms: u64,
}

impl ExperimentRecord {
    /// Failure placeholder: everything after the inputs stays empty.
    pub fn failed(n: usize, p: f64, gamma: f64, r: usize, c: f64, seed: u64, err: String) -> Self {
        ExperimentRecord {
            n,
            p,
            gamma,
            r,
            c,
            seed,
            ok: false,
            error: err,
            hypothesis_ok: None,
            ell: None,
            p_prime: None,
            m_gamma: None,
            m_g1: None,
            m_g2: None,
            m_g3: None,
            m_h: None,
            del_a_internal: None,
            del_sparsify: None,
            del_blowup: None,
            del_degree: None,
            del_triangle: None,
            min_degree_h: None,
            min_degree_bound: None,
            triangles_h: None,
            distance: None,
            cut_value: None,
            distance_exact: None,
            restarts: None,
            wall_ms: 0,
        }
    }
}
