//! Declarative parameter sweeps: a TOML config expands to a deterministic
//! cell list, every (cell, seed) pair yields exactly one record, and
//! per-cell failures land in the record instead of aborting the sweep.

use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use trifree_core::construction::{construct, derive_params, DEFAULT_C};
use trifree_core::partite::{exact_cap, max_rcut_exact, rcut_local_search};
use trifree_core::random::{sample_gnp, Seed};

use crate::record::{ExperimentRecord, SCHEMA_VERSION};

/// Grid axes. `p_abs` lists absolute probabilities, `p_rel` multiples of
/// n^{-1/2}; cells take the cartesian product with p_abs entries first.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridConfig {
    pub n: Vec<usize>,
    #[serde(default)]
    pub p_abs: Vec<f64>,
    #[serde(default)]
    pub p_rel: Vec<f64>,
    #[serde(default = "default_gamma")]
    pub gamma: Vec<f64>,
    #[serde(default = "default_r")]
    pub r: Vec<usize>,
    #[serde(default = "default_c")]
    pub c: Vec<f64>,
}

fn default_gamma() -> Vec<f64> {
    vec![0.2]
}
fn default_r() -> Vec<usize> {
    vec![2]
}
fn default_c() -> Vec<f64> {
    vec![DEFAULT_C]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMethod {
    /// Exact when the graph is small enough, heuristic otherwise.
    Auto,
    Exact,
    Heuristic,
    None,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(default = "default_seeds")]
    pub seeds_per_cell: u64,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default = "default_restarts")]
    pub restarts: usize,
    #[serde(default = "default_distance")]
    pub distance: DistanceMethod,
    pub out: String,
}

fn default_seeds() -> u64 {
    1
}
fn default_restarts() -> usize {
    32
}
fn default_distance() -> DistanceMethod {
    DistanceMethod::Auto
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepConfig {
    pub grid: GridConfig,
    pub run: RunConfig,
}

/// One fully resolved grid point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Cell {
    pub n: usize,
    pub p: f64,
    pub gamma: f64,
    pub r: usize,
    pub c: f64,
}

impl SweepConfig {
    pub fn from_toml(text: &str) -> anyhow::Result<SweepConfig> {
        let cfg: SweepConfig = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> anyhow::Result<SweepConfig> {
        let text = std::fs::read_to_string(path)?;
        SweepConfig::from_toml(&text)
    }

    fn validate(&self) -> anyhow::Result<()> {
        if self.grid.n.is_empty() {
            anyhow::bail!("grid.n must be nonempty");
        }
        if self.grid.p_abs.is_empty() && self.grid.p_rel.is_empty() {
            anyhow::bail!("one of grid.p_abs / grid.p_rel must be nonempty");
        }
        if self.run.seeds_per_cell == 0 {
            anyhow::bail!("run.seeds_per_cell must be at least 1");
        }
        Ok(())
    }

    /// Deterministic expansion order: n, then p (absolute entries first),
    /// then gamma, r, c.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = Vec::new();
        for &n in &self.grid.n {
            let mut ps: Vec<f64> = self.grid.p_abs.clone();
            ps.extend(self.grid.p_rel.iter().map(|m| m / (n as f64).sqrt()));
            for &p in &ps {
                for &gamma in &self.grid.gamma {
                    for &r in &self.grid.r {
                        for &c in &self.grid.c {
                            cells.push(Cell { n, p, gamma, r, c });
                        }
                    }
                }
            }
        }
        cells
    }
}

/// Runs one (cell, seed-value) pair end to end.
pub fn run_cell(
    cell: Cell,
    seed_value: u64,
    distance: DistanceMethod,
    restarts: usize,
) -> ExperimentRecord {
    let started = Instant::now();
    let seed = Seed::new(seed_value);
    let params = match derive_params(cell.gamma, cell.r, cell.n, cell.p, cell.c, seed) {
        Ok(p) => p,
        Err(e) => {
            return ExperimentRecord::failed(
                cell.n,
                cell.p,
                cell.gamma,
                cell.r,
                cell.c,
                seed_value,
                e.to_string(),
            )
        }
    };
    let gamma_graph = match sample_gnp(cell.n, cell.p, seed) {
        Ok(g) => g,
        Err(e) => {
            return ExperimentRecord::failed(
                cell.n,
                cell.p,
                cell.gamma,
                cell.r,
                cell.c,
                seed_value,
                e.to_string(),
            )
        }
    };
    let trace = match construct(&gamma_graph, &params) {
        Ok(t) => t,
        Err(e) => {
            return ExperimentRecord::failed(
                cell.n,
                cell.p,
                cell.gamma,
                cell.r,
                cell.c,
                seed_value,
                e.to_string(),
            )
        }
    };

    let auto_exact = cell.n <= 24.min(exact_cap(cell.r));
    let cut = match distance {
        DistanceMethod::None => None,
        DistanceMethod::Exact => max_rcut_exact(&trace.h, cell.r).ok(),
        DistanceMethod::Heuristic => rcut_local_search(&trace.h, cell.r, restarts, seed).ok(),
        DistanceMethod::Auto => {
            if auto_exact {
                max_rcut_exact(&trace.h, cell.r).ok()
            } else {
                rcut_local_search(&trace.h, cell.r, restarts, seed).ok()
            }
        }
    };

    ExperimentRecord {
        n: cell.n,
        p: cell.p,
        gamma: cell.gamma,
        r: cell.r,
        c: cell.c,
        seed: seed_value,
        ok: true,
        error: String::new(),
        hypothesis_ok: Some(params.hypothesis_ok),
        ell: Some(params.gadget.ell),
        p_prime: Some(params.p_prime),
        m_gamma: Some(gamma_graph.m()),
        m_g1: Some(trace.g1.m()),
        m_g2: Some(trace.g2.m()),
        m_g3: Some(trace.g3.m()),
        m_h: Some(trace.h.m()),
        del_a_internal: Some(trace.deleted_a_internal),
        del_sparsify: Some(trace.deleted_sparsify),
        del_blowup: Some(trace.deleted_blowup),
        del_degree: Some(trace.deleted_degree),
        del_triangle: Some(trace.deleted_triangle),
        min_degree_h: Some(trace.min_degree_h()),
        min_degree_bound: Some((0.5 - cell.gamma) * cell.p * cell.n as f64),
        triangles_h: Some(trace.triangles_h()),
        distance: cut.as_ref().map(|c| c.distance),
        cut_value: cut.as_ref().map(|c| c.cut_value),
        distance_exact: cut.as_ref().map(|c| c.exact),
        restarts: cut.as_ref().map(|_| restarts),
        wall_ms: started.elapsed().as_millis() as u64,
    }
}

/// The seed value for (cell index, trial), derived from the base seed.
pub fn cell_seed(base_seed: u64, cell_idx: usize, trial: u64) -> u64 {
    Seed::new(base_seed)
        .derive(cell_idx as u64)
        .derive(trial)
        .value
}

/// Expands the config and runs every (cell, seed), in deterministic order.
pub fn run_sweep(config: &SweepConfig) -> Vec<ExperimentRecord> {
    let cells = config.cells();
    let mut records = Vec::with_capacity(cells.len() * config.run.seeds_per_cell as usize);
    for (idx, &cell) in cells.iter().enumerate() {
        for trial in 0..config.run.seeds_per_cell {
            let seed_value = cell_seed(config.run.base_seed, idx, trial);
            records.push(run_cell(
                cell,
                seed_value,
                config.run.distance,
                config.run.restarts,
            ));
        }
    }
    records
}

/// Writes records as CSV plus the provenance sidecar `<out>.meta.json`.
pub fn write_outputs(config: &SweepConfig, records: &[ExperimentRecord]) -> anyhow::Result<()> {
    let out = Path::new(&config.run.out);
    let mut writer = csv::Writer::from_path(out)?;
    for rec in records {
        writer.serialize(rec)?;
    }
    writer.flush()?;

    let meta = serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "config": config,
        "cells": config.cells().len(),
        "records": records.len(),
    });
    let meta_path = format!("{}.meta.json", config.run.out);
    std::fs::write(meta_path, serde_json::to_string_pretty(&meta)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_defaults_and_expansion() {
        let cfg = SweepConfig::from_toml(
            r#"
            [grid]
            n = [100, 200, 400]
            p_rel = [3.0]
            p_abs = [0.5, 0.4]

            [run]
            seeds_per_cell = 10
            out = "x.csv"
            "#,
        )
        .unwrap();
        let cells = cfg.cells();
        // 3 n-values x 3 p-values = 9 cells; 10 seeds each -> 90 records
        assert_eq!(cells.len(), 9);
        assert_eq!(
            cells.len() as u64 * cfg.run.seeds_per_cell,
            90,
            "one record per cell and seed"
        );
        assert_eq!(cells[0].p, 0.5, "absolute p entries come first");
        assert_eq!(cells[1].p, 0.4);
        assert!((cells[2].p - 0.3).abs() < 1e-12, "3/sqrt(100)");
        assert_eq!(cfg.run.restarts, 32);
        assert_eq!(cfg.run.distance, DistanceMethod::Auto);
    }

    #[test]
    fn invalid_configs_rejected() {
        assert!(SweepConfig::from_toml("[grid]\nn=[]\np_abs=[0.5]\n[run]\nout=\"x\"").is_err());
        assert!(SweepConfig::from_toml("[grid]\nn=[10]\n[run]\nout=\"x\"").is_err());
        assert!(SweepConfig::from_toml(
            "[grid]\nn=[10]\np_abs=[0.5]\n[run]\nseeds_per_cell=0\nout=\"x\""
        )
        .is_err());
    }

    #[test]
    fn record_count_matches_cells_times_seeds() {
        let cfg = SweepConfig::from_toml(
            r#"
            [grid]
            n = [60, 80]
            p_rel = [3.0]
            c = [0.001]

            [run]
            seeds_per_cell = 3
            restarts = 4
            out = "unused.csv"
            "#,
        )
        .unwrap();
        let records = run_sweep(&cfg);
        assert_eq!(records.len(), 6);
        for rec in &records {
            assert!(rec.ok, "cell failed: {}", rec.error);
            assert_eq!(rec.triangles_h, Some(0));
        }
    }

    #[test]
    fn failures_become_records() {
        // p too small for the c: p' > 1 is a parameter error, recorded
        let cell = Cell {
            n: 100,
            p: 0.05,
            gamma: 0.2,
            r: 2,
            c: 0.01,
        };
        let rec = run_cell(cell, 0, DistanceMethod::None, 1);
        assert!(!rec.ok);
        assert!(rec.error.contains("p'"));
        assert_eq!(rec.m_h, None);
    }

    #[test]
    fn sweep_is_reproducible() {
        let cfg = SweepConfig::from_toml(
            r#"
            [grid]
            n = [80]
            p_rel = [3.0]

            [run]
            seeds_per_cell = 2
            restarts = 2
            out = "unused.csv"
            "#,
        )
        .unwrap();
        let a = run_sweep(&cfg);
        let b = run_sweep(&cfg);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.seed, y.seed);
            assert_eq!(x.m_h, y.m_h);
            assert_eq!(x.distance, y.distance);
            assert_eq!(x.min_degree_h, y.min_degree_h);
        }
    }
}
