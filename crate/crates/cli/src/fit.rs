//! Scaling-law fit: ordinary least squares of log(distance) on
//! log(p^-1 n). Heuristic distances are certified upper bounds, so the
//! fitted constant upper-estimates the true one; the slope is the signal.

use serde::Serialize;

use crate::record::ExperimentRecord;

#[derive(Clone, Debug, Serialize)]
pub struct ScalingFit {
    pub slope: f64,
    /// exp(intercept): the constant in distance ~ C * p^-1 n.
    pub c_hat: f64,
    /// Root-mean-square residual of the log-log regression.
    pub residual_rms: f64,
    pub points_used: usize,
    pub distinct_cells: usize,
    /// True when every used distance came from the exact solver.
    pub all_exact: bool,
}

/// A usable observation: a positive distance at a known (n, p).
#[derive(Clone, Copy, Debug)]
pub struct FitPoint {
    pub n: usize,
    pub p: f64,
    pub distance: usize,
    pub exact: bool,
}

/// Extracts fittable points: successful runs with a positive distance and a
/// verified triangle-free output.
pub fn fit_points(records: &[ExperimentRecord]) -> Vec<FitPoint> {
    records
        .iter()
        .filter(|r| r.ok && r.triangles_h == Some(0))
        .filter_map(|r| {
            let d = r.distance?;
            if d == 0 {
                return None;
            }
            Some(FitPoint {
                n: r.n,
                p: r.p,
                distance: d,
                exact: r.distance_exact.unwrap_or(false),
            })
        })
        .collect()
}

pub fn fit_scaling(points: &[FitPoint]) -> anyhow::Result<ScalingFit> {
    if points.len() < 2 {
        anyhow::bail!(
            "need at least 2 observations with positive distance, got {}",
            points.len()
        );
    }
    let xs: Vec<f64> = points.iter().map(|pt| (pt.n as f64 / pt.p).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|pt| (pt.distance as f64).ln()).collect();
    let mean_x = xs.iter().sum::<f64>() / xs.len() as f64;
    let mean_y = ys.iter().sum::<f64>() / ys.len() as f64;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    if sxx < 1e-12 {
        anyhow::bail!("degenerate regression: all p^-1 n values coincide");
    }
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residual_ss: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - slope * x - intercept).powi(2))
        .sum();

    let mut cells: Vec<(usize, u64)> = points.iter().map(|pt| (pt.n, pt.p.to_bits())).collect();
    cells.sort_unstable();
    cells.dedup();

    Ok(ScalingFit {
        slope,
        c_hat: intercept.exp(),
        residual_rms: (residual_ss / points.len() as f64).sqrt(),
        points_used: points.len(),
        distinct_cells: cells.len(),
        all_exact: points.iter().all(|pt| pt.exact),
    })
}

/// Reads records back from a sweep CSV.
pub fn read_records(path: &std::path::Path) -> anyhow::Result<Vec<ExperimentRecord>> {
    let mut reader = csv::Reader::from_path(path)?;
    let mut out = Vec::new();
    for row in reader.deserialize() {
        out.push(row?);
    }
    Ok(out)
}
