use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::peak::{find_first_peak_with, PeakOptions};
use super::schedule::WeightSchedule;
use crate::error::{Error, Result};
use crate::grid::GridGeometry;
use crate::walk::MarkedSet;

/// Two-sided 95% normal quantile for the confidence band.
const Z_95: f64 = 1.96;

/// `m` distinct vertices drawn uniformly without replacement; a pure function
/// of (geometry, m, seed).
pub fn random_marked_set(geometry: &GridGeometry, m: usize, seed: u64) -> Result<MarkedSet> {
    let n = geometry.vertex_count();
    if m > n {
        return Err(Error::TooManyMarked { m, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = index::sample(&mut rng, n, m);
    MarkedSet::new(geometry, picked.into_iter().map(|i| geometry.vertex_at(i)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RunResult {
    pub m: usize,
    pub run: usize,
    pub seed: u64,
    pub l: f64,
    pub p_peak: f64,
    pub t_peak: usize,
    pub grew: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SummaryStats {
    pub mean: f64,
    /// Sample standard deviation (n − 1); zero for a single run.
    pub std: f64,
    pub min: f64,
    pub max: f64,
    /// 1.96·std/√R.
    pub ci: f64,
}

impl SummaryStats {
    pub fn from_values(values: &[f64]) -> SummaryStats {
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let std = if values.len() > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        SummaryStats {
            mean,
            std,
            min: values.iter().copied().fold(f64::INFINITY, f64::min),
            max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            ci: Z_95 * std / n.sqrt(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AggregateStats {
    pub m: usize,
    pub runs: usize,
    pub p_peak: SummaryStats,
    pub t_peak: SummaryStats,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnsembleResult {
    /// Sorted by (m, run).
    pub runs: Vec<RunResult>,
    /// One row per m, in the order of the requested m values.
    pub aggregate: Vec<AggregateStats>,
}

/// R independent random marked sets per m (seed = base_seed + run), weight from
/// `schedule`, first peak of each. Runs execute on the current rayon pool; the
/// output does not depend on its size.
pub fn run_ensemble(
    geometry: &GridGeometry,
    m_values: &[usize],
    runs: usize,
    schedule: WeightSchedule,
    base_seed: u64,
    options: PeakOptions,
) -> Result<EnsembleResult> {
    if runs == 0 {
        return Err(Error::EmptyEnsemble);
    }
    for &m in m_values {
        if m == 0 {
            return Err(Error::NoMarkedVertices);
        }
        if m > geometry.vertex_count() {
            return Err(Error::TooManyMarked { m, n: geometry.vertex_count() });
        }
    }
    let tasks: Vec<(usize, usize)> = m_values
        .iter()
        .flat_map(|&m| (0..runs).map(move |r| (m, r)))
        .collect();
    let mut results = tasks
        .par_iter()
        .map(|&(m, run)| {
            let seed = base_seed.wrapping_add(run as u64);
            let marked = random_marked_set(geometry, m, seed)?;
            let l = schedule.weight(geometry, m);
            let (peak, _) = find_first_peak_with(geometry, &marked, l, options)?;
            Ok(RunResult {
                m,
                run,
                seed,
                l,
                p_peak: peak.p_peak,
                t_peak: peak.t_peak,
                grew: peak.grew,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    results.sort_by_key(|r| (r.m, r.run));

    let aggregate = m_values
        .iter()
        .map(|&m| {
            let rows: Vec<&RunResult> = results.iter().filter(|r| r.m == m).collect();
            let ps: Vec<f64> = rows.iter().map(|r| r.p_peak).collect();
            let ts: Vec<f64> = rows.iter().map(|r| r.t_peak as f64).collect();
            AggregateStats {
                m,
                runs: rows.len(),
                p_peak: SummaryStats::from_values(&ps),
                t_peak: SummaryStats::from_values(&ts),
            }
        })
        .collect();
    Ok(EnsembleResult {
        runs: results,
        aggregate,
    })
}
