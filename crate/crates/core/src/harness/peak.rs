use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::GridGeometry;
use crate::walk::{MarkedSet, SearchWalk};

/// Steps without a new maximum after which the evolution is stopped.
pub const NO_IMPROVEMENT_WINDOW: usize = 10;

/// Hard cap on evolution length: ceil(6·√((N/m)·ln(N/m))) + 20.
pub fn step_cap(vertex_count: usize, m: usize) -> usize {
    let ratio = vertex_count as f64 / m as f64;
    let reference = (ratio * ratio.ln()).max(0.0).sqrt();
    (6.0 * reference).ceil() as usize + 20
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeakResult {
    pub t_peak: usize,
    pub p_peak: f64,
    /// `p_peak > 2·m/N`; false for evolutions that never leave the initial level.
    pub grew: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionRecord {
    pub geometry: GridGeometry,
    pub marked: MarkedSet,
    pub l: f64,
    pub seed: Option<u64>,
    /// p_M(t) for t = 0..=stop.
    pub series: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeakOptions {
    pub window: usize,
    /// Overrides [`step_cap`] when set.
    pub max_steps: Option<usize>,
}

impl Default for PeakOptions {
    fn default() -> Self {
        PeakOptions {
            window: NO_IMPROVEMENT_WINDOW,
            max_steps: None,
        }
    }
}

/// First-peak detection with the default window and cap.
pub fn find_first_peak(
    geometry: &GridGeometry,
    marked: &MarkedSet,
    l: f64,
) -> Result<(PeakResult, EvolutionRecord)> {
    find_first_peak_with(geometry, marked, l, PeakOptions::default())
}

pub fn find_first_peak_with(
    geometry: &GridGeometry,
    marked: &MarkedSet,
    l: f64,
    options: PeakOptions,
) -> Result<(PeakResult, EvolutionRecord)> {
    if marked.is_empty() {
        return Err(Error::NoMarkedVertices);
    }
    let walk = SearchWalk::new(*geometry, marked.clone(), l)?;
    let cap = options
        .max_steps
        .unwrap_or_else(|| step_cap(geometry.vertex_count(), marked.len()));
    let series = evolve_until_peak(&walk, options.window, cap);
    let peak = peak_of(&series, marked.len(), geometry.vertex_count());
    let record = EvolutionRecord {
        geometry: *geometry,
        marked: marked.clone(),
        l,
        seed: None,
        series,
    };
    Ok((peak, record))
}

fn evolve_until_peak(walk: &SearchWalk, window: usize, cap: usize) -> Vec<f64> {
    let mut series = Vec::new();
    let mut best = f64::NEG_INFINITY;
    let mut stale = 0;
    for (t, p) in walk.probabilities().enumerate() {
        series.push(p);
        if p > best {
            best = p;
            stale = 0;
        } else {
            stale += 1;
        }
        if stale >= window || t >= cap {
            break;
        }
    }
    series
}

/// Maximum of the series and the first index attaining it.
pub fn peak_of(series: &[f64], m: usize, vertex_count: usize) -> PeakResult {
    let (t_peak, p_peak) = series
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |(bt, bp), (t, p)| if p > bp { (t, p) } else { (bt, bp) });
    PeakResult {
        t_peak,
        p_peak,
        grew: p_peak > 2.0 * m as f64 / vertex_count as f64,
    }
}
