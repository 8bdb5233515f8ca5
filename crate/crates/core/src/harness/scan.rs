use rayon::prelude::*;
use serde::Serialize;

use super::peak::{find_first_peak_with, PeakOptions};
use super::scaling::{lin_space, log_space};
use crate::error::{Error, Result};
use crate::grid::GridGeometry;
use crate::walk::{check_weight, MarkedSet};

const COARSE_POINTS: usize = 50;
const FINE_POINTS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanPoint {
    pub l: f64,
    pub p_peak: f64,
    pub t_peak: usize,
}

/// First peak for every weight in `l_grid`, in input order.
pub fn scan_weight(
    geometry: &GridGeometry,
    marked: &MarkedSet,
    l_grid: &[f64],
    options: PeakOptions,
) -> Result<Vec<ScanPoint>> {
    l_grid.iter().try_for_each(|&l| check_weight(l))?;
    l_grid
        .par_iter()
        .map(|&l| {
            let (peak, _) = find_first_peak_with(geometry, marked, l, options)?;
            Ok(ScanPoint {
                l,
                p_peak: peak.p_peak,
                t_peak: peak.t_peak,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimalWeight {
    pub l_opt: f64,
    pub p_peak: f64,
    pub t_peak: usize,
    /// Every evaluated point, coarse stage first.
    #[serde(skip)]
    pub evaluated: Vec<ScanPoint>,
}

fn best(points: &[ScanPoint]) -> usize {
    points
        .iter()
        .enumerate()
        .fold(0, |bi, (i, p)| if p.p_peak > points[bi].p_peak { i } else { bi })
}

/// Two-stage search for the weight maximizing the first-peak probability:
/// 50 log-spaced points over [d/(10N), 100·d·m/N], then 20 linear points
/// between the coarse neighbors of the best coarse point.
pub fn find_optimal_weight(
    geometry: &GridGeometry,
    marked: &MarkedSet,
    options: PeakOptions,
) -> Result<OptimalWeight> {
    if marked.is_empty() {
        return Err(Error::NoMarkedVertices);
    }
    let d = geometry.degree() as f64;
    let n = geometry.vertex_count() as f64;
    let m = marked.len() as f64;
    let coarse_grid = log_space(d / (10.0 * n), 100.0 * d * m / n, COARSE_POINTS);
    let coarse = scan_weight(geometry, marked, &coarse_grid, options)?;
    let i = best(&coarse);
    let lo = coarse_grid[i.saturating_sub(1)];
    let hi = coarse_grid[(i + 1).min(COARSE_POINTS - 1)];
    let fine = scan_weight(geometry, marked, &lin_space(lo, hi, FINE_POINTS), options)?;

    let mut candidates = vec![coarse[i]];
    candidates.extend_from_slice(&fine);
    let winner = candidates[best(&candidates)];

    let mut evaluated = coarse;
    evaluated.extend(fine);
    Ok(OptimalWeight {
        l_opt: winner.l,
        p_peak: winner.p_peak,
        t_peak: winner.t_peak,
        evaluated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{GridKind, VertexCoord};

    #[test]
    fn scan_preserves_order_and_is_deterministic() {
        let g = GridGeometry::new(GridKind::Rectangular, 10).unwrap();
        let m = MarkedSet::new(&g, [VertexCoord::new(2, 2)]).unwrap();
        let grid = [0.1, 0.0, 0.04];
        let a = scan_weight(&g, &m, &grid, PeakOptions::default()).unwrap();
        let b = scan_weight(&g, &m, &grid, PeakOptions::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.iter().map(|p| p.l).collect::<Vec<_>>(), grid);
        assert_eq!(scan_weight(&g, &m, &[0.04], PeakOptions::default()).unwrap().len(), 1);
        assert!(scan_weight(&g, &m, &[-0.1], PeakOptions::default()).is_err());
    }

    #[test]
    fn optimum_beats_every_evaluated_point() {
        let g = GridGeometry::new(GridKind::Rectangular, 10).unwrap();
        let m = MarkedSet::new(&g, [VertexCoord::new(2, 2)]).unwrap();
        let opt = find_optimal_weight(&g, &m, PeakOptions::default()).unwrap();
        assert_eq!(opt.evaluated.len(), COARSE_POINTS + FINE_POINTS);
        assert!(opt.evaluated.iter().all(|p| p.p_peak <= opt.p_peak));
        assert!(find_optimal_weight(&g, &MarkedSet::empty(), PeakOptions::default()).is_err());
    }
}
