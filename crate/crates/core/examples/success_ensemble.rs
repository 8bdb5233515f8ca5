//! Randomized marked sets on 100x100 grids with l = m·d/N: mean, spread and
//! extremes of the first-peak probability, mean first-peak time, and the
//! log-log slope of that time against √((N/m)·ln(N/m)).
//!
//! Run with:
//!   cargo run --release --example success_ensemble [runs] [points]
//!
//! Defaults: 20 runs per m, 12 log-spaced values of m in [1, 1000].

use lqw::grid::{GridGeometry, GridKind};
use lqw::harness::scaling::log_spaced_integers;
use lqw::harness::{fit_loglog_slope, run_ensemble, scaling_reference, PeakOptions, WeightSchedule};

fn main() -> lqw::Result<()> {
    let mut args = std::env::args().skip(1);
    let runs: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let points: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);
    let m_values = log_spaced_integers(1, 1000, points);

    for kind in GridKind::ALL {
        let grid = GridGeometry::new(kind, 100)?;
        let n = grid.vertex_count();
        let result = run_ensemble(&grid, &m_values, runs, WeightSchedule::M, 1, PeakOptions::default())?;
        println!("{grid}, {runs} runs per m");
        println!(
            "{:>5} {:>8} {:>8} {:>8} {:>8} {:>9} {:>9}",
            "m", "mean p", "ci", "min p", "max p", "mean t", "ref t"
        );
        for a in &result.aggregate {
            println!(
                "{:>5} {:>8.4} {:>8.4} {:>8.4} {:>8.4} {:>9.1} {:>9.1}",
                a.m,
                a.p_peak.mean,
                a.p_peak.ci,
                a.p_peak.min,
                a.p_peak.max,
                a.t_peak.mean,
                scaling_reference(n, a.m)?
            );
        }
        let measured: Vec<(f64, f64)> = result.aggregate.iter().map(|a| (a.m as f64, a.t_peak.mean)).collect();
        let reference: Vec<(f64, f64)> = m_values
            .iter()
            .map(|&m| scaling_reference(n, m).map(|r| (m as f64, r)))
            .collect::<lqw::Result<_>>()?;
        let (slope, _) = fit_loglog_slope(&measured)?;
        let (ref_slope, _) = fit_loglog_slope(&reference)?;
        println!("log-log slope of mean t: {slope:.3} (reference curve {ref_slope:.3})\n");
    }
    Ok(())
}
