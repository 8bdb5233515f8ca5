//! Optimal self-loop weight for five marked vertices on 24x24 grids,
//! compared with the single-target weight d/N and the schedule m·d/N.
//!
//! Run with:
//!   cargo run --release --example optimal_weight

use lqw::grid::{GridGeometry, GridKind};
use lqw::harness::{find_first_peak, find_optimal_weight, PeakOptions, WeightSchedule};
use lqw::walk::MarkedSet;

fn main() -> lqw::Result<()> {
    println!(
        "{:<12} {:>10} {:>10} {:>8} {:>10} {:>10} {:>10}",
        "grid", "l_opt", "p(l_opt)", "t", "p(d/N)", "p(md/N)", "p(0.1)"
    );
    for kind in GridKind::ALL {
        let grid = GridGeometry::new(kind, 24)?;
        let marked = MarkedSet::row_even(&grid, 5)?;
        let opt = find_optimal_weight(&grid, &marked, PeakOptions::default())?;
        let peak_at = |l: f64| find_first_peak(&grid, &marked, l).map(|(p, _)| p.p_peak);
        println!(
            "{:<12} {:>10.4} {:>10.4} {:>8} {:>10.4} {:>10.4} {:>10.4}",
            kind.name(),
            opt.l_opt,
            opt.p_peak,
            opt.t_peak,
            peak_at(WeightSchedule::One.weight(&grid, 5))?,
            peak_at(WeightSchedule::M.weight(&grid, 5))?,
            peak_at(0.1)?,
        );
    }
    Ok(())
}
