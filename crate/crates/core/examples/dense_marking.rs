//! One fifth of all vertices marked at random, l = m·d/N, for several grid
//! sizes: mean first-peak probability with its standard deviation.
//!
//! Run with:
//!   cargo run --release --example dense_marking [runs]

use lqw::grid::{GridGeometry, GridKind};
use lqw::harness::{run_ensemble, PeakOptions, WeightSchedule};

fn main() -> lqw::Result<()> {
    let runs: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    println!("{:<12} {:>5} {:>6} {:>8} {:>8}", "grid", "side", "m", "mean p", "std p");
    for kind in GridKind::ALL {
        for side in [20, 30, 40, 50, 60, 70, 80, 90, 100] {
            let grid = GridGeometry::new(kind, side)?;
            let m = grid.vertex_count() / 5;
            let result = run_ensemble(&grid, &[m], runs, WeightSchedule::M, 0, PeakOptions::default())?;
            let p = &result.aggregate[0].p_peak;
            println!("{:<12} {side:>5} {m:>6} {:>8.4} {:>8.4}", kind.name(), p.mean, p.std);
        }
    }
    Ok(())
}
