//! First-peak probability for the three weight schedules a ∈ {m, m−√m, 1}
//! (l = a·d/N) on 100x100 grids with marked set {(0,2i) | i < m}.
//!
//! Run with:
//!   cargo run --release --example schedule_comparison [max_m]
//!
//! `max_m` defaults to 48.

use lqw::grid::{GridGeometry, GridKind};
use lqw::harness::{scan_weight, PeakOptions, WeightSchedule};
use lqw::walk::MarkedSet;

fn main() -> lqw::Result<()> {
    let max_m: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(48);
    for kind in GridKind::ALL {
        let grid = GridGeometry::new(kind, 100)?;
        println!("{grid}");
        println!("{:>4} {:>10} {:>10} {:>10}", "m", "a=m", "a=m-√m", "a=1");
        for m in 1..=max_m {
            let marked = MarkedSet::row_even(&grid, m)?;
            let weights: Vec<f64> = WeightSchedule::NAMED.iter().map(|s| s.weight(&grid, m)).collect();
            let points = scan_weight(&grid, &marked, &weights, PeakOptions::default())?;
            println!(
                "{m:>4} {:>10.4} {:>10.4} {:>10.4}",
                points[0].p_peak, points[1].p_peak, points[2].p_peak
            );
        }
        println!();
    }
    Ok(())
}
