//! Checks the walk engine against explicit dense matrices on small grids and
//! reports the largest amplitude difference after 50 steps.
//!
//! Run with:
//!   cargo run --release --example reference_check

use lqw::grid::{GridGeometry, GridKind};
use lqw::harness::random_marked_set;
use lqw::reference::{build_step_matrix, evolve_dense_states};
use lqw::walk::SearchWalk;

fn main() -> lqw::Result<()> {
    for kind in GridKind::ALL {
        for side in [2, 4, 6] {
            let grid = GridGeometry::new(kind, side)?;
            let mut worst: f64 = 0.0;
            let mut unitarity: f64 = 0.0;
            for m in 0..=3 {
                let marked = random_marked_set(&grid, m, m as u64)?;
                let l = m.max(1) as f64 * grid.degree() as f64 / grid.vertex_count() as f64;
                unitarity = unitarity.max(build_step_matrix(&grid, &marked, l)?.unitarity_error());
                let dense = evolve_dense_states(&grid, &marked, l, 50)?;
                let engine = SearchWalk::new(grid, marked, l)?.evolve(50);
                let diff = engine
                    .amplitudes()
                    .iter()
                    .zip(&dense[50])
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0, f64::max);
                worst = worst.max(diff);
            }
            println!("{grid:<18} max |Δ| after 50 steps = {worst:.2e}, max |U†U − I| = {unitarity:.2e}");
        }
    }
    Ok(())
}
