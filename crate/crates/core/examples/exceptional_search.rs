//! Looks for marked-vertex configurations whose success probability never
//! leaves the initial level (reported as `grew = false`): adjacent pairs,
//! full rows, columns and diagonals of the torus.
//!
//! Run with:
//!   cargo run --release --example exceptional_search

use lqw::grid::{Direction, GridGeometry, GridKind, VertexCoord};
use lqw::harness::{find_first_peak, WeightSchedule};
use lqw::walk::MarkedSet;

fn candidates(grid: &GridGeometry) -> lqw::Result<Vec<(String, MarkedSet)>> {
    let side = grid.side();
    let origin = VertexCoord::new(0, 0);
    let mut out = Vec::new();
    for c in 0..grid.degree() {
        let (w, _) = grid.neighbor(origin, Direction(c))?;
        out.push((format!("pair {origin}{w}"), MarkedSet::new(grid, [origin, w])?));
    }
    out.push(("row x=0".into(), MarkedSet::new(grid, (0..side).map(|y| VertexCoord::new(0, y)))?));
    out.push(("column y=0".into(), MarkedSet::new(grid, (0..side).map(|x| VertexCoord::new(x, 0)))?));
    out.push(("diagonal".into(), MarkedSet::new(grid, (0..side).map(|x| VertexCoord::new(x, x)))?));
    Ok(out)
}

fn main() -> lqw::Result<()> {
    println!("{:<18} {:<16} {:>5} {:>10} {:>8}", "grid", "marked", "a", "p/(m/N)", "steps");
    for kind in GridKind::ALL {
        for side in [8, 12, 16] {
            let grid = GridGeometry::new(kind, side)?;
            for (name, marked) in candidates(&grid)? {
                let m = marked.len();
                for schedule in [WeightSchedule::Coefficient(0.0), WeightSchedule::One, WeightSchedule::M] {
                    let l = schedule.weight(&grid, m);
                    let (peak, record) = find_first_peak(&grid, &marked, l)?;
                    if !peak.grew {
                        let ratio = peak.p_peak * grid.vertex_count() as f64 / m as f64;
                        println!(
                            "{:<18} {:<16} {:>5} {:>10.3} {:>8}",
                            grid,
                            name,
                            schedule.coefficient(m),
                            ratio,
                            record.series.len() - 1
                        );
                    }
                }
            }
        }
    }
    Ok(())
}
