//! Success probability over time for five self-loop weights on a 24x24 grid
//! with marked vertices {(0,0),(0,2),(0,4),(0,6),(0,8)}: l = 0, d/N, the
//! scanned optimum, m·d/N and 0.1.
//!
//! Writes one `t,p` CSV per weight into `target/weight_curves/<grid>/`.
//!
//! Run with:
//!   cargo run --release --example weight_curves [triangular|rectangular|honeycomb]

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::PathBuf;

use lqw::grid::{GridGeometry, GridKind};
use lqw::harness::output::write_series;
use lqw::harness::{find_optimal_weight, PeakOptions, WeightSchedule};
use lqw::walk::{MarkedSet, SearchWalk};

const STEPS: usize = 120;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let kind: GridKind = std::env::args().nth(1).as_deref().unwrap_or("rectangular").parse()?;
    let grid = GridGeometry::new(kind, 24)?;
    let marked = MarkedSet::row_even(&grid, 5)?;
    let optimum = find_optimal_weight(&grid, &marked, PeakOptions::default())?.l_opt;
    let weights = [
        ("l0", 0.0),
        ("single", WeightSchedule::One.weight(&grid, 5)),
        ("optimal", optimum),
        ("scheduled", WeightSchedule::M.weight(&grid, 5)),
        ("l0.1", 0.1),
    ];

    let dir = PathBuf::from("target/weight_curves").join(kind.name());
    fs::create_dir_all(&dir)?;
    println!("{grid}, m = 5, p(0) = {:.4}", 5.0 / 576.0);
    for (name, l) in weights {
        let walk = SearchWalk::new(grid, marked.clone(), l)?;
        let series: Vec<f64> = walk.probabilities().take(STEPS + 1).collect();
        let (t, p) = series
            .iter()
            .enumerate()
            .fold((0, 0.0), |best, (t, &p)| if p > best.1 { (t, p) } else { best });
        write_series(BufWriter::new(File::create(dir.join(format!("{name}.csv")))?), &series)?;
        println!("  {name:<10} l = {l:.5}  max p = {p:.4} at t = {t}");
    }
    println!("curves written to {}", dir.display());
    Ok(())
}
