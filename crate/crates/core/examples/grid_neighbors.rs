//! Neighbor tables of the three torus grids.
//!
//! Prints, for a few vertices of each 4x4 grid, where each movement
//! direction leads and which slot the walker lands in.
//!
//! Run with:
//!   cargo run --example grid_neighbors

use lqw::grid::{Direction, GridGeometry, GridKind, VertexCoord};

const LABELS: [(GridKind, &[&str]); 3] = [
    (GridKind::Triangular, &["↖", "↘", "←", "→", "↙", "↗"]),
    (GridKind::Rectangular, &["↑", "↓", "←", "→"]),
    (GridKind::Honeycomb, &["↔", "up", "down"]),
];

fn main() -> lqw::Result<()> {
    for (kind, labels) in LABELS {
        let grid = GridGeometry::new(kind, 4)?;
        println!("{grid}: degree {}, {} amplitudes", grid.degree(), grid.dimension());
        for v in [VertexCoord::new(0, 0), VertexCoord::new(0, 1), VertexCoord::new(3, 3)] {
            let moves: Vec<String> = (0..grid.degree())
                .map(|c| {
                    let (w, back) = grid.neighbor(v, Direction(c)).expect("movement direction");
                    format!("{}→{w}{}", labels[c], labels[back.0])
                })
                .collect();
            println!("  {v}: {}", moves.join("  "));
        }
        let perm = grid.shift_permutation();
        let fixed = (0..perm.len()).filter(|&i| perm[i] == i).count();
        let involution = (0..perm.len()).all(|i| perm[perm[i]] == i);
        println!("  shift: {fixed} fixed points (self-loops), involution = {involution}\n");
    }
    Ok(())
}
