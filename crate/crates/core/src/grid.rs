//! Torus grid families and the flip-flop neighbor map.
//!
//! Vertices are labelled `(x, y)` with `x, y ∈ [0, side)`, and the linear
//! vertex index is `x * side + y`. Each vertex owns `degree + 1` coin slots:
//! slots `0..degree` are movement directions and slot `degree` is the
//! self-loop.
//!
//! Canonical direction orders:
//!
//! | kind        | 0  | 1  | 2  | 3  | 4  | 5  | loop |
//! |-------------|----|----|----|----|----|----|------|
//! | rectangular | ↑  | ↓  | ←  | →  |    |    | 4    |
//! | triangular  | ↖  | ↘  | ←  | →  | ↙  | ↗  | 6    |
//! | honeycomb   | ↔  | up | down |  |    |    | 3    |
//!
//! The honeycomb lattice is drawn as a brick wall: every vertex has an up and
//! a down edge, and the horizontal edge points right when `x + y` is odd and
//! left when `x + y` is even. Horizontal and vertical edges both join vertices
//! of opposite parity, so the lattice is bipartite and connected.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Triangular,
    Rectangular,
    Honeycomb,
}

impl GridKind {
    pub const ALL: [GridKind; 3] = [GridKind::Triangular, GridKind::Rectangular, GridKind::Honeycomb];

    pub fn degree(self) -> usize {
        match self {
            GridKind::Triangular => 6,
            GridKind::Rectangular => 4,
            GridKind::Honeycomb => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GridKind::Triangular => "triangular",
            GridKind::Rectangular => "rectangular",
            GridKind::Honeycomb => "honeycomb",
        }
    }
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangular" => Ok(GridKind::Triangular),
            "rectangular" => Ok(GridKind::Rectangular),
            "honeycomb" => Ok(GridKind::Honeycomb),
            other => Err(Error::UnknownGridKind(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexCoord {
    pub x: usize,
    pub y: usize,
}

impl VertexCoord {
    pub const fn new(x: usize, y: usize) -> Self {
        VertexCoord { x, y }
    }
}

impl fmt::Display for VertexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("({},{})", self.x, self.y))
    }
}

/// A coin slot. Values below the degree are movement directions, the value
/// equal to the degree is the self-loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction(pub usize);

pub mod rectangular {
    use super::Direction;
    pub const UP: Direction = Direction(0);
    pub const DOWN: Direction = Direction(1);
    pub const LEFT: Direction = Direction(2);
    pub const RIGHT: Direction = Direction(3);
    pub const LOOP: Direction = Direction(4);
}

pub mod triangular {
    use super::Direction;
    pub const UP_LEFT: Direction = Direction(0);
    pub const DOWN_RIGHT: Direction = Direction(1);
    pub const LEFT: Direction = Direction(2);
    pub const RIGHT: Direction = Direction(3);
    pub const DOWN_LEFT: Direction = Direction(4);
    pub const UP_RIGHT: Direction = Direction(5);
    pub const LOOP: Direction = Direction(6);
}

pub mod honeycomb {
    use super::Direction;
    pub const HORIZONTAL: Direction = Direction(0);
    pub const UP: Direction = Direction(1);
    pub const DOWN: Direction = Direction(2);
    pub const LOOP: Direction = Direction(3);
}

/// Offsets (dx, dy) and the incoming slot at the neighbor, indexed by direction.
const RECT_MOVES: [(isize, isize, usize); 4] = [(0, 1, 1), (0, -1, 0), (-1, 0, 3), (1, 0, 2)];
const TRI_MOVES: [(isize, isize, usize); 6] =
    [(-1, 1, 1), (1, -1, 0), (-1, 0, 3), (1, 0, 2), (0, -1, 5), (0, 1, 4)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridGeometry {
    kind: GridKind,
    side: usize,
}

impl GridGeometry {
    pub fn new(kind: GridKind, side: usize) -> Result<Self> {
        if side < 2 {
            return Err(Error::SideTooSmall(side));
        }
        if kind == GridKind::Honeycomb && !side.is_multiple_of(2) {
            return Err(Error::OddHoneycombSide(side));
        }
        Ok(GridGeometry { kind, side })
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn side(&self) -> usize {
        self.side
    }

    /// N = side².
    pub fn vertex_count(&self) -> usize {
        self.side * self.side
    }

    pub fn degree(&self) -> usize {
        self.kind.degree()
    }

    /// d + 1; the loop slot is the last one.
    pub fn coin_arity(&self) -> usize {
        self.degree() + 1
    }

    pub fn loop_direction(&self) -> Direction {
        Direction(self.degree())
    }

    /// Length of a state vector, N·(d+1).
    pub fn dimension(&self) -> usize {
        self.vertex_count() * self.coin_arity()
    }

    pub fn check_vertex(&self, v: VertexCoord) -> Result<()> {
        if v.x >= self.side || v.y >= self.side {
            return Err(Error::VertexOutOfRange {
                x: v.x,
                y: v.y,
                side: self.side,
            });
        }
        Ok(())
    }

    pub fn vertex_index(&self, v: VertexCoord) -> usize {
        v.x * self.side + v.y
    }

    pub fn vertex_at(&self, index: usize) -> VertexCoord {
        VertexCoord::new(index / self.side, index % self.side)
    }

    /// Amplitude index of `(v, c)`: vertex-major, coin fastest.
    pub fn state_index(&self, v: VertexCoord, c: Direction) -> usize {
        self.vertex_index(v) * self.coin_arity() + c.0
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexCoord> + '_ {
        (0..self.vertex_count()).map(move |i| self.vertex_at(i))
    }

    /// Reverse of a direction; the loop is its own reverse.
    pub fn reverse(&self, c: Direction) -> Result<Direction> {
        let d = self.degree();
        if c.0 > d {
            return Err(Error::DirectionOutOfRange { direction: c.0, degree: d });
        }
        if c.0 == d {
            return Ok(c);
        }
        Ok(match self.kind {
            GridKind::Rectangular => Direction(RECT_MOVES[c.0].2),
            GridKind::Triangular => Direction(TRI_MOVES[c.0].2),
            GridKind::Honeycomb => Direction([0, 2, 1][c.0]),
        })
    }

    /// Horizontal edge of a honeycomb vertex points right (+x) for odd `x + y`.
    fn honeycomb_points_right(v: VertexCoord) -> bool {
        (v.x + v.y) % 2 == 1
    }

    fn wrap(&self, coord: usize, delta: isize) -> usize {
        let s = self.side as isize;
        (coord as isize + delta).rem_euclid(s) as usize
    }

    /// Vertex reached by leaving `v` along `c`, and the slot the walker lands in
    /// there (flip-flop: it faces back along the edge it came through).
    pub fn neighbor(&self, v: VertexCoord, c: Direction) -> Result<(VertexCoord, Direction)> {
        self.check_vertex(v)?;
        let d = self.degree();
        if c.0 == d {
            return Err(Error::LoopDirection);
        }
        if c.0 > d {
            return Err(Error::DirectionOutOfRange { direction: c.0, degree: d });
        }
        let (dx, dy, back) = match self.kind {
            GridKind::Rectangular => RECT_MOVES[c.0],
            GridKind::Triangular => TRI_MOVES[c.0],
            GridKind::Honeycomb => match c {
                honeycomb::HORIZONTAL => {
                    let dx = if Self::honeycomb_points_right(v) { 1 } else { -1 };
                    (dx, 0, 0)
                }
                honeycomb::UP => (0, 1, 2),
                _ => (0, -1, 1),
            },
        };
        let w = VertexCoord::new(self.wrap(v.x, dx), self.wrap(v.y, dy));
        Ok((w, Direction(back)))
    }

    /// Index table of the flip-flop shift: `p[idx(v,c)] = idx(neighbor(v,c))`,
    /// loops fixed. The table is an involution.
    pub fn shift_permutation(&self) -> Vec<usize> {
        let arity = self.coin_arity();
        let mut perm = vec![0usize; self.dimension()];
        for v in self.vertices() {
            let base = self.vertex_index(v) * arity;
            for c in 0..self.degree() {
                let (w, back) = self
                    .neighbor(v, Direction(c))
                    .expect("movement direction on an in-range vertex");
                perm[base + c] = self.state_index(w, back);
            }
            perm[base + self.degree()] = base + self.degree();
        }
        perm
    }
}

impl fmt::Display for GridGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("{} {}x{}", self.kind, self.side, self.side))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn geom(kind: GridKind, side: usize) -> GridGeometry {
        GridGeometry::new(kind, side).unwrap()
    }

    #[test]
    fn degrees_and_arity() {
        assert_eq!(geom(GridKind::Triangular, 4).coin_arity(), 7);
        assert_eq!(geom(GridKind::Rectangular, 4).coin_arity(), 5);
        assert_eq!(geom(GridKind::Honeycomb, 4).coin_arity(), 4);
        assert_eq!(geom(GridKind::Rectangular, 5).vertex_count(), 25);
    }

    #[test]
    fn rejects_bad_sides() {
        assert_eq!(GridGeometry::new(GridKind::Rectangular, 1), Err(Error::SideTooSmall(1)));
        assert_eq!(GridGeometry::new(GridKind::Honeycomb, 5), Err(Error::OddHoneycombSide(5)));
        assert!(GridGeometry::new(GridKind::Triangular, 5).is_ok());
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in GridKind::ALL {
            assert_eq!(kind.name().parse::<GridKind>().unwrap(), kind);
        }
        assert!("Hexagonal".parse::<GridKind>().is_err());
        assert!("Triangular".parse::<GridKind>().is_err());
    }

    #[test]
    fn rectangular_moves() {
        let g = geom(GridKind::Rectangular, 4);
        let o = VertexCoord::new(0, 0);
        assert_eq!(
            g.neighbor(o, rectangular::RIGHT).unwrap(),
            (VertexCoord::new(1, 0), rectangular::LEFT)
        );
        assert_eq!(
            g.neighbor(VertexCoord::new(3, 0), rectangular::RIGHT).unwrap(),
            (VertexCoord::new(0, 0), rectangular::LEFT)
        );
        assert_eq!(
            g.neighbor(o, rectangular::UP).unwrap(),
            (VertexCoord::new(0, 1), rectangular::DOWN)
        );
        assert_eq!(
            g.neighbor(o, rectangular::DOWN).unwrap(),
            (VertexCoord::new(0, 3), rectangular::UP)
        );
    }

    #[test]
    fn triangular_moves() {
        let g = geom(GridKind::Triangular, 8);
        let o = VertexCoord::new(0, 0);
        assert_eq!(
            g.neighbor(o, triangular::UP_LEFT).unwrap(),
            (VertexCoord::new(7, 1), triangular::DOWN_RIGHT)
        );
        assert_eq!(
            g.neighbor(o, triangular::DOWN_RIGHT).unwrap(),
            (VertexCoord::new(1, 7), triangular::UP_LEFT)
        );
        assert_eq!(
            g.neighbor(o, triangular::DOWN_LEFT).unwrap(),
            (VertexCoord::new(0, 7), triangular::UP_RIGHT)
        );
        assert_eq!(
            g.neighbor(o, triangular::UP_RIGHT).unwrap(),
            (VertexCoord::new(0, 1), triangular::DOWN_LEFT)
        );
    }

    #[test]
    fn honeycomb_horizontal_pairs() {
        let g = geom(GridKind::Honeycomb, 4);
        let v = VertexCoord::new(0, 1);
        let (w, c) = g.neighbor(v, honeycomb::HORIZONTAL).unwrap();
        assert_eq!((w, c), (VertexCoord::new(1, 1), honeycomb::HORIZONTAL));
        assert_eq!(g.neighbor(w, c).unwrap(), (v, honeycomb::HORIZONTAL));
        // even parity points left and wraps
        assert_eq!(
            g.neighbor(VertexCoord::new(0, 0), honeycomb::HORIZONTAL).unwrap(),
            (VertexCoord::new(3, 0), honeycomb::HORIZONTAL)
        );
    }

    #[test]
    fn loop_and_range_errors() {
        let g = geom(GridKind::Rectangular, 4);
        assert_eq!(g.neighbor(VertexCoord::new(0, 0), rectangular::LOOP), Err(Error::LoopDirection));
        assert!(matches!(
            g.neighbor(VertexCoord::new(4, 0), rectangular::UP),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            g.neighbor(VertexCoord::new(0, 0), Direction(9)),
            Err(Error::DirectionOutOfRange { .. })
        ));
    }

    #[test]
    fn flip_flop_involution_everywhere() {
        for kind in GridKind::ALL {
            for side in [2, 4, 6] {
                let g = geom(kind, side);
                for v in g.vertices() {
                    for c in 0..g.degree() {
                        let (w, back) = g.neighbor(v, Direction(c)).unwrap();
                        assert_eq!(back, g.reverse(Direction(c)).unwrap());
                        assert_eq!(g.neighbor(w, back).unwrap(), (v, Direction(c)), "{g} {v} {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn reverse_is_an_involution() {
        for kind in GridKind::ALL {
            let g = geom(kind, 4);
            for c in 0..=g.degree() {
                let c = Direction(c);
                assert_eq!(g.reverse(g.reverse(c).unwrap()).unwrap(), c);
            }
            assert_eq!(g.reverse(g.loop_direction()).unwrap(), g.loop_direction());
        }
    }

    #[test]
    fn distinct_neighbors_on_larger_sides() {
        for kind in GridKind::ALL {
            let g = geom(kind, 6);
            for v in g.vertices() {
                let ns: HashSet<_> = (0..g.degree())
                    .map(|c| g.neighbor(v, Direction(c)).unwrap().0)
                    .collect();
                assert_eq!(ns.len(), g.degree());
                assert!(!ns.contains(&v));
            }
        }
    }

    #[test]
    fn honeycomb_is_bipartite_and_connected() {
        let g = geom(GridKind::Honeycomb, 8);
        for v in g.vertices() {
            for c in 0..g.degree() {
                let (w, _) = g.neighbor(v, Direction(c)).unwrap();
                assert_ne!((v.x + v.y) % 2, (w.x + w.y) % 2);
            }
            let (w, _) = g.neighbor(v, honeycomb::HORIZONTAL).unwrap();
            assert_ne!(v.x % 2, w.x % 2);
        }
        let mut seen = vec![false; g.vertex_count()];
        let mut stack = vec![VertexCoord::new(0, 0)];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for c in 0..g.degree() {
                let (w, _) = g.neighbor(v, Direction(c)).unwrap();
                if !seen[g.vertex_index(w)] {
                    seen[g.vertex_index(w)] = true;
                    stack.push(w);
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn shift_permutation_fixed_points() {
        let g = geom(GridKind::Rectangular, 2);
        let p = g.shift_permutation();
        let fixed: Vec<_> = (0..p.len()).filter(|&i| p[i] == i).collect();
        assert_eq!(fixed.len(), 4);
        assert!(fixed.iter().all(|i| i % 5 == 4));

        let g = geom(GridKind::Triangular, 4);
        let p = g.shift_permutation();
        assert_eq!(p.len(), 112);
        assert!((0..p.len()).all(|i| p[p[i]] == i));

        let g = geom(GridKind::Honeycomb, 4);
        let p = g.shift_permutation();
        for i in 0..p.len() {
            assert_eq!(p[p[i]], i);
            if i % 4 != 3 {
                assert_ne!(p[i], i);
            }
        }
    }
}
