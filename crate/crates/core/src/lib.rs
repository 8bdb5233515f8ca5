//! Lackadaisical quantum-walk search on two-dimensional torus grids.
//!
//! A discrete-time coined walk with a weighted self-loop at every vertex,
//! searching for a set of marked vertices on triangular, rectangular or
//! honeycomb `side × side` grids with periodic boundaries.
//!
//! - [`grid`]: grid families, coordinates, the flip-flop neighbor map.
//! - [`walk`]: state vectors and the search step (oracle, coin, shift).
//! - [`reference`]: dense-matrix evolution for small grids, used as a test oracle.
//! - [`harness`]: first-peak detection, weight scans, random ensembles, scaling fits.
//! - [`cli`]: the `lqw` command line (`simulate`, `scan`, `ensemble`).
//!
//! ```
//! use lqw::grid::{GridGeometry, GridKind};
//! use lqw::harness::{find_first_peak, WeightSchedule};
//! use lqw::walk::MarkedSet;
//!
//! let grid = GridGeometry::new(GridKind::Rectangular, 16).unwrap();
//! let marked = MarkedSet::row_even(&grid, 2).unwrap();
//! let l = WeightSchedule::M.weight(&grid, marked.len());
//! let (peak, _) = find_first_peak(&grid, &marked, l).unwrap();
//! assert!(peak.grew);
//! ```

pub mod cli;
pub mod error;
pub mod grid;
pub mod harness;
pub mod reference;
pub mod walk;

pub use error::{Error, Result};
pub use grid::{Direction, GridGeometry, GridKind, VertexCoord};
pub use walk::{coin_state, MarkedSet, SearchWalk, StateVector};
