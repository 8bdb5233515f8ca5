//! Experiments on top of the walk engine: weight schedules, first-peak
//! detection, weight scans, randomized ensembles and scaling fits.

pub mod ensemble;
pub mod output;
pub mod peak;
pub mod scaling;
pub mod scan;
pub mod schedule;

pub use ensemble::{random_marked_set, run_ensemble, AggregateStats, EnsembleResult, RunResult, SummaryStats};
pub use peak::{find_first_peak, find_first_peak_with, step_cap, EvolutionRecord, PeakOptions, PeakResult};
pub use scaling::{fit_loglog_slope, scaling_reference};
pub use scan::{find_optimal_weight, scan_weight, OptimalWeight, ScanPoint};
pub use schedule::WeightSchedule;
