//! Command-line front end: `simulate`, `scan` and `ensemble`.
//!
//! Every command writes its tables into the `--out` directory together with a
//! `run.json` sidecar holding the crate version and the resolved configuration,
//! and prints a JSON summary on standard output.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::grid::{GridGeometry, GridKind, VertexCoord};
use crate::harness::output::{write_aggregate, write_runs, write_scan, write_series};
use crate::harness::peak::peak_of;
use crate::harness::scaling::{lin_space, log_space, log_spaced_integers};
use crate::harness::{
    find_first_peak_with, find_optimal_weight, random_marked_set, run_ensemble, scan_weight, PeakOptions,
    WeightSchedule,
};
use crate::walk::{MarkedSet, SearchWalk};

/// Points used by `a..b:log` when no count is given.
const DEFAULT_LOG_POINTS: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "lqw", version, about = "Lackadaisical quantum-walk search on 2D torus grids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evolve one configuration and write the p(t) series.
    Simulate(CommandArgs),
    /// First-peak probability over a list of weights, or the optimal weight.
    Scan(CommandArgs),
    /// Randomized marked sets, per-run and aggregated first peaks.
    Ensemble(CommandArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pattern {
    /// {(0, 2i) | i < m}
    RowEven,
}

#[derive(Debug, Clone, Args)]
pub struct CommandArgs {
    /// triangular, rectangular or honeycomb
    #[arg(long)]
    pub grid: String,
    #[arg(long)]
    pub side: usize,

    /// Explicit marked vertices, e.g. "(0,0);(0,2)"
    #[arg(long)]
    pub marked: Option<String>,
    /// Structured marked set (needs --m)
    #[arg(long, value_enum)]
    pub pattern: Option<Pattern>,
    /// Random marked set (needs --m; seeded by --seed)
    #[arg(long)]
    pub random: bool,
    /// Marked-set size for --pattern and --random
    #[arg(long)]
    pub m: Option<usize>,
    /// Sizes for ensembles: "1,5,10", "1..48", "1..48:2", "1..1000:log" or "1..1000:log:30"
    #[arg(long)]
    pub m_list: Option<String>,
    /// Mark round(fraction·N) random vertices
    #[arg(long)]
    pub m_fraction: Option<f64>,

    /// Fixed self-loop weight
    #[arg(long, allow_negative_numbers = true)]
    pub l: Option<f64>,
    /// Weight schedule l = a·d/N with a in {1, m-sqrtm, m} or a number
    #[arg(long)]
    pub schedule: Option<String>,
    /// Weight grid "lo:hi:points" or "lo:hi:points:log"
    #[arg(long)]
    pub scan: Option<String>,
    /// Explicit weights, comma separated
    #[arg(long)]
    pub l_list: Option<String>,
    /// Search for the weight with the highest first peak
    #[arg(long)]
    pub optimize: bool,

    /// Number of steps (simulate) or cap on the evolution length (scan, ensemble)
    #[arg(long)]
    pub steps: Option<usize>,
    /// Runs per m in an ensemble
    #[arg(long = "R", alias = "runs", default_value_t = 1)]
    pub runs: usize,
    /// Seed for random marked sets; ensemble run r uses seed + r
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output directory
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Worker threads (default: available parallelism)
    #[arg(long, env = "LQW_THREADS")]
    pub threads: Option<usize>,
    /// Also write the final state as state.csv (simulate only)
    #[arg(long)]
    pub dump_state: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum MarkedSpec {
    Explicit { vertices: Vec<VertexCoord> },
    RowEven { m: usize },
    Random { m_values: Vec<usize>, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum WeightSpec {
    Fixed { l: f64 },
    Schedule { schedule: WeightSchedule },
    Scan { weights: Vec<f64> },
    Optimize,
}

/// Validated, fully resolved configuration of one command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub grid: GridKind,
    pub side: usize,
    pub marked: MarkedSpec,
    pub weight: WeightSpec,
    pub steps: Option<usize>,
    pub runs: usize,
    pub base_seed: u64,
    pub out: PathBuf,
    pub format: OutputFormat,
    pub dump_state: bool,
}

impl RunConfig {
    pub fn geometry(&self) -> Result<GridGeometry> {
        GridGeometry::new(self.grid, self.side)
    }

    fn peak_options(&self) -> PeakOptions {
        PeakOptions {
            max_steps: self.steps,
            ..PeakOptions::default()
        }
    }

    /// The single marked set of a simulate/scan configuration.
    pub fn marked_set(&self) -> Result<MarkedSet> {
        let geometry = self.geometry()?;
        match &self.marked {
            MarkedSpec::Explicit { vertices } => MarkedSet::new(&geometry, vertices.iter().copied())
                .map_err(|e| Error::config("marked", e.to_string())),
            MarkedSpec::RowEven { m } => {
                MarkedSet::row_even(&geometry, *m).map_err(|e| Error::config("m", e.to_string()))
            }
            MarkedSpec::Random { m_values, seed } => match m_values.as_slice() {
                [m] => random_marked_set(&geometry, *m, *seed).map_err(|e| Error::config("m", e.to_string())),
                _ => Err(Error::config("m", "simulate and scan need a single marked-set size")),
            },
        }
    }

    pub fn weight_for(&self, m: usize) -> Result<f64> {
        let geometry = self.geometry()?;
        match &self.weight {
            WeightSpec::Fixed { l } => Ok(*l),
            WeightSpec::Schedule { schedule } => Ok(schedule.weight(&geometry, m)),
            _ => Err(Error::config("l", "a single weight (--l or --schedule) is required")),
        }
    }
}

pub fn parse_marked_list(text: &str) -> Result<Vec<VertexCoord>> {
    let bad = |part: &str| Error::config("marked", format!("`{part}` is not of the form (x,y)"));
    text.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|part| {
            let inner = part
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| bad(part))?;
            let (x, y) = inner.split_once(',').ok_or_else(|| bad(part))?;
            let x = x.trim().parse().map_err(|_| bad(part))?;
            let y = y.trim().parse().map_err(|_| bad(part))?;
            Ok(VertexCoord::new(x, y))
        })
        .collect()
}

pub fn parse_m_list(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::config("m-list", format!("cannot parse `{text}`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let values = if let Some((lo, rest)) = text.split_once("..") {
        let mut parts = rest.split(':');
        let hi = num(parts.next().ok_or_else(bad)?)?;
        let lo = num(lo)?;
        if lo > hi {
            return Err(bad());
        }
        match (parts.next(), parts.next()) {
            (None, _) => (lo..=hi).collect(),
            (Some("log"), count) => {
                let count = count.map(num).transpose()?.unwrap_or(DEFAULT_LOG_POINTS);
                log_spaced_integers(lo, hi, count)
            }
            (Some(step), None) => {
                let step = num(step)?;
                if step == 0 {
                    return Err(bad());
                }
                (lo..=hi).step_by(step).collect()
            }
            _ => return Err(bad()),
        }
    } else {
        text.split(',').map(num).collect::<Result<Vec<_>>>()?
    };
    if values.is_empty() || values.contains(&0) {
        return Err(Error::config("m-list", "sizes must be at least 1"));
    }
    Ok(values)
}

pub fn parse_scan(text: &str) -> Result<Vec<f64>> {
    let bad = || Error::config("scan", format!("expected lo:hi:points[:log], got `{text}`"));
    let parts: Vec<&str> = text.split(':').collect();
    if !(3..=4).contains(&parts.len()) {
        return Err(bad());
    }
    let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let points: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if points == 0 || lo.is_nan() || hi.is_nan() || lo < 0.0 || hi < lo {
        return Err(bad());
    }
    match parts.get(3) {
        None => Ok(lin_space(lo, hi, points)),
        Some(&"log") if lo > 0.0 => Ok(log_space(lo, hi, points)),
        _ => Err(bad()),
    }
}

fn parse_l_list(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .ok()
                .filter(|l| l.is_finite() && *l >= 0.0)
                .ok_or_else(|| Error::config("l-list", format!("`{s}` is not a non-negative number")))
        })
        .collect()
}

impl CommandArgs {
    pub fn resolve(&self) -> Result<RunConfig> {
        let grid: GridKind = self.grid.parse().map_err(|e: Error| Error::config("grid", e.to_string()))?;
        let geometry = GridGeometry::new(grid, self.side).map_err(|e| Error::config("side", e.to_string()))?;
        let n = geometry.vertex_count();

        let marked_specs = [
            self.marked.is_some(),
            self.pattern.is_some(),
            self.random || self.m_list.is_some() || self.m_fraction.is_some(),
        ];
        if marked_specs.iter().filter(|&&b| b).count() != 1 {
            return Err(Error::config(
                "marked",
                "give exactly one of --marked, --pattern or --random/--m-list/--m-fraction",
            ));
        }
        let marked = if let Some(text) = &self.marked {
            let vertices = parse_marked_list(text)?;
            MarkedSet::new(&geometry, vertices.iter().copied()).map_err(|e| Error::config("marked", e.to_string()))?;
            MarkedSpec::Explicit { vertices }
        } else if self.pattern.is_some() {
            let m = self.m.ok_or_else(|| Error::config("m", "--pattern needs --m"))?;
            MarkedSet::row_even(&geometry, m).map_err(|e| Error::config("m", e.to_string()))?;
            MarkedSpec::RowEven { m }
        } else {
            let m_values = match (self.m, &self.m_list, self.m_fraction) {
                (Some(m), None, None) => vec![m],
                (None, Some(list), None) => parse_m_list(list)?,
                (None, None, Some(f)) => {
                    if !(f > 0.0 && f <= 1.0) {
                        return Err(Error::config("m-fraction", "must be in (0, 1]"));
                    }
                    vec![((f * n as f64).round() as usize).max(1)]
                }
                _ => return Err(Error::config("m", "give exactly one of --m, --m-list or --m-fraction")),
            };
            if let Some(&m) = m_values.iter().find(|&&m| m > n) {
                return Err(Error::config("m", format!("cannot mark {m} of {n} vertices")));
            }
            MarkedSpec::Random {
                m_values,
                seed: self.seed,
            }
        };

        let weight_specs = [
            self.l.is_some(),
            self.schedule.is_some(),
            self.scan.is_some() || self.l_list.is_some(),
            self.optimize,
        ];
        if weight_specs.iter().filter(|&&b| b).count() != 1 {
            return Err(Error::config(
                "l",
                "give exactly one of --l, --schedule, --scan/--l-list or --optimize",
            ));
        }
        let weight = if let Some(l) = self.l {
            if !(l.is_finite() && l >= 0.0) {
                return Err(Error::config("l", format!("{l} is not a non-negative weight")));
            }
            WeightSpec::Fixed { l }
        } else if let Some(s) = &self.schedule {
            WeightSpec::Schedule { schedule: s.parse()? }
        } else if self.optimize {
            WeightSpec::Optimize
        } else {
            let weights = match (&self.scan, &self.l_list) {
                (Some(s), None) => parse_scan(s)?,
                (None, Some(s)) => parse_l_list(s)?,
                _ => return Err(Error::config("scan", "give only one of --scan or --l-list")),
            };
            WeightSpec::Scan { weights }
        };

        if self.runs == 0 {
            return Err(Error::config("R", "ensemble size must be at least 1"));
        }
        if self.threads == Some(0) {
            return Err(Error::config("threads", "must be at least 1"));
        }
        Ok(RunConfig {
            grid,
            side: self.side,
            marked,
            weight,
            steps: self.steps,
            runs: self.runs,
            base_seed: self.seed,
            out: self.out.clone(),
            format: self.format,
            dump_state: self.dump_state,
        })
    }
}

fn create(dir: &Path, name: &str) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(dir.join(name))?))
}

fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> Result<()> {
    let mut w = create(dir, name)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn write_table(
    config: &RunConfig,
    stem: &str,
    csv: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
    json: impl Serialize,
) -> Result<()> {
    fs::create_dir_all(&config.out)?;
    match config.format {
        OutputFormat::Csv => {
            let mut w = create(&config.out, &format!("{stem}.csv"))?;
            csv(&mut w)?;
            w.flush()?;
        }
        OutputFormat::Json => write_json(&config.out, &format!("{stem}.json"), &json)?,
    }
    Ok(())
}

fn write_sidecar(config: &RunConfig, command: &str, threads: Option<usize>) -> Result<()> {
    fs::create_dir_all(&config.out)?;
    let sidecar = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "threads": threads,
        "config": config,
    });
    write_json(&config.out, "run.json", &sidecar)
}

/// Writes `series` (and optionally `state.csv`), returns the JSON summary.
pub fn cmd_simulate(config: &RunConfig) -> Result<serde_json::Value> {
    let geometry = config.geometry()?;
    let marked = config.marked_set()?;
    let l = config.weight_for(marked.len())?;
    let walk = SearchWalk::new(geometry, marked.clone(), l)?;
    let (series, state) = match config.steps {
        Some(steps) => {
            let mut probs = walk.probabilities();
            let series: Vec<f64> = probs.by_ref().take(steps + 1).collect();
            (series, probs.state().clone())
        }
        None => {
            if marked.is_empty() {
                return Err(Error::config("steps", "an empty marked set needs --steps"));
            }
            let (_, record) = find_first_peak_with(&geometry, &marked, l, config.peak_options())?;
            let state = walk.evolve(record.series.len() - 1);
            (record.series, state)
        }
    };
    let peak = peak_of(&series, marked.len(), geometry.vertex_count());
    write_table(config, "series", |w| write_series(w, &series), json!({ "t": (0..series.len()).collect::<Vec<_>>(), "p": &series }))?;
    if config.dump_state {
        let mut w = create(&config.out, "state.csv")?;
        state.write_csv(&mut w)?;
        w.flush()?;
    }
    Ok(json!({
        "grid": geometry.kind(),
        "side": geometry.side(),
        "m": marked.len(),
        "l": l,
        "steps": series.len() - 1,
        "t_peak": peak.t_peak,
        "p_peak": peak.p_peak,
        "grew": peak.grew,
        "norm": state.norm(),
    }))
}

pub fn cmd_scan(config: &RunConfig) -> Result<serde_json::Value> {
    let geometry = config.geometry()?;
    let marked = config.marked_set()?;
    let options = config.peak_options();
    match &config.weight {
        WeightSpec::Scan { weights } => {
            let points = scan_weight(&geometry, &marked, weights, options)?;
            write_table(config, "scan", |w| write_scan(w, &points), &points)?;
            Ok(json!({ "points": points.len() }))
        }
        WeightSpec::Optimize => {
            let opt = find_optimal_weight(&geometry, &marked, options)?;
            write_table(config, "scan", |w| write_scan(w, &opt.evaluated), &opt.evaluated)?;
            Ok(json!({ "points": opt.evaluated.len(), "l_opt": opt.l_opt, "p_peak": opt.p_peak, "t_peak": opt.t_peak }))
        }
        _ => Err(Error::config("scan", "scan needs --scan, --l-list or --optimize")),
    }
}

pub fn cmd_ensemble(config: &RunConfig) -> Result<serde_json::Value> {
    let geometry = config.geometry()?;
    let MarkedSpec::Random { m_values, .. } = &config.marked else {
        return Err(Error::config("marked", "ensemble needs random marked sets (--m, --m-list or --m-fraction)"));
    };
    let WeightSpec::Schedule { schedule } = config.weight else {
        return Err(Error::config("schedule", "ensemble needs --schedule"));
    };
    let result = run_ensemble(&geometry, m_values, config.runs, schedule, config.base_seed, config.peak_options())?;
    write_table(config, "runs", |w| write_runs(w, &result.runs), &result.runs)?;
    write_table(config, "aggregate", |w| write_aggregate(w, &result.aggregate), &result.aggregate)?;
    Ok(json!({
        "runs": result.runs.len(),
        "aggregate": result.aggregate.iter().map(|a| json!({
            "m": a.m, "mean_p": a.p_peak.mean, "mean_t": a.t_peak.mean,
        })).collect::<Vec<_>>(),
    }))
}

/// Resolves the arguments, runs the command on a pool of the requested size,
/// writes the sidecar and returns the summary.
pub fn run(cli: &Cli) -> Result<serde_json::Value> {
    let (name, args) = match &cli.command {
        Command::Simulate(a) => ("simulate", a),
        Command::Scan(a) => ("scan", a),
        Command::Ensemble(a) => ("ensemble", a),
    };
    let config = args.resolve()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = args.threads {
        pool = pool.num_threads(t);
    }
    let pool = pool.build().map_err(|e| Error::config("threads", e.to_string()))?;
    let summary = pool.install(|| match &cli.command {
        Command::Simulate(_) => cmd_simulate(&config),
        Command::Scan(_) => cmd_scan(&config),
        Command::Ensemble(_) => cmd_ensemble(&config),
    })?;
    write_sidecar(&config, name, Some(pool.current_num_threads()))?;
    Ok(summary)
}
