//! CSV writers with fixed headers. Floats are written with 17 significant
//! digits so they parse back to the same `f64`.

use std::io::{self, Write};

use super::ensemble::{AggregateStats, RunResult};
use super::scan::ScanPoint;

pub const SERIES_HEADER: &str = "t,p";
pub const SCAN_HEADER: &str = "l,p_peak,t_peak";
pub const RUNS_HEADER: &str = "m,run,seed,l,p_peak,t_peak,grew";
pub const AGGREGATE_HEADER: &str = "m,mean_p,std_p,min_p,max_p,ci_p,mean_t,std_t,ci_t";

/// 17 significant digits in scientific notation.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_series<W: Write>(mut out: W, series: &[f64]) -> io::Result<()> {
    writeln!(out, "{SERIES_HEADER}")?;
    for (t, p) in series.iter().enumerate() {
        writeln!(out, "{t},{}", fmt_f64(*p))?;
    }
    Ok(())
}

pub fn write_scan<W: Write>(mut out: W, points: &[ScanPoint]) -> io::Result<()> {
    writeln!(out, "{SCAN_HEADER}")?;
    for p in points {
        writeln!(out, "{},{},{}", fmt_f64(p.l), fmt_f64(p.p_peak), p.t_peak)?;
    }
    Ok(())
}

pub fn write_runs<W: Write>(mut out: W, runs: &[RunResult]) -> io::Result<()> {
    writeln!(out, "{RUNS_HEADER}")?;
    for r in runs {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.m,
            r.run,
            r.seed,
            fmt_f64(r.l),
            fmt_f64(r.p_peak),
            r.t_peak,
            r.grew
        )?;
    }
    Ok(())
}

pub fn write_aggregate<W: Write>(mut out: W, rows: &[AggregateStats]) -> io::Result<()> {
    writeln!(out, "{AGGREGATE_HEADER}")?;
    for a in rows {
        let (p, t) = (&a.p_peak, &a.t_peak);
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            a.m,
            fmt_f64(p.mean),
            fmt_f64(p.std),
            fmt_f64(p.min),
            fmt_f64(p.max),
            fmt_f64(p.ci),
            fmt_f64(t.mean),
            fmt_f64(t.std),
            fmt_f64(t.ci)
        )?;
    }
    Ok(())
}
