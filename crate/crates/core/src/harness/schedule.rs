use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridGeometry;

/// Weight rule l = a·d/N with the coefficient a chosen per marked-set size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightSchedule {
    /// a = 1, the single-target weight d/N.
    One,
    /// a = m − √m (real-valued, no rounding).
    MMinusSqrtM,
    /// a = m.
    M,
    /// Any fixed a ≥ 0.
    Coefficient(f64),
}

impl WeightSchedule {
    pub const NAMED: [WeightSchedule; 3] = [WeightSchedule::M, WeightSchedule::MMinusSqrtM, WeightSchedule::One];

    pub fn coefficient(&self, m: usize) -> f64 {
        let m = m as f64;
        match *self {
            WeightSchedule::One => 1.0,
            WeightSchedule::MMinusSqrtM => m - m.sqrt(),
            WeightSchedule::M => m,
            WeightSchedule::Coefficient(a) => a,
        }
    }

    pub fn weight(&self, geometry: &GridGeometry, m: usize) -> f64 {
        self.coefficient(m) * geometry.degree() as f64 / geometry.vertex_count() as f64
    }
}

impl fmt::Display for WeightSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSchedule::One => f.write_str("1"),
            WeightSchedule::MMinusSqrtM => f.write_str("m-sqrtm"),
            WeightSchedule::M => f.write_str("m"),
            WeightSchedule::Coefficient(a) => write!(f, "{a}"),
        }
    }
}

impl FromStr for WeightSchedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(WeightSchedule::One),
            "m-sqrtm" => Ok(WeightSchedule::MMinusSqrtM),
            "m" => Ok(WeightSchedule::M),
            other => match other.parse::<f64>() {
                Ok(a) if a.is_finite() && a >= 0.0 => Ok(WeightSchedule::Coefficient(a)),
                _ => Err(Error::config(
                    "schedule",
                    format!("`{other}` is not one of 1, m-sqrtm, m or a non-negative number"),
                )),
            },
        }
    }
}
