//! Tabulation of the axis potential, the metric determinant and curvature
//! extremes along `(0, x)`.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::curvature::{bis_extremes, sectional_extremes};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::metric::metric_jet;
use crate::potential::PotentialSolution;
use crate::search::SearchConfig;

/// Default upper end of an axis sweep.
pub const DEFAULT_X_MAX: f64 = 1.0 - 1e-4;

pub const CSV_HEADER: [&str; 11] = ["x", "F", "f", "f1", "f2", "f3", "Z", "det_g", "bis_min", "bis_max", "sect_max"];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub x: f64,
    #[serde(rename = "F")]
    pub big_f: f64,
    pub f: f64,
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    #[serde(rename = "Z")]
    pub z: f64,
    pub det_g: f64,
    pub bis_min: f64,
    pub bis_max: f64,
    pub sect_max: f64,
}

impl SweepRow {
    pub fn at(sol: &PotentialSolution, x: f64, config: &SearchConfig) -> Result<Self> {
        let point = Point::axis(x);
        let d = sol.eval_f_derivs(x, 3)?;
        let jet = metric_jet(sol, &point)?;
        let bis = bis_extremes(sol, &point, config)?;
        let sect = sectional_extremes(sol, &point, config)?;
        Ok(Self {
            x,
            big_f: sol.eval_big_f(x)?,
            f: d[0],
            f1: d[1],
            f2: d[2],
            f3: d[3],
            z: sol.eval_z(x, 0)?[0],
            det_g: jet.det,
            bis_min: bis.min,
            bis_max: bis.max,
            sect_max: sect.max,
        })
    }

    pub fn values(&self) -> [f64; 11] {
        [
            self.x, self.big_f, self.f, self.f1, self.f2, self.f3, self.z, self.det_g, self.bis_min, self.bis_max,
            self.sect_max,
        ]
    }

    pub fn is_finite(&self) -> bool {
        self.values().iter().all(|v| v.is_finite())
    }
}

/// `n` rows at equally spaced `x` in `[x_min, x_max]`, computed in parallel.
pub fn axis_sweep(sol: &PotentialSolution, x_min: f64, x_max: f64, n: usize, config: &SearchConfig) -> Result<Vec<SweepRow>> {
    if n == 0 {
        return Err(Error::InvalidInput("sweep needs at least one row".into()));
    }
    if !(x_min.is_finite() && x_max.is_finite()) || x_min > x_max || (n > 1 && x_min == x_max) {
        return Err(Error::InvalidInput(format!("bad sweep range [{x_min}, {x_max}]")));
    }
    if x_min.abs().max(x_max.abs()) >= sol.x_max() {
        return Err(Error::Domain(format!("sweep range exceeds solved range |x| < {}", sol.x_max())));
    }
    let xs: Vec<f64> = match n {
        1 => vec![x_min],
        _ => (0..n).map(|i| x_min + (x_max - x_min) * i as f64 / (n - 1) as f64).collect(),
    };
    xs.into_par_iter().map(|x| SweepRow::at(sol, x, config)).collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.values().iter().map(|v| format!("{v:e}")))?;
    }
    w.flush()?;
    Ok(())
}
