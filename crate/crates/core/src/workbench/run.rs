use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::config::{Mode, RunConfig};
use crate::error::{Error, Result};
use crate::lifshitz::{force_point_between, pressure_ratio, FilmPair, ForcePoint, IdealMirror, LifshitzConfig};

pub const SWEEP_HEADER: &str = "L_nm,energy_Jm2,pressure_Pa,rel_err";
pub const RATIO_HEADER: &str = "L_nm,energy_Jm2,pressure_Pa,ratio,rel_err";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Replace every film by a perfect mirror.
    pub ideal_mirror: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub point: ForcePoint,
    pub ratio: Option<f64>,
}

/// Result of one sweep; failed points keep their error.
#[derive(Debug)]
pub struct SweepReport {
    pub mode: Mode,
    pub grid: Vec<f64>,
    pub rows: Vec<Result<Row>>,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = (f64, &Error)> {
        self.grid
            .iter()
            .zip(&self.rows)
            .filter_map(|(l, r)| r.as_ref().err().map(|e| (*l, e)))
    }

    pub fn is_complete(&self) -> bool {
        self.rows.iter().all(Result::is_ok)
    }

    /// CSV text; failed grid points appear as `# failed` comment lines.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(match self.mode {
            Mode::Sweep => SWEEP_HEADER,
            Mode::Ratio => RATIO_HEADER,
        });
        out.push('\n');
        for (l, row) in self.grid.iter().zip(&self.rows) {
            match row {
                Ok(Row { point, ratio }) => {
                    let _ = write!(out, "{:e},{:e},{:e},", l, point.energy_per_area, point.pressure);
                    if let Some(r) = ratio {
                        let _ = write!(out, "{r:e},");
                    }
                    let _ = writeln!(out, "{:e}", point.rel_err);
                }
                Err(e) => {
                    let _ = writeln!(out, "# failed L_nm={l:e}: {}", e.to_string().replace('\n', " "));
                }
            }
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_csv()).map_err(|e| Error::Data {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }
}

fn point(films: Option<&FilmPair>, l: f64, cfg: &LifshitzConfig) -> Result<ForcePoint> {
    match films {
        Some(p) => force_point_between(&p.lower, &p.upper, l, cfg),
        None => force_point_between(&IdealMirror, &IdealMirror, l, cfg),
    }
}

/// Computes every grid point of `config`; in ratio mode `baseline` is required.
///
/// Grid points run in parallel; the rows keep grid order.
pub fn run_sweep(config: &RunConfig, baseline: Option<&RunConfig>, options: RunOptions) -> Result<SweepReport> {
    let grid = config.grid();
    let cfg = config.quadrature.lifshitz();
    let mode = if baseline.is_some() { Mode::Ratio } else { config.mode };
    let (films, base_films) = if options.ideal_mirror {
        (None, None)
    } else {
        let films = config.films()?;
        let base = match (mode, baseline) {
            (Mode::Ratio, Some(b)) => Some(b.baseline_films(&films)?),
            (Mode::Ratio, None) => {
                return Err(Error::config("baseline", "ratio mode needs a baseline configuration"))
            }
            (Mode::Sweep, _) => None,
        };
        (Some(films), base)
    };
    let rows = grid
        .par_iter()
        .map(|&l| {
            let num = point(films.as_ref(), l, &cfg)?;
            let ratio = match mode {
                Mode::Sweep => None,
                Mode::Ratio => {
                    let base = point(base_films.as_ref(), l, &cfg)?;
                    let r = pressure_ratio(&num, &base)?;
                    return Ok(Row {
                        point: ForcePoint {
                            rel_err: num.rel_err + base.rel_err,
                            ..num
                        },
                        ratio: Some(r),
                    });
                }
            };
            Ok(Row { point: num, ratio })
        })
        .collect();
    Ok(SweepReport { mode, grid, rows })
}

/// Output CSV path for a configuration.
pub fn output_path(config: &RunConfig, out_dir: &Path) -> PathBuf {
    out_dir.join(format!("{}.csv", config.output))
}
