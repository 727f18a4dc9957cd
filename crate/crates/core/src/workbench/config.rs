//! Scenario configuration files.
//!
//! The format is TOML: `key = value` lines grouped under `[section]`
//! headers. A minimal file:
//!
//! ```toml
//! [separation]
//! min_nm = 10.0
//! max_nm = 1000.0
//! points = 3
//!
//! [film]
//! thickness = 1.9
//!
//! [film.xx]
//! oscillators = [[11.1, 3.4, 0.0]]
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::data::load_spectrum_csv;
use crate::dielectric::{DielectricTensorModel, Oscillator, OscillatorSet};
use crate::error::{Error, Result};
use crate::lifshitz::{FilmPair, LifshitzConfig};
use crate::quadrature::{QuadratureConfig, Rule};
use crate::reflection::{Film, Thickness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Sweep,
    Ratio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Spacing {
    #[default]
    Log,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparationGrid {
    pub min_nm: f64,
    pub max_nm: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl Default for SeparationGrid {
    fn default() -> Self {
        SeparationGrid {
            min_nm: 1.0,
            max_nm: 1000.0,
            points: 31,
            spacing: Spacing::Log,
        }
    }
}

impl SeparationGrid {
    /// Grid values, with both end points exact.
    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        if n == 1 {
            return vec![self.min_nm];
        }
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.min_nm;
                }
                if i == n - 1 {
                    return self.max_nm;
                }
                let t = i as f64 / (n - 1) as f64;
                match self.spacing {
                    Spacing::Log => {
                        let (a, b) = (self.min_nm.log10(), self.max_nm.log10());
                        10f64.powf(a + (b - a) * t)
                    }
                    Spacing::Linear => self.min_nm + (self.max_nm - self.min_nm) * t,
                }
            })
            .collect()
    }

    fn validate(&self) -> Result<()> {
        if !(self.min_nm.is_finite() && self.min_nm > 0.0) {
            return Err(Error::config("separation.min_nm", "must be positive"));
        }
        if !self.max_nm.is_finite() || self.max_nm < self.min_nm {
            return Err(Error::config("separation.max_nm", "must be finite and >= min_nm"));
        }
        if self.points == 0 {
            return Err(Error::config("separation.points", "must be at least 1"));
        }
        if self.points > 1 && self.max_nm == self.min_nm {
            return Err(Error::config("separation.max_nm", "must exceed min_nm when points > 1"));
        }
        Ok(())
    }
}

/// Quadrature settings exposed in configuration files.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    /// Outer tolerance; inner integrals run a decade tighter.
    pub rel_tol: f64,
    pub max_depth: u32,
    pub max_intervals: usize,
    pub rule: Rule,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        let q = QuadratureConfig::default();
        QuadratureSettings {
            rel_tol: 1e-7,
            max_depth: q.max_depth,
            max_intervals: q.max_intervals,
            rule: q.rule,
        }
    }
}

impl QuadratureSettings {
    pub fn lifshitz(&self) -> LifshitzConfig {
        let base = QuadratureConfig {
            max_depth: self.max_depth,
            max_intervals: self.max_intervals,
            rule: self.rule,
            ..QuadratureConfig::default()
        };
        LifshitzConfig {
            outer: base.with_rel_tol(self.rel_tol),
            inner: base.with_rel_tol(self.rel_tol / 10.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThicknessSpec {
    Nm(f64),
    HalfSpace,
    /// Same thickness as the corresponding film of the scenario being compared.
    Match,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TensorSpec {
    /// Oscillator models per axis; missing yy or zz default to xx.
    Inline {
        xx: OscillatorSet,
        yy: Option<OscillatorSet>,
        zz: Option<OscillatorSet>,
    },
    /// CSV file with an imaginary-axis response or an absorption spectrum.
    File(PathBuf),
}

impl TensorSpec {
    pub fn model(&self) -> Result<DielectricTensorModel> {
        match self {
            TensorSpec::Inline { xx, yy, zz } => {
                let yy = yy.as_ref().unwrap_or(xx);
                let zz = zz.as_ref().unwrap_or(xx);
                Ok(if yy == xx && zz == xx {
                    DielectricTensorModel::isotropic(xx.clone())
                } else if yy == xx {
                    DielectricTensorModel::uniaxial(xx.clone(), zz.clone())
                } else {
                    DielectricTensorModel::biaxial(xx.clone(), yy.clone(), zz.clone())
                })
            }
            TensorSpec::File(path) => load_spectrum_csv(path)?.to_tensor(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FilmSpec {
    pub thickness: ThicknessSpec,
    pub orientation_deg: f64,
    pub tensor: TensorSpec,
}

impl FilmSpec {
    /// `reference` resolves a `match` thickness.
    pub fn build(&self, reference: Option<Thickness>) -> Result<Film> {
        let thickness = match (self.thickness, reference) {
            (ThicknessSpec::Nm(d), _) => Thickness::finite(d)?,
            (ThicknessSpec::HalfSpace, _) => Thickness::HalfSpace,
            (ThicknessSpec::Match, Some(t)) => t,
            (ThicknessSpec::Match, None) => {
                return Err(Error::config(
                    "film.thickness",
                    "`match` is only valid in a baseline configuration (use the `ratio` command)",
                ))
            }
        };
        Film::new(thickness, self.tensor.model()?, self.orientation_deg.to_radians())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    /// Output file stem inside the output directory.
    pub output: String,
    pub separation: SeparationGrid,
    pub quadrature: QuadratureSettings,
    pub film: FilmSpec,
    /// Upper film; the lower film is reused when absent.
    pub film2: Option<FilmSpec>,
    /// Baseline configuration for ratio mode.
    pub baseline: Option<PathBuf>,
}

impl RunConfig {
    pub fn grid(&self) -> Vec<f64> {
        self.separation.values()
    }

    pub fn films(&self) -> Result<FilmPair> {
        let lower = self.film.build(None)?;
        let upper = match &self.film2 {
            Some(spec) => spec.build(None)?,
            None => lower.clone(),
        };
        Ok(FilmPair { lower, upper })
    }

    /// Films of this configuration used as a baseline for `numerator`.
    pub fn baseline_films(&self, numerator: &FilmPair) -> Result<FilmPair> {
        let lower = self.film.build(Some(numerator.lower.thickness()))?;
        let upper = match &self.film2 {
            Some(spec) => spec.build(Some(numerator.upper.thickness()))?,
            None if self.film.thickness == ThicknessSpec::Match => {
                self.film.build(Some(numerator.upper.thickness()))?
            }
            None => lower.clone(),
        };
        Ok(FilmPair { lower, upper })
    }

    /// Serializes to text that parses back to an equal configuration.
    pub fn render(&self) -> String {
        let raw = RawConfig::from(self);
        toml::to_string(&raw).expect("configuration is always representable")
    }
}

/// Parses configuration text; relative file paths stay relative to the working directory.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    parse_config_in(text, Path::new(""))
}

/// Reads a configuration file; relative paths inside resolve against its directory.
pub fn load_config(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Data {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let base = path.parent().unwrap_or(Path::new(""));
    parse_config_in(&text, base)
}

pub fn parse_config_in(text: &str, base: &Path) -> Result<RunConfig> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Syntax {
        line: e
            .span()
            .map(|s| text[..s.start.min(text.len())].matches('\n').count() + 1)
            .unwrap_or(0),
        message: e.message().to_string(),
    })?;
    raw.validate(base)
}

// Serialized form, kept close to the file layout.

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    baseline: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    separation: Option<RawSeparation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    quadrature: Option<RawQuadrature>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    film: Option<RawFilm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    film2: Option<RawFilm>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSeparation {
    min_nm: f64,
    max_nm: f64,
    points: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    spacing: Option<String>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuadrature {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rel_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_depth: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_intervals: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rule: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFilm {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    thickness: Option<toml::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orientation_deg: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tensor_file: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    xx: Option<RawAxis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    yy: Option<RawAxis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zz: Option<RawAxis>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAxis {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eps_inf: Option<f64>,
    /// [strength, resonance, damping] triples in eV.
    #[serde(default)]
    oscillators: Vec<[f64; 3]>,
}

impl RawConfig {
    fn validate(self, base: &Path) -> Result<RunConfig> {
        let mode = match self.mode.as_deref() {
            None | Some("sweep") => Mode::Sweep,
            Some("ratio") => Mode::Ratio,
            Some(other) => return Err(Error::config("mode", format!("expected `sweep` or `ratio`, got `{other}`"))),
        };
        let output = self.output.unwrap_or_else(|| "forces".to_string());
        if output.is_empty() || output.contains(['/', '\\']) || output.starts_with('.') {
            return Err(Error::config("output", "must be a plain file stem"));
        }
        let separation = self
            .separation
            .ok_or_else(|| Error::config("separation", "missing required section [separation]"))?
            .validate()?;
        let quadrature = self.quadrature.unwrap_or_default().validate()?;
        let film = self
            .film
            .ok_or_else(|| Error::config("film", "missing required section [film]"))?
            .validate("film", base)?;
        let film2 = self.film2.map(|f| f.validate("film2", base)).transpose()?;
        let baseline = match self.baseline {
            Some(p) => {
                let path = base.join(p);
                if !path.is_file() {
                    return Err(Error::config("baseline", format!("file {} does not exist", path.display())));
                }
                Some(path)
            }
            None => None,
        };
        Ok(RunConfig {
            mode,
            output,
            separation,
            quadrature,
            film,
            film2,
            baseline,
        })
    }
}

impl RawSeparation {
    fn validate(self) -> Result<SeparationGrid> {
        let spacing = match self.spacing.as_deref() {
            None | Some("log") => Spacing::Log,
            Some("linear") => Spacing::Linear,
            Some(other) => {
                return Err(Error::config("separation.spacing", format!("expected `log` or `linear`, got `{other}`")))
            }
        };
        if self.points < 1 {
            return Err(Error::config("separation.points", "must be at least 1"));
        }
        let grid = SeparationGrid {
            min_nm: self.min_nm,
            max_nm: self.max_nm,
            points: self.points as usize,
            spacing,
        };
        grid.validate()?;
        Ok(grid)
    }
}

impl RawQuadrature {
    fn validate(self) -> Result<QuadratureSettings> {
        let d = QuadratureSettings::default();
        let rule = match self.rule.as_deref() {
            None => d.rule,
            Some("gk15") => Rule::GaussKronrod15,
            Some("gk21") => Rule::GaussKronrod21,
            Some(other) => return Err(Error::config("quadrature.rule", format!("expected `gk15` or `gk21`, got `{other}`"))),
        };
        let rel_tol = self.rel_tol.unwrap_or(d.rel_tol);
        // The inner integrals run at rel_tol/10 and must stay above round-off.
        if !(rel_tol > 0.0 && rel_tol < 1.0) || rel_tol / 10.0 < 1e-14 {
            return Err(Error::config("quadrature.rel_tol", "must lie in [1e-13, 1)"));
        }
        let max_depth = match self.max_depth {
            None => d.max_depth,
            Some(v) if (1..=200).contains(&v) => v as u32,
            Some(_) => return Err(Error::config("quadrature.max_depth", "must lie in [1, 200]")),
        };
        let max_intervals = match self.max_intervals {
            None => d.max_intervals,
            Some(v) if v >= 1 => v as usize,
            Some(_) => return Err(Error::config("quadrature.max_intervals", "must be at least 1")),
        };
        Ok(QuadratureSettings {
            rel_tol,
            max_depth,
            max_intervals,
            rule,
        })
    }
}

impl RawFilm {
    fn validate(self, section: &str, base: &Path) -> Result<FilmSpec> {
        let key = |k: &str| format!("{section}.{k}");
        let thickness = match self.thickness {
            None => return Err(Error::config(key("thickness"), "missing")),
            Some(toml::Value::Float(d)) => thickness_nm(d, &key("thickness"))?,
            Some(toml::Value::Integer(d)) => thickness_nm(d as f64, &key("thickness"))?,
            Some(toml::Value::String(s)) if s == "half-space" => ThicknessSpec::HalfSpace,
            Some(toml::Value::String(s)) if s == "match" => ThicknessSpec::Match,
            Some(other) => {
                return Err(Error::config(
                    key("thickness"),
                    format!("expected a number of nm, \"half-space\" or \"match\", got {other}"),
                ))
            }
        };
        let orientation_deg = self.orientation_deg.unwrap_or(0.0);
        if !orientation_deg.is_finite() {
            return Err(Error::config(key("orientation_deg"), "must be finite"));
        }
        let inline = self.xx.is_some() || self.yy.is_some() || self.zz.is_some();
        let tensor = match (self.tensor_file, inline) {
            (Some(_), true) => {
                return Err(Error::config(
                    key("tensor_file"),
                    "give either a tensor file or per-axis oscillators, not both",
                ))
            }
            (Some(p), false) => TensorSpec::File(base.join(p)),
            (None, _) => {
                let xx = self
                    .xx
                    .ok_or_else(|| Error::config(key("xx"), "missing: give [film.xx] oscillators or tensor_file"))?
                    .validate(&key("xx"))?;
                TensorSpec::Inline {
                    xx,
                    yy: self.yy.map(|a| a.validate(&key("yy"))).transpose()?,
                    zz: self.zz.map(|a| a.validate(&key("zz"))).transpose()?,
                }
            }
        };
        // Loads files and checks physical constraints now rather than mid-run.
        tensor.model().map_err(|e| match e {
            e @ Error::Data { .. } => e,
            other => Error::config(key("tensor_file"), other.to_string()),
        })?;
        Ok(FilmSpec {
            thickness,
            orientation_deg,
            tensor,
        })
    }
}

fn thickness_nm(d: f64, key: &str) -> Result<ThicknessSpec> {
    Thickness::finite(d).map_err(|_| Error::config(key, "thickness must be positive"))?;
    Ok(ThicknessSpec::Nm(d))
}

impl RawAxis {
    fn validate(self, key: &str) -> Result<OscillatorSet> {
        let oscillators = self
            .oscillators
            .iter()
            .map(|[s, r, g]| Oscillator::new(*s, *r, *g))
            .collect();
        OscillatorSet::new(oscillators, self.eps_inf.unwrap_or(1.0)).map_err(|e| Error::config(key, e.to_string()))
    }
}

impl From<&OscillatorSet> for RawAxis {
    fn from(set: &OscillatorSet) -> Self {
        RawAxis {
            eps_inf: Some(set.epsilon_infinity()),
            oscillators: set
                .oscillators()
                .iter()
                .map(|o| [o.strength, o.resonance, o.damping])
                .collect(),
        }
    }
}

impl From<&FilmSpec> for RawFilm {
    fn from(f: &FilmSpec) -> Self {
        let thickness = match f.thickness {
            ThicknessSpec::Nm(d) => toml::Value::Float(d),
            ThicknessSpec::HalfSpace => toml::Value::String("half-space".into()),
            ThicknessSpec::Match => toml::Value::String("match".into()),
        };
        let mut raw = RawFilm {
            thickness: Some(thickness),
            orientation_deg: Some(f.orientation_deg),
            tensor_file: None,
            xx: None,
            yy: None,
            zz: None,
        };
        match &f.tensor {
            TensorSpec::Inline { xx, yy, zz } => {
                raw.xx = Some(xx.into());
                raw.yy = yy.as_ref().map(RawAxis::from);
                raw.zz = zz.as_ref().map(RawAxis::from);
            }
            TensorSpec::File(p) => raw.tensor_file = Some(p.to_string_lossy().into_owned()),
        }
        raw
    }
}

impl From<&RunConfig> for RawConfig {
    fn from(c: &RunConfig) -> Self {
        RawConfig {
            mode: Some(
                match c.mode {
                    Mode::Sweep => "sweep",
                    Mode::Ratio => "ratio",
                }
                .into(),
            ),
            output: Some(c.output.clone()),
            baseline: c.baseline.as_ref().map(|p| p.to_string_lossy().into_owned()),
            separation: Some(RawSeparation {
                min_nm: c.separation.min_nm,
                max_nm: c.separation.max_nm,
                points: c.separation.points as i64,
                spacing: Some(
                    match c.separation.spacing {
                        Spacing::Log => "log",
                        Spacing::Linear => "linear",
                    }
                    .into(),
                ),
            }),
            quadrature: Some(RawQuadrature {
                rel_tol: Some(c.quadrature.rel_tol),
                max_depth: Some(c.quadrature.max_depth as i64),
                max_intervals: Some(c.quadrature.max_intervals as i64),
                rule: Some(
                    match c.quadrature.rule {
                        Rule::GaussKronrod15 => "gk15",
                        Rule::GaussKronrod21 => "gk21",
                    }
                    .into(),
                ),
            }),
            film: Some((&c.film).into()),
            film2: c.film2.as_ref().map(RawFilm::from),
        }
    }
}
