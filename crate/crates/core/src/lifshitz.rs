//! Zero-temperature Lifshitz energy and pressure between two films.
//!
//! In scattering form the energy per area is
//!
//! ```text
//! E(L) = (1/8π³) ∫₀^∞ dξ ∫₀^{2π} dθ ∫₀^∞ k dk  ln det[I − R₁R₂ e^{−2κL}]
//! P(L) = −(1/4π³) ∫₀^∞ dξ ∫₀^{2π} dθ ∫₀^∞ k dk  κ Tr[R₁R₂e^{−2κL} (I − R₁R₂e^{−2κL})⁻¹]
//! ```
//!
//! with κ² = k² + ξ²/c². The integrals are evaluated in the dimensionless
//! variables u = 2ξL/c and y = 2κL ≥ u, so the integrand always decays like
//! e^{−y} whatever the separation. R₁ is the reflection of the lower film
//! seen from the gap (its upper face), R₂ that of the upper film seen from
//! below.

use std::cell::Cell;
use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;

use crate::dielectric::PrincipalValues;
use crate::error::{Error, Result};
use crate::quadrature::{try_integrate_finite, try_integrate_semi_infinite, Estimate, QuadratureConfig};
use crate::reflection::{Face, Film, ReflectionMatrix};
use crate::units::{EV_PER_NM2_TO_J_PER_M2, EV_PER_NM3_TO_PA, HBAR_C_EV_NM};

/// How a reflector depends on the azimuth of the in-plane wavevector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AzimuthalSymmetry {
    /// Diagonal and independent of the azimuth.
    Full,
    /// Lab x and y axes are mirror planes.
    LabMirror,
    /// Only inversion symmetry θ → θ + π.
    Inversion,
}

/// Anything that reflects at imaginary frequency.
pub trait Reflector: Sync {
    /// Frequency-dependent state computed once per ξ (e.g. the dielectric tensor).
    type Frozen;

    fn freeze(&self, xi: f64) -> Result<Self::Frozen>;

    fn reflection(&self, frozen: &Self::Frozen, face: Face, xi: f64, k: f64, theta: f64)
        -> Result<ReflectionMatrix>;

    fn azimuthal_symmetry(&self) -> AzimuthalSymmetry;
}

impl Reflector for Film {
    type Frozen = PrincipalValues;

    fn freeze(&self, xi: f64) -> Result<PrincipalValues> {
        self.tensor().eval(xi)
    }

    fn reflection(&self, eps: &PrincipalValues, face: Face, xi: f64, k: f64, theta: f64) -> Result<ReflectionMatrix> {
        self.reflection_with(eps, face, xi, k, theta)
    }

    fn azimuthal_symmetry(&self) -> AzimuthalSymmetry {
        if self.is_azimuthally_symmetric() {
            AzimuthalSymmetry::Full
        } else if self.is_lab_aligned() {
            AzimuthalSymmetry::LabMirror
        } else {
            AzimuthalSymmetry::Inversion
        }
    }
}

/// Perfect reflector with unit reflectivity in both polarizations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IdealMirror;

impl Reflector for IdealMirror {
    type Frozen = ();

    fn freeze(&self, _xi: f64) -> Result<()> {
        Ok(())
    }

    fn reflection(&self, _: &(), _: Face, _: f64, _: f64, _: f64) -> Result<ReflectionMatrix> {
        Ok(ReflectionMatrix::IDENTITY)
    }

    fn azimuthal_symmetry(&self) -> AzimuthalSymmetry {
        AzimuthalSymmetry::Full
    }
}

/// Accuracy settings for the nested integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LifshitzConfig {
    /// Frequency integral.
    pub outer: QuadratureConfig,
    /// Azimuthal integral; the wavenumber integral runs one decade tighter.
    pub inner: QuadratureConfig,
}

impl Default for LifshitzConfig {
    fn default() -> Self {
        let base = QuadratureConfig::default();
        LifshitzConfig {
            outer: base.with_rel_tol(1e-7),
            inner: base.with_rel_tol(1e-8),
        }
    }
}

impl LifshitzConfig {
    /// Outer tolerance `rel_tol`, inner one decade tighter.
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        let d = LifshitzConfig::default();
        LifshitzConfig {
            outer: d.outer.with_rel_tol(rel_tol),
            inner: d.inner.with_rel_tol(rel_tol / 10.0),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.outer.validate()?;
        self.inner.validate()?;
        if self.inner.rel_tol >= self.outer.rel_tol {
            return Err(Error::Validation(
                "inner quadrature tolerance must be tighter than the outer one".into(),
            ));
        }
        Ok(())
    }
}

/// Two films facing each other across a vacuum gap.
#[derive(Debug, Clone, PartialEq)]
pub struct GapScenario {
    pub lower: Film,
    pub upper: Film,
    separation: f64,
}

impl GapScenario {
    pub fn new(lower: Film, upper: Film, separation_nm: f64) -> Result<Self> {
        check_separation(separation_nm)?;
        Ok(GapScenario {
            lower,
            upper,
            separation: separation_nm,
        })
    }

    pub fn identical(film: Film, separation_nm: f64) -> Result<Self> {
        GapScenario::new(film.clone(), film, separation_nm)
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }
}

/// The films of a scenario without a separation: a family over an L grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FilmPair {
    pub lower: Film,
    pub upper: Film,
}

impl FilmPair {
    pub fn identical(film: Film) -> Self {
        FilmPair {
            lower: film.clone(),
            upper: film,
        }
    }

    pub fn at(&self, separation_nm: f64) -> Result<GapScenario> {
        GapScenario::new(self.lower.clone(), self.upper.clone(), separation_nm)
    }
}

/// A physical value with its relative error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    pub value: f64,
    pub rel_err: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForcePoint {
    pub separation_nm: f64,
    /// J/m², negative for attraction.
    pub energy_per_area: f64,
    /// Pa, negative for attraction.
    pub pressure: f64,
    /// Largest relative error estimate of the two integrals.
    pub rel_err: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ForceCurve {
    pub points: Vec<ForcePoint>,
    /// P_numerator / P_baseline per point, when computed against a baseline.
    pub ratios: Option<Vec<f64>>,
}

fn check_separation(separation_nm: f64) -> Result<()> {
    if separation_nm.is_finite() && separation_nm > 0.0 {
        Ok(())
    } else {
        Err(Error::Validation(format!("separation must be positive, got {separation_nm}")))
    }
}

fn round_trip(r1: &ReflectionMatrix, r2: &ReflectionMatrix, attenuation: f64) -> ReflectionMatrix {
    r1.mul(r2).scale(attenuation)
}

fn logdet_of(m: &ReflectionMatrix) -> Result<f64> {
    if m.is_diagonal() {
        let (a, b) = (1.0 - m.ss, 1.0 - m.pp);
        if a <= 0.0 || b <= 0.0 {
            return Err(passivity_violation(m));
        }
        return Ok((-m.ss).ln_1p() + (-m.pp).ln_1p());
    }
    // det(I − M) = 1 − tr M + det M
    let x = m.determinant() - m.trace();
    if x <= -1.0 {
        return Err(passivity_violation(m));
    }
    Ok(x.ln_1p())
}

fn trace_kernel_of(m: &ReflectionMatrix) -> Result<f64> {
    let x = m.determinant() - m.trace();
    if x <= -1.0 {
        return Err(passivity_violation(m));
    }
    Ok((m.trace() - 2.0 * m.determinant()) / (1.0 + x))
}

fn passivity_violation(m: &ReflectionMatrix) -> Error {
    Error::Numerical(format!(
        "det(I - R1 R2 exp(-2 kappa L)) <= 0 for round-trip matrix {m:?}: reflection passivity violated upstream"
    ))
}

/// ln det[I − R₁R₂e^{−2κL}] for κ in nm⁻¹ and L in nm.
pub fn integrand_logdet(r1: &ReflectionMatrix, r2: &ReflectionMatrix, kappa: f64, separation: f64) -> Result<f64> {
    if !(kappa > 0.0) || !(separation > 0.0) {
        return Err(Error::Domain(format!("need kappa > 0 and L > 0, got {kappa}, {separation}")));
    }
    logdet_of(&round_trip(r1, r2, (-2.0 * kappa * separation).exp()))
}

/// Tr[M(I − M)⁻¹] with M = R₁R₂e^{−2κL}.
pub fn integrand_trace(r1: &ReflectionMatrix, r2: &ReflectionMatrix, kappa: f64, separation: f64) -> Result<f64> {
    if !(kappa > 0.0) || !(separation > 0.0) {
        return Err(Error::Domain(format!("need kappa > 0 and L > 0, got {kappa}, {separation}")));
    }
    trace_kernel_of(&round_trip(r1, r2, (-2.0 * kappa * separation).exp()))
}

#[derive(Clone, Copy)]
enum Kernel {
    Energy,
    Pressure,
}

struct Integration<'a, A: Reflector, B: Reflector> {
    lower: &'a A,
    upper: &'a B,
    separation: f64,
    config: LifshitzConfig,
    kernel: Kernel,
    worst_inner: Cell<f64>,
}

impl<A: Reflector, B: Reflector> Integration<'_, A, B> {
    fn energy_scale(&self) -> f64 {
        HBAR_C_EV_NM / (2.0 * self.separation)
    }

    fn note_inner(&self, estimate: &Estimate) {
        let rel = estimate.relative_error();
        if rel > self.worst_inner.get() {
            self.worst_inner.set(rel);
        }
    }

    // Falls back to the best estimate when an inner integral runs out of
    // budget; the achieved error is carried into the final report.
    fn soften(&self, result: Result<Estimate>) -> Result<Estimate> {
        match result {
            Ok(e) => {
                self.note_inner(&e);
                Ok(e)
            }
            Err(Error::NonConvergence { value, error }) => {
                let e = Estimate { value, error };
                self.note_inner(&e);
                Ok(e)
            }
            Err(other) => Err(other),
        }
    }

    /// ∫ dw of the kernel at fixed (u, θ), y = u + w.
    fn radial(&self, u: f64, theta: f64, xi: f64, f1: &A::Frozen, f2: &B::Frozen, cfg: &QuadratureConfig) -> Result<Estimate> {
        let scale = self.energy_scale();
        let kernel = self.kernel;
        let result = try_integrate_semi_infinite(
            |w| {
                let y = u + w;
                let k = scale * (w * (w + 2.0 * u)).sqrt();
                let attenuation = (-y).exp();
                if attenuation == 0.0 {
                    return Ok(0.0);
                }
                let r1 = self.lower.reflection(f1, Face::Upper, xi, k, theta)?;
                let r2 = self.upper.reflection(f2, Face::Lower, xi, k, theta)?;
                let m = round_trip(&r1, &r2, attenuation);
                Ok(match kernel {
                    Kernel::Energy => y * logdet_of(&m)?,
                    Kernel::Pressure => y * y * trace_kernel_of(&m)?,
                })
            },
            0.0,
            cfg,
        );
        self.soften(result)
    }

    /// Azimuthal integral (including its symmetry factor) at fixed u.
    fn angular(&self, u: f64) -> Result<f64> {
        let xi = self.energy_scale() * u;
        let f1 = self.lower.freeze(xi)?;
        let f2 = self.upper.freeze(xi)?;
        let radial_cfg = self.config.inner.with_rel_tol(self.config.inner.rel_tol / 10.0);
        let symmetry = self
            .lower
            .azimuthal_symmetry()
            .max(self.upper.azimuthal_symmetry());
        let (span, factor) = match symmetry {
            AzimuthalSymmetry::Full => {
                return Ok(2.0 * PI * self.radial(u, 0.0, xi, &f1, &f2, &self.config.inner)?.value);
            }
            AzimuthalSymmetry::LabMirror => (FRAC_PI_2, 4.0),
            AzimuthalSymmetry::Inversion => (PI, 2.0),
        };
        let result = try_integrate_finite(
            |theta| Ok(self.radial(u, theta, xi, &f1, &f2, &radial_cfg)?.value),
            0.0,
            span,
            &self.config.inner,
        );
        Ok(factor * self.soften(result)?.value)
    }

    /// Returns the dimensionless triple integral and its relative error.
    fn run(&self) -> Result<(f64, f64)> {
        self.config.validate()?;
        check_separation(self.separation)?;
        // Leave room for the inner error inside the requested outer tolerance.
        let outer = self
            .config
            .outer
            .with_rel_tol(self.config.outer.rel_tol - self.config.inner.rel_tol);
        let result = try_integrate_semi_infinite(|u| self.angular(u), 0.0, &outer);
        let (estimate, converged) = match result {
            Ok(e) => (e, true),
            Err(Error::NonConvergence { value, error }) => (Estimate { value, error }, false),
            Err(e) => return Err(e),
        };
        let rel_err = estimate.relative_error() + self.worst_inner.get();
        if !converged || rel_err > self.config.outer.rel_tol {
            return Err(Error::NonConvergence {
                value: estimate.value,
                error: rel_err * estimate.value.abs(),
            });
        }
        Ok((estimate.value, rel_err))
    }
}

fn integrate<A: Reflector, B: Reflector>(
    lower: &A,
    upper: &B,
    separation: f64,
    config: &LifshitzConfig,
    kernel: Kernel,
) -> Result<Quantity> {
    let job = Integration {
        lower,
        upper,
        separation,
        config: *config,
        kernel,
        worst_inner: Cell::new(0.0),
    };
    let l = separation;
    let prefactor = match kernel {
        Kernel::Energy => HBAR_C_EV_NM / (64.0 * PI.powi(3) * l.powi(3)) * EV_PER_NM2_TO_J_PER_M2,
        Kernel::Pressure => -HBAR_C_EV_NM / (64.0 * PI.powi(3) * l.powi(4)) * EV_PER_NM3_TO_PA,
    };
    match job.run() {
        Ok((value, rel_err)) => Ok(Quantity {
            value: prefactor * value,
            rel_err,
        }),
        Err(Error::NonConvergence { value, error }) => Err(Error::NonConvergence {
            value: prefactor * value,
            error: prefactor.abs() * error,
        }),
        Err(e) => Err(e),
    }
}

/// Energy per area (J/m²) between two arbitrary reflectors at separation L (nm).
pub fn energy_between<A: Reflector, B: Reflector>(
    lower: &A,
    upper: &B,
    separation_nm: f64,
    config: &LifshitzConfig,
) -> Result<Quantity> {
    integrate(lower, upper, separation_nm, config, Kernel::Energy)
}

/// Pressure (Pa, negative = attractive) between two arbitrary reflectors.
pub fn pressure_between<A: Reflector, B: Reflector>(
    lower: &A,
    upper: &B,
    separation_nm: f64,
    config: &LifshitzConfig,
) -> Result<Quantity> {
    integrate(lower, upper, separation_nm, config, Kernel::Pressure)
}

pub fn energy_per_area(scenario: &GapScenario, config: &LifshitzConfig) -> Result<Quantity> {
    energy_between(&scenario.lower, &scenario.upper, scenario.separation, config)
}

pub fn pressure(scenario: &GapScenario, config: &LifshitzConfig) -> Result<Quantity> {
    pressure_between(&scenario.lower, &scenario.upper, scenario.separation, config)
}

/// Energy and pressure at one separation.
pub fn force_point(scenario: &GapScenario, config: &LifshitzConfig) -> Result<ForcePoint> {
    force_point_between(&scenario.lower, &scenario.upper, scenario.separation, config)
}

pub fn force_point_between<A: Reflector, B: Reflector>(
    lower: &A,
    upper: &B,
    separation_nm: f64,
    config: &LifshitzConfig,
) -> Result<ForcePoint> {
    let energy = energy_between(lower, upper, separation_nm, config)?;
    let pressure = pressure_between(lower, upper, separation_nm, config)?;
    Ok(ForcePoint {
        separation_nm,
        energy_per_area: energy.value,
        pressure: pressure.value,
        rel_err: energy.rel_err.max(pressure.rel_err),
    })
}

/// Evaluates every grid point; grid points run in parallel, results keep grid order.
pub fn sweep_points<A: Reflector, B: Reflector>(
    lower: &A,
    upper: &B,
    grid: &[f64],
    config: &LifshitzConfig,
) -> Vec<Result<ForcePoint>> {
    grid.par_iter()
        .map(|&l| force_point_between(lower, upper, l, config))
        .collect()
}

pub fn sweep(pair: &FilmPair, grid: &[f64], config: &LifshitzConfig) -> Result<ForceCurve> {
    check_grid(grid)?;
    let points = sweep_points(&pair.lower, &pair.upper, grid, config)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(ForceCurve { points, ratios: None })
}

pub(crate) fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Validation("separation grid is empty".into()));
    }
    for &l in grid {
        check_separation(l)?;
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Validation("separation grid must be strictly increasing".into()));
    }
    Ok(())
}

/// Smallest |P| (Pa) accepted as a ratio denominator.
pub const PRESSURE_FLOOR: f64 = 1e-30;

/// P_numerator(L)/P_baseline(L).
pub fn pressure_ratio(numerator: &ForcePoint, baseline: &ForcePoint) -> Result<f64> {
    if baseline.pressure.abs() < PRESSURE_FLOOR {
        return Err(Error::Numerical(format!(
            "baseline pressure {:e} Pa at L = {} nm is below the numerical floor",
            baseline.pressure, baseline.separation_nm
        )));
    }
    Ok(numerator.pressure / baseline.pressure)
}

/// Force curve of `numerator` with ratios against `baseline` on the same grid.
pub fn force_ratio_curve(
    numerator: &FilmPair,
    baseline: &FilmPair,
    grid: &[f64],
    config: &LifshitzConfig,
) -> Result<ForceCurve> {
    let num = sweep(numerator, grid, config)?;
    let base = sweep(baseline, grid, config)?;
    let ratios = num
        .points
        .iter()
        .zip(&base.points)
        .map(|(n, b)| pressure_ratio(n, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(ForceCurve {
        points: num.points,
        ratios: Some(ratios),
    })
}
