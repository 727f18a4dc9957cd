//! Kramers–Kronig ("London") transform of a real-axis absorption spectrum
//! onto the imaginary frequency axis:
//!
//! ε(iξ) = 1 + (2/π) ∫₀^∞ ω ε''(ω) / (ω² + ξ²) dω
//!
//! The spectrum is interpolated linearly between samples and taken as zero
//! outside the sampled range.

use std::f64::consts::FRAC_2_PI;

use super::ImaginaryAxisResponse;
use crate::error::{Error, Result};
use crate::quadrature::{integrate_finite, QuadratureConfig};

/// Absorptive part ε''(ω) of a dielectric function on the real axis.
#[derive(Debug, Clone, PartialEq)]
pub struct AbsorptionSpectrum {
    omega: Vec<f64>,
    eps2: Vec<f64>,
}

impl AbsorptionSpectrum {
    /// Samples as (ω in eV, ε''). A sample at ω = 0 is accepted only with ε'' = 0.
    pub fn new(samples: Vec<(f64, f64)>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::Validation("absorption spectrum needs at least 2 samples".into()));
        }
        let (omega, eps2): (Vec<f64>, Vec<f64>) = samples.into_iter().unzip();
        for (i, (&w, &e)) in omega.iter().zip(&eps2).enumerate() {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::Validation(format!("sample {i}: omega = {w} must be finite and >= 0")));
            }
            if !e.is_finite() || e < 0.0 {
                return Err(Error::Validation(format!(
                    "sample {i}: eps2 = {e} violates passivity (must be >= 0)"
                )));
            }
            if w == 0.0 && e != 0.0 {
                return Err(Error::Validation(
                    "absorption at omega = 0 makes the static transform diverge".into(),
                ));
            }
            if i > 0 && !(w > omega[i - 1]) {
                return Err(Error::Validation(format!(
                    "sample {i}: omega must be strictly increasing ({w} after {})",
                    omega[i - 1]
                )));
            }
        }
        Ok(AbsorptionSpectrum { omega, eps2 })
    }

    pub fn samples(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.omega.iter().copied().zip(self.eps2.iter().copied())
    }
}

/// Default accuracy of the transform integrals.
pub fn london_quadrature() -> QuadratureConfig {
    QuadratureConfig::default().with_rel_tol(1e-10)
}

/// Transform onto the given imaginary-frequency grid with the default accuracy.
pub fn london_transform(spectrum: &AbsorptionSpectrum, xi_grid: &[f64]) -> Result<ImaginaryAxisResponse> {
    london_transform_with(spectrum, xi_grid, &london_quadrature())
}

pub fn london_transform_with(
    spectrum: &AbsorptionSpectrum,
    xi_grid: &[f64],
    config: &QuadratureConfig,
) -> Result<ImaginaryAxisResponse> {
    if xi_grid.is_empty() {
        return Err(Error::Validation("imaginary-frequency grid is empty".into()));
    }
    let mut nodes = Vec::with_capacity(xi_grid.len());
    let mut previous = f64::INFINITY;
    for &xi in xi_grid {
        if !(xi >= 0.0) {
            return Err(Error::Validation(format!("grid point xi = {xi} must be >= 0")));
        }
        // Quadrature noise must not break monotonicity along the grid.
        let eps = london_point(spectrum, xi, config)?.min(previous);
        previous = eps;
        nodes.push((xi, eps));
    }
    ImaginaryAxisResponse::new(nodes)
}

fn london_point(spectrum: &AbsorptionSpectrum, xi: f64, config: &QuadratureConfig) -> Result<f64> {
    let xi2 = xi * xi;
    let mut total = 0.0;
    for i in 0..spectrum.omega.len() - 1 {
        let (w0, w1) = (spectrum.omega[i], spectrum.omega[i + 1]);
        let (e0, e1) = (spectrum.eps2[i], spectrum.eps2[i + 1]);
        if e0 == 0.0 && e1 == 0.0 {
            continue;
        }
        let slope = (e1 - e0) / (w1 - w0);
        let panel = integrate_finite(
            |w| {
                let eps2 = e0 + slope * (w - w0);
                w * eps2 / (w * w + xi2)
            },
            w0,
            w1,
            config,
        )?;
        total += panel.value;
    }
    Ok(1.0 + FRAC_2_PI * total)
}
