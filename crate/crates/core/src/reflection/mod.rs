//! Reflection of a free-standing film at imaginary frequency.
//!
//! Frequencies ξ and transverse wavenumbers k are both given in energy units
//! (ħξ and ħc·k, in eV); thicknesses are in nm. At imaginary frequency with
//! real ε ≥ 1 every wavevector component is real, so all reflection
//! amplitudes are real as well.
//!
//! Polarization amplitudes use the tangential fields: the s (TE) amplitude
//! is the electric field normal to the plane of incidence, the p (TM)
//! amplitude the magnetic field normal to it. With that choice
//! r_TE = (κ − κ_m)/(κ + κ_m) ≤ 0 and r_TM = (εκ − κ_m)/(εκ + κ_m) ≥ 0
//! for a half-space.

mod anisotropic;
mod film;
mod slab;

pub use anisotropic::{slab_reflection_biaxial, slab_reflection_biaxial_at};
pub use film::{Film, SolverPath};
pub use slab::{slab_reflection_isotropic, slab_reflection_uniaxial};

use crate::error::{Error, Result};
use crate::units::HBAR_C_EV_NM;

/// Film thickness along the surface normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Thickness {
    /// Finite thickness in nm.
    Finite(f64),
    HalfSpace,
}

impl Thickness {
    pub fn finite(nm: f64) -> Result<Self> {
        if nm.is_finite() && nm > 0.0 {
            Ok(Thickness::Finite(nm))
        } else {
            Err(Error::Validation(format!("thickness must be positive, got {nm}")))
        }
    }

    /// Round-trip attenuation e^{−2κd} for a decay constant κ given in eV.
    pub(crate) fn round_trip(self, kappa_ev: f64) -> f64 {
        match self {
            Thickness::Finite(d) => (-2.0 * kappa_ev * d / HBAR_C_EV_NM).exp(),
            Thickness::HalfSpace => 0.0,
        }
    }
}

/// Which face of the film the incident field arrives at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Face {
    /// Incidence from the vacuum below the film (z < 0).
    Lower,
    /// Incidence from the vacuum above the film.
    Upper,
}

/// 2×2 reflection matrix in the (s, p) basis: reflected = R · incident.
///
/// `sp` is the s amplitude produced by a unit p-polarized incident field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionMatrix {
    pub ss: f64,
    pub sp: f64,
    pub ps: f64,
    pub pp: f64,
}

impl ReflectionMatrix {
    pub const ZERO: ReflectionMatrix = ReflectionMatrix::diagonal(0.0, 0.0);

    /// Unit reflectivity in both channels.
    pub const IDENTITY: ReflectionMatrix = ReflectionMatrix::diagonal(1.0, 1.0);

    pub const fn diagonal(ss: f64, pp: f64) -> Self {
        ReflectionMatrix { ss, sp: 0.0, ps: 0.0, pp }
    }

    pub fn trace(&self) -> f64 {
        self.ss + self.pp
    }

    pub fn determinant(&self) -> f64 {
        self.ss * self.pp - self.sp * self.ps
    }

    pub fn is_diagonal(&self) -> bool {
        self.sp == 0.0 && self.ps == 0.0
    }

    pub fn scale(&self, factor: f64) -> Self {
        ReflectionMatrix {
            ss: self.ss * factor,
            sp: self.sp * factor,
            ps: self.ps * factor,
            pp: self.pp * factor,
        }
    }

    /// Matrix product self · rhs.
    pub fn mul(&self, rhs: &ReflectionMatrix) -> Self {
        ReflectionMatrix {
            ss: self.ss * rhs.ss + self.sp * rhs.ps,
            sp: self.ss * rhs.sp + self.sp * rhs.pp,
            ps: self.ps * rhs.ss + self.pp * rhs.ps,
            pp: self.ps * rhs.sp + self.pp * rhs.pp,
        }
    }

    /// Conjugation by diag(1, −1): flips the sign of the p basis vector.
    pub fn flip_p(&self) -> Self {
        ReflectionMatrix {
            ss: self.ss,
            sp: -self.sp,
            ps: -self.ps,
            pp: self.pp,
        }
    }

    pub fn max_abs_diff(&self, other: &ReflectionMatrix) -> f64 {
        [
            self.ss - other.ss,
            self.sp - other.sp,
            self.ps - other.ps,
            self.pp - other.pp,
        ]
        .iter()
        .fold(0.0, |m, d| m.max(d.abs()))
    }

    pub fn spectral_radius(&self) -> f64 {
        let half_tr = 0.5 * self.trace();
        let det = self.determinant();
        let disc = half_tr * half_tr - det;
        if disc >= 0.0 {
            let root = disc.sqrt();
            (half_tr + root).abs().max((half_tr - root).abs())
        } else {
            // Complex pair of modulus √det.
            det.sqrt()
        }
    }
}

pub(crate) fn check_point(xi: f64, k: f64) -> Result<()> {
    if !(xi >= 0.0) || !(k >= 0.0) || !xi.is_finite() || !k.is_finite() {
        return Err(Error::Domain(format!("need finite xi >= 0 and k >= 0, got xi={xi}, k={k}")));
    }
    if xi == 0.0 && k == 0.0 {
        return Err(Error::Domain("xi = k = 0: vacuum decay constant vanishes".into()));
    }
    Ok(())
}

pub(crate) fn check_eps(values: &[f64]) -> Result<()> {
    match values.iter().find(|e| !(**e >= 1.0)) {
        Some(e) => Err(Error::Domain(format!("dielectric value {e} below 1"))),
        None => Ok(()),
    }
}

pub(crate) fn root(arg: f64) -> f64 {
    debug_assert!(arg >= 0.0, "negative square-root argument {arg}");
    arg.sqrt()
}
