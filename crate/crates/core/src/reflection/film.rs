use std::f64::consts::{FRAC_PI_2, TAU};

use super::{
    slab_reflection_biaxial_at, slab_reflection_isotropic, slab_reflection_uniaxial, Face, ReflectionMatrix,
    Thickness,
};
use crate::dielectric::{DielectricTensorModel, PrincipalValues, Symmetry};
use crate::error::{Error, Result};

/// Reflection algorithm used for a film.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolverPath {
    /// Cheapest algorithm compatible with the tensor symmetry.
    #[default]
    Auto,
    /// Closed-form uniaxial formulas (requires ε_xx = ε_yy).
    Uniaxial,
    /// General 4×4 method, whatever the symmetry.
    Matrix,
}

/// A homogeneous free-standing film in vacuum.
#[derive(Debug, Clone, PartialEq)]
pub struct Film {
    thickness: Thickness,
    tensor: DielectricTensorModel,
    orientation: f64,
    solver: SolverPath,
}

impl Film {
    /// `orientation` is the in-plane rotation (radians) of the film's y axis
    /// relative to the lab y axis; it is reduced to [0, 2π).
    pub fn new(thickness: Thickness, tensor: DielectricTensorModel, orientation: f64) -> Result<Self> {
        if let Thickness::Finite(d) = thickness {
            Thickness::finite(d)?;
        }
        if !orientation.is_finite() {
            return Err(Error::Validation(format!("orientation must be finite, got {orientation}")));
        }
        Ok(Film {
            thickness,
            tensor,
            orientation: orientation.rem_euclid(TAU),
            solver: SolverPath::Auto,
        })
    }

    pub fn with_solver(mut self, solver: SolverPath) -> Result<Self> {
        if solver == SolverPath::Uniaxial && self.tensor.symmetry() == Symmetry::Biaxial {
            return Err(Error::Validation(
                "the uniaxial solver needs equal in-plane components".into(),
            ));
        }
        self.solver = solver;
        Ok(self)
    }

    pub fn thickness(&self) -> Thickness {
        self.thickness
    }

    pub fn tensor(&self) -> &DielectricTensorModel {
        &self.tensor
    }

    pub fn orientation(&self) -> f64 {
        self.orientation
    }

    pub fn solver(&self) -> SolverPath {
        self.solver
    }

    /// True when the reflection matrix is diagonal and independent of the azimuth.
    pub fn is_azimuthally_symmetric(&self) -> bool {
        self.tensor.symmetry() != Symmetry::Biaxial
    }

    /// True when the principal axes coincide with the lab axes (up to a
    /// multiple of π/2), so that the lab x and y axes are mirror planes.
    pub fn is_lab_aligned(&self) -> bool {
        let quarter = self.orientation / FRAC_PI_2;
        (quarter - quarter.round()).abs() < 1e-12
    }

    /// Reflection for incidence on the lower face; `theta_lab` is the
    /// azimuth of the in-plane wavevector in the lab frame.
    pub fn reflection(&self, xi: f64, k: f64, theta_lab: f64) -> Result<ReflectionMatrix> {
        self.reflection_at(Face::Lower, xi, k, theta_lab)
    }

    pub fn reflection_at(&self, face: Face, xi: f64, k: f64, theta_lab: f64) -> Result<ReflectionMatrix> {
        let eps = self.tensor.eval(xi)?;
        self.reflection_with(&eps, face, xi, k, theta_lab)
    }

    /// Reflection with the tensor already evaluated at `xi`.
    ///
    /// The (s, p) basis is tied to the wavevector and the surface normal, so
    /// rotating the film only shifts the azimuth; no basis change is needed.
    pub fn reflection_with(
        &self,
        eps: &PrincipalValues,
        face: Face,
        xi: f64,
        k: f64,
        theta_lab: f64,
    ) -> Result<ReflectionMatrix> {
        let path = match self.solver {
            SolverPath::Auto => match self.tensor.symmetry() {
                Symmetry::Isotropic => None,
                Symmetry::Uniaxial => Some(SolverPath::Uniaxial),
                Symmetry::Biaxial => Some(SolverPath::Matrix),
            },
            forced => Some(forced),
        };
        match path {
            None => {
                let (te, tm) = slab_reflection_isotropic(eps.xx, self.thickness, xi, k)?;
                Ok(ReflectionMatrix::diagonal(te, tm))
            }
            Some(SolverPath::Uniaxial) => {
                let (te, tm) = slab_reflection_uniaxial(eps.xx, eps.zz, self.thickness, xi, k)?;
                Ok(ReflectionMatrix::diagonal(te, tm))
            }
            Some(_) => {
                slab_reflection_biaxial_at(*eps, self.thickness, face, xi, k, theta_lab - self.orientation)
            }
        }
    }
}
