//! Casimir energy and pressure between planar dielectric films at zero
//! temperature, from Lifshitz theory in scattering form.
//!
//! Dielectric responses are given at imaginary frequency ([`dielectric`]),
//! turned into 2×2 reflection matrices for isotropic, uniaxial or biaxial
//! films ([`reflection`]) and integrated over frequency, wavevector and
//! azimuth ([`lifshitz`]) with the adaptive rules in [`quadrature`].
//! [`workbench`] drives configuration-file sweeps.
//!
//! Units: energies (ħξ, ħc·k) in eV, lengths in nm, energies per area in
//! J/m² and pressures in Pa.

// `!(x > 0.0)` style checks are deliberate: NaN must fail validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dielectric;
pub mod error;
pub mod lifshitz;
pub mod quadrature;
pub mod reflection;
pub mod samples;
pub mod units;
pub mod workbench;

pub use error::{Error, Result};
