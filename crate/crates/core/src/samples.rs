//! Hand-made synthetic dielectric tensors for silicon-like films.
//!
//! These are not fits to any measured or computed data. They only have the
//! qualitative shape of thin Si(111) films relative to bulk: a hydrogen
//! terminated film slightly below the bulk response, and a reconstructed
//! film above it with extra low-energy transitions polarized mostly along
//! the surface chains (the y axis).

use crate::dielectric::{DielectricTensorModel, Oscillator, OscillatorSet};
use crate::reflection::{Film, Thickness};

/// Thickness of the terminated film, nm.
pub const PASSIVATED_THICKNESS: f64 = 1.9;
/// Thickness of the reconstructed film, nm.
pub const RECONSTRUCTED_THICKNESS: f64 = 1.7;

/// Single-oscillator silicon-like response, static value 1 + (11.1/3.4)².
pub fn bulk_oscillators() -> OscillatorSet {
    OscillatorSet::single(Oscillator::lorentz(11.1, 3.4)).expect("valid constants")
}

pub fn bulk_tensor() -> DielectricTensorModel {
    DielectricTensorModel::isotropic(bulk_oscillators())
}

/// Uniaxial, pointwise below bulk on every axis; the gap is pushed up by confinement.
pub fn passivated_tensor() -> DielectricTensorModel {
    let lateral = OscillatorSet::single(Oscillator::lorentz(11.0, 3.6)).expect("valid constants");
    let normal = OscillatorSet::single(Oscillator::lorentz(10.8, 3.75)).expect("valid constants");
    DielectricTensorModel::uniaxial(lateral, normal)
}

fn with_surface_band(strength: f64) -> OscillatorSet {
    OscillatorSet::new(
        vec![
            Oscillator::lorentz(11.1, 3.4),
            Oscillator::new(strength, 0.48, 0.1),
        ],
        1.0,
    )
    .expect("valid constants")
}

/// Biaxial, pointwise above bulk; yy carries the strongest surface-state band.
pub fn reconstructed_tensor() -> DielectricTensorModel {
    DielectricTensorModel::biaxial(with_surface_band(1.0), with_surface_band(1.8), with_surface_band(0.6))
}

pub fn bulk_film(thickness: Thickness) -> Film {
    Film::new(thickness, bulk_tensor(), 0.0).expect("valid constants")
}

pub fn passivated_film() -> Film {
    Film::new(Thickness::Finite(PASSIVATED_THICKNESS), passivated_tensor(), 0.0).expect("valid constants")
}

pub fn reconstructed_film() -> Film {
    Film::new(Thickness::Finite(RECONSTRUCTED_THICKNESS), reconstructed_tensor(), 0.0).expect("valid constants")
}
