//! Dielectric responses evaluated on the imaginary frequency axis.
//!
//! All frequencies are energies in eV. Every model here is passive: for
//! ξ ≥ 0 the response is real, at least 1, and non-increasing in ξ.

mod london;
mod oscillator;
mod tabulated;
mod tensor;

pub use london::{london_quadrature, london_transform, london_transform_with, AbsorptionSpectrum};
pub use oscillator::{Oscillator, OscillatorSet};
pub use tabulated::ImaginaryAxisResponse;
pub use tensor::{AxisModel, DielectricTensorModel, PrincipalValues, Symmetry};
