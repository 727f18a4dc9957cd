//! Fixed physical constants and unit conversions.
//!
//! Internally energies (including imaginary frequencies ħξ and transverse
//! wavenumbers ħc·k) are carried in eV and lengths in nm.

/// ħc in eV·nm.
pub const HBAR_C_EV_NM: f64 = 197.326_980_4;

/// 1 eV/nm² expressed in J/m².
pub const EV_PER_NM2_TO_J_PER_M2: f64 = 0.160_217_663_4;

/// 1 eV/nm³ expressed in Pa.
pub const EV_PER_NM3_TO_PA: f64 = 1.602_176_634e8;

/// Ideal-mirror Casimir energy per area, −π²ħc/720L³, in J/m².
pub fn ideal_energy_per_area(separation_nm: f64) -> f64 {
    let pi2 = std::f64::consts::PI.powi(2);
    -pi2 * HBAR_C_EV_NM / (720.0 * separation_nm.powi(3)) * EV_PER_NM2_TO_J_PER_M2
}

/// Ideal-mirror Casimir pressure, −π²ħc/240L⁴, in Pa.
pub fn ideal_pressure(separation_nm: f64) -> f64 {
    let pi2 = std::f64::consts::PI.powi(2);
    -pi2 * HBAR_C_EV_NM / (240.0 * separation_nm.powi(4)) * EV_PER_NM3_TO_PA
}
