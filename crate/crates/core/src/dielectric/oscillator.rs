use crate::error::{Error, Result};

/// One Lorentz/Drude term, all parameters in eV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Oscillator {
    /// Plasma strength ωp.
    pub strength: f64,
    /// Resonance energy ω0 (0 for a free-carrier term).
    pub resonance: f64,
    /// Damping γ.
    pub damping: f64,
}

impl Oscillator {
    pub fn new(strength: f64, resonance: f64, damping: f64) -> Self {
        Oscillator {
            strength,
            resonance,
            damping,
        }
    }

    /// Undamped Lorentz term.
    pub fn lorentz(strength: f64, resonance: f64) -> Self {
        Oscillator::new(strength, resonance, 0.0)
    }

    /// Pure plasma term ωp²/ξ².
    pub fn plasma(strength: f64) -> Self {
        Oscillator::new(strength, 0.0, 0.0)
    }

    fn term(&self, xi: f64) -> f64 {
        let denom = self.resonance * self.resonance + xi * xi + self.damping * xi;
        if denom == 0.0 {
            // Free-carrier term at the static point.
            if self.strength == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            self.strength * self.strength / denom
        }
    }
}

/// Sum of oscillator terms on top of a constant background:
/// ε(iξ) = ε∞ + Σ ωp²/(ω0² + ξ² + γξ).
#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorSet {
    oscillators: Vec<Oscillator>,
    epsilon_infinity: f64,
}

impl OscillatorSet {
    pub fn new(oscillators: Vec<Oscillator>, epsilon_infinity: f64) -> Result<Self> {
        if !(epsilon_infinity >= 1.0) || !epsilon_infinity.is_finite() {
            return Err(Error::Validation(format!(
                "epsilon_infinity must be a finite value >= 1, got {epsilon_infinity}"
            )));
        }
        for (i, o) in oscillators.iter().enumerate() {
            let ok = [o.strength, o.resonance, o.damping]
                .iter()
                .all(|v| v.is_finite() && *v >= 0.0);
            if !ok {
                return Err(Error::Validation(format!(
                    "oscillator {i} has a negative or non-finite parameter: {o:?}"
                )));
            }
        }
        Ok(OscillatorSet {
            oscillators,
            epsilon_infinity,
        })
    }

    /// A single oscillator on a unit background.
    pub fn single(oscillator: Oscillator) -> Result<Self> {
        OscillatorSet::new(vec![oscillator], 1.0)
    }

    /// ε ≡ 1.
    pub fn vacuum() -> Self {
        OscillatorSet {
            oscillators: Vec::new(),
            epsilon_infinity: 1.0,
        }
    }

    pub fn oscillators(&self) -> &[Oscillator] {
        &self.oscillators
    }

    pub fn epsilon_infinity(&self) -> f64 {
        self.epsilon_infinity
    }

    /// ε(iξ) for ξ ≥ 0 (eV). Free-carrier terms diverge at ξ = 0.
    pub fn eval(&self, xi: f64) -> Result<f64> {
        if !(xi >= 0.0) {
            return Err(Error::Domain(format!("imaginary frequency must be >= 0, got {xi}")));
        }
        Ok(self.epsilon_infinity + self.oscillators.iter().map(|o| o.term(xi)).sum::<f64>())
    }
}
