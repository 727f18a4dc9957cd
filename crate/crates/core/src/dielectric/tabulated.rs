use crate::error::{Error, Result};

/// Dielectric response sampled on the imaginary frequency axis.
///
/// Between nodes the response is interpolated linearly. Below the first node
/// it is held constant; above the last node it follows 1 + A/ξ² with A chosen
/// so the tail is continuous at the last node.
#[derive(Debug, Clone, PartialEq)]
pub struct ImaginaryAxisResponse {
    xi: Vec<f64>,
    eps: Vec<f64>,
    tail_coefficient: f64,
}

impl ImaginaryAxisResponse {
    pub fn new(samples: Vec<(f64, f64)>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Validation("imaginary-axis response needs at least one node".into()));
        }
        let (xi, eps): (Vec<f64>, Vec<f64>) = samples.into_iter().unzip();
        for (i, (&x, &e)) in xi.iter().zip(&eps).enumerate() {
            if !x.is_finite() || x < 0.0 {
                return Err(Error::Validation(format!("node {i}: xi = {x} must be finite and >= 0")));
            }
            if !e.is_finite() || e < 1.0 {
                return Err(Error::Validation(format!("node {i}: epsilon = {e} must be finite and >= 1")));
            }
        }
        for i in 1..xi.len() {
            if !(xi[i] > xi[i - 1]) {
                return Err(Error::Validation(format!(
                    "node {i}: xi must be strictly increasing ({} after {})",
                    xi[i],
                    xi[i - 1]
                )));
            }
            if eps[i] > eps[i - 1] {
                return Err(Error::Validation(format!(
                    "node {i}: epsilon increases along the imaginary axis ({} after {})",
                    eps[i],
                    eps[i - 1]
                )));
            }
        }
        let last_xi = xi[xi.len() - 1];
        if last_xi <= 0.0 {
            return Err(Error::Validation("last node must lie at xi > 0".into()));
        }
        let tail_coefficient = (eps[eps.len() - 1] - 1.0) * last_xi * last_xi;
        Ok(ImaginaryAxisResponse {
            xi,
            eps,
            tail_coefficient,
        })
    }

    /// Nodes as (ξ, ε) pairs.
    pub fn nodes(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.xi.iter().copied().zip(self.eps.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.xi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xi.is_empty()
    }

    /// Coefficient A of the high-frequency tail, in eV².
    pub fn tail_coefficient(&self) -> f64 {
        self.tail_coefficient
    }

    pub fn eval(&self, xi: f64) -> Result<f64> {
        if !(xi >= 0.0) {
            return Err(Error::Domain(format!("imaginary frequency must be >= 0, got {xi}")));
        }
        let n = self.xi.len();
        if xi <= self.xi[0] {
            return Ok(self.eps[0]);
        }
        if xi >= self.xi[n - 1] {
            if xi == self.xi[n - 1] {
                return Ok(self.eps[n - 1]);
            }
            return Ok(1.0 + self.tail_coefficient / (xi * xi));
        }
        // xi[i] <= xi < xi[i + 1]
        let i = self.xi.partition_point(|&x| x <= xi) - 1;
        let t = (xi - self.xi[i]) / (self.xi[i + 1] - self.xi[i]);
        Ok(self.eps[i] + t * (self.eps[i + 1] - self.eps[i]))
    }
}
