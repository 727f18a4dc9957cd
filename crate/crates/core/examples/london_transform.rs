//! Imaginary-axis response from an absorption spectrum.
//!
//! A Lorentzian absorption line sampled on a fine grid is transformed and
//! compared with the oscillator model it came from.

use casimir_films::dielectric::{london_transform, AbsorptionSpectrum, Oscillator, OscillatorSet};

fn main() -> casimir_films::Result<()> {
    let (wp, w0, gamma) = (11.1f64, 3.4f64, 0.2f64);
    // ε''(ω) of a damped oscillator
    let eps2 = |w: f64| wp * wp * gamma * w / ((w0 * w0 - w * w).powi(2) + (gamma * w).powi(2));
    let samples: Vec<_> = (0..=40_000).map(|i| {
        let w = i as f64 * 0.005;
        (w, eps2(w))
    }).collect();
    let spectrum = AbsorptionSpectrum::new(samples)?;

    let grid = [0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0];
    let transformed = london_transform(&spectrum, &grid)?;
    let exact = OscillatorSet::single(Oscillator::new(wp, w0, gamma))?;

    println!("{:>6} {:>12} {:>12} {:>10}", "xi_eV", "transform", "oscillator", "rel_diff");
    for (xi, eps) in transformed.nodes() {
        let e = exact.eval(xi)?;
        println!("{xi:>6} {eps:>12.6} {e:>12.6} {:>10.2e}", (eps - e) / e);
    }
    println!("tail coefficient A in 1 + A/xi^2 beyond the grid: {:.3}", transformed.tail_coefficient());
    Ok(())
}
