//! Imaginary-axis dielectric functions from oscillator models.
//!
//! Run with `cargo run --example oscillator_models`.

use casimir_films::dielectric::{DielectricTensorModel, Oscillator, OscillatorSet};
use casimir_films::samples;

fn main() -> casimir_films::Result<()> {
    let si = OscillatorSet::single(Oscillator::lorentz(11.1, 3.4))?;
    let drude_lorentz = OscillatorSet::new(
        vec![Oscillator::plasma(9.0), Oscillator::new(4.0, 2.5, 0.3)],
        1.2,
    )?;
    let uniaxial = DielectricTensorModel::uniaxial(
        OscillatorSet::single(Oscillator::lorentz(11.1, 3.4))?,
        OscillatorSet::single(Oscillator::lorentz(10.6, 3.4))?,
    );

    println!("{:>8} {:>12} {:>14} {:>24}", "xi_eV", "Si-like", "Drude+Lorentz", "uniaxial (par, perp)");
    for xi in [0.0, 0.01, 0.1, 1.0, 3.4, 10.0, 100.0] {
        let d = drude_lorentz.eval(xi)?;
        let u = uniaxial.eval(xi)?;
        println!("{xi:>8} {:>12.6} {:>14.6e} {:>11.6}, {:>10.6}", si.eval(xi)?, d, u.xx, u.zz);
    }

    println!("\nsynthetic film tensors at xi = 0.2 eV (xx, yy, zz):");
    for (name, tensor) in [
        ("bulk", samples::bulk_tensor()),
        ("passivated-like", samples::passivated_tensor()),
        ("reconstructed-like", samples::reconstructed_tensor()),
    ] {
        let e = tensor.eval(0.2)?;
        println!("{name:>20}: {:?} {:.4} {:.4} {:.4}", tensor.symmetry(), e.xx, e.yy, e.zz);
    }
    Ok(())
}
