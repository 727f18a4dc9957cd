//! Perfect mirrors through the full integration chain against the closed forms.

use std::time::Instant;

use casimir_films::lifshitz::{energy_between, pressure_between, IdealMirror, LifshitzConfig};
use casimir_films::units::{ideal_energy_per_area, ideal_pressure};

fn main() -> casimir_films::Result<()> {
    let cfg = LifshitzConfig::default();
    for l in [10.0, 100.0, 1000.0] {
        let t = Instant::now();
        let e = energy_between(&IdealMirror, &IdealMirror, l, &cfg)?;
        let p = pressure_between(&IdealMirror, &IdealMirror, l, &cfg)?;
        println!(
            "L = {l:>6} nm  P = {:.6e} Pa (rel dev {:.1e})  E = {:.6e} J/m^2 (rel dev {:.1e})  {:.1?}",
            p.value,
            p.value / ideal_pressure(l) - 1.0,
            e.value,
            e.value / ideal_energy_per_area(l) - 1.0,
            t.elapsed()
        );
    }
    Ok(())
}
