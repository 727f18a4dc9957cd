//! Energy and pressure between two silicon-like films over separation.

use casimir_films::lifshitz::{sweep, FilmPair, LifshitzConfig};
use casimir_films::reflection::Thickness;
use casimir_films::samples;

fn main() -> casimir_films::Result<()> {
    let grid: Vec<f64> = (0..=12).map(|i| 10f64.powf(i as f64 / 4.0)).collect();
    let cfg = LifshitzConfig::default();
    for (name, thickness) in [("1.9 nm films", Thickness::Finite(1.9)), ("half-spaces", Thickness::HalfSpace)] {
        let curve = sweep(&FilmPair::identical(samples::bulk_film(thickness)), &grid, &cfg)?;
        println!("{name}");
        println!("{:>10} {:>14} {:>14} {:>12}", "L_nm", "E (J/m^2)", "P (Pa)", "L^4 |P|");
        for p in &curve.points {
            println!(
                "{:>10.3} {:>14.5e} {:>14.5e} {:>12.5e}",
                p.separation_nm,
                p.energy_per_area,
                p.pressure,
                p.pressure.abs() * p.separation_nm.powi(4)
            );
        }
    }
    Ok(())
}
