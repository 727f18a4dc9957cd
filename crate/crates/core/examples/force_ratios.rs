//! Force ratios of the synthetic thin-film tensors against bulk films of equal thickness.

use casimir_films::lifshitz::{force_ratio_curve, FilmPair, LifshitzConfig};
use casimir_films::samples;

fn main() -> casimir_films::Result<()> {
    let grid = [1.0, 3.0, 10.0, 30.0, 100.0, 300.0, 1000.0];
    let cfg = LifshitzConfig::default();
    for (name, film) in [
        ("passivated-like", samples::passivated_film()),
        ("reconstructed-like", samples::reconstructed_film()),
    ] {
        let baseline = FilmPair::identical(samples::bulk_film(film.thickness()));
        let curve = force_ratio_curve(&FilmPair::identical(film), &baseline, &grid, &cfg)?;
        println!("{name}");
        for (p, r) in curve.points.iter().zip(curve.ratios.as_deref().unwrap_or_default()) {
            println!("  L = {:>7.1} nm  P = {:>12.5e} Pa  ratio = {r:.5}", p.separation_nm, p.pressure);
        }
    }
    Ok(())
}
