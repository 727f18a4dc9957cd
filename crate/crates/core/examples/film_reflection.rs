//! Reflection matrices of isotropic, uniaxial and biaxial films.

use std::f64::consts::PI;

use casimir_films::reflection::{Face, Film, Thickness};
use casimir_films::samples;

fn main() -> casimir_films::Result<()> {
    let (xi, k) = (0.5, 1.0); // eV
    let films = [
        ("bulk 1.9 nm", samples::bulk_film(Thickness::Finite(1.9))),
        ("bulk half-space", samples::bulk_film(Thickness::HalfSpace)),
        ("passivated-like", samples::passivated_film()),
        ("reconstructed-like", samples::reconstructed_film()),
    ];
    for (name, film) in &films {
        let r = film.reflection(xi, k, 0.0)?;
        println!("{name:>20}: r_ss = {:+.6}  r_pp = {:+.6}", r.ss, r.pp);
    }

    // A biaxial film mixes polarizations away from its principal axes.
    let rec = samples::reconstructed_film();
    println!("\nreconstructed-like film, azimuth scan:");
    for step in 0..=4 {
        let theta = step as f64 * PI / 8.0;
        let lower = rec.reflection(xi, k, theta)?;
        let upper = rec.reflection_at(Face::Upper, xi, k, theta)?;
        println!(
            "  theta = {:>5.3}: ss {:+.5} sp {:+.5} ps {:+.5} pp {:+.5} | upper face sp {:+.5}",
            theta, lower.ss, lower.sp, lower.ps, lower.pp, upper.sp
        );
    }

    let turned = Film::new(rec.thickness(), rec.tensor().clone(), PI / 2.0)?;
    let a = turned.reflection(xi, k, 0.3)?;
    let b = Film::new(rec.thickness(), rec.tensor().swapped_in_plane(), 0.0)?.reflection(xi, k, 0.3)?;
    println!("\nfilm rotated by 90 deg vs relabelled axes: max diff {:.1e}", a.max_abs_diff(&b));
    Ok(())
}
