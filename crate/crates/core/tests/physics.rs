use std::f64::consts::FRAC_PI_2;

use casimir_films::dielectric::{DielectricTensorModel, Oscillator, OscillatorSet, PrincipalValues};
use casimir_films::lifshitz::{
    energy_per_area, force_point, force_ratio_curve, pressure, pressure_between, sweep, AzimuthalSymmetry, FilmPair,
    GapScenario, LifshitzConfig, Reflector,
};
use casimir_films::reflection::{Face, Film, ReflectionMatrix, Thickness};
use casimir_films::samples;
use casimir_films::Result;

fn lorentz(wp: f64, w0: f64) -> OscillatorSet {
    OscillatorSet::single(Oscillator::lorentz(wp, w0)).unwrap()
}

fn cfg() -> LifshitzConfig {
    LifshitzConfig::default()
}

#[test]
fn passive_scenarios_attract() {
    let films = [
        samples::bulk_film(Thickness::Finite(1.9)),
        samples::passivated_film(),
        samples::reconstructed_film(),
        Film::new(Thickness::HalfSpace, DielectricTensorModel::isotropic(lorentz(3.0, 8.0)), 0.0).unwrap(),
    ];
    for film in films {
        for l in [3.0, 300.0] {
            let p = force_point(&GapScenario::identical(film.clone(), l).unwrap(), &cfg()).unwrap();
            assert!(p.energy_per_area < 0.0 && p.pressure < 0.0, "{p:?}");
        }
    }
}

#[test]
fn thickness_limit_is_monotone() {
    let l = 20.0;
    let tensor = DielectricTensorModel::isotropic(samples::bulk_oscillators());
    let half = {
        let f = Film::new(Thickness::HalfSpace, tensor.clone(), 0.0).unwrap();
        pressure(&GapScenario::identical(f, l).unwrap(), &cfg()).unwrap().value
    };
    let mut gaps = Vec::new();
    for factor in [1.0, 10.0, 100.0] {
        let f = Film::new(Thickness::Finite(factor * l), tensor.clone(), 0.0).unwrap();
        let p = pressure(&GapScenario::identical(f, l).unwrap(), &cfg()).unwrap().value;
        assert!(p.abs() < half.abs());
        gaps.push((half - p).abs() / half.abs());
    }
    assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
    assert!(gaps[2] < 1e-6);
}

#[test]
fn retarded_half_spaces_scale_as_inverse_fourth_power() {
    let film = samples::bulk_film(Thickness::HalfSpace);
    let curve = sweep(&FilmPair::identical(film), &[10.0, 100.0, 1000.0], &cfg()).unwrap();
    let p: Vec<f64> = curve.points.iter().map(|p| p.pressure.abs()).collect();
    let late = (p[1] / p[2]).log10();
    assert!((late - 4.0).abs() < 0.15, "{late}");
    // Closer in, the non-retarded regime falls off more slowly.
    assert!((p[0] / p[1]).log10() < late);
}

#[test]
fn larger_response_gives_larger_force() {
    let weak = Film::new(Thickness::Finite(5.0), DielectricTensorModel::isotropic(lorentz(9.0, 3.6)), 0.0).unwrap();
    let strong = Film::new(
        Thickness::Finite(5.0),
        DielectricTensorModel::uniaxial(lorentz(11.1, 3.4), lorentz(9.5, 3.5)),
        0.0,
    )
    .unwrap();
    for xi in [0.0, 0.5, 4.0, 30.0] {
        let (w, s) = (weak.tensor().eval(xi).unwrap(), strong.tensor().eval(xi).unwrap());
        assert!(s.xx >= w.xx && s.zz >= w.zz);
    }
    let curve = force_ratio_curve(
        &FilmPair::identical(strong),
        &FilmPair::identical(weak),
        &[5.0, 50.0, 500.0],
        &cfg(),
    )
    .unwrap();
    assert!(curve.ratios.unwrap().iter().all(|r| *r >= 1.0));
}

#[test]
fn identical_families_have_unit_ratio() {
    let pair = FilmPair::identical(samples::passivated_film());
    let curve = force_ratio_curve(&pair, &pair, &[2.0, 20.0, 200.0], &cfg()).unwrap();
    assert_eq!(curve.ratios.unwrap(), vec![1.0; 3]);
}

// Reports less symmetry than the film has, forcing a wider azimuthal range.
struct Wide<'a>(&'a Film, AzimuthalSymmetry);

impl Reflector for Wide<'_> {
    type Frozen = PrincipalValues;

    fn freeze(&self, xi: f64) -> Result<PrincipalValues> {
        self.0.freeze(xi)
    }

    fn reflection(&self, eps: &PrincipalValues, face: Face, xi: f64, k: f64, theta: f64) -> Result<ReflectionMatrix> {
        self.0.reflection_with(eps, face, xi, k, theta)
    }

    fn azimuthal_symmetry(&self) -> AzimuthalSymmetry {
        self.1
    }
}

#[test]
fn azimuthal_reduction_matches_full_range() {
    let film = samples::reconstructed_film();
    assert_eq!(film.azimuthal_symmetry(), AzimuthalSymmetry::LabMirror);
    let l = 30.0;
    let reduced = pressure_between(&film, &film, l, &cfg()).unwrap().value;
    let wide = Wide(&film, AzimuthalSymmetry::Inversion);
    let full = pressure_between(&wide, &wide, l, &cfg()).unwrap().value;
    assert!((reduced / full - 1.0).abs() < 1e-7, "{reduced} {full}");
}

#[test]
fn rotating_both_films_together_changes_nothing() {
    let l = 15.0;
    let base = samples::reconstructed_film();
    let aligned = pressure(&GapScenario::identical(base.clone(), l).unwrap(), &cfg()).unwrap().value;
    let turned = Film::new(base.thickness(), base.tensor().clone(), 0.6).unwrap();
    let rotated = pressure(&GapScenario::identical(turned, l).unwrap(), &cfg()).unwrap().value;
    assert!((aligned / rotated - 1.0).abs() < 1e-7, "{aligned} {rotated}");
}

#[test]
fn crossed_biaxial_films_attract_less_than_aligned() {
    let l = 20.0;
    let film = Film::new(
        Thickness::Finite(2.0),
        DielectricTensorModel::biaxial(lorentz(6.0, 3.4), lorentz(16.0, 3.4), lorentz(6.0, 3.4)),
        0.0,
    )
    .unwrap();
    let crossed = Film::new(film.thickness(), film.tensor().clone(), FRAC_PI_2).unwrap();
    let aligned = energy_per_area(&GapScenario::identical(film.clone(), l).unwrap(), &cfg()).unwrap().value;
    let cross = energy_per_area(&GapScenario::new(film, crossed, l).unwrap(), &cfg()).unwrap().value;
    assert!(cross < 0.0 && cross > aligned, "{aligned} {cross}");
}

#[test]
fn swapping_lower_and_upper_films_is_symmetric() {
    let l = 12.0;
    let a = samples::passivated_film();
    let b = Film::new(Thickness::Finite(1.7), samples::reconstructed_tensor(), 0.4).unwrap();
    let ab = pressure(&GapScenario::new(a.clone(), b.clone(), l).unwrap(), &cfg()).unwrap().value;
    let ba = pressure(&GapScenario::new(b, a, l).unwrap(), &cfg()).unwrap().value;
    assert!((ab / ba - 1.0).abs() < 1e-7, "{ab} {ba}");
}

#[test]
fn repeated_evaluation_is_bit_identical() {
    let s = GapScenario::identical(samples::reconstructed_film(), 40.0).unwrap();
    let a = force_point(&s, &cfg()).unwrap();
    let b = force_point(&s, &cfg()).unwrap();
    assert_eq!(a.pressure.to_bits(), b.pressure.to_bits());
    assert_eq!(a.energy_per_area.to_bits(), b.energy_per_area.to_bits());
}
