//! Deterministic globally adaptive Gauss–Kronrod quadrature.
//!
//! Only open rules are used: no integrand is ever evaluated at an interval
//! endpoint, so integrable endpoint singularities and integrands defined on
//! open domains are handled without special-casing. Subdivision always
//! bisects the interval with the largest error estimate; ties go to the
//! interval with the lower left endpoint.

#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK15: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK15: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights attached to the odd-indexed Kronrod nodes (the last entry is
// the centre node).
const WG7: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const XGK21: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK21: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_980_286_070,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
const WG10: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Nested Gauss–Kronrod pair used on every panel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rule {
    /// 7-point Gauss embedded in 15-point Kronrod.
    #[default]
    GaussKronrod15,
    /// 10-point Gauss embedded in 21-point Kronrod.
    GaussKronrod21,
}

impl Rule {
    fn tables(self) -> (&'static [f64], &'static [f64], &'static [f64]) {
        match self {
            Rule::GaussKronrod15 => (&XGK15, &WGK15, &WG7),
            Rule::GaussKronrod21 => (&XGK21, &WGK21, &WG10),
        }
    }

    /// Number of integrand evaluations per panel.
    pub fn points(self) -> usize {
        2 * self.tables().0.len() - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Requested relative accuracy.
    pub rel_tol: f64,
    /// Absolute accuracy floor, used when the integral is (near) zero.
    pub abs_floor: f64,
    /// Maximum bisection depth of any panel.
    pub max_depth: u32,
    /// Hard cap on the number of live panels.
    pub max_intervals: usize,
    pub rule: Rule,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-7,
            abs_floor: 1e-300,
            max_depth: 30,
            max_intervals: 4000,
            rule: Rule::GaussKronrod15,
        }
    }
}

impl QuadratureConfig {
    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        QuadratureConfig { rel_tol, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_floor > 0.0) {
            return Err(Error::Validation("quadrature tolerances must be positive".into()));
        }
        if self.max_depth < 1 {
            return Err(Error::Validation("quadrature depth must be at least 1".into()));
        }
        if self.max_intervals < 1 {
            return Err(Error::Validation("quadrature interval budget must be at least 1".into()));
        }
        Ok(())
    }
}

/// An integral value together with its absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

impl Estimate {
    /// Error estimate relative to the value (the absolute error if the value is zero).
    pub fn relative_error(&self) -> f64 {
        if self.value == 0.0 {
            self.error
        } else {
            self.error / self.value.abs()
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    // Max-heap: larger error first, then lower left endpoint first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn apply_rule<F>(rule: Rule, f: &mut F, a: f64, b: f64, depth: u32) -> Result<Panel>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (xgk, wgk, wg) = rule.tables();
    let n = xgk.len();
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut eval = |x: f64| -> Result<f64> {
        let v = f(x)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Numerical(format!("integrand is not finite at x = {x:e}")))
        }
    };

    let fc = eval(centre)?;
    // The centre node belongs to the Gauss rule only for odd Gauss orders.
    let centre_gauss = if n % 2 == 0 { wg[wg.len() - 1] } else { 0.0 };
    let mut res_k = wgk[n - 1] * fc;
    let mut res_g = centre_gauss * fc;
    let mut res_abs = res_k.abs();
    let mut values = vec![(0.0, 0.0); n - 1];
    for (j, x) in xgk[..n - 1].iter().enumerate() {
        let dx = half * x;
        let f1 = eval(centre - dx)?;
        let f2 = eval(centre + dx)?;
        values[j] = (f1, f2);
        res_k += wgk[j] * (f1 + f2);
        res_abs += wgk[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += wg[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = wgk[n - 1] * (fc - mean).abs();
    for (j, (f1, f2)) in values.iter().enumerate() {
        res_asc += wgk[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }

    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut error = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Panel {
        a,
        b,
        value,
        error,
        depth,
    })
}

/// Adaptive integration of a fallible integrand over the open interval (a, b).
pub fn try_integrate_finite<F>(mut f: F, a: f64, b: f64, config: &QuadratureConfig) -> Result<Estimate>
where
    F: FnMut(f64) -> Result<f64>,
{
    config.validate()?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("integration interval ({a}, {b}) is not a finite a < b")));
    }

    let first = apply_rule(config.rule, &mut f, a, b, 0)?;
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Panel> = Vec::new();
    let mut total_value = first.value;
    let mut total_error = first.error;
    let mut frozen_error = 0.0;
    heap.push(first);

    loop {
        let target = (config.rel_tol * total_value.abs()).max(config.abs_floor);
        if total_error <= target {
            break;
        }
        if frozen_error > target || heap.len() + frozen.len() >= config.max_intervals {
            return Err(non_convergence(heap, frozen));
        }
        let Some(worst) = heap.pop() else {
            return Err(non_convergence(heap, frozen));
        };
        if worst.depth >= config.max_depth {
            frozen_error += worst.error;
            frozen.push(worst);
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            // Interval collapsed to adjacent floats.
            frozen_error += worst.error;
            frozen.push(worst);
            continue;
        }
        let left = apply_rule(config.rule, &mut f, worst.a, mid, worst.depth + 1)?;
        let right = apply_rule(config.rule, &mut f, mid, worst.b, worst.depth + 1)?;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    Ok(summarize(heap, frozen))
}

// Fresh summation in left-to-right order so the reported total does not
// depend on the running-sum history.
fn summarize(heap: BinaryHeap<Panel>, frozen: Vec<Panel>) -> Estimate {
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.extend(frozen);
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = panels.iter().map(|p| p.value).sum();
    let error = panels.iter().map(|p| p.error).sum();
    Estimate { value, error }
}

fn non_convergence(heap: BinaryHeap<Panel>, frozen: Vec<Panel>) -> Error {
    let best = summarize(heap, frozen);
    Error::NonConvergence {
        value: best.value,
        error: best.error,
    }
}

/// Adaptive integration over (a, b).
pub fn integrate_finite<F>(mut f: F, a: f64, b: f64, config: &QuadratureConfig) -> Result<Estimate>
where
    F: FnMut(f64) -> f64,
{
    try_integrate_finite(|x| Ok(f(x)), a, b, config)
}

/// Adaptive integration of a fallible integrand over (a, ∞), via t = a + s/(1 − s).
pub fn try_integrate_semi_infinite<F>(mut f: F, a: f64, config: &QuadratureConfig) -> Result<Estimate>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !a.is_finite() {
        return Err(Error::Domain(format!("lower limit {a} is not finite")));
    }
    try_integrate_finite(
        |s| {
            let one_minus = 1.0 - s;
            let t = a + s / one_minus;
            Ok(f(t)? / (one_minus * one_minus))
        },
        0.0,
        1.0,
        config,
    )
}

/// Adaptive integration over (a, ∞).
pub fn integrate_semi_infinite<F>(mut f: F, a: f64, config: &QuadratureConfig) -> Result<Estimate>
where
    F: FnMut(f64) -> f64,
{
    try_integrate_semi_infinite(|t| Ok(f(t)), a, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn tight() -> QuadratureConfig {
        QuadratureConfig::default().with_rel_tol(1e-12)
    }

    #[test]
    fn weight_tables_are_exact_on_monomials() {
        for rule in [Rule::GaussKronrod15, Rule::GaussKronrod21] {
            let (xgk, wgk, wg) = rule.tables();
            let n = xgk.len();
            let gauss_degree = if rule == Rule::GaussKronrod15 { 13 } else { 19 };
            let kronrod_degree = 3 * (n - 1) + 1;
            for p in 0..=kronrod_degree as i32 {
                let exact = if p % 2 == 0 { 2.0 / (p as f64 + 1.0) } else { 0.0 };
                let mut k = wgk[n - 1] * 0f64.powi(p);
                let mut g = if n % 2 == 0 { wg[wg.len() - 1] * 0f64.powi(p) } else { 0.0 };
                for j in 0..n - 1 {
                    let s = xgk[j].powi(p) + (-xgk[j]).powi(p);
                    k += wgk[j] * s;
                    if j % 2 == 1 {
                        g += wg[j / 2] * s;
                    }
                }
                assert!((k - exact).abs() < 1e-14, "{rule:?} kronrod p={p}");
                if p <= gauss_degree {
                    assert!((g - exact).abs() < 1e-14, "{rule:?} gauss p={p}");
                }
            }
        }
    }

    #[test]
    fn polynomial_is_exact() {
        let r = integrate_finite(|x| x * x, 0.0, 1.0, &QuadratureConfig::default()).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn sine_over_half_period() {
        let r = integrate_finite(f64::sin, 0.0, PI, &tight()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-13);
    }

    #[test]
    fn log_endpoint_singularity() {
        let mut calls_at_zero = 0;
        let r = integrate_finite(
            |x| {
                if x == 0.0 {
                    calls_at_zero += 1;
                }
                x.ln()
            },
            0.0,
            1.0,
            &QuadratureConfig::default(),
        )
        .unwrap();
        assert_eq!(calls_at_zero, 0);
        assert!((r.value + 1.0).abs() < 1e-7);
        assert!(r.error >= (r.value + 1.0).abs());
    }

    #[test]
    fn semi_infinite_examples() {
        let cfg = tight();
        let e = integrate_semi_infinite(|t| (-t).exp(), 0.0, &cfg).unwrap();
        assert!((e.value - 1.0).abs() < 1e-12);
        let te = integrate_semi_infinite(|t| t * (-t).exp(), 0.0, &cfg).unwrap();
        assert!((te.value - 1.0).abs() < 1e-12);
        let lorentz = integrate_semi_infinite(|t| 1.0 / (1.0 + t * t), 0.0, &cfg).unwrap();
        assert!((lorentz.value - PI / 2.0).abs() < 1e-12);
        let shifted = integrate_semi_infinite(|t| (-t).exp(), 2.0, &cfg).unwrap();
        assert!((shifted.value - (-2.0f64).exp()).abs() < 1e-13);
    }

    #[test]
    fn error_estimates_bound_true_error() {
        let cfg = QuadratureConfig {
            max_depth: 60,
            ..QuadratureConfig::default().with_rel_tol(1e-6)
        };
        type Case<'a> = (&'a dyn Fn(f64) -> f64, f64, f64, f64);
        let cases: [Case; 4] = [
            (&|x: f64| x.ln(), 0.0, 1.0, -1.0),
            (&|x: f64| x.sin(), 0.0, PI, 2.0),
            (&|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, 2.0),
            (&|x: f64| (10.0 * x).cos(), 0.0, 3.0, (30.0f64).sin() / 10.0),
        ];
        for (f, a, b, exact) in cases {
            let r = integrate_finite(f, a, b, &cfg).unwrap();
            assert!(r.error >= (r.value - exact).abs(), "estimate {} vs true {}", r.error, (r.value - exact).abs());
            assert!(r.relative_error() <= 1e-6);
        }
    }

    #[test]
    fn zero_integrand_converges_immediately() {
        let r = integrate_semi_infinite(|_| 0.0, 0.0, &QuadratureConfig::default()).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.error, 0.0);
    }

    #[test]
    fn exhausted_budget_reports_best_estimate() {
        let cfg = QuadratureConfig {
            max_depth: 2,
            ..QuadratureConfig::default().with_rel_tol(1e-12)
        };
        match integrate_finite(|x| 1.0 / x.sqrt(), 0.0, 1.0, &cfg) {
            Err(Error::NonConvergence { value, error }) => {
                assert!((value - 2.0).abs() < 0.2);
                assert!(error > 0.0);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn integrand_errors_propagate() {
        let r = try_integrate_finite(|_| Err(Error::Numerical("boom".into())), 0.0, 1.0, &QuadratureConfig::default());
        assert!(matches!(r, Err(Error::Numerical(_))));
        let nan = integrate_finite(|_| f64::NAN, 0.0, 1.0, &QuadratureConfig::default());
        assert!(matches!(nan, Err(Error::Numerical(_))));
    }

    #[test]
    fn bad_interval_is_domain_error() {
        assert!(matches!(
            integrate_finite(|x| x, 1.0, 0.0, &QuadratureConfig::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rule_21_agrees() {
        let cfg = QuadratureConfig {
            rule: Rule::GaussKronrod21,
            ..tight()
        };
        let r = integrate_semi_infinite(|t| t * (-t).exp(), 0.0, &cfg).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        assert_eq!(Rule::GaussKronrod21.points(), 21);
    }
}
