//! Adaptive Gauss–Kronrod integration on finite and semi-infinite ranges.

use std::f64::consts::{FRAC_PI_2, PI};

use casimir_films::quadrature::{
    integrate_finite, integrate_semi_infinite, Estimate, QuadratureConfig, Rule,
};
use casimir_films::Result;

fn report(name: &str, exact: f64, run: impl Fn(&QuadratureConfig) -> Result<Estimate>) -> Result<()> {
    let gk15 = QuadratureConfig::default();
    let gk21 = QuadratureConfig { rule: Rule::GaussKronrod21, ..gk15 };
    let a = run(&gk15)?;
    let b = run(&gk21)?;
    println!(
        "{name:>22} {:>20.15} {:>10.1e} {:>10.1e} {:>10.1e}",
        a.value,
        a.error,
        (a.value - exact).abs(),
        (b.value - exact).abs()
    );
    Ok(())
}

fn main() -> Result<()> {
    println!("{:>22} {:>20} {:>10} {:>10} {:>10}", "integral", "value", "estimate", "true err", "gk21 err");
    report("x^2 on [0,1]", 1.0 / 3.0, |c| integrate_finite(|x| x * x, 0.0, 1.0, c))?;
    report("sin on [0,pi]", 2.0, |c| integrate_finite(f64::sin, 0.0, PI, c))?;
    // Open rules never touch the logarithmic singularity at 0.
    report("ln x on [0,1]", -1.0, |c| integrate_finite(f64::ln, 0.0, 1.0, c))?;
    report("t e^-t on [0,inf)", 1.0, |c| integrate_semi_infinite(|t| t * (-t).exp(), 0.0, c))?;
    report("1/(1+t^2) on [0,inf)", FRAC_PI_2, |c| integrate_semi_infinite(|t| 1.0 / (1.0 + t * t), 0.0, c))?;
    Ok(())
}
