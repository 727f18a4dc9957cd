//! Configuration-driven sweep: parse a scenario, run it, print the CSV.

use casimir_films::workbench::{parse_config, run_sweep, RunOptions};

const SCENARIO: &str = r#"
output = "uniaxial"

[separation]
min_nm = 5.0
max_nm = 500.0
points = 5

[film]
thickness = 2.0

[film.xx]
oscillators = [[11.1, 3.4, 0.0]]

[film.zz]
oscillators = [[10.0, 3.6, 0.0]]

# The upper body is a thick metal-like plate.
[film2]
thickness = "half-space"

[film2.xx]
oscillators = [[9.0, 0.0, 0.04]]
"#;

fn main() -> casimir_films::Result<()> {
    let config = parse_config(SCENARIO)?;
    let report = run_sweep(&config, None, RunOptions::default())?;
    print!("{}", report.to_csv());
    println!("\nidentity ratio against itself:");
    let identity = run_sweep(&config, Some(&config), RunOptions::default())?;
    print!("{}", identity.to_csv());
    println!("\nnormalized configuration:\n{}", config.render());
    Ok(())
}
