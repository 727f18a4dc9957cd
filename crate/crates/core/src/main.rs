use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use casimir_films::workbench::{
    load_config, output_path, run_sweep, write_plot_script, RunOptions, SweepReport, RATIO_HEADER,
};
use casimir_films::{Error, Result};

/// Casimir pressure between dielectric films, swept over separation.
#[derive(Debug, Parser)]
#[command(version)]
struct Cli {
    /// Replace the films by perfect mirrors (checks the integration chain).
    #[arg(long, global = true)]
    ideal_mirror_test: bool,

    /// Print one line per grid point to stderr.
    #[arg(long, short, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy and pressure over the configured separation grid.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Pressure ratio against a baseline configuration.
    Ratio {
        #[arg(long)]
        config: PathBuf,
        /// Defaults to the `baseline` key of the configuration.
        #[arg(long)]
        baseline: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let options = RunOptions {
        ideal_mirror: cli.ideal_mirror_test,
    };
    let (config_path, baseline_path, out) = match &cli.command {
        Command::Sweep { config, out } => (config, None, out),
        Command::Ratio { config, baseline, out } => (config, Some(baseline), out),
    };
    let config = load_config(config_path)?;
    let baseline = match baseline_path {
        None => None,
        Some(path) => {
            let path = path.clone().or_else(|| config.baseline.clone()).ok_or_else(|| {
                Error::Validation("ratio mode needs --baseline or a `baseline` key in the configuration".into())
            })?;
            Some(load_config(&path)?)
        }
    };
    std::fs::create_dir_all(out)?;

    let started = Instant::now();
    let report = run_sweep(&config, baseline.as_ref(), options)?;
    let csv = output_path(&config, out);
    report.write_csv(&csv)?;
    if cli.verbose {
        log_report(&report);
        eprintln!("wrote {} in {:.1?}", csv.display(), started.elapsed());
    }
    if baseline.is_some() {
        let script = write_plot_script(&ratio_curves(out)?, out)?;
        if cli.verbose {
            eprintln!("wrote {}", script.display());
        }
    }

    let mut code = 0;
    for (l, e) in report.failures() {
        eprintln!("L = {l} nm failed: {e}");
        code = code.max(e.exit_code());
    }
    Ok(code)
}

fn log_report(report: &SweepReport) {
    for (l, row) in report.grid.iter().zip(&report.rows) {
        match row {
            Ok(r) => eprintln!(
                "L = {l:>10.4} nm  P = {:>12.5e} Pa  E = {:>12.5e} J/m2{}  rel_err = {:.1e}",
                r.point.pressure,
                r.point.energy_per_area,
                r.ratio.map(|x| format!("  ratio = {x:.6}")).unwrap_or_default(),
                r.point.rel_err
            ),
            Err(e) => eprintln!("L = {l:>10.4} nm  failed: {e}"),
        }
    }
}

/// Ratio CSVs present in the output directory, sorted by name.
fn ratio_curves(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut curves = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "csv")
            && std::fs::read_to_string(&path)?.lines().next() == Some(RATIO_HEADER)
        {
            curves.push(path);
        }
    }
    curves.sort();
    Ok(curves)
}
