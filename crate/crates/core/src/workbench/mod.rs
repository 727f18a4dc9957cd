//! Configuration-driven distance sweeps: config files, data files, CSV output
//! and plot scripts.

mod config;
mod data;
mod plot;
mod run;

pub use config::{
    load_config, parse_config, parse_config_in, FilmSpec, Mode, QuadratureSettings, RunConfig, SeparationGrid,
    Spacing, TensorSpec, ThicknessSpec,
};
pub use data::{load_spectrum_csv, london_grid, SpectrumData};
pub use plot::{emit_plot_script, write_plot_script};
pub use run::{output_path, run_sweep, Row, RunOptions, SweepReport, RATIO_HEADER, SWEEP_HEADER};
