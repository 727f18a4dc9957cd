use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// Text of a matplotlib script drawing one curve per CSV file against L on a log axis.
///
/// Files with a `ratio` column are drawn as force ratios, others as |P|.
/// Paths are embedded as given.
pub fn emit_plot_script(csv_files: &[PathBuf]) -> Result<String> {
    if csv_files.is_empty() {
        return Err(Error::Validation("no CSV files to plot".into()));
    }
    for path in csv_files {
        if !path.is_file() {
            return Err(Error::Data {
                path: path.clone(),
                message: "curve file does not exist".into(),
            });
        }
    }
    let mut s = String::new();
    s.push_str(
        "#!/usr/bin/env python3\n\
         # Generated by casimir-films.\n\
         import csv\n\
         import matplotlib.pyplot as plt\n\n\
         MARKERS = [\"^\", \"s\", \"o\", \"D\", \"v\"]\n\n\
         CURVES = [\n",
    );
    for path in csv_files {
        let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let _ = writeln!(s, "    ({:?}, {:?}),", path.to_string_lossy(), label);
    }
    s.push_str(
        "]\n\n\
def read(path):\n\
    with open(path) as f:\n\
        rows = list(csv.DictReader(line for line in f if not line.startswith(\"#\")))\n\
    L = [float(r[\"L_nm\"]) for r in rows]\n\
    if rows and \"ratio\" in rows[0]:\n\
        return L, [float(r[\"ratio\"]) for r in rows], True\n\
    return L, [abs(float(r[\"pressure_Pa\"])) for r in rows], False\n\n\
fig, ax = plt.subplots()\n\
ratios = False\n\
for i, (path, label) in enumerate(CURVES):\n\
    L, y, ratios = read(path)\n\
    ax.plot(L, y, marker=MARKERS[i % len(MARKERS)], label=label)\n\
ax.set_xscale(\"log\")\n\
ax.set_xlabel(\"L (nm)\")\n\
if ratios:\n\
    ax.set_ylabel(\"F / F_baseline\")\n\
    ax.axhline(1.0, color=\"grey\", linewidth=0.8)\n\
else:\n\
    ax.set_yscale(\"log\")\n\
    ax.set_ylabel(\"|P| (Pa)\")\n\
ax.legend()\n\
fig.tight_layout()\n\
fig.savefig(\"force_ratios.png\", dpi=150)\n\
plt.show()\n",
    );
    Ok(s)
}

/// Writes the script next to the curves and returns its path.
pub fn write_plot_script(csv_files: &[PathBuf], out_dir: &Path) -> Result<PathBuf> {
    let text = emit_plot_script(csv_files)?;
    let path = out_dir.join("plot_ratios.py");
    std::fs::write(&path, text).map_err(|e| Error::Data {
        path: path.clone(),
        message: e.to_string(),
    })?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn script_lists_every_curve() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("passivated.csv");
        let b = dir.path().join("reconstructed.csv");
        std::fs::write(&a, "L_nm,energy_Jm2,pressure_Pa,ratio,rel_err\n").unwrap();
        std::fs::write(&b, "L_nm,energy_Jm2,pressure_Pa,ratio,rel_err\n").unwrap();
        let one = emit_plot_script(std::slice::from_ref(&a)).unwrap();
        assert!(one.contains(&*a.to_string_lossy()));
        let two = emit_plot_script(&[a, b]).unwrap();
        assert!(two.contains("\"passivated\"") && two.contains("\"reconstructed\""));
        assert!(two.contains("set_xscale(\"log\")"));
    }

    #[test]
    fn needs_existing_files() {
        assert!(emit_plot_script(&[]).is_err());
        assert!(emit_plot_script(&[PathBuf::from("/nonexistent.csv")]).is_err());
    }
}
