//! Dielectric data files.
//!
//! Two CSV layouts are recognized by their header. An imaginary-axis
//! response has `xi_eV` followed by `eps` or `eps_xx,eps_yy,eps_zz`; an
//! absorption spectrum has `omega_eV` followed by `eps2` or
//! `eps2_xx,eps2_yy,eps2_zz`. Lines starting with `#` are ignored.

use std::path::Path;

use crate::dielectric::{
    london_transform, AbsorptionSpectrum, AxisModel, DielectricTensorModel, ImaginaryAxisResponse,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumData {
    /// One response per column: a single isotropic column or xx, yy, zz.
    ImaginaryAxis(Vec<ImaginaryAxisResponse>),
    Absorption(Vec<AbsorptionSpectrum>),
}

/// Imaginary frequencies at which absorption spectra are transformed.
pub fn london_grid() -> Vec<f64> {
    let mut grid = vec![0.0];
    // 20 points per decade from 1 meV to 1 keV
    grid.extend((0..=120).map(|i| 10f64.powf(-3.0 + i as f64 / 20.0)));
    grid
}

impl SpectrumData {
    pub fn columns(&self) -> usize {
        match self {
            SpectrumData::ImaginaryAxis(v) => v.len(),
            SpectrumData::Absorption(v) => v.len(),
        }
    }

    /// Tensor model, transforming absorption spectra onto [`london_grid`].
    pub fn to_tensor(&self) -> Result<DielectricTensorModel> {
        let axes: Vec<ImaginaryAxisResponse> = match self {
            SpectrumData::ImaginaryAxis(v) => v.clone(),
            SpectrumData::Absorption(v) => {
                let grid = london_grid();
                v.iter().map(|s| london_transform(s, &grid)).collect::<Result<_>>()?
            }
        };
        Ok(match axes.as_slice() {
            [iso] => DielectricTensorModel::isotropic(iso.clone()),
            [xx, yy, zz] if xx == yy && yy == zz => DielectricTensorModel::isotropic(xx.clone()),
            [xx, yy, zz] if xx == yy => DielectricTensorModel::uniaxial(xx.clone(), zz.clone()),
            [xx, yy, zz] => DielectricTensorModel::biaxial(
                AxisModel::from(xx.clone()),
                AxisModel::from(yy.clone()),
                AxisModel::from(zz.clone()),
            ),
            _ => unreachable!("headers admit one or three columns"),
        })
    }
}

fn data_error(path: &Path, message: impl Into<String>) -> Error {
    Error::Data {
        path: path.to_path_buf(),
        message: message.into(),
    }
}

/// Reads and validates a dielectric data file.
pub fn load_spectrum_csv(path: &Path) -> Result<SpectrumData> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| data_error(path, e.to_string()))?;
    let header: Vec<String> = reader
        .headers()
        .map_err(|e| data_error(path, e.to_string()))?
        .iter()
        .map(str::to_string)
        .collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let absorption = match header.as_slice() {
        ["xi_eV", "eps"] | ["xi_eV", "eps_xx", "eps_yy", "eps_zz"] => false,
        ["omega_eV", "eps2"] | ["omega_eV", "eps2_xx", "eps2_yy", "eps2_zz"] => true,
        _ => {
            return Err(data_error(
                path,
                format!(
                    "unknown header `{}`; expected xi_eV,eps[_xx,_yy,_zz] or omega_eV,eps2[_xx,_yy,_zz]",
                    header.join(",")
                ),
            ))
        }
    };
    let ncols = header.len() - 1;
    let mut columns: Vec<Vec<(f64, f64)>> = vec![Vec::new(); ncols];
    for record in reader.records() {
        let record = record.map_err(|e| data_error(path, e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line());
        let values = record
            .iter()
            .map(|f| f.parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| data_error(path, format!("line {line}: {e}")))?;
        if values.iter().any(|v| !v.is_finite()) {
            return Err(data_error(path, format!("line {line}: non-finite value")));
        }
        for (col, v) in columns.iter_mut().zip(&values[1..]) {
            col.push((values[0], *v));
        }
    }
    let wrap = |e: Error| data_error(path, e.to_string());
    Ok(if absorption {
        SpectrumData::Absorption(
            columns
                .into_iter()
                .map(|c| AbsorptionSpectrum::new(c).map_err(wrap))
                .collect::<Result<_>>()?,
        )
    } else {
        SpectrumData::ImaginaryAxis(
            columns
                .into_iter()
                .map(|c| ImaginaryAxisResponse::new(c).map_err(wrap))
                .collect::<Result<_>>()?,
        )
    })
}
