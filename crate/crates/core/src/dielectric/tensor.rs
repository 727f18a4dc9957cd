use super::{ImaginaryAxisResponse, OscillatorSet};
use crate::error::Result;

/// Dielectric response of a single principal axis.
#[derive(Debug, Clone, PartialEq)]
pub enum AxisModel {
    Oscillators(OscillatorSet),
    Tabulated(ImaginaryAxisResponse),
}

impl AxisModel {
    pub fn eval(&self, xi: f64) -> Result<f64> {
        match self {
            AxisModel::Oscillators(set) => set.eval(xi),
            AxisModel::Tabulated(table) => table.eval(xi),
        }
    }
}

impl From<OscillatorSet> for AxisModel {
    fn from(set: OscillatorSet) -> Self {
        AxisModel::Oscillators(set)
    }
}

impl From<ImaginaryAxisResponse> for AxisModel {
    fn from(table: ImaginaryAxisResponse) -> Self {
        AxisModel::Tabulated(table)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Isotropic,
    /// ε_xx = ε_yy = ε_∥ in the film plane, ε_zz = ε_⊥ along the normal.
    Uniaxial,
    Biaxial,
}

/// Principal values of the dielectric tensor at one imaginary frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrincipalValues {
    pub xx: f64,
    pub yy: f64,
    pub zz: f64,
}

impl PrincipalValues {
    pub fn isotropic(eps: f64) -> Self {
        PrincipalValues { xx: eps, yy: eps, zz: eps }
    }
}

/// Diagonal dielectric tensor in the film frame: z is the surface normal,
/// y the in-plane reference direction (the surface chain direction for
/// reconstructed films).
#[derive(Debug, Clone, PartialEq)]
pub struct DielectricTensorModel {
    xx: AxisModel,
    yy: AxisModel,
    zz: AxisModel,
}

impl DielectricTensorModel {
    pub fn isotropic(model: impl Into<AxisModel>) -> Self {
        let m = model.into();
        DielectricTensorModel {
            xx: m.clone(),
            yy: m.clone(),
            zz: m,
        }
    }

    pub fn uniaxial(parallel: impl Into<AxisModel>, perpendicular: impl Into<AxisModel>) -> Self {
        let p = parallel.into();
        DielectricTensorModel {
            xx: p.clone(),
            yy: p,
            zz: perpendicular.into(),
        }
    }

    pub fn biaxial(xx: impl Into<AxisModel>, yy: impl Into<AxisModel>, zz: impl Into<AxisModel>) -> Self {
        DielectricTensorModel {
            xx: xx.into(),
            yy: yy.into(),
            zz: zz.into(),
        }
    }

    pub fn xx(&self) -> &AxisModel {
        &self.xx
    }

    pub fn yy(&self) -> &AxisModel {
        &self.yy
    }

    pub fn zz(&self) -> &AxisModel {
        &self.zz
    }

    /// Classification derived from parameter equality of the axis models.
    pub fn symmetry(&self) -> Symmetry {
        if self.xx == self.yy {
            if self.xx == self.zz {
                Symmetry::Isotropic
            } else {
                Symmetry::Uniaxial
            }
        } else {
            Symmetry::Biaxial
        }
    }

    /// The same tensor with the in-plane axes exchanged.
    pub fn swapped_in_plane(&self) -> Self {
        DielectricTensorModel {
            xx: self.yy.clone(),
            yy: self.xx.clone(),
            zz: self.zz.clone(),
        }
    }

    pub fn eval(&self, xi: f64) -> Result<PrincipalValues> {
        match self.symmetry() {
            Symmetry::Isotropic => Ok(PrincipalValues::isotropic(self.xx.eval(xi)?)),
            Symmetry::Uniaxial => {
                let parallel = self.xx.eval(xi)?;
                Ok(PrincipalValues {
                    xx: parallel,
                    yy: parallel,
                    zz: self.zz.eval(xi)?,
                })
            }
            Symmetry::Biaxial => Ok(PrincipalValues {
                xx: self.xx.eval(xi)?,
                yy: self.yy.eval(xi)?,
                zz: self.zz.eval(xi)?,
            }),
        }
    }
}
