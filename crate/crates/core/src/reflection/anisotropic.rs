//! 4×4 tangential-field method for a film with a diagonal (orthorhombic)
//! dielectric tensor at imaginary frequency.
//!
//! Work in the frame where the in-plane wavevector points along x'. With
//! fields ∝ e^{ik x'} and ω = iξ, Maxwell's equations reduce to a real
//! first-order system for ψ = (E_x', Y, E_y', X), where Y = H_y'/ξ and
//! X = ξ H_x' (energies in eV, z in units of ħc/eV):
//!
//! ```text
//! E_x' = −α Y          Y' = −a E_x' − b E_y'
//! E_y' = X             X' = ξ² b E_x' + (k² + ξ² c) E_y'
//! ```
//!
//! with α = k²/ε_zz + ξ², a = ε_x'x', b = ε_x'y', c = ε_y'y'. The system
//! has block form [[0, P], [Q, 0]], so its eigenvalues are ±√λ for the
//! eigenvalues λ of the 2×2 product PQ. PQ is a positive diagonal matrix
//! times a symmetric positive-definite one, hence all four eigenvalues are
//! real: two modes decay and two grow along +z.
//!
//! The boundary problem keeps every exponential in decaying form: growing
//! modes are referenced to the far face of the film.

use nalgebra::{SMatrix, Vector4};

use super::{check_eps, check_point, root, Face, ReflectionMatrix, Thickness};
use crate::dielectric::PrincipalValues;
use crate::error::{Error, Result};
use crate::units::HBAR_C_EV_NM;

type State = Vector4<f64>;

/// One eigenmode of the film: decay constant κ and in-plane E field (E_x', E_y').
#[derive(Debug, Clone, Copy)]
struct Mode {
    kappa: f64,
    e_x: f64,
    e_y: f64,
}

/// Mode system of a homogeneous medium for a given (ξ, k, azimuth).
#[derive(Debug, Clone, Copy)]
struct MediumSystem {
    alpha: f64,
    modes: [Mode; 2],
}

impl MediumSystem {
    fn new(eps: &PrincipalValues, xi: f64, k: f64, theta: f64) -> Result<Self> {
        let (s, c) = theta.sin_cos();
        let a = eps.xx * c * c + eps.yy * s * s;
        let cc = eps.yy * c * c + eps.xx * s * s;
        let b = (eps.yy - eps.xx) * s * c;
        let k2 = k * k;
        let xi2 = xi * xi;
        let alpha = k2 / eps.zz + xi2;

        let m11 = alpha * a;
        let m12 = alpha * b;
        let m21 = xi2 * b;
        let m22 = k2 + xi2 * cc;

        if m12 == 0.0 && m21 == 0.0 {
            // Decoupled: p-like mode along x', s-like along y'.
            return Ok(MediumSystem {
                alpha,
                modes: [
                    Mode {
                        kappa: root(m11),
                        e_x: 1.0,
                        e_y: 0.0,
                    },
                    Mode {
                        kappa: root(m22),
                        e_x: 0.0,
                        e_y: 1.0,
                    },
                ],
            });
        }

        let diff = m11 - m22;
        let disc = diff * diff + 4.0 * m12 * m21;
        let sq = root(disc);
        let trace = m11 + m22;
        let det = m11 * m22 - m12 * m21;
        let lam_hi = 0.5 * (trace + sq);
        let lam_lo = det / lam_hi;
        let vector = |lam: f64| -> (f64, f64) {
            let v = (m12, lam - m11);
            let w = (lam - m22, m21);
            let (x, y) = if v.0.hypot(v.1) >= w.0.hypot(w.1) { v } else { w };
            let n = x.hypot(y);
            (x / n, y / n)
        };
        let (x1, y1) = vector(lam_hi);
        let (x2, y2) = vector(lam_lo);
        if (x1 * y2 - x2 * y1).abs() < 1e-13 || !lam_lo.is_finite() {
            return Err(Error::Numerical(format!(
                "mode system is not diagonalizable at xi={xi}, k={k}, theta={theta} \
                 (eigenvalue {lam_hi:e} is defective); perturb theta by ~1e-9"
            )));
        }
        Ok(MediumSystem {
            alpha,
            modes: [
                Mode {
                    kappa: root(lam_hi),
                    e_x: x1,
                    e_y: y1,
                },
                Mode {
                    kappa: root(lam_lo),
                    e_x: x2,
                    e_y: y2,
                },
            ],
        })
    }

    /// State vector of a mode varying as e^{sign·κz}.
    fn state(&self, mode: &Mode, sign: f64) -> State {
        let sk = sign * mode.kappa;
        let v = State::new(mode.e_x, -sk * mode.e_x / self.alpha, mode.e_y, sk * mode.e_y);
        v / v.norm()
    }
}

/// Vacuum modes with unit s amplitude (E_y' = 1) or unit p amplitude (Y = 1).
fn vacuum_states(xi: f64, k: f64, sign: f64) -> [State; 2] {
    let kappa = root(k * k + xi * xi);
    [
        State::new(0.0, 0.0, 1.0, sign * kappa),
        State::new(-sign * kappa, 1.0, 0.0, 0.0),
    ]
}

/// Reflection matrix of a biaxial film for incidence on its lower face.
///
/// `theta` is the azimuth of the in-plane wavevector measured from the
/// film's x axis.
pub fn slab_reflection_biaxial(
    eps: PrincipalValues,
    thickness: Thickness,
    xi: f64,
    k: f64,
    theta: f64,
) -> Result<ReflectionMatrix> {
    slab_reflection_biaxial_at(eps, thickness, Face::Lower, xi, k, theta)
}

/// Reflection matrix of a biaxial film for incidence on the given face.
pub fn slab_reflection_biaxial_at(
    eps: PrincipalValues,
    thickness: Thickness,
    face: Face,
    xi: f64,
    k: f64,
    theta: f64,
) -> Result<ReflectionMatrix> {
    check_point(xi, k)?;
    check_eps(&[eps.xx, eps.yy, eps.zz])?;
    if !theta.is_finite() {
        return Err(Error::Domain(format!("azimuth must be finite, got {theta}")));
    }
    let medium = MediumSystem::new(&eps, xi, k, theta)?;
    // Decaying toward +z: e^{−κz}; growing: e^{+κz}.
    let film_down = medium.modes.map(|m| medium.state(&m, -1.0));
    let film_up = medium.modes.map(|m| medium.state(&m, 1.0));
    let vac_down = vacuum_states(xi, k, -1.0);
    let vac_up = vacuum_states(xi, k, 1.0);

    let solution = match thickness {
        Thickness::HalfSpace => solve_half_space(face, &film_down, &film_up, &vac_down, &vac_up),
        Thickness::Finite(d) => {
            let depth = d / HBAR_C_EV_NM;
            let atten = medium.modes.map(|m| (-m.kappa * depth).exp());
            solve_slab(face, &film_down, &film_up, &atten, &vac_down, &vac_up)
        }
    }
    .ok_or_else(|| {
        Error::Numerical(format!("singular boundary system at xi={xi}, k={k}, theta={theta}"))
    })?;

    // Convert the p amplitude from Y = H_y'/ξ to H_y'. At ξ = 0 the s channel
    // is not driven by p and no p field is generated by s, so both vanish.
    let (sp, ps) = if xi == 0.0 {
        (0.0, 0.0)
    } else {
        (solution[(0, 1)] / xi, solution[(1, 0)] * xi)
    };
    Ok(ReflectionMatrix {
        ss: solution[(0, 0)],
        sp,
        ps,
        pp: solution[(1, 1)],
    })
}

// Unknowns: reflected (s, p), then the two film modes that can exist in a
// half-space. Columns of the result correspond to incident s and p.
fn solve_half_space(
    face: Face,
    film_down: &[State; 2],
    film_up: &[State; 2],
    vac_down: &[State; 2],
    vac_up: &[State; 2],
) -> Option<SMatrix<f64, 2, 2>> {
    // The film fills z > 0 (lower face) or z < 0 (upper face).
    let (incident, reflected, transmitted) = match face {
        Face::Lower => (vac_down, vac_up, film_down),
        Face::Upper => (vac_up, vac_down, film_up),
    };
    let mut m = SMatrix::<f64, 4, 4>::zeros();
    let mut rhs = SMatrix::<f64, 4, 2>::zeros();
    for row in 0..4 {
        m[(row, 0)] = -reflected[0][row];
        m[(row, 1)] = -reflected[1][row];
        m[(row, 2)] = transmitted[0][row];
        m[(row, 3)] = transmitted[1][row];
        rhs[(row, 0)] = incident[0][row];
        rhs[(row, 1)] = incident[1][row];
    }
    let x = m.lu().solve(&rhs)?;
    Some(x.fixed_view::<2, 2>(0, 0).into_owned())
}

// Film on [0, d]. Unknowns: reflected (s, p), decaying film modes referenced
// at z = 0, growing film modes referenced at z = d, transmitted (s, p).
fn solve_slab(
    face: Face,
    film_down: &[State; 2],
    film_up: &[State; 2],
    atten: &[f64; 2],
    vac_down: &[State; 2],
    vac_up: &[State; 2],
) -> Option<SMatrix<f64, 2, 2>> {
    let mut m = SMatrix::<f64, 8, 8>::zeros();
    let mut rhs = SMatrix::<f64, 8, 2>::zeros();
    // Rows 0..4: continuity at z = 0; rows 4..8: continuity at z = d.
    for row in 0..4 {
        for j in 0..2 {
            m[(row, 2 + j)] = film_down[j][row];
            m[(row, 4 + j)] = film_up[j][row] * atten[j];
            m[(row + 4, 2 + j)] = film_down[j][row] * atten[j];
            m[(row + 4, 4 + j)] = film_up[j][row];
        }
    }
    match face {
        Face::Lower => {
            for row in 0..4 {
                for j in 0..2 {
                    m[(row, j)] = -vac_up[j][row];
                    m[(row + 4, 6 + j)] = -vac_down[j][row];
                    rhs[(row, j)] = vac_down[j][row];
                }
            }
        }
        Face::Upper => {
            for row in 0..4 {
                for j in 0..2 {
                    m[(row + 4, j)] = -vac_down[j][row];
                    m[(row, 6 + j)] = -vac_up[j][row];
                    rhs[(row + 4, j)] = vac_up[j][row];
                }
            }
        }
    }
    let x = m.lu().solve(&rhs)?;
    Some(x.fixed_view::<2, 2>(0, 0).into_owned())
}
