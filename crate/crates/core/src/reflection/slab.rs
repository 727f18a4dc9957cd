use super::{check_eps, check_point, root, Thickness};
use crate::error::Result;

// Airy sum of a symmetric slab: r01 (1 − e) / (1 − r01² e), e = e^{−2κ_m d}.
fn airy(r01: f64, round_trip: f64) -> f64 {
    r01 * (1.0 - round_trip) / (1.0 - r01 * r01 * round_trip)
}

/// (r_TE, r_TM) of an isotropic film or half-space.
pub fn slab_reflection_isotropic(eps: f64, thickness: Thickness, xi: f64, k: f64) -> Result<(f64, f64)> {
    check_point(xi, k)?;
    check_eps(&[eps])?;
    let k2 = k * k;
    let xi2 = xi * xi;
    let kappa = root(k2 + xi2);
    let kappa_m = root(k2 + eps * xi2);
    let r_te = (kappa - kappa_m) / (kappa + kappa_m);
    let r_tm = (eps * kappa - kappa_m) / (eps * kappa + kappa_m);
    let e = thickness.round_trip(kappa_m);
    Ok((airy(r_te, e), airy(r_tm, e)))
}

/// (r_TE, r_TM) of a uniaxial film with its optic axis along the normal.
///
/// TE waves see only ε_∥ (ordinary decay constant); TM waves decay with the
/// extraordinary constant κ_e = √((ε_∥/ε_⊥)k² + ε_∥ξ²).
pub fn slab_reflection_uniaxial(
    eps_par: f64,
    eps_perp: f64,
    thickness: Thickness,
    xi: f64,
    k: f64,
) -> Result<(f64, f64)> {
    check_point(xi, k)?;
    check_eps(&[eps_par, eps_perp])?;
    let k2 = k * k;
    let xi2 = xi * xi;
    let kappa = root(k2 + xi2);
    let kappa_o = root(k2 + eps_par * xi2);
    let kappa_e = root((eps_par / eps_perp) * k2 + eps_par * xi2);
    let r_te = (kappa - kappa_o) / (kappa + kappa_o);
    let r_tm = (eps_par * kappa - kappa_e) / (eps_par * kappa + kappa_e);
    Ok((
        airy(r_te, thickness.round_trip(kappa_o)),
        airy(r_tm, thickness.round_trip(kappa_e)),
    ))
}
