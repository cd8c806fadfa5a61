//! Metric coefficients of the Atiyah–Hitchin manifold as functions of the
//! elliptic modulus.
//!
//! The squared frame coefficients are determined by the pairwise products
//!
//! ```text
//! βγ = −EK,   γδ = −EK + K²,   δβ = −EK + (1−k²)K²,
//! ```
//!
//! with `βγ ≤ 0`, `γδ ≥ 0`, `βδ ≤ 0` on `k ∈ (0, 1)`; the squares are
//! recovered as ratio products, e.g. `β² = (βγ)(βδ)/(γδ)`. Only squares and
//! products enter the potential and the volume density, so the individual
//! signs of β, γ, δ are never needed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::elliptic::elliptic_ke_mc;

/// Elliptic-integral-derived coefficients at modulus `k`.
///
/// Field naming: `big_k`/`big_e` are K(k), E(k); `bg`, `gd`, `bd` are the
/// pairwise products βγ, γδ, βδ; `b2`, `g2`, `d2` the squares β², γ², δ²;
/// `k1`, `k2` the spectral-curve parameters.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct AhParams {
    pub k: f64,
    /// Complementary parameter 1 − k², kept exactly as supplied.
    pub mc: f64,
    #[serde(rename = "K")]
    pub big_k: f64,
    #[serde(rename = "E")]
    pub big_e: f64,
    pub bg: f64,
    pub gd: f64,
    pub bd: f64,
    pub b2: f64,
    pub g2: f64,
    pub d2: f64,
    pub k1: f64,
    pub k2: f64,
}

/// Coefficients at modulus `k ∈ (0, 1)`.
pub fn ah_params(k: f64) -> Result<AhParams> {
    if !(k > 0.0 && k < 1.0) {
        return Err(Error::Domain(format!(
            "modulus must lie in (0, 1), got {k}"
        )));
    }
    ah_params_mc_with_k((1.0 - k) * (1.0 + k), k)
}

/// Coefficients from the complementary parameter `mc = 1 − k² ∈ (0, 1)`.
///
/// Preferred near `k = 1`, where forming `1 − k²` from `k` would cancel.
pub fn ah_params_mc(mc: f64) -> Result<AhParams> {
    if !(mc > 0.0 && mc < 1.0) {
        return Err(Error::Domain(format!(
            "complementary parameter must lie in (0, 1), got {mc}"
        )));
    }
    ah_params_mc_with_k(mc, (1.0 - mc).sqrt())
}

fn ah_params_mc_with_k(mc: f64, k: f64) -> Result<AhParams> {
    let (big_k, big_e) = elliptic_ke_mc(mc)?;
    // γδ = K(K−E) and βδ = K(mc·K − E): both forms avoid cancellation where
    // the factors are large.
    let bg = -big_e * big_k;
    let gd = big_k * (big_k - big_e);
    let bd = big_k * (mc * big_k - big_e);
    let b2 = bg * bd / gd;
    let g2 = bg * gd / bd;
    let d2 = gd * bd / bg;
    let k1 = (k * mc.sqrt()).sqrt() * big_k / 2.0;
    let k2 = (1.0 - 2.0 * k * k) / (3.0 * k * mc.sqrt());
    Ok(AhParams {
        k,
        mc,
        big_k,
        big_e,
        bg,
        gd,
        bd,
        b2,
        g2,
        d2,
        k1,
        k2,
    })
}

/// The rotation-invariant Kähler potential at Euler angles `(θ, ψ)`:
///
/// ```text
/// Ω = (βγ + γδ + δβ)/8 + (γδ sin²θ cos²ψ + δβ sin²θ sin²ψ + γβ cos²θ)/8.
/// ```
pub fn ah_potential(p: &AhParams, theta: f64, psi: f64) -> f64 {
    let st2 = theta.sin().powi(2);
    let ct2 = theta.cos().powi(2);
    let cp2 = psi.cos().powi(2);
    let sp2 = psi.sin().powi(2);
    (p.bg + p.gd + p.bd) / 8.0 + (p.gd * st2 * cp2 + p.bd * st2 * sp2 + p.bg * ct2) / 8.0
}

/// Exact-algebra lower bound for the potential, valid at every angle:
///
/// ```text
/// Ω − γδ/8 ≥ (βγ(1+cos²θ) + βδ(1+sin²θ sin²ψ))/8 ≥ (βγ + βδ)/4,
/// ```
///
/// obtained by dropping the nonnegative `γδ sin²θ cos²ψ` term. Near `k = 1`
/// the right side is of lower order than `γδ`, which is how the potential
/// dominates the 1-d majorant there.
pub fn ah_potential_lower_bound(p: &AhParams, theta: f64, psi: f64) -> f64 {
    let st2 = theta.sin().powi(2);
    let ct2 = theta.cos().powi(2);
    let sp2 = psi.sin().powi(2);
    p.gd / 8.0 + (p.bg * (1.0 + ct2) + p.bd * (1.0 + st2 * sp2)) / 8.0
}

/// Volume density in the coordinate `m = k²`:
///
/// ```text
/// β²γ²δ² / (4 k² (1−k²) K²),   with β²γ²δ² = (βγ)(γδ)(βδ).
/// ```
pub fn ah_volume_density(p: &AhParams) -> f64 {
    p.bg * p.gd * p.bd / (4.0 * p.k * p.k * p.mc * p.big_k * p.big_k)
}
