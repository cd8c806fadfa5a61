//! Complete elliptic integrals of the first and second kind by the
//! arithmetic-geometric mean, in the modulus convention:
//!
//! ```text
//! K(k) = ∫₀^{π/2} dφ / √(1 − k² sin²φ),   E(k) = ∫₀^{π/2} √(1 − k² sin²φ) dφ.
//! ```
//!
//! Near `k = 1` the quantity that controls accuracy is the complementary
//! parameter `k'² = 1 − k²`; [`elliptic_ke_mc`] takes it directly so callers
//! working in that regime avoid the cancellation in forming `1 − k²`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const MAX_ITER: usize = 64;

/// K and E from the complementary parameter `mc = 1 − k²`, `0 < mc ≤ 1`.
pub fn elliptic_ke_mc(mc: f64) -> Result<(f64, f64)> {
    if !(mc > 0.0 && mc <= 1.0) {
        return Err(Error::Domain(format!(
            "complementary parameter must lie in (0, 1], got {mc}"
        )));
    }
    let mut a = 1.0f64;
    let mut b = mc.sqrt();
    // E = K · (1 − Σ_{n≥0} 2^{n−1} c_n²), c₀ = k.
    let mut csum = 0.5 * (1.0 - mc);
    let mut pow2 = 1.0f64;
    for _ in 0..MAX_ITER {
        let c = 0.5 * (a - b);
        let a_next = 0.5 * (a + b);
        let b_next = (a * b).sqrt();
        csum += pow2 * c * c;
        pow2 *= 2.0;
        a = a_next;
        b = b_next;
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
    }
    let k_val = PI / (2.0 * a);
    let e_val = k_val * (1.0 - csum);
    Ok((k_val, e_val))
}

/// Complete elliptic integral of the first kind, `k ∈ [0, 1)`.
pub fn elliptic_k(k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::Domain(format!(
            "modulus must lie in [0, 1) for K (logarithmic divergence at 1), got {k}"
        )));
    }
    if k == 0.0 {
        return Ok(PI / 2.0);
    }
    Ok(elliptic_ke_mc((1.0 - k) * (1.0 + k))?.0)
}

/// Complete elliptic integral of the second kind, `k ∈ [0, 1]`.
pub fn elliptic_e(k: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&k) {
        return Err(Error::Domain(format!(
            "modulus must lie in [0, 1] for E, got {k}"
        )));
    }
    if k == 0.0 {
        return Ok(PI / 2.0);
    }
    if k == 1.0 {
        return Ok(1.0);
    }
    Ok(elliptic_ke_mc((1.0 - k) * (1.0 + k))?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::quad::integrate_adaptive;

    #[test]
    fn exact_endpoint_values() {
        assert_eq!(elliptic_k(0.0).unwrap(), PI / 2.0);
        assert_eq!(elliptic_e(0.0).unwrap(), PI / 2.0);
        assert_eq!(elliptic_e(1.0).unwrap(), 1.0);
    }

    #[test]
    fn domain_errors() {
        assert!(elliptic_k(1.0).is_err());
        assert!(elliptic_k(-0.1).is_err());
        assert!(elliptic_e(1.5).is_err());
    }

    #[test]
    fn lemniscatic_value() {
        // K(1/√2) = Γ(1/4)² / (4√π); quadrature of the defining integral
        // confirms the frozen digits.
        let k = 1.0 / 2.0f64.sqrt();
        let frozen = 1.854_074_677_301_372;
        assert!((elliptic_k(k).unwrap() - frozen).abs() < 1e-12);
        let quad = integrate_adaptive(
            |phi| 1.0 / (1.0 - k * k * phi.sin().powi(2)).sqrt(),
            0.0,
            PI / 2.0,
            1e-13,
        )
        .unwrap();
        assert!((quad.value - frozen).abs() < 1e-12);
    }

    #[test]
    fn agm_matches_quadrature_on_grid() {
        for i in 1..=50 {
            let k = i as f64 / 51.0;
            let kk = elliptic_k(k).unwrap();
            let ee = elliptic_e(k).unwrap();
            let kq = integrate_adaptive(
                |phi| 1.0 / (1.0 - k * k * phi.sin().powi(2)).sqrt(),
                0.0,
                PI / 2.0,
                1e-13,
            )
            .unwrap()
            .value;
            let eq = integrate_adaptive(
                |phi| (1.0 - k * k * phi.sin().powi(2)).sqrt(),
                0.0,
                PI / 2.0,
                1e-13,
            )
            .unwrap()
            .value;
            assert!(
                (kk - kq).abs() <= 1e-12 * kq.abs(),
                "K at k={k}: {kk} vs {kq}"
            );
            assert!(
                (ee - eq).abs() <= 1e-12 * eq.abs(),
                "E at k={k}: {ee} vs {eq}"
            );
        }
    }

    #[test]
    fn second_kind_below_first_kind() {
        for i in 0..50 {
            let k = i as f64 / 50.0;
            let kk = elliptic_k(k).unwrap();
            let ee = elliptic_e(k).unwrap();
            if k == 0.0 {
                assert_eq!(kk, ee);
            } else {
                assert!(ee < kk, "E < K must be strict at k={k}");
            }
        }
    }

    #[test]
    fn complementary_form_is_accurate_near_one() {
        // K(mc) ≈ ½ ln(16/mc) with O(mc·ln mc) error; at mc = 1e−12 the
        // direct-modulus path could not even represent k distinctly from 1.
        let mc = 1e-12;
        let (kk, ee) = elliptic_ke_mc(mc).unwrap();
        let asymptote = 0.5 * (16.0 / mc).ln();
        assert!((kk - asymptote).abs() < 1e-10);
        assert!((ee - 1.0).abs() < 1e-10);
    }
}
