//! The Atiyah–Hitchin manifold: integrability of `e^{−αΩ}` against the
//! elliptic volume density, and the closed-form holomorphic coordinate `w`
//! with its uniform bound.
//!
//! The reduced integral runs over `(m, θ, ψ)` with `m = k²`; the free Euler
//! angle contributes the constant factor 2π. The boundary `m → 1` is handled
//! by the substitution `m = 1 − e^{−u}`, under which the complementary
//! parameter `e^{−u}` is known exactly however close to the boundary the
//! quadrature needs to reach, and `D(m) dm = (βγ)(γδ)(βδ)/(4 m K²) du` stays
//! finite (the `1−k²` factors cancel).

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::ah::{ah_params_mc, ah_potential, AhParams};

/// A point of the open dense orbit region: elliptic modulus, Euler angles,
/// and the SU(2) matrix entries `(a, b)` with `|a|² + |b|² = 1`.
#[derive(Clone, Copy, Debug)]
pub struct AhPoint {
    pub k: f64,
    pub theta: f64,
    pub psi: f64,
    pub phi: f64,
    pub a: Complex64,
    pub b: Complex64,
}

/// The coordinate `w = k₁² ā (−12 ā b² k₂ + 4b³ − 4 ā² b)`.
pub fn ah_w_from_params(p: &AhParams, a: Complex64, b: Complex64) -> Complex64 {
    let ab = a.conj();
    let k1sq = p.k1 * p.k1;
    k1sq * ab * (-12.0 * ab * b * b * p.k2 + 4.0 * b * b * b - 4.0 * ab * ab * b)
}

/// `w` at a point, enforcing the SU(2) normalisation to 1e−12.
pub fn ah_w(point: &AhPoint) -> Result<Complex64> {
    let norm = point.a.norm_sqr() + point.b.norm_sqr();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "(a, b) must satisfy |a|²+|b|² = 1, got {norm}"
        )));
    }
    let p = crate::specfun::ah::ah_params(point.k)?;
    Ok(ah_w_from_params(&p, point.a, point.b))
}

/// The uniform bound `|w|² ≤ 16 k₁⁴ (9 k₂² + 2)`.
pub fn ah_w_bound_sq(p: &AhParams) -> f64 {
    let k1sq = p.k1 * p.k1;
    16.0 * k1sq * k1sq * (9.0 * p.k2 * p.k2 + 2.0)
}

/// Result of sampling the `|w|²` bound at one modulus.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct WBoundReport {
    pub k: f64,
    pub samples: u64,
    pub violations: u64,
    /// Largest observed `|w|² / bound` ratio.
    pub max_ratio: f64,
    pub bound_sq: f64,
}

/// Sample `(a, b)` uniformly on the unit 3-sphere and test the bound.
pub fn sample_w_bound(k: f64, samples: u64, seed: u64) -> Result<WBoundReport> {
    let p = crate::specfun::ah::ah_params(k)?;
    let bound = ah_w_bound_sq(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0u64;
    let mut max_ratio = 0.0f64;
    for _ in 0..samples {
        let g = [
            crate::models::standard_normal(&mut rng),
            crate::models::standard_normal(&mut rng),
            crate::models::standard_normal(&mut rng),
            crate::models::standard_normal(&mut rng),
        ];
        let norm = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]).sqrt();
        if norm == 0.0 {
            continue;
        }
        let a = Complex64::new(g[0] / norm, g[1] / norm);
        let b = Complex64::new(g[2] / norm, g[3] / norm);
        let w = ah_w_from_params(&p, a, b);
        let ratio = w.norm_sqr() / bound;
        if ratio > max_ratio {
            max_ratio = ratio;
        }
        if w.norm_sqr() > bound * (1.0 + 1e-12) {
            violations += 1;
        }
    }
    Ok(WBoundReport {
        k,
        samples,
        violations,
        max_ratio,
        bound_sq: bound,
    })
}

/// Outcome of the volume integral `∫ e^{−αΩ} dvol` and the 1-d majorant
/// `∫₀¹ e^{−αγδ/8} β²γ²δ² / (k²(1−k²)K²) dm` from its convergence argument.
#[derive(Clone, Debug, Serialize)]
pub struct AhIntegralOutcome {
    pub value: f64,
    pub majorant: f64,
    /// Value at each refinement level (panel counts double between levels).
    pub value_levels: Vec<f64>,
    pub majorant_levels: Vec<f64>,
    pub converged: bool,
}

const GL8_NODES: [f64; 8] = [
    -0.960_289_856_497_536_2,
    -0.796_666_477_413_626_7,
    -0.525_532_409_916_329,
    -0.183_434_642_495_649_8,
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_2,
];

const GL8_WEIGHTS: [f64; 8] = [
    0.101_228_536_290_376_26,
    0.222_381_034_453_374_47,
    0.313_706_645_877_887_3,
    0.362_683_783_378_362,
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_47,
    0.101_228_536_290_376_26,
];

fn gl_grid(lo: f64, hi: f64, panels: usize) -> Vec<(f64, f64)> {
    let h = (hi - lo) / panels as f64;
    let mut out = Vec::with_capacity(8 * panels);
    for p in 0..panels {
        let c = lo + (p as f64 + 0.5) * h;
        for j in 0..8 {
            out.push((c + 0.5 * h * GL8_NODES[j], 0.5 * h * GL8_WEIGHTS[j]));
        }
    }
    out
}

struct UNode {
    weight: f64,
    params: AhParams,
    /// `m = k²`, accurate near both endpoints.
    m: f64,
    /// `(βγ)(γδ)(βδ)/(4 m K²)`: the volume density times dm/du.
    density_du: f64,
}

fn u_nodes(u_max: f64, panels: usize) -> Vec<UNode> {
    gl_grid(0.0, u_max, panels)
        .into_iter()
        .map(|(u, weight)| {
            let mc = (-u).exp();
            let m = -(-u).exp_m1(); // 1 − e^{−u}, accurate for small u
            let params = ah_params_mc(mc).expect("mc in (0,1)");
            let density_du =
                params.bg * params.gd * params.bd / (4.0 * m * params.big_k * params.big_k);
            UNode {
                weight,
                params,
                m,
                density_du,
            }
        })
        .collect()
}

/// Evaluate the full reduced integral and the 1-d majorant, refining the mesh
/// until three successive doublings agree to the relative tolerance.
pub fn ah_integral(alpha: f64, tol: f64) -> Result<AhIntegralOutcome> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::Domain(format!("α must be positive, got {alpha}")));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    // The u-integrand decays like exp(−α u²/32) · poly(u); this cutoff puts
    // the tail far below any tolerance of interest.
    let u_max = 20.0 + (32.0 * 80.0 / alpha).sqrt();

    let mut value_levels = Vec::new();
    let mut majorant_levels = Vec::new();
    for level in 0..=6u32 {
        let u_panels = 8usize << level;
        let t_panels = 2usize << level;
        let s_points = 16usize << level;
        let nodes = u_nodes(u_max, u_panels);

        // Angle grids: θ by Gauss–Legendre on [0, π], ψ by the trapezoid rule
        // (periodic); Ω depends on the angles through sin²θcos²ψ etc. only.
        let theta_grid = gl_grid(0.0, PI, t_panels);
        let psi_step = 2.0 * PI / s_points as f64;

        let mut full = 0.0f64;
        let mut major = 0.0f64;
        for node in &nodes {
            let p = &node.params;
            major += node.weight
                * (-alpha * p.gd / 8.0).exp()
                * (p.bg * p.gd * p.bd / (node.m * p.big_k * p.big_k));
            let mut angular = 0.0f64;
            for &(theta, tw) in &theta_grid {
                let st = theta.sin();
                let mut psi_sum = 0.0f64;
                for i in 0..s_points {
                    let psi = psi_step * i as f64;
                    psi_sum += (-alpha * ah_potential(p, theta, psi)).exp();
                }
                angular += tw * st * psi_sum * psi_step;
            }
            full += node.weight * node.density_du * angular;
        }
        // Free Euler angle: constant 2π.
        full *= 2.0 * PI;
        value_levels.push(full);
        majorant_levels.push(major);

        if stabilised(&value_levels, tol) && stabilised(&majorant_levels, tol) {
            return Ok(AhIntegralOutcome {
                value: full,
                majorant: major,
                value_levels,
                majorant_levels,
                converged: true,
            });
        }
    }
    let value = *value_levels.last().expect("at least one level ran");
    Err(Error::Convergence {
        partial: value,
        estimate: relative_spread(&value_levels),
    })
}

fn stabilised(levels: &[f64], tol: f64) -> bool {
    if levels.len() < 4 {
        return false;
    }
    let last = &levels[levels.len() - 4..];
    last.windows(2)
        .all(|w| (w[1] - w[0]).abs() <= tol * w[1].abs().max(1e-300))
}

fn relative_spread(levels: &[f64]) -> f64 {
    if levels.len() < 2 {
        return f64::INFINITY;
    }
    let a = levels[levels.len() - 2];
    let b = levels[levels.len() - 1];
    (b - a).abs() / b.abs().max(1e-300)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w_vanishes_without_either_entry() {
        let p = crate::specfun::ah::ah_params(0.6).unwrap();
        let w0 = ah_w_from_params(&p, Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        assert_eq!(w0, Complex64::new(0.0, 0.0));
        let w1 = ah_w_from_params(&p, Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        assert_eq!(w1, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn w_rejects_unnormalised_pairs() {
        let point = AhPoint {
            k: 0.5,
            theta: 0.0,
            psi: 0.0,
            phi: 0.0,
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.5, 0.0),
        };
        assert!(matches!(ah_w(&point), Err(Error::Domain(_))));
    }

    #[test]
    fn w_bound_holds_on_samples() {
        for &k in &[0.3, 0.9, 0.999] {
            let report = sample_w_bound(k, 20_000, 0).unwrap();
            assert_eq!(report.violations, 0, "k = {k}");
            assert!(report.max_ratio <= 1.0);
        }
    }

    #[test]
    fn integral_refines_to_tolerance() {
        let out = ah_integral(1.0, 1e-6).unwrap();
        assert!(out.converged);
        assert!(out.value.is_finite() && out.value > 0.0);
        assert!(out.majorant.is_finite() && out.majorant > 0.0);
        let n = out.value_levels.len();
        for w in out.value_levels[n - 3..].windows(2) {
            assert!((w[1] - w[0]).abs() <= 1e-6 * w[1].abs());
        }
    }

    #[test]
    fn integral_decreases_in_alpha() {
        let one = ah_integral(1.0, 1e-6).unwrap();
        let two = ah_integral(2.0, 1e-6).unwrap();
        assert!(two.value < one.value);
    }

    #[test]
    fn corrected_majorant_dominates_boundary_slice() {
        // Pointwise, Ω ≥ γδ/8 + (βγ+βδ)/4 at every angle (exact algebra), so
        // integrating the right side against the volume density dominates the
        // boundary slice of the full integral. The γδ/8 term alone does not:
        // the angular corners where the potential dips below it win by a
        // bounded factor, so the correction term is what makes the
        // comparison a theorem rather than a numerical accident.
        let alpha = 1.0;
        let m0 = 0.9f64;
        let u0 = -(1.0 - m0).ln();
        let u_max = 20.0 + (32.0 * 80.0f64 / alpha).sqrt();
        let mut full = 0.0f64;
        let mut corrected = 0.0f64;
        let mut plain = 0.0f64;
        for (u, w) in gl_grid(u0, u_max, 192) {
            let mc = (-u).exp();
            let m = -(-u).exp_m1();
            let p = crate::specfun::ah::ah_params_mc(mc).unwrap();
            let dens_du = p.bg * p.gd * p.bd / (4.0 * m * p.big_k * p.big_k);
            let lower = p.gd / 8.0 + (p.bg + p.bd) / 4.0;
            corrected += w * 8.0 * PI * PI * dens_du * (-alpha * lower).exp();
            plain += w * 8.0 * PI * PI * dens_du * (-alpha * p.gd / 8.0).exp();
            let mut ang = 0.0f64;
            for (theta, tw) in gl_grid(0.0, PI, 24) {
                let mut psum = 0.0f64;
                let np = 64;
                for i in 0..np {
                    let psi = 2.0 * PI * i as f64 / np as f64;
                    psum += (-alpha * ah_potential(&p, theta, psi)).exp();
                }
                ang += tw * theta.sin() * psum * 2.0 * PI / np as f64;
            }
            full += w * 2.0 * PI * dens_du * ang;
        }
        assert!(
            corrected >= full,
            "corrected majorant {corrected} should dominate slice {full}"
        );
        // The uncorrected comparison reverses; keep that fact pinned so a
        // regression in the potential formula would surface here.
        assert!(plain < full);
        assert!(full.is_finite() && corrected.is_finite());
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(ah_integral(0.0, 1e-6).is_err());
        assert!(ah_integral(1.0, 0.0).is_err());
    }
}
