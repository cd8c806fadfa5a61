//! ADHM data for framed instanton moduli: the complex equation residual, the
//! real moment-map residual, the stability test, and the norm functional.
//!
//! A datum is `(α₀, α₁, a, b)` with `α₀, α₁ : C^k → C^k`, `a : C^k → C^r`
//! (an `r×k` matrix) and `b : C^r → C^k` (a `k×r` matrix). The complex
//! equation reads `[α₀, α₁] + b·a = 0` (the composite through C^r is the
//! only `k×k`-shaped reading), and the real moment map is
//! `[α₀,α₀*] + [α₁,α₁*] + b b* − a* a`.
//!
//! Stability is condition (ii) in finite form: the stacked matrix
//! `(α₀+λ; α₁+μ; a)` is injective for all `λ, μ` unless `α₀` and `α₁` share
//! an eigenvector inside `ker a`; surjectivity of `(λ−α₀, α₁−μ, b)` fails
//! exactly on a shared left eigenvector annihilating `b`. Both reduce to an
//! eigensweep plus an invariant-subspace iteration.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::linalg::{cluster_values, orthonormalize, CMat};
use crate::error::{Error, Result};

mod c64flat {
    //! Matrices on the wire: flat row-major arrays of `[re, im]` pairs.
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = v.iter().map(|z| [z.re, z.im]).collect();
        pairs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        let pairs: Vec<[f64; 2]> = Vec::deserialize(d)?;
        Ok(pairs
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect())
    }
}

/// A matrix quadruple of sizes `(k, r)`; matrices are stored row-major.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AdhmDatum {
    pub k: usize,
    pub r: usize,
    #[serde(with = "c64flat")]
    pub alpha0: Vec<Complex64>,
    #[serde(with = "c64flat")]
    pub alpha1: Vec<Complex64>,
    /// `r×k` matrix of the map `C^k → C^r`.
    #[serde(with = "c64flat")]
    pub a: Vec<Complex64>,
    /// `k×r` matrix of the map `C^r → C^k`.
    #[serde(with = "c64flat")]
    pub b: Vec<Complex64>,
}

impl AdhmDatum {
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::Domain("charge k must be at least 1".into()));
        }
        if self.r < 2 {
            return Err(Error::Domain(format!(
                "framing rank r must be at least 2, got {}",
                self.r
            )));
        }
        let k = self.k;
        let r = self.r;
        let checks = [
            ("alpha0", self.alpha0.len(), k * k),
            ("alpha1", self.alpha1.len(), k * k),
            ("a", self.a.len(), r * k),
            ("b", self.b.len(), k * r),
        ];
        for (name, got, want) in checks {
            if got != want {
                return Err(Error::Dimension(format!(
                    "{name} has {got} entries, expected {want} for (k, r) = ({k}, {r})"
                )));
            }
        }
        Ok(())
    }

    fn mats(&self) -> (CMat, CMat, CMat, CMat) {
        (
            CMat::from_vec(self.k, self.k, self.alpha0.clone()),
            CMat::from_vec(self.k, self.k, self.alpha1.clone()),
            CMat::from_vec(self.r, self.k, self.a.clone()),
            CMat::from_vec(self.k, self.r, self.b.clone()),
        )
    }
}

/// Residuals, stability flag, and the norm functional of a datum.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct AdhmReport {
    /// `‖[α₀,α₁] + b·a‖_F`.
    pub complex_residual: f64,
    /// `‖[α₀,α₀*] + [α₁,α₁*] + b b* − a* a‖_F`.
    pub real_residual: f64,
    pub stable: bool,
    /// `‖α₀‖² + ‖α₁‖² + ‖a‖² + ‖b‖²`.
    pub norm: f64,
}

/// Does some common eigenvector of `(m0, m1)` lie in `ker ann`?
///
/// For each eigenvalue of `m0`, intersect its eigenspace with `ker ann`,
/// then shrink to the largest `m1`-invariant subspace; a nonzero remainder
/// contains an `m1` eigenvector, which is the sought common eigenvector.
fn common_eigenvector_in_kernel(m0: &CMat, m1: &CMat, ann: &CMat, tol: f64) -> bool {
    let k = m0.rows;
    let scale = m0.fro_norm().max(1.0);
    let eigs = cluster_values(&m0.eigenvalues(), 1e-8 * scale);
    for lambda in eigs {
        let mut shifted = m0.clone();
        for i in 0..k {
            shifted[(i, i)] -= lambda;
        }
        let stacked = CMat::stack_vertical(&[&shifted, ann]);
        let w = stacked.nullspace(tol * stacked.fro_norm().max(1.0));
        if w.cols == 0 {
            continue;
        }
        if largest_invariant_subspace(w, m1, tol) > 0 {
            return true;
        }
    }
    false
}

/// Dimension of the largest `b`-invariant subspace of `span(q)`; `q` has
/// orthonormal columns.
fn largest_invariant_subspace(mut q: CMat, b: &CMat, tol: f64) -> usize {
    loop {
        if q.cols == 0 {
            return 0;
        }
        // Component of B·Q orthogonal to span(Q); its kernel (in the Q
        // coordinates) is the next approximation.
        let bq = b.mul(&q);
        let proj = q.mul(&q.adjoint().mul(&bq));
        let resid = bq.sub(&proj);
        let kernel = resid.nullspace(tol * resid.fro_norm().max(1.0));
        if kernel.cols == q.cols {
            return q.cols;
        }
        if kernel.cols == 0 {
            return 0;
        }
        q = orthonormalize(&q.mul(&kernel));
    }
}

/// Evaluate the complex/real residuals, the stability condition, and the
/// norm functional. `tol` scales every numerical rank decision (`1e−9` is
/// the standard choice).
pub fn adhm_check(datum: &AdhmDatum, tol: f64) -> Result<AdhmReport> {
    datum.validate()?;
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let (a0, a1, a, b) = datum.mats();

    let complex_residual = a0.commutator(&a1).add(&b.mul(&a)).fro_norm();
    let real_residual = a0
        .commutator(&a0.adjoint())
        .add(&a1.commutator(&a1.adjoint()))
        .add(&b.mul(&b.adjoint()))
        .sub(&a.adjoint().mul(&a))
        .fro_norm();

    let injective_ok = !common_eigenvector_in_kernel(&a0, &a1, &a, tol);
    let surjective_ok =
        !common_eigenvector_in_kernel(&a0.transpose(), &a1.transpose(), &b.transpose(), tol);

    let norm =
        a0.fro_norm().powi(2) + a1.fro_norm().powi(2) + a.fro_norm().powi(2) + b.fro_norm().powi(2);

    Ok(AdhmReport {
        complex_residual,
        real_residual,
        stable: injective_ok && surjective_ok,
        norm,
    })
}

/// Transform by `g ∈ GL(k)`: `(gα₀g⁻¹, gα₁g⁻¹, a g⁻¹, g b)`.
pub fn group_transform(datum: &AdhmDatum, g: &[Complex64]) -> Result<AdhmDatum> {
    datum.validate()?;
    let k = datum.k;
    if g.len() != k * k {
        return Err(Error::Dimension(format!(
            "group element must be {k}×{k}, got {} entries",
            g.len()
        )));
    }
    let gm = CMat::from_vec(k, k, g.to_vec());
    let ginv = gm
        .inverse()
        .ok_or_else(|| Error::Domain("group element is not invertible".into()))?;
    let (a0, a1, a, b) = datum.mats();
    Ok(AdhmDatum {
        k,
        r: datum.r,
        alpha0: gm.mul(&a0).mul(&ginv).data,
        alpha1: gm.mul(&a1).mul(&ginv).data,
        a: a.mul(&ginv).data,
        b: gm.mul(&b).data,
    })
}

/// A datum with independent standard complex Gaussian entries.
pub fn random_datum<R: rand::Rng>(k: usize, r: usize, rng: &mut R) -> AdhmDatum {
    let mut draw = |len: usize| -> Vec<Complex64> {
        (0..len)
            .map(|_| Complex64::new(super::standard_normal(rng), super::standard_normal(rng)))
            .collect()
    };
    AdhmDatum {
        k,
        r,
        alpha0: draw(k * k),
        alpha1: draw(k * k),
        a: draw(r * k),
        b: draw(k * r),
    }
}

/// A random invertible `k×k` matrix (resampled until well conditioned at the
/// crude determinant level).
pub fn random_group_element<R: rand::Rng>(k: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let g: Vec<Complex64> = (0..k * k)
            .map(|_| Complex64::new(super::standard_normal(rng), super::standard_normal(rng)))
            .collect();
        let m = CMat::from_vec(k, k, g.clone());
        if let Some(inv) = m.inverse() {
            if inv.fro_norm() * m.fro_norm() < 1e3 {
                return g;
            }
        }
    }
}
