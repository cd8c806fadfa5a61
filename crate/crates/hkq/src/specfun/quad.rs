//! Adaptive Gauss–Kronrod quadrature with support for improper endpoints.
//!
//! The 7–15 point rule never evaluates the interval endpoints, so endpoint
//! singularities are handled by plain bisection refinement. Infinite
//! endpoints are mapped to a finite interval first. Refinement always splits
//! the interval with the largest error estimate, breaking ties by insertion
//! order, so the evaluation sequence is deterministic for a given tolerance.

use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Nodes of the 15-point Kronrod rule on [-1, 1] (positive half).
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064786,
    0.204432940075298,
    0.209482141084728,
];

/// Gauss weights of the embedded 7-point rule (odd-index nodes of `XGK`).
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

#[derive(Clone, Copy, Debug)]
pub struct QuadResult {
    pub value: f64,
    /// Final error estimate (sum of per-interval Gauss/Kronrod differences).
    pub estimate: f64,
    pub evaluations: usize,
}

/// QUADPACK-style error rescaling: distrust raw |K − G| on panels where the
/// integrand still varies strongly (`resasc` large relative to the raw
/// difference) and floor the estimate at the rounding level of `resabs`.
fn rescale_error(err: f64, resabs: f64, resasc: f64) -> f64 {
    let mut scaled = err.abs();
    if resasc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / resasc).powf(1.5);
        scaled = if scale < 1.0 { resasc * scale } else { resasc };
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * resabs);
    }
    scaled
}

/// One 15-point panel: returns (kronrod, rescaled error estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut fv = [0.0f64; 15];
    fv[7] = fc;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut resabs = WGK[7] * fc.abs();
    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = kronrod * 0.5;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    let habs = h.abs();
    kronrod *= h;
    gauss *= h;
    resabs *= habs;
    resasc *= habs;
    (kronrod, rescale_error(kronrod - gauss, resabs, resasc))
}

struct Interval {
    err: f64,
    seq: usize,
    a: f64,
    b: f64,
    val: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.seq == other.seq
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Largest error first; earliest insertion breaks ties.
        self.err
            .total_cmp(&other.err)
            .then(other.seq.cmp(&self.seq))
    }
}

const MAX_INTERVALS: usize = 8192;

fn adaptive_finite<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    let mut heap = BinaryHeap::new();
    let (val, err) = gk15(f, a, b);
    let mut total_val = val;
    let mut total_err = err;
    let mut evals = 15usize;
    let mut seq = 0usize;
    heap.push(Interval {
        err,
        seq,
        a,
        b,
        val,
    });

    while total_err > tol.max(tol * total_val.abs()) {
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::Convergence {
                partial: total_val,
                estimate: total_err,
            });
        }
        let worst = heap.pop().expect("heap is nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            // Interval at floating-point resolution; cannot refine further.
            return Err(Error::Convergence {
                partial: total_val,
                estimate: total_err,
            });
        }
        let (lv, le) = gk15(f, worst.a, mid);
        let (rv, re) = gk15(f, mid, worst.b);
        evals += 30;
        total_val += lv + rv - worst.val;
        total_err += le + re - worst.err;
        seq += 1;
        heap.push(Interval {
            err: le,
            seq,
            a: worst.a,
            b: mid,
            val: lv,
        });
        seq += 1;
        heap.push(Interval {
            err: re,
            seq,
            a: mid,
            b: worst.b,
            val: rv,
        });
    }
    Ok(QuadResult {
        value: total_val,
        estimate: total_err,
        evaluations: evals,
    })
}

/// Integrate `f` over `(a, b)` to the requested tolerance (interpreted as
/// whichever of absolute or relative is larger). Either endpoint may be
/// infinite; integrable endpoint singularities are refined by bisection.
///
/// Non-convergence within the refinement budget yields
/// [`Error::Convergence`] carrying the partial value and its estimate.
///
/// Caveat: for a singularity sitting at an endpoint whose neighbourhood the
/// floating-point grid cannot resolve (e.g. an inverse-square-root blowup at
/// `x = 1`), the mass within one ulp of the endpoint is invisible to any
/// sample-based rule; accuracy then bottoms out near `1e−4` of the total for
/// such integrands, and estimates tighter than that are not meaningful.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            estimate: 0.0,
            evaluations: 0,
        });
    }
    let clean = |x: f64| if x.is_finite() { x } else { 0.0 };
    match (a.is_infinite(), b.is_infinite()) {
        (false, false) => adaptive_finite(&|x| clean(f(x)), a, b, tol),
        (false, true) => {
            // x = a + t/(1−t), t ∈ (0, 1).
            let g = |t: f64| {
                let u = 1.0 - t;
                clean(f(a + t / u) / (u * u))
            };
            adaptive_finite(&g, 0.0, 1.0, tol)
        }
        (true, false) => {
            // x = b − t/(1−t), t ∈ (0, 1).
            let g = |t: f64| {
                let u = 1.0 - t;
                clean(f(b - t / u) / (u * u))
            };
            adaptive_finite(&g, 0.0, 1.0, tol)
        }
        (true, true) => {
            // x = t/(1−t²), t ∈ (−1, 1).
            let g = |t: f64| {
                let u = 1.0 - t * t;
                clean(f(t / u) * (1.0 + t * t) / (u * u))
            };
            adaptive_finite(&g, -1.0, 1.0, tol)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn constant_on_unit_interval() {
        let r = integrate_adaptive(|_| 1.0, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn gaussian_second_moment_on_half_line() {
        // ∫₀^∞ x² e^{−x²/32} dx = σ³ √(2π) / 2 with σ = 4, i.e. 32 √(2π).
        let r = integrate_adaptive(|x| x * x * (-x * x / 32.0).exp(), 0.0, f64::INFINITY, 1e-11)
            .unwrap();
        let exact = 32.0 * (2.0 * PI).sqrt();
        assert!(
            (r.value - exact).abs() < 1e-9 * exact,
            "{} vs {}",
            r.value,
            exact
        );
    }

    #[test]
    fn endpoint_singular_log_squared() {
        // Substituting u = 1 − x: ∫₀¹ ln²(u) u^{−1/2} du = 2/(1/2)³ = 16.
        let f = |x: f64| {
            let u = 1.0 - x;
            (u.ln()).powi(2) / u.sqrt()
        };
        let r = integrate_adaptive(f, 0.0, 1.0, 1e-4).unwrap();
        assert!(
            (r.value - 16.0).abs() <= r.estimate.max(1e-4),
            "{}",
            r.value
        );
        assert!((r.value - 16.0).abs() < 2e-4);
        // Deep refinement stays finite and stable; the residual ~3e−5 is the
        // sub-ulp tail of the singularity at x = 1 (see the module caveat).
        let deep = integrate_adaptive(f, 0.0, 1.0, 1e-10).unwrap();
        assert!((deep.value - 16.0).abs() < 1e-4, "{}", deep.value);
        // In the orientation with the singularity at 0 the tail is resolvable
        // and the requested tolerance is genuinely met.
        let flipped =
            integrate_adaptive(|u: f64| u.ln().powi(2) / u.sqrt(), 0.0, 1.0, 1e-9).unwrap();
        assert!((flipped.value - 16.0).abs() < 1e-7, "{}", flipped.value);
    }

    #[test]
    fn doubly_infinite_gaussian() {
        let r = integrate_adaptive(|x| (-x * x).exp(), f64::NEG_INFINITY, f64::INFINITY, 1e-12)
            .unwrap();
        assert!((r.value - PI.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn budget_exhaustion_reports_partial() {
        // A tolerance below machine precision cannot be met; the refinement
        // budget runs out and the partial value comes back with the error.
        let err = integrate_adaptive(|x| x.sqrt(), 0.0, 1.0, 1e-300).unwrap_err();
        match err {
            Error::Convergence { partial, estimate } => {
                assert!((partial - 2.0 / 3.0).abs() < 1e-12);
                assert!(estimate > 0.0);
            }
            other => panic!("expected convergence error, got {other}"),
        }
    }

    #[test]
    fn refinement_is_deterministic() {
        let run = || {
            integrate_adaptive(|x| (x.sin() / (x + 0.1)).abs(), 0.0, 20.0, 1e-10)
                .unwrap()
                .value
        };
        assert_eq!(run().to_bits(), run().to_bits());
    }
}
