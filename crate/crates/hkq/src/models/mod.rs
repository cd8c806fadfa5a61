//! The worked example geometries, reduced to data for the exact and numeric
//! engines together with their verification routines.

pub mod adhm;
pub mod atiyah_hitchin;
pub mod flat;
mod linalg;
pub mod taubnut;

use std::f64::consts::PI;

/// One standard normal deviate by Box–Muller; deterministic given the stream.
pub(crate) fn standard_normal<R: rand::Rng>(rng: &mut R) -> f64 {
    loop {
        let u1: f64 = rng.gen();
        if u1 > f64::MIN_POSITIVE {
            let u2: f64 = rng.gen();
            return (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos();
        }
    }
}
