//! The numerical kernel: complete elliptic integrals by AGM, their
//! behaviour near the modulus boundary, and adaptive quadrature on improper
//! integrals.
//!
//! Run with: `cargo run --example elliptic`

use std::f64::consts::PI;

use hkq::specfun::{elliptic_e, elliptic_k, elliptic_ke_mc, integrate_adaptive};

fn main() {
    println!("k        K(k)               E(k)");
    for k in [0.0, 0.5, 1.0 / 2.0f64.sqrt(), 0.9, 0.99] {
        println!(
            "{k:<8.5} {:<18.15} {:<18.15}",
            elliptic_k(k).unwrap(),
            elliptic_e(k).unwrap()
        );
    }
    println!("E(1) = {}", elliptic_e(1.0).unwrap());

    // Near k = 1 the complementary form stays accurate: K ≈ ½ ln(16/(1−k²)).
    println!("\ncomplementary parameter form near the boundary:");
    for mc in [1e-4, 1e-8, 1e-12] {
        let (kk, ee) = elliptic_ke_mc(mc).unwrap();
        println!(
            "  1−k² = {mc:.0e}: K = {kk:.10}  (½ln(16/mc) = {:.10}),  E = {ee:.12}",
            0.5 * (16.0 / mc).ln()
        );
    }

    println!("\nadaptive quadrature:");
    let gauss =
        integrate_adaptive(|x| x * x * (-x * x / 32.0).exp(), 0.0, f64::INFINITY, 1e-11).unwrap();
    println!(
        "  ∫₀^∞ x² e^(−x²/32) dx = {:.12}  (closed form 32√(2π) = {:.12})",
        gauss.value,
        32.0 * (2.0 * PI).sqrt()
    );
    let singular = integrate_adaptive(|u: f64| u.ln().powi(2) / u.sqrt(), 0.0, 1.0, 1e-9).unwrap();
    println!(
        "  ∫₀¹ ln²(u)/√u du      = {:.12}  (closed form 16), estimate {:.1e}",
        singular.value, singular.estimate
    );
}
