//! ADHM data for framed instantons: residuals of the complex and real
//! moment-map equations, the stability test, and gauge invariance.
//!
//! Run with: `cargo run --example instantons`

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hkq::models::adhm::{
    adhm_check, group_transform, random_datum, random_group_element, AdhmDatum,
};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn main() {
    // A charge-one datum sitting exactly on the variety.
    let hand = AdhmDatum {
        k: 1,
        r: 2,
        alpha0: vec![c(0.0)],
        alpha1: vec![c(0.0)],
        a: vec![c(1.0), c(0.0)],
        b: vec![c(0.0), c(1.0)],
    };
    let report = adhm_check(&hand, 1e-9).unwrap();
    println!("hand-built (k, r) = (1, 2) datum:");
    println!("  complex residual = {:.3e}", report.complex_residual);
    println!("  real residual    = {:.3e}", report.real_residual);
    println!("  stable = {}, norm = {}", report.stable, report.norm);

    let zero = AdhmDatum {
        k: 1,
        r: 2,
        alpha0: vec![c(0.0)],
        alpha1: vec![c(0.0)],
        a: vec![c(0.0); 2],
        b: vec![c(0.0); 2],
    };
    println!(
        "\nzero datum is unstable: stable = {}",
        adhm_check(&zero, 1e-9).unwrap().stable
    );

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let random = random_datum(2, 2, &mut rng);
    let random_report = adhm_check(&random, 1e-9).unwrap();
    println!("\nrandom (k, r) = (2, 2) datum:");
    println!(
        "  residuals ({:.4}, {:.4}) — generic points miss the variety",
        random_report.complex_residual, random_report.real_residual
    );
    println!("  stable = {} (generic)", random_report.stable);

    println!("\ngauge orbit: stability and residual class are invariant");
    for trial in 0..3 {
        let g = random_group_element(2, &mut rng);
        let moved = group_transform(&random, &g).unwrap();
        let r = adhm_check(&moved, 1e-9).unwrap();
        println!(
            "  transform {trial}: stable = {}, complex residual {:.4}",
            r.stable, r.complex_residual
        );
    }
}
