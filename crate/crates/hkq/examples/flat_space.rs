//! Flat quaternionic space: the graded rank series computed three ways
//! (fixed-point localisation, closed-form expansion, rebuilt from the
//! multiplicity ledger), the dimension table, and Gaussian pairings.
//!
//! Run with: `cargo run --example flat_space`

use hkq::charring::substitute_characters;
use hkq::genseries::{expand, localize};
use hkq::models::flat::{
    dimension_table, flat_fixed_points, g_series, gaussian_pairing, hprime_rational, FlatModel,
};

fn main() {
    let n = 2;
    let order = 8;
    let model = FlatModel::new(n, 1.0).unwrap();

    let localised = localize(&flat_fixed_points(&model), order).unwrap();
    let closed = expand(&hprime_rational(n), order).unwrap();
    let rebuilt = substitute_characters(model.group(), &g_series(&model, order)).unwrap();
    println!("localisation == closed form: {}", localised == closed);
    println!("localisation == ledger route: {}", localised == rebuilt);

    println!("\nper-degree ranks (t̃ := 1), n = {n}:");
    let vars: Vec<usize> = (0..n).collect();
    for (d, rank) in localised.specialize(&vars).unwrap().rank_table() {
        println!("  d = {d}: rank {rank}");
    }

    println!("\ndimension table (even part vs the alternative bookkeeping):");
    println!("{:>3} {:>10} {:>14}", "d", "even", "stated_even");
    for row in dimension_table(&model, 6).unwrap() {
        println!("{:>3} {:>10} {:>14}", row.d, row.even, row.stated_even);
    }

    let m1 = FlatModel::new(1, 1.0).unwrap();
    println!("\nGaussian pairings at n = 1 (ħ = 1):");
    println!(
        "  ⟨ψ₀, ψ₀⟩          = {:.6}",
        gaussian_pairing(&m1, &[0, 0], &[0, 0]).unwrap()
    );
    println!(
        "  ⟨z₁ψ₀, z₁ψ₀⟩      = {:.6}",
        gaussian_pairing(&m1, &[1, 0], &[1, 0]).unwrap()
    );
    println!(
        "  ⟨z₁ψ₀, z₂ψ₀⟩      = {:.6}  (orthogonal)",
        gaussian_pairing(&m1, &[1, 0], &[0, 1]).unwrap()
    );
}
