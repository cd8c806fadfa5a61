//! The fixed-point localisation engine on hand-built data: each isolated
//! fixed point contributes its bundle weight divided by the product of
//! `(1 − t^{d_i} t̃^{w_i})` over the cotangent weights, expanded as a series.
//!
//! Run with: `cargo run --example localization`

use hkq::charring::Weight;
use hkq::genseries::{expand, localize, FixedPointDatum, Monomial, RationalForm};

fn main() {
    // Two fixed points on a one-dimensional base: bundle weights t⁰ and t²,
    // one cotangent weight t each. The sum is (1 + t²)/(1 − t).
    let p1 = FixedPointDatum::new(Monomial::t_power(0, 0), vec![Monomial::t_power(1, 0)]);
    let p2 = FixedPointDatum::new(Monomial::t_power(2, 0), vec![Monomial::t_power(1, 0)]);
    let series = localize(&[p1, p2], 6).unwrap();
    println!("(1 + t²)/(1 − t) up to t⁶:");
    for (d, rank) in series.rank_table() {
        println!("  t^{d}: {rank}");
    }

    // A point with torus weights: the rank-one flat model.
    let flat_point = FixedPointDatum::new(
        Monomial::t_power(0, 1),
        vec![
            Monomial::new(1, Weight(vec![1])),
            Monomial::new(1, Weight(vec![-1])),
        ],
    );
    let graded = localize(std::slice::from_ref(&flat_point), 4).unwrap();
    println!("\ngraded coefficients of 1/((1−t t̃)(1−t t̃⁻¹)):");
    for (d, c) in graded.coeffs() {
        println!(
            "  t^{d}: {} weights, dimension {}",
            c.num_terms(),
            c.eval_at_ones()
        );
    }
    let direct = expand(
        &RationalForm::new(flat_point.bundle.clone(), flat_point.cotangent.clone()),
        4,
    )
    .unwrap();
    println!("matches direct expansion: {}", graded == direct);

    // Signed bundle weights (the super variant): 1/(1−t) − t/(1−t) = 1.
    let plus = FixedPointDatum::new(Monomial::t_power(0, 0), vec![Monomial::t_power(1, 0)]);
    let mut minus = FixedPointDatum::new(Monomial::t_power(1, 0), vec![Monomial::t_power(1, 0)]);
    minus.sign = -1;
    let telescoped = localize(&[plus, minus], 8).unwrap();
    println!(
        "\nsigned contributions telescope to the constant series: {} stored coefficient(s)",
        telescoped.coeffs().count()
    );
}
