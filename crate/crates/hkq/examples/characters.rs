//! Character ring basics: Weyl orbits, irreducible characters, tensor
//! product decomposition, and the round trip between multiplicity tables and
//! graded characters.
//!
//! Run with: `cargo run --example characters`

use hkq::charring::{
    decompose_character, dim_irrep, maximal_weight, weyl_character, weyl_group_orbit,
    GroupDescriptor, Weight,
};

fn main() {
    let sp1 = GroupDescriptor::Sp1;
    let sp2 = GroupDescriptor::Sp(2);

    println!("Weyl orbit of (2,1) under the signed permutations of Sp(2):");
    for (image, sign) in weyl_group_orbit(sp2, &Weight(vec![2, 1])).unwrap() {
        println!("  {image}  sign {sign:+}");
    }

    println!("\nIrreducible characters of Sp(1):");
    for d in 0..=4i64 {
        let chi = weyl_character(sp1, &Weight(vec![d])).unwrap();
        println!(
            "  χ_({d}) has {} weights, dimension {}",
            chi.num_terms(),
            dim_irrep(sp1, &Weight(vec![d])).unwrap()
        );
    }

    // Tensor product decomposition: χ_2 ⊗ χ_3 = χ_5 + χ_3 + χ_1.
    let a = weyl_character(sp1, &Weight(vec![2])).unwrap();
    let b = weyl_character(sp1, &Weight(vec![3])).unwrap();
    let product = a.mul(&b);
    println!(
        "\nmaximal weight of χ_2 · χ_3: {}",
        maximal_weight(sp1, &product).unwrap()
    );
    let decomposition = decompose_character(sp1, &product).unwrap();
    println!("χ_2 · χ_3 = {decomposition}");

    // The same machinery at rank two: decompose the square of the vector
    // representation of Sp(2).
    let v = weyl_character(sp2, &Weight(vec![1, 0])).unwrap();
    let square = v.mul(&v);
    println!(
        "\nvector representation of Sp(2) squared: {}",
        decompose_character(sp2, &square).unwrap()
    );
    println!("(dimension check: 4² = Σ mult · dim = 10 + 5 + 1)");
}
