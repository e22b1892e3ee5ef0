//! Weight multiplicities, dimensions, tensor decompositions, the
//! brute-force oracle, and the on-disk character-table cache.
//!
//! Run with: `cargo run --example character_tables`

use klfusion::charalg::{
    brute_tensor_oracle, tensor_decompose, weight_multiplicities, weyl_dim, CharCache,
};
use klfusion::rootdata::{RootSystem, Weight};

fn main() {
    let a2 = RootSystem::new("A2".parse().unwrap()).unwrap();

    // Dominant-weight multiplicities by the Freudenthal recursion.
    let lambda = Weight::new(vec![2, 1]);
    let table = weight_multiplicities(&a2, &lambda).unwrap();
    println!("dominant multiplicities of L({lambda}):");
    for (mu, mult) in table.dominant_multiplicities() {
        println!("  m({mu}) = {mult}");
    }
    println!(
        "dim by orbit sum = {}, by Weyl formula = {}",
        table.dimension(&a2),
        weyl_dim(&a2, &lambda).unwrap()
    );

    // Littlewood-Richardson coefficients via the Klimyk rule, cross-checked
    // against the character-product oracle (alternating Weyl sums, no
    // Freudenthal anywhere in its path).
    let mu = Weight::new(vec![1, 1]);
    let fast = tensor_decompose(&a2, &lambda, &mu).unwrap();
    let brute = brute_tensor_oracle(&a2, &lambda, &mu).unwrap();
    assert_eq!(fast, brute);
    println!("\nL({lambda}) (x) L({mu}):");
    for (nu, c) in fast.terms() {
        println!("  {c} x L({nu})");
    }

    // Tables persist in a versioned line-based format, one file per
    // (type, highest weight).
    let dir = std::env::temp_dir().join("klfusion-chartab-demo");
    a2.char_cache().set_dir(Some(dir.clone()));
    let big = Weight::new(vec![3, 2]);
    let _ = weight_multiplicities(&a2, &big).unwrap();
    let file = dir.join("A2_3_2.chartab");
    println!("\ncache file {}:", file.display());
    print!("{}", std::fs::read_to_string(&file).unwrap());

    // The encoded form is what the decoder accepts.
    let text = CharCache::encode(&a2, &weight_multiplicities(&a2, &big).unwrap());
    assert!(CharCache::decode(&a2, &big, &text).is_some());
}
