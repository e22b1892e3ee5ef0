//! Coset branching rules: the Goddard-Kent-Olive decomposition and its Urod
//! variants, truncated visibly by the height functional.
//!
//! Run with: `cargo run --example branching_rules`

use klfusion::fusion::{branch_gko, branch_urod_reduced, branch_urod_t};
use klfusion::objects::FTag;
use klfusion::rootdata::{RootSystem, Weight};

fn main() {
    let a1 = RootSystem::new("A1".parse().unwrap()).unwrap();

    // Weyl(lambda) at the shifted level tensored with the lattice coset
    // V_{Q+mu} decomposes over all dominant nu congruent to lambda + mu
    // mod Q, with multiplicity one, paired with T_{nu,lambda} at the coset
    // level. The class is infinite, so every call truncates and says so.
    let lambda = Weight::new(vec![1]);
    let mu = Weight::new(vec![1]);
    let sum = branch_gko(&a1, &lambda, &mu, 3).unwrap();
    println!(
        "GKO branching of Weyl({lambda}) (x) V_Q+{mu} (bound 3, truncated = {}):",
        sum.truncated
    );
    for (label, mult) in sum.terms() {
        println!("  {mult} x {label}");
    }

    // The Urod variant replaces the Weyl factor by its reduction along an
    // arbitrary nilpotent; the index set is identical.
    let tag = FTag::new("subregular");
    let urod = branch_urod_reduced(&a1, &lambda, &mu, &tag, 3).unwrap();
    println!("\nUrod branching with tag `{tag}`:");
    for (label, mult) in urod.terms() {
        println!("  {mult} x {label}");
    }

    // For principal T-modules both output factors are T-modules.
    let a2 = RootSystem::new("A2".parse().unwrap()).unwrap();
    let t_branch = branch_urod_t(
        &a2,
        &Weight::new(vec![1, 0]),
        &Weight::new(vec![0, 0]),
        &Weight::new(vec![0, 1]),
        5,
    )
    .unwrap();
    println!("\nA2 T-module branching (classes step through P/Q = Z/3):");
    for (label, mult) in t_branch.terms() {
        println!("  {mult} x {label}");
    }
    println!(
        "terms: {}, truncated: {}, bound: {:?}",
        t_branch.len(),
        t_branch.truncated,
        t_branch.bound
    );
}
