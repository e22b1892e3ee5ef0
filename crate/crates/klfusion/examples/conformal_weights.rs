//! Conformal weights as exact rational functions of the formal level
//! `k = kappa + h_dual`, and the identities they satisfy.
//!
//! Run with: `cargo run --example conformal_weights`

use klfusion::levels::{ratfunc_substitute, specialize_float, LevelParam, RatFunc};
use klfusion::objects::{conformal_weight, ff_dual_label, ModuleLabel};
use klfusion::rootdata::{RootSystem, Weight};

fn main() {
    let a1 = RootSystem::new("A1".parse().unwrap()).unwrap();
    let id = LevelParam::identity();
    let t = |l: i64, m: i64| {
        ModuleLabel::principal_t(id, Weight::new(vec![l]), Weight::new(vec![m])).unwrap()
    };

    // Lowest L_0-eigenvalues of the principal W-algebra modules of sl_2.
    println!("A1 conformal weights (k = kappa + 2):");
    for (l, m) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)] {
        let h = conformal_weight(&a1, &t(l, m)).unwrap();
        println!("  h(T_{{{l},{m}}}) = {h}");
    }

    // The two-weight labels are multiplicative up to the pairing:
    // h(T_{l,m}) - h(T_{l,0}) - h(T_{0,m}) = -(l, m), an identity in Q(k).
    let defect = conformal_weight(&a1, &t(1, 1))
        .unwrap()
        .sub(&conformal_weight(&a1, &t(1, 0)).unwrap())
        .sub(&conformal_weight(&a1, &t(0, 1)).unwrap());
    println!("\nbalancing defect h(T_11) - h(T_10) - h(T_01) = {defect}");

    // Feigin-Frenkel duality swaps the weights and inverts k.
    let label = t(2, 1);
    let dual = ff_dual_label(&label).unwrap();
    let lhs = conformal_weight(&a1, &label).unwrap();
    let rhs = conformal_weight(&a1, &dual).unwrap();
    println!("\nFF duality: h({label}) = {lhs}");
    println!("            h({dual}) = {rhs}");
    assert_eq!(lhs, rhs);

    // The same identity spelled with an explicit substitution k -> 1/k.
    let swapped = conformal_weight(&a1, &t(1, 2)).unwrap();
    assert_eq!(lhs, ratfunc_substitute(&swapped, &LevelParam::ff_dual()));

    // Numeric specialization at an irrational level: kappa = sqrt(2) - 2,
    // so k = sqrt(2).
    let kappa = 2f64.sqrt() - 2.0;
    let value = specialize_float(&lhs, kappa, a1.h_dual()).unwrap();
    println!("\nh(T_21) at kappa = sqrt(2) - 2: {value:.6}");

    // The formal variable itself is a rational function too.
    let k = RatFunc::var();
    println!("k at that point: {:.6}", specialize_float(&k, kappa, a1.h_dual()).unwrap());
}
