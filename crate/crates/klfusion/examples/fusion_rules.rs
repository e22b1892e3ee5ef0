//! Fusion products of Weyl modules, reduced modules, and principal
//! W-algebra modules.
//!
//! Run with: `cargo run --example fusion_rules`

use klfusion::charalg::{tensor_decompose, weyl_dim};
use klfusion::fusion::{fuse, reduce_label};
use klfusion::levels::LevelParam;
use klfusion::objects::{FTag, ModuleLabel};
use klfusion::rootdata::{RootSystem, Weight};

fn main() {
    let a2 = RootSystem::new("A2".parse().unwrap()).unwrap();
    let id = LevelParam::identity();

    // Tensor coefficients of finite-dimensional modules drive everything:
    // 8 (x) 8 for sl_3.
    let adjoint = Weight::new(vec![1, 1]);
    println!("dim L(1,1) = {}", weyl_dim(&a2, &adjoint).unwrap());
    let decomposition = tensor_decompose(&a2, &adjoint, &adjoint).unwrap();
    println!("L(1,1) (x) L(1,1):");
    for (nu, mult) in decomposition.terms() {
        println!("  {mult} x L({nu})");
    }

    // The same coefficients are the fusion rules of Weyl modules at any
    // irrational level.
    let v = ModuleLabel::weyl(id, adjoint.clone()).unwrap();
    let fused = fuse(&a2, &v, &v).unwrap();
    println!("\nWeyl(1,1) x Weyl(1,1) has {} simple summands", fused.len());

    // Quantum Hamiltonian reduction is a ring isomorphism at this level of
    // data: reducing then fusing equals fusing then reducing.
    let tag = FTag::new("minimal");
    let r = reduce_label(&v, &tag).unwrap();
    let fused_reduced = fuse(&a2, &r, &r).unwrap();
    println!("Reduced(1,1) x Reduced(1,1):");
    for (label, mult) in fused_reduced.terms() {
        println!("  {mult} x {label}");
    }

    // Principal W-algebra modules carry two weights and fuse slot-wise;
    // in particular T_{lambda,0} x T_{0,mu} is the single simple
    // T_{lambda,mu}.
    let left = ModuleLabel::principal_t(id, Weight::new(vec![1, 0]), Weight::new(vec![0, 0]))
        .unwrap();
    let right = ModuleLabel::principal_t(id, Weight::new(vec![0, 0]), Weight::new(vec![0, 1]))
        .unwrap();
    let t_product = fuse(&a2, &left, &right).unwrap();
    println!("\nT(1,0;0,0) x T(0,0;0,1):");
    for (label, mult) in t_product.terms() {
        println!("  {mult} x {label}");
    }

    // Mixed kinds are refused rather than guessed.
    let err = fuse(&a2, &v, &left).unwrap_err();
    println!("\nmixing kinds: {err}");
}
