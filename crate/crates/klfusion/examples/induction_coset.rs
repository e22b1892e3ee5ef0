//! The induction/coset calculus: inducing T-modules along the coset
//! extension, the left-inverse property of the commutant functor, and
//! Frobenius-reciprocity multiplicities.
//!
//! Run with: `cargo run --example induction_coset`

use klfusion::fusion::{
    branch_gko, coset_com, frobenius_dim, fuse, induce_f, induce_v, induce_v_sum,
};
use klfusion::levels::{level_gko, LevelParam};
use klfusion::objects::ModuleLabel;
use klfusion::rootdata::{RootSystem, Weight};

fn main() {
    let a2 = RootSystem::new("A2".parse().unwrap()).unwrap();
    let gko = level_gko(&LevelParam::identity());

    // Induction sends T_{0,lambda} at the coset level to the simple
    // Weyl(lambda) (x) V_{lambda*}.
    let t = ModuleLabel::principal_t(gko, Weight::new(vec![0, 0]), Weight::new(vec![1, 0]))
        .unwrap();
    let induced = induce_v(&a2, &t).unwrap();
    println!("F_V({t}) = {induced}");

    // The coset functor is a left inverse: expand the induced module back
    // through the branching rule and extract the commutant column.
    let ModuleLabel::Pair { left, right } = &induced else {
        unreachable!()
    };
    let (ModuleLabel::Weyl { lambda, .. }, ModuleLabel::Lattice { delta, .. }) =
        (&**left, &**right)
    else {
        unreachable!()
    };
    let expanded = branch_gko(&a2, lambda, delta.rep(), 6).unwrap();
    println!("\nbranching the induced module back (bound 6):");
    for (label, mult) in expanded.terms() {
        println!("  {mult} x {label}");
    }
    let com = coset_com(&expanded).unwrap();
    println!("commutant column: {:?}", com.terms().keys().collect::<Vec<_>>());
    assert_eq!(com.terms().keys().next().unwrap(), &t);

    // Frobenius reciprocity at the dimension level: multiplicities are
    // plain lookups in the decomposition.
    let member = expanded.terms().keys().next().unwrap().clone();
    println!(
        "\nHom(F(T), {member}) has dimension {}",
        frobenius_dim(&expanded, &member)
    );

    // Induction is monoidal at the coefficient level.
    let s = ModuleLabel::principal_t(gko, Weight::new(vec![0, 0]), Weight::new(vec![0, 1]))
        .unwrap();
    let route_one = induce_v_sum(&a2, &fuse(&a2, &t, &s).unwrap()).unwrap();
    let route_two = fuse(
        &a2,
        &induce_v(&a2, &t).unwrap(),
        &induce_v(&a2, &s).unwrap(),
    )
    .unwrap();
    assert_eq!(route_one.terms(), route_two.terms());
    println!("\ninduce(fuse) = fuse(induce) on {} terms", route_one.len());

    // The reduced version inputs a pair of T-modules at paired levels and
    // lands on T_{lambda,mu} at the shifted level.
    let pair = ModuleLabel::pair(
        ModuleLabel::principal_t(
            LevelParam::identity(),
            Weight::new(vec![0, 0]),
            Weight::new(vec![0, 1]),
        )
        .unwrap(),
        ModuleLabel::principal_t(gko, Weight::new(vec![0, 0]), Weight::new(vec![1, 0]))
            .unwrap(),
    )
    .unwrap();
    println!("\nF_f({pair}) = {}", induce_f(&a2, &pair).unwrap());
}
