//! The discriminant group `P/Q` with its quadratic forms, and the pointed
//! braided categories `Vect^m_{P/Q}` built on them.
//!
//! Run with: `cargo run --example discriminant_forms`

use klfusion::equivcat::vect_m;
use klfusion::fusion::monodromy_exponent;
use klfusion::rootdata::{RootSystem, Weight};

fn main() {
    for name in ["A1", "A2", "A3", "D4", "E6", "E7", "E8"] {
        let sys = RootSystem::new(name.parse().unwrap()).unwrap();
        println!("{name}: |P/Q| = {}", sys.disc_order());
    }

    let a3 = RootSystem::new("A3".parse().unwrap()).unwrap();
    println!("\nA3 discriminant form (m = 1):");
    for rep in a3.disc_reps() {
        let class = a3.disc_class(rep);
        println!(
            "  class {class}: q-exponent {}",
            a3.disc_quadratic(&class, 1)
        );
    }

    // Classes add; the bilinear form is the polarization of q.
    let c1 = a3.disc_class(&Weight::new(vec![1, 0, 0]));
    let c2 = a3.disc_class(&Weight::new(vec![0, 0, 1]));
    println!(
        "\n[{}] + [{}] = {}",
        c1.rep(),
        c2.rep(),
        a3.disc_add(&c1, &c2)
    );
    println!("bilinear({c1}, {c2}) = {}", a3.disc_bilinear(&c1, &c2));

    // Vect^m packages the classes as a pointed braided category fragment:
    // group-law fusion, quadratic twist exponents, scalar monodromy.
    let v = vect_m(&a3, 2);
    println!("\nVect^2 on A3:");
    for s in v.simples() {
        println!(
            "  {s}: twist exponent {}",
            v.twist_of(s).unwrap()
        );
    }
    let s1 = &v.simples()[1];
    let s2 = &v.simples()[2];
    println!(
        "monodromy({s1}, {s2}) = {:?}",
        monodromy_exponent(&a3, s1, s2).unwrap()
    );

    // m = 0 is the trivial braiding: every exponent vanishes.
    let v0 = vect_m(&a3, 0);
    assert!(v0.simples().iter().all(|s| v0.twist_of(s).unwrap().is_zero()));
    println!("\nVect^0 has trivial twists and monodromy, as it must.");
}
