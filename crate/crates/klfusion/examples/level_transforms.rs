//! The Moebius calculus of level parameters: shifted, coset, opposite,
//! Feigin-Frenkel dual, and m-shifted levels as integer 2x2 matrices acting
//! on the formal variable `k = kappa + h_dual`.
//!
//! Run with: `cargo run --example level_transforms`

use klfusion::frac::frac;
use klfusion::levels::{
    level_ff_dual, level_gko, level_m, level_opposite, level_shift, ratfunc_substitute,
    specialize_rational, LevelParam, RatFunc,
};

fn main() {
    let id = LevelParam::identity();

    println!("named transforms of k:");
    for (name, p) in [
        ("identity ", id),
        ("shift    ", level_shift(&id)),
        ("gko      ", level_gko(&id)),
        ("opposite ", level_opposite(&id)),
        ("ff_dual  ", level_ff_dual(&id)),
        ("m_shift 2", level_m(&id, 2)),
    ] {
        println!("  {name} {p}  k=3 -> {:?}", p.eval(frac(3, 1)));
    }

    // gko and ff_dual are involutions; m-shifts add.
    assert_eq!(level_gko(&level_gko(&id)), id);
    assert_eq!(level_ff_dual(&level_ff_dual(&id)), id);
    assert_eq!(level_m(&level_m(&id, 3), -1), level_m(&id, 2));

    // The coset level has the fixed point k = 2 (1/2 + 1/2 = 1).
    let gko = level_gko(&id);
    assert_eq!(gko.eval(frac(2, 1)), Some(frac(2, 1)));
    println!("\ngko fixed point: k = 2 -> {:?}", gko.eval(frac(2, 1)));

    // Transforms substitute exactly into rational functions of k.
    let h = RatFunc::from_laurent(1, &[frac(3, 4), frac(-1, 2)]); // 3/(4k) - 1/2
    println!("\nh        = {h}");
    println!("h at gko = {}", ratfunc_substitute(&h, &gko));
    println!("h at 1/k = {}", ratfunc_substitute(&h, &LevelParam::ff_dual()));

    // Numeric specialization: non-strict mode evaluates at rational kappa,
    // strict mode refuses it (the structural identities need kappa
    // irrational).
    let val = specialize_rational(&h, frac(1, 2), 2, false).unwrap();
    println!("\nh at kappa = 1/2 (h_dual = 2): {val}");
    let refused = specialize_rational(&h, frac(1, 2), 2, true).unwrap_err();
    println!("strict mode: {refused}");
}
