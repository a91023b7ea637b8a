//! Splitting a power of a map into a Frobenius part and an independent part.
//!
//! Run with: cargo run --example split

use frobdyn::algebra::fq::FieldSpec;
use frobdyn::ore::OreRing;
use frobdyn::skew::SkewField;
use frobdyn::split::{check_split, split_endomorphism};
use frobdyn::text;

fn main() {
    let f = FieldSpec::prime(2).unwrap();
    let ore = OreRing::new(f.clone());
    let k = SkewField::new(f.clone());
    let m = text::parse_matrix("[[F, 1, 0], [0, F, 0], [F, 0, F + 1]]", |e| {
        text::parse_ore(&ore, e)
    })
    .unwrap();
    let s = split_endomorphism(&k, &m).expect("map is dominant");
    println!(
        "minimal polynomial = {}",
        text::format_center_poly(&f, &s.diagnostics.min_poly)
    );
    for (c, mult) in &s.diagnostics.factors {
        println!(
            "  factor {} (multiplicity {mult}): {}",
            text::format_center_poly(&f, &c.factor),
            c.kind
        );
    }
    println!("jordan blocks = {:?}", s.diagnostics.jordan);
    println!(
        "n = {} (base {}, times p^{})",
        s.n, s.diagnostics.base_n, s.diagnostics.power_a
    );
    println!("frobenius blocks = {:?}", s.blocks);
    println!("independent part has size {}", s.n1());
    println!("h = {}", text::format_upoly(&f, &s.h, "s"));
    println!("P A^n P^-1 = A0 (+) A1: {}", check_split(&k, &m, &s));
}
