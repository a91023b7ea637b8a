//! F-linear independence of rational functions and construction of
//! points independent from given ones.
//!
//! Run with: cargo run --example independence

use frobdyn::algebra::fq::FieldSpec;
use frobdyn::algebra::mpoly::MRatFunField;
use frobdyn::algebra::ring::Ring;
use frobdyn::classify::{check_independence, construct_independent_points};
use frobdyn::text;

fn main() {
    let f = FieldSpec::new(2, 2, None).unwrap();
    let mf = MRatFunField::new(f.clone(), 1);
    let t = mf.var(0);
    let deltas = vec![t.clone(), mf.pow(&t, 3)];
    let gammas = construct_independent_points(&mf, 2, &deltas);
    for g in &gammas {
        println!("constructed {}", text::format_mratfun(&mf, g));
    }
    let res = check_independence(&mf, &gammas, &deltas, 4, 2);
    println!(
        "independent from the deltas up to degree {}: {}",
        res.degree, res.independent
    );

    let planted = vec![t.clone(), mf.add(&mf.frobenius(&t, 1), &t)];
    let res = check_independence(&mf, &planted, &[], 3, 1);
    println!("t and t^2 + t independent: {}", res.independent);
    if let Some(rel) = res.relation {
        let ops: Vec<String> = rel.p.iter().map(|p| text::format_ore(&f, p)).collect();
        println!("relation operators: {}", ops.join(", "));
    }
}
