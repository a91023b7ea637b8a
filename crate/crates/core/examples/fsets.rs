//! Enumerating F-sets and intersecting an F_p[F]-module with a curve.
//!
//! Run with: cargo run --example fsets

use frobdyn::algebra::fq::FieldSpec;
use frobdyn::algebra::mpoly::MRatFunField;
use frobdyn::algebra::ring::Ring;
use frobdyn::fsets::{
    brute_force_intersection, fset_enumerate, EnumerateOptions, Equation, FSetDescriptor, FpFModule,
};
use frobdyn::text;

fn main() {
    let f = FieldSpec::prime(3).unwrap();
    let mf = MRatFunField::new(f.clone(), 1);
    let t = mf.var(0);
    let show = |p: &[frobdyn::algebra::mpoly::MRatFun]| {
        let items: Vec<String> = p.iter().map(|x| text::format_mratfun(&mf, x)).collect();
        format!("({})", items.join(", "))
    };

    let desc = FSetDescriptor {
        gamma0: vec![mf.one(), mf.zero()],
        gammas: vec![vec![t.clone(), mf.one()], vec![mf.zero(), t.clone()]],
        ks: vec![1, 2],
        h: FpFModule::default(),
        divisor: None,
    };
    let pts = fset_enumerate(&mf, &desc, 2, 0, &EnumerateOptions::default()).unwrap();
    println!("F-set with n_i <= 2 has {} points:", pts.len());
    for p in &pts {
        println!("  {}", show(p));
    }

    // x = y^3 meets the module generated by (t, t^3) and (1, 1)
    let module = FpFModule {
        generators: vec![vec![t.clone(), mf.pow(&t, 3)], vec![mf.one(), mf.one()]],
    };
    let curve = Equation {
        terms: vec![(mf.one(), vec![1, 0]), (mf.neg(&mf.one()), vec![0, 3])],
    };
    let rep = brute_force_intersection(&mf, &[curve], &module, 1, 1 << 12).unwrap();
    println!(
        "{} module elements with operator degree <= 1 lie on x = y^3",
        rep.solutions.len()
    );
    for (sig, count) in &rep.patterns {
        println!("  F-exponents {sig:?}: {count}");
    }
}
