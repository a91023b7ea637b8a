//! Arithmetic and evaluation in F_4[F].
//!
//! Run with: cargo run --example twisted_polynomials

use frobdyn::algebra::fq::FieldSpec;
use frobdyn::algebra::mpoly::MRatFunField;
use frobdyn::algebra::ring::Ring;
use frobdyn::ore::OreRing;
use frobdyn::text;

fn main() {
    let f = FieldSpec::new(2, 2, None).expect("F_4 exists");
    let ore = OreRing::new(f.clone());
    let a = text::parse_ore(&ore, "F + [0,1]").unwrap();
    let b = text::parse_ore(&ore, "F^2 + 1").unwrap();
    println!("a = {}", text::format_ore(&f, &a));
    println!("b = {}", text::format_ore(&f, &b));
    println!("a*b = {}", text::format_ore(&f, &ore.mul(&a, &b)));
    println!("b*a = {}", text::format_ore(&f, &ore.mul(&b, &a)));
    let (q, r) = ore.divmod_right(&ore.mul(&a, &b), &b).unwrap();
    println!(
        "(a*b) = q*b + r with q = {}, r = {}",
        text::format_ore(&f, &q),
        text::format_ore(&f, &r)
    );
    println!("b central: {}", ore.is_central(&b));

    let mf = MRatFunField::new(f.clone(), 1);
    let t = mf.var(0);
    println!(
        "a(t) = {}",
        text::format_mratfun(&mf, &ore.eval(&mf, &a, &t))
    );
}
