//! Matrices over the skew field of fractions of F_q[F] and their images
//! over the center F_p(s).
//!
//! Run with: cargo run --example skew_field

use frobdyn::algebra::fq::FieldSpec;
use frobdyn::algebra::linalg;
use frobdyn::ore::OreRing;
use frobdyn::skew::{from_ore_matrix, matrix_inverse, min_poly_center, tilde, SkewField};
use frobdyn::text;

fn main() {
    let f = FieldSpec::new(3, 2, None).expect("F_9 exists");
    let ore = OreRing::new(f.clone());
    let k = SkewField::new(f.clone());
    let m = text::parse_matrix("[[F, 1], [[0,1], F + 1]]", |e| text::parse_ore(&ore, e)).unwrap();
    let a = from_ore_matrix(&k, &m);
    let show_skew =
        |x: &frobdyn::skew::SkewMatrix| text::format_matrix(x, |u| text::format_skew(&f, u));

    println!(
        "A = {}",
        text::format_matrix(&m, |p| text::format_ore(&f, p))
    );
    println!("rank over the skew field = {}", linalg::rank(&k, &a));
    let t = tilde(&k, &a);
    println!(
        "tilde(A) = {}",
        text::format_matrix(&t, |r| text::format_ratfun(&f, r, "s"))
    );
    println!(
        "minimal central polynomial = {}",
        text::format_center_poly(&f, &min_poly_center(&k, &a))
    );
    let inv = matrix_inverse(&k, &a).expect("A is invertible");
    println!("A^-1 = {}", show_skew(&inv));
}
