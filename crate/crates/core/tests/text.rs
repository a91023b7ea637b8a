mod common;

use frobdyn::algebra::mpoly::MRatFunField;
use frobdyn::algebra::ratfun::RatFunField;
use frobdyn::algebra::ring::{Field, Ring};
use frobdyn::ore::OreRing;
use frobdyn::skew::SkewField;
use frobdyn::text;
use proptest::prelude::*;

use common::*;

proptest! {
    #[test]
    fn field_elements_roundtrip((p, ell) in prop_oneof![Just((2, 3)), Just((3, 2)), Just((5, 1))], i in 0u32..200) {
        let f = field(p, ell);
        let a = frobdyn::algebra::fq::Fq::from_index(i % f.q());
        prop_assert_eq!(text::parse_fq(&f, &text::format_fq(&f, a)).unwrap(), a);
    }

    #[test]
    fn twisted_polynomials_roundtrip(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_field(&mut rng, &[2, 3, 5], 3);
        let ore = OreRing::new(f.clone());
        let a = random_ore(&f, 6, &mut rng);
        let s = text::format_ore(&f, &a);
        prop_assert_eq!(text::parse_ore(&ore, &s).unwrap(), a);
    }

    #[test]
    fn rational_functions_roundtrip(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_field(&mut rng, &[2, 3], 2);
        let rf = RatFunField::new(f.clone());
        let r = rf.make(random_ore(&f, 3, &mut rng), random_nonzero_ore(&f, 3, &mut rng)).unwrap();
        let s = text::format_ratfun(&f, &r, "t");
        prop_assert_eq!(text::parse_ratfun(&rf, "t", &s).unwrap(), r);
        let k = SkewField::new(f.clone());
        let u = k.from_parts((0..k.ell()).map(|_| rf.make(random_ore(&f, 2, &mut rng), random_nonzero_ore(&f, 1, &mut rng)).unwrap()).collect());
        prop_assert_eq!(text::parse_skew(&k, &text::format_skew(&f, &u)).unwrap(), u);
    }

    #[test]
    fn multivariate_roundtrip(seed in any::<u64>(), d in 1usize..3) {
        let mut rng = rng(seed);
        let f = random_field(&mut rng, &[2, 3], 2);
        let mf = MRatFunField::new(f.clone(), d);
        let ore = OreRing::new(f.clone());
        let mut x = mf.constant(f.random(&mut rng));
        for i in 0..d {
            let term = ore.eval(&mf, &random_ore(&f, 2, &mut rng), &mf.var(i));
            x = mf.add(&x, &term);
        }
        if let Some(den) = mf.inv(&mf.add(&mf.var(0), &mf.one())) {
            x = mf.mul(&x, &den);
        }
        let back = text::parse_mratfun(&mf, &text::format_mratfun(&mf, &x)).unwrap();
        prop_assert!(mf.equal(&back, &x));
    }
}

#[test]
fn grammar_examples() {
    let f = field(2, 2);
    let ore = OreRing::new(f.clone());
    let w = f.elem(&[0, 1]);
    assert_eq!(
        text::parse_ore(&ore, "F*[0,1]").unwrap(),
        ore.term(f.frobenius(w, 1), 1)
    );
    assert_eq!(
        text::parse_ore(&ore, "(F + 1)^2").unwrap(),
        text::parse_ore(&ore, "F^2 + 1").unwrap()
    );
    assert!(text::parse_ore(&ore, "F / 2").is_err());
    assert!(text::parse_ore(&ore, "F +").is_err());
    assert_eq!(text::mvar_name(1, 0), "t");
    assert_eq!(text::mvar_name(3, 2), "t3");
    assert_eq!(text::mvar_index(3, "t2"), Some(1));
    assert_eq!(
        text::split_matrix("[[1, F], [0, F + [0,1]]]").unwrap()[1],
        vec!["0", "F + [0,1]"]
    );
}
