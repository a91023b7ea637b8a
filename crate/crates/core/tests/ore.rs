mod common;

use frobdyn::algebra::ext::ExtField;
use frobdyn::algebra::fq::Fq;
use frobdyn::algebra::ring::Ring;
use frobdyn::ore::OreRing;
use proptest::prelude::*;

use common::*;

proptest! {
    #[test]
    fn product_matches_twisted_formula(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_field(&mut rng, &[2, 3, 5], 3);
        let ore = OreRing::new(f.clone());
        let a = random_ore(&f, 5, &mut rng);
        let b = random_ore(&f, 5, &mut rng);
        prop_assert_eq!(ore.mul(&a, &b), naive_ore_mul(&f, &a, &b));
    }

    #[test]
    fn evaluation_is_composition(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_field(&mut rng, &[2, 3], 2);
        let ore = OreRing::new(f.clone());
        let ext = ExtField::new(f.clone(), 2);
        let a = random_ore(&f, 4, &mut rng);
        let b = random_ore(&f, 4, &mut rng);
        let x = ext.random(&mut rng);
        let y = ext.random(&mut rng);
        let ab = ore.mul(&a, &b);
        prop_assert_eq!(ore.eval(&ext, &ab, &x), ore.eval(&ext, &a, &ore.eval(&ext, &b, &x)));
        prop_assert_eq!(ore.eval(&ext, &a, &x), naive_eval(&ext, &a, &x));
        let sum = ore.eval(&ext, &a, &ext.add(&x, &y));
        prop_assert_eq!(sum, ext.add(&ore.eval(&ext, &a, &x), &ore.eval(&ext, &a, &y)));
    }

    #[test]
    fn division_roundtrips(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_field(&mut rng, &[2, 3, 5], 3);
        let ore = OreRing::new(f.clone());
        let p = random_ore(&f, 7, &mut rng);
        let d = random_nonzero_ore(&f, 3, &mut rng);
        let (q, r) = ore.divmod_right(&p, &d).unwrap();
        prop_assert!(r.len() < d.len());
        prop_assert_eq!(ore.add(&ore.mul(&q, &d), &r), p.clone());
        let (q, r) = ore.divmod_left(&p, &d).unwrap();
        prop_assert!(r.len() < d.len());
        prop_assert_eq!(ore.add(&ore.mul(&d, &q), &r), p);
    }

    #[test]
    fn center_decomposition_roundtrips(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_field(&mut rng, &[2, 3], 3);
        let ore = OreRing::new(f.clone());
        let p = random_ore(&f, 8, &mut rng);
        let parts = ore.center_decompose(&p);
        prop_assert_eq!(parts.len(), f.ell() as usize);
        prop_assert_eq!(ore.recompose(&parts), p.clone());
        let c = ore.from_center(&parts[0].iter().map(|x| f.elem(&[f.coeffs(*x)[0] as i64])).collect());
        prop_assert!(ore.is_central(&c));
        prop_assert_eq!(ore.mul(&c, &p), ore.mul(&p, &c));
    }
}

#[test]
fn commutation_examples() {
    let f = field(2, 2);
    let ore = OreRing::new(f.clone());
    let w = f.elem(&[0, 1]);
    let fw = ore.mul(&ore.f_pow(1), &ore.constant(w));
    assert_eq!(fw, ore.term(f.add_elem(w, Fq::ONE), 1));
    let g = field(2, 1);
    let ore = OreRing::new(g.clone());
    let fp1 = ore.add(&ore.f_pow(1), &ore.one());
    assert_eq!(ore.mul(&fp1, &fp1), ore.add(&ore.f_pow(2), &ore.one()));
}

#[test]
fn evaluation_examples() {
    let f = field(2, 2);
    let ore = OreRing::new(f.clone());
    let fp1 = ore.add(&ore.f_pow(1), &ore.one());
    for c in (0..4).map(Fq::from_index) {
        let want = f.add_elem(f.mul_elem(c, c), c);
        assert_eq!(ore.eval(&*f, &fp1, &c), want);
    }
    let mf = frobdyn::algebra::mpoly::MRatFunField::new(f.clone(), 1);
    let t = mf.var(0);
    let got = ore.eval(&mf, &ore.f_pow(2), &mf.add(&t, &mf.one()));
    assert!(mf.equal(&got, &mf.add(&mf.pow(&t, 4), &mf.one())));
}

#[test]
fn centrality() {
    let f = field(3, 2);
    let ore = OreRing::new(f.clone());
    assert!(ore.is_central(&ore.f_pow(2)));
    assert!(!ore.is_central(&ore.f_pow(1)));
    assert!(!ore.is_central(&ore.constant(f.elem(&[0, 1]))));
    assert!(ore.is_central(&ore.add(&ore.f_pow(4), &ore.constant(f.elem(&[2])))));
    assert!(ore.divmod_right(&ore.f_pow(1), &Vec::new()).is_err());
}
