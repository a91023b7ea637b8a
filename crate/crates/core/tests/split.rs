mod common;

use frobdyn::algebra::fq::Fq;
use frobdyn::algebra::linalg;
use frobdyn::algebra::poly;
use frobdyn::ore::OreRing;
use frobdyn::skew::{from_ore_matrix, SkewField};
use frobdyn::split::{
    check_split, h_clears_power, power_up, split_endomorphism, FrobeniusBlock, JordanBlock,
};
use proptest::prelude::*;

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn conjugates_split(seed in any::<u64>(), which in 0usize..4) {
        let mut rng = rng(seed);
        let (f, diag): (_, Vec<Vec<i64>>) = match which {
            0 => (field(2, 1), vec![vec![0, 1], vec![1, 1]]),
            1 => (field(3, 1), vec![vec![0, 1], vec![0, 0, 1]]),
            2 => (field(2, 2), vec![vec![0, 1], vec![0, 1]]),
            _ => (field(2, 1), vec![vec![1, 1], vec![0, 1, 1]]),
        };
        let d: Vec<_> = diag
            .iter()
            .map(|c| poly::trimmed(&*f, c.iter().map(|&x| f.elem(&[x])).collect()))
            .collect();
        let a = random_conjugate(&f, diag_map(&f, d).entries(), 2, 1, &mut rng);
        let k = SkewField::new(f.clone());
        let s = split_endomorphism(&k, &a).unwrap();
        prop_assert!(check_split(&k, &a, &s));
        prop_assert_eq!(s.n0() + s.n1(), 2);
        prop_assert!(h_clears_power(&k, &s, 3));
        let c = k.center();
        prop_assert_eq!(poly::gcd(c, &s.r0, &s.r1).len(), 1);
    }
}

#[test]
fn power_up_merges_equal_exponents() {
    let bl = |exp, size| JordanBlock { exp, size };
    let (a, blocks) = power_up(&[bl(1, 1), bl(1, 2), bl(3, 1)], 3);
    assert_eq!(a, 1);
    assert_eq!(
        blocks,
        vec![FrobeniusBlock { n: 3, m: 3 }, FrobeniusBlock { n: 9, m: 1 }]
    );
    assert_eq!(power_up(&[], 2), (0, vec![]));
}

#[test]
fn unipotent_block_needs_a_power() {
    let f = field(2, 1);
    let ore = OreRing::new(f.clone());
    let a = ore_matrix(&f, "[[F, 1], [0, F]]");
    let k = SkewField::new(f.clone());
    let s = split_endomorphism(&k, &a).unwrap();
    assert_eq!(s.diagnostics.power_a, 1);
    assert_eq!(s.blocks, vec![FrobeniusBlock { n: 2, m: 2 }]);
    let a2 = linalg::pow(&ore, &a, s.n);
    assert!(check_split(&k, &a, &s));
    assert_eq!(s.n1(), 0);
    assert_eq!(from_ore_matrix(&k, &a2).rows(), 2);
    let one = k.scalar(k.center().s_pow(2));
    assert_eq!(s.a0, linalg::diagonal(&k, &[one.clone(), one]));
}

#[test]
fn identity_is_a_frobenius_block_of_exponent_zero() {
    let f = field(3, 1);
    let k = SkewField::new(f.clone());
    let a = ore_matrix(&f, "[[1, 0], [0, 2]]");
    let s = split_endomorphism(&k, &a).unwrap();
    assert!(check_split(&k, &a, &s));
    assert_eq!(s.n % 2, 0);
    assert_eq!(s.blocks, vec![FrobeniusBlock { n: 0, m: 2 }]);
    assert_eq!(s.h, vec![Fq::ONE]);
}
