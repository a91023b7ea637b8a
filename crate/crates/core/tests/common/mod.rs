#![allow(dead_code)]

use std::sync::Arc;

use frobdyn::algebra::ext::{ExtElem, ExtField};
use frobdyn::algebra::fq::{FieldSpec, Fq};
use frobdyn::algebra::linalg::{self, Matrix};
use frobdyn::algebra::poly;
use frobdyn::algebra::ring::Ring;
use frobdyn::classify::AdditiveMap;
use frobdyn::ore::{OrePoly, OreRing};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn field(p: u32, ell: u32) -> Arc<FieldSpec> {
    FieldSpec::new(p, ell, None).unwrap()
}

pub fn random_field(rng: &mut TestRng, primes: &[u32], max_ell: u32) -> Arc<FieldSpec> {
    let p = primes[rng.gen_range(0..primes.len())];
    field(p, rng.gen_range(1..=max_ell))
}

pub fn random_ore(f: &FieldSpec, max_deg: usize, rng: &mut TestRng) -> OrePoly {
    let deg = rng.gen_range(0..=max_deg);
    poly::trimmed(f, (0..=deg).map(|_| f.random(rng)).collect())
}

pub fn random_nonzero_ore(f: &FieldSpec, max_deg: usize, rng: &mut TestRng) -> OrePoly {
    loop {
        let p = random_ore(f, max_deg, rng);
        if !p.is_empty() {
            return p;
        }
    }
}

pub fn random_ore_matrix(
    f: &FieldSpec,
    rows: usize,
    cols: usize,
    max_deg: usize,
    rng: &mut TestRng,
) -> Matrix<OrePoly> {
    Matrix::from_fn(rows, cols, |_, _| random_ore(f, max_deg, rng))
}

/// Product in `F_q[F]` straight from `a_i F^i b_j F^j = a_i b_j^{p^i} F^{i+j}`.
pub fn naive_ore_mul(f: &FieldSpec, a: &[Fq], b: &[Fq]) -> OrePoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p = f.p() as u64;
    let mut out = vec![Fq::ZERO; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            let twisted = f.pow_elem(bj, p.pow(i as u32));
            out[i + j] = f.add_elem(out[i + j], f.mul_elem(ai, twisted));
        }
    }
    poly::trimmed(f, out)
}

/// `sum c_i x^{p^i}` by repeated `p`-th powers.
pub fn naive_eval(ext: &ExtField, a: &[Fq], x: &ExtElem) -> ExtElem {
    let p = ext.base().p() as u64;
    let mut acc = ext.zero();
    let mut xp = x.clone();
    for &c in a {
        acc = ext.add(&acc, &ext.mul(&ext.embed(c), &xp));
        xp = ext.pow(&xp, p);
    }
    acc
}

pub fn diag_map(f: &Arc<FieldSpec>, d: Vec<OrePoly>) -> AdditiveMap {
    let ore = OreRing::new(f.clone());
    let n = d.len();
    let m = Matrix::from_fn(n, n, |i, j| if i == j { d[i].clone() } else { ore.zero() });
    AdditiveMap::new(f.clone(), m).unwrap()
}

/// `I + c E_{ij}` and its inverse `I - c E_{ij}`.
pub fn elementary(
    ore: &OreRing,
    n: usize,
    i: usize,
    j: usize,
    c: &OrePoly,
) -> (Matrix<OrePoly>, Matrix<OrePoly>) {
    let mut e = linalg::identity(ore, n);
    let mut ei = linalg::identity(ore, n);
    e.set(i, j, c.clone());
    ei.set(i, j, ore.neg(c));
    (e, ei)
}

/// `G D G^{-1}` for a random product `G` of `count` elementary matrices
/// with off-diagonal entries of degree `<= max_deg`.
pub fn random_conjugate(
    f: &Arc<FieldSpec>,
    d: &Matrix<OrePoly>,
    count: usize,
    max_deg: usize,
    rng: &mut TestRng,
) -> Matrix<OrePoly> {
    let ore = OreRing::new(f.clone());
    let n = d.rows();
    let mut g = linalg::identity(&ore, n);
    let mut gi = linalg::identity(&ore, n);
    if n < 2 {
        return d.clone();
    }
    for _ in 0..count {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = random_nonzero_ore(f, max_deg, rng);
        let (e, ei) = elementary(&ore, n, i, j, &c);
        g = linalg::mul(&ore, &g, &e);
        gi = linalg::mul(&ore, &ei, &gi);
    }
    linalg::mul(&ore, &linalg::mul(&ore, &g, d), &gi)
}

pub fn ore_of(f: &Arc<FieldSpec>, s: &str) -> OrePoly {
    frobdyn::text::parse_ore(&OreRing::new(f.clone()), s).unwrap()
}

pub fn ore_matrix(f: &Arc<FieldSpec>, s: &str) -> Matrix<OrePoly> {
    let ore = OreRing::new(f.clone());
    frobdyn::text::parse_matrix(s, |e| frobdyn::text::parse_ore(&ore, e)).unwrap()
}

pub fn map_of(f: &Arc<FieldSpec>, s: &str) -> AdditiveMap {
    AdditiveMap::new(f.clone(), ore_matrix(f, s)).unwrap()
}
