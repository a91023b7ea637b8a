//! Univariate polynomial factorization over finite fields.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fq::prime_factors;
use super::poly;
use super::ring::Field;

/// A finite field whose elements can be enumerated.
pub trait FiniteField: Field {
    fn order(&self) -> u64;
    fn characteristic(&self) -> u32;
    /// The `i`-th element, `0 <= i < order()`; index 0 is zero.
    fn enumerate(&self, i: u64) -> Self::Elem;

    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.order() / self.characteristic() as u64)
    }
}

impl<F: FiniteField + ?Sized> FiniteField for std::sync::Arc<F> {
    fn order(&self) -> u64 {
        (**self).order()
    }
    fn characteristic(&self) -> u32 {
        (**self).characteristic()
    }
    fn enumerate(&self, i: u64) -> Self::Elem {
        (**self).enumerate(i)
    }
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        (**self).pth_root(a)
    }
}

fn x_poly<F: Field>(f: &F) -> Vec<F::Elem> {
    vec![f.zero(), f.one()]
}

/// Rabin's irreducibility test.
pub fn is_irreducible<F: FiniteField>(f: &F, m: &[F::Elem]) -> bool {
    let m = poly::trimmed(f, m.to_vec());
    let n = match poly::degree(&m) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let q = f.order();
    let x = x_poly(f);
    let mut powers = vec![poly::rem(f, &x, &m)];
    for _ in 0..n {
        let next = poly::powmod(f, powers.last().unwrap(), q, &m);
        powers.push(next);
    }
    if powers[n] != powers[0] {
        return false;
    }
    for r in prime_factors(n as u64) {
        let k = n / r as usize;
        let diff = poly::sub(f, &powers[k], &x);
        if poly::degree(&poly::gcd(f, &diff, &m)) != Some(0) {
            return false;
        }
    }
    true
}

/// First monic irreducible of degree `n` in the enumeration order of
/// coefficient vectors (constant term varying fastest).
pub fn find_irreducible<F: FiniteField>(f: &F, n: usize) -> Vec<F::Elem> {
    let q = f.order();
    let mut idx: u64 = 1;
    loop {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut k = idx;
        for _ in 0..n {
            coeffs.push(f.enumerate(k % q));
            k /= q;
        }
        coeffs.push(f.one());
        if is_irreducible(f, &coeffs) {
            return coeffs;
        }
        idx += 1;
    }
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, e)` with
/// `f = prod g^e`, each `g` squarefree and pairwise coprime.
pub fn squarefree<F: FiniteField>(f: &F, a: &[F::Elem]) -> Vec<(Vec<F::Elem>, u32)> {
    let a = poly::monic(f, a);
    let mut out = Vec::new();
    if poly::degree(&a).unwrap_or(0) == 0 {
        return out;
    }
    let p = f.characteristic();
    let d = poly::derivative(f, &a);
    if d.is_empty() {
        let root = pth_root_poly(f, &a, p);
        for (g, e) in squarefree(f, &root) {
            out.push((g, e * p));
        }
        return out;
    }
    let mut c = poly::gcd(f, &a, &d);
    let mut w = poly::div_exact(f, &a, &c).unwrap();
    let mut i = 1;
    while poly::degree(&w).unwrap_or(0) > 0 {
        let y = poly::gcd(f, &w, &c);
        let z = poly::div_exact(f, &w, &y).unwrap();
        if poly::degree(&z).unwrap_or(0) > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = poly::div_exact(f, &c, &w).unwrap();
    }
    if poly::degree(&c).unwrap_or(0) > 0 {
        let root = pth_root_poly(f, &c, p);
        for (g, e) in squarefree(f, &root) {
            out.push((g, e * p));
        }
    }
    merge(f, out)
}

fn merge<F: Field>(_f: &F, mut v: Vec<(Vec<F::Elem>, u32)>) -> Vec<(Vec<F::Elem>, u32)> {
    v.sort_by_key(|(_, e)| *e);
    v
}

fn pth_root_poly<F: FiniteField>(f: &F, a: &[F::Elem], p: u32) -> Vec<F::Elem> {
    a.iter()
        .step_by(p as usize)
        .map(|c| f.pth_root(c))
        .collect()
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree<F: FiniteField>(f: &F, a: &[F::Elem]) -> Vec<(Vec<F::Elem>, usize)> {
    let q = f.order();
    let x = x_poly(f);
    let mut rest = poly::monic(f, a);
    let mut out = Vec::new();
    let mut h = poly::rem(f, &x, &rest);
    let mut d = 0;
    while poly::degree(&rest).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = poly::powmod(f, &h, q, &rest);
        let g = poly::gcd(f, &poly::sub(f, &h, &x), &rest);
        if poly::degree(&g).unwrap_or(0) > 0 {
            rest = poly::div_exact(f, &rest, &g).unwrap();
            h = poly::rem(f, &h, &rest);
            out.push((g, d));
        }
    }
    if let Some(deg) = poly::degree(&rest) {
        if deg > 0 {
            out.push((rest, deg));
        }
    }
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus) of a monic squarefree
/// polynomial whose irreducible factors all have degree `d`.
pub fn equal_degree<F: FiniteField, R: Rng>(
    f: &F,
    a: &[F::Elem],
    d: usize,
    rng: &mut R,
) -> Vec<Vec<F::Elem>> {
    let n = poly::degree(a).unwrap_or(0);
    if n == d {
        return vec![poly::monic(f, a)];
    }
    let q = f.order();
    let p = f.characteristic();
    loop {
        let r: Vec<F::Elem> = (0..n).map(|_| f.enumerate(rng.gen_range(0..q))).collect();
        let r = poly::trimmed(f, r);
        if poly::degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let g = if p == 2 {
            // absolute trace from F_{q^d} to F_2
            let bits = (q.trailing_zeros() as usize) * d;
            let mut t = r.clone();
            let mut acc = r.clone();
            for _ in 1..bits {
                t = poly::mulmod(f, &t, &t, a);
                acc = poly::add(f, &acc, &t);
            }
            poly::gcd(f, &acc, a)
        } else {
            let mut acc = r.clone();
            for _ in 1..d {
                acc = poly::powmod(f, &acc, q, a);
                acc = poly::mulmod(f, &acc, &r, a);
            }
            let acc = poly::powmod(f, &acc, (q - 1) / 2, a);
            poly::gcd(f, &poly::sub(f, &acc, &[f.one()]), a)
        };
        let dg = poly::degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let other = poly::div_exact(f, a, &g).unwrap();
            let mut out = equal_degree(f, &g, d, rng);
            out.extend(equal_degree(f, &other, d, rng));
            return out;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by degree then coefficients. Deterministic.
pub fn factor<F: FiniteField>(f: &F, a: &[F::Elem]) -> Vec<(Vec<F::Elem>, u32)>
where
    F::Elem: Ord,
{
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    for (g, e) in squarefree(f, a) {
        for (h, d) in distinct_degree(f, &g) {
            for irr in equal_degree(f, &h, d, &mut rng) {
                out.push((irr, e));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().rev().cmp(b.iter().rev()))
    });
    let mut merged: Vec<(Vec<F::Elem>, u32)> = Vec::new();
    for (g, e) in out {
        match merged.last_mut() {
            Some((h, m)) if *h == g => *m += e,
            _ => merged.push((g, e)),
        }
    }
    merged
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fq::{FieldSpec, Fq};

    fn p(f: &FieldSpec, c: &[i64]) -> Vec<Fq> {
        poly::trimmed(f, c.iter().map(|&x| f.from_int(x)).collect())
    }

    #[test]
    fn irreducibility_small_cases() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(is_irreducible(&f2, &p(&f2, &[1, 1, 1])));
        assert!(!is_irreducible(&f2, &p(&f2, &[1, 0, 1])));
        assert!(is_irreducible(&f2, &p(&f2, &[1, 1, 0, 1])));
        assert!(!is_irreducible(&f2, &p(&f2, &[1, 1, 1, 1])));
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(is_irreducible(&f3, &p(&f3, &[1, 0, 1])));
        assert!(!is_irreducible(&f3, &p(&f3, &[2, 0, 1])));
    }

    #[test]
    fn factor_recovers_product() {
        let f = FieldSpec::new(3, 2, None).unwrap();
        let a = p(&f, &[1, 1]);
        let b = p(&f, &[2, 0, 1]);
        let c = vec![f.x(), Fq::ONE];
        let prod = poly::mul(
            &f,
            &poly::mul(&f, &poly::pow(&f, &a, 3), &b),
            &poly::pow(&f, &c, 2),
        );
        let fs = factor(&f, &prod);
        let mut back = vec![Fq::ONE];
        for (g, e) in &fs {
            assert!(is_irreducible(&f, g));
            back = poly::mul(&f, &back, &poly::pow(&f, g, *e as u64));
        }
        assert_eq!(back, poly::monic(&f, &prod));
    }

    #[test]
    fn factor_in_characteristic_two() {
        let f = FieldSpec::prime(2).unwrap();
        // x^8 - x is the product of all irreducibles of degree 1 and 3
        let mut a = vec![Fq::ZERO; 9];
        a[8] = Fq::ONE;
        a[1] = Fq::ONE;
        let fs = factor(&f, &a);
        let degs: Vec<usize> = fs.iter().map(|(g, _)| g.len() - 1).collect();
        assert_eq!(degs, vec![1, 1, 3, 3]);
        let sq = poly::pow(&f, &p(&f, &[1, 1, 1]), 4);
        assert_eq!(factor(&f, &sq), vec![(p(&f, &[1, 1, 1]), 4)]);
    }
}
