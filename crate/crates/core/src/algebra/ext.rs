//! Extensions `F_q[y]/(m)` of a table field, used for random specialization
//! of rational functions.

use std::sync::Arc;

use rand::Rng;

use super::factor::{find_irreducible, FiniteField};
use super::fq::{FieldSpec, Fq};
use super::poly;
use super::ring::{Field, Ring};

/// Element of an [`ExtField`]: exactly `degree` coefficients over the base.
pub type ExtElem = Vec<Fq>;

#[derive(Clone, Debug)]
pub struct ExtField {
    base: Arc<FieldSpec>,
    modulus: Vec<Fq>,
    degree: usize,
}

impl ExtField {
    pub fn new(base: Arc<FieldSpec>, degree: usize) -> Self {
        let modulus = find_irreducible(&*base, degree);
        ExtField {
            base,
            modulus,
            degree,
        }
    }

    /// Smallest extension of `base` with at least `min_order` elements.
    pub fn with_min_order(base: Arc<FieldSpec>, min_order: u64) -> Self {
        let q = base.q() as u64;
        let mut k = 1usize;
        let mut size = q;
        while size < min_order {
            k += 1;
            size = size.saturating_mul(q);
        }
        Self::new(base, k)
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn embed(&self, a: Fq) -> ExtElem {
        let mut v = vec![Fq::ZERO; self.degree];
        v[0] = a;
        v
    }

    fn pad(&self, mut v: Vec<Fq>) -> ExtElem {
        v.resize(self.degree, Fq::ZERO);
        v
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElem {
        (0..self.degree).map(|_| self.base.random(rng)).collect()
    }

    /// `a^p`.
    pub fn frobenius(&self, a: &ExtElem) -> ExtElem {
        self.pow(a, self.base.p() as u64)
    }
}

impl Ring for ExtField {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        vec![Fq::ZERO; self.degree]
    }
    fn one(&self) -> ExtElem {
        self.embed(Fq::ONE)
    }
    fn is_zero(&self, a: &ExtElem) -> bool {
        a.iter().all(|c| c.is_zero())
    }
    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.add_elem(x, y))
            .collect()
    }
    fn neg(&self, a: &ExtElem) -> ExtElem {
        a.iter().map(|&x| self.base.neg_elem(x)).collect()
    }
    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.sub_elem(x, y))
            .collect()
    }
    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = &*self.base;
        let prod = poly::mul(
            f,
            &poly::trimmed(f, a.clone()),
            &poly::trimmed(f, b.clone()),
        );
        self.pad(poly::rem(f, &prod, &self.modulus))
    }
    fn div_exact(&self, a: &ExtElem, b: &ExtElem) -> Option<ExtElem> {
        self.div(a, b)
    }
    fn from_int(&self, n: i64) -> ExtElem {
        self.embed(self.base.from_int(n))
    }
}

impl Field for ExtField {
    fn inv(&self, a: &ExtElem) -> Option<ExtElem> {
        let f = &*self.base;
        let a = poly::trimmed(f, a.clone());
        if a.is_empty() {
            return None;
        }
        let (_, s, _) = poly::xgcd(f, &a, &self.modulus);
        Some(self.pad(poly::rem(f, &s, &self.modulus)))
    }
}

impl FiniteField for ExtField {
    fn order(&self) -> u64 {
        (self.base.q() as u64).pow(self.degree as u32)
    }
    fn characteristic(&self) -> u32 {
        self.base.p()
    }
    fn enumerate(&self, mut i: u64) -> ExtElem {
        let q = self.base.q() as u64;
        (0..self.degree)
            .map(|_| {
                let c = Fq::from_index((i % q) as u32);
                i /= q;
                c
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn extension_is_a_field() {
        let base = FieldSpec::new(2, 2, None).unwrap();
        let e = ExtField::with_min_order(base, 1 << 20);
        assert_eq!(e.degree(), 10);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let a = e.random(&mut rng);
            let b = e.random(&mut rng);
            if !e.is_zero(&a) {
                assert_eq!(e.mul(&a, &e.inv(&a).unwrap()), e.one());
            }
            let lhs = e.frobenius(&e.mul(&a, &b));
            assert_eq!(lhs, e.mul(&e.frobenius(&a), &e.frobenius(&b)));
        }
    }
}
