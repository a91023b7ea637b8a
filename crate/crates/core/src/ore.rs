//! Twisted polynomials `F_q[F]` with `F a = a^p F`.
//!
//! An [`OrePoly`] is the coefficient list of `sum a_i F^i` with the
//! coefficients written on the left. It acts on any field of characteristic
//! `p` containing `F_q` by `(sum a_i F^i)(x) = sum a_i x^(p^i)`.

use std::sync::Arc;

use crate::algebra::ext::{ExtElem, ExtField};
use crate::algebra::fq::{FieldSpec, Fq};
use crate::algebra::mpoly::{MRatFun, MRatFunField};
use crate::algebra::poly;
use crate::algebra::ratfun::CPoly;
use crate::algebra::ring::Ring;
use crate::error::AlgebraError;

pub type OrePoly = Vec<Fq>;

/// A field of characteristic `p` that contains `F_q` and on which the
/// Frobenius `x -> x^p` can be applied.
pub trait FrobeniusField: Ring {
    fn embed(&self, c: Fq) -> Self::Elem;
    fn frob(&self, x: &Self::Elem) -> Self::Elem;
}

impl FrobeniusField for FieldSpec {
    fn embed(&self, c: Fq) -> Fq {
        c
    }
    fn frob(&self, x: &Fq) -> Fq {
        self.frobenius(*x, 1)
    }
}

impl FrobeniusField for Arc<FieldSpec> {
    fn embed(&self, c: Fq) -> Fq {
        c
    }
    fn frob(&self, x: &Fq) -> Fq {
        self.frobenius(*x, 1)
    }
}

impl FrobeniusField for ExtField {
    fn embed(&self, c: Fq) -> ExtElem {
        ExtField::embed(self, c)
    }
    fn frob(&self, x: &ExtElem) -> ExtElem {
        self.frobenius(x)
    }
}

impl FrobeniusField for MRatFunField {
    fn embed(&self, c: Fq) -> MRatFun {
        self.constant(c)
    }
    fn frob(&self, x: &MRatFun) -> MRatFun {
        self.frobenius(x, 1)
    }
}

/// The ring `F_q[F]`.
#[derive(Clone, Debug)]
pub struct OreRing {
    base: Arc<FieldSpec>,
}

impl OreRing {
    pub fn new(base: Arc<FieldSpec>) -> Self {
        OreRing { base }
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        &self.base
    }

    pub fn ell(&self) -> usize {
        self.base.ell() as usize
    }

    /// `F^k`.
    pub fn f_pow(&self, k: usize) -> OrePoly {
        poly::monomial(&*self.base, Fq::ONE, k)
    }

    pub fn constant(&self, c: Fq) -> OrePoly {
        poly::constant(&*self.base, c)
    }

    /// `c * F^k`.
    pub fn term(&self, c: Fq, k: usize) -> OrePoly {
        poly::monomial(&*self.base, c, k)
    }

    /// Evaluates the additive polynomial `sum a_i x^(p^i)`.
    pub fn eval<K: FrobeniusField>(&self, k: &K, p: &OrePoly, x: &K::Elem) -> K::Elem {
        let mut acc = k.zero();
        let mut xp = x.clone();
        for (i, a) in p.iter().enumerate() {
            if i > 0 {
                xp = k.frob(&xp);
            }
            if !a.is_zero() {
                acc = k.add(&acc, &k.mul(&k.embed(*a), &xp));
            }
        }
        acc
    }

    /// Right division: `P = Q * D + R` with `deg R < deg D`.
    pub fn divmod_right(
        &self,
        p: &OrePoly,
        d: &OrePoly,
    ) -> Result<(OrePoly, OrePoly), AlgebraError> {
        let f = &*self.base;
        let dl = *d.last().ok_or(AlgebraError::DivisionByZero)?;
        let n = d.len() - 1;
        let mut rem = p.clone();
        let mut quo = vec![Fq::ZERO; p.len().saturating_sub(n)];
        while rem.len() > n {
            let m = rem.len() - 1;
            // q F^(m-n) d F^n = q phi^(m-n)(d) F^m
            let lead = f.frobenius(dl, (m - n) as u64);
            let q = f.mul_elem(*rem.last().unwrap(), f.inv_elem(lead).unwrap());
            let t = self.mul(&self.term(q, m - n), d);
            rem = poly::sub(f, &rem, &t);
            quo[m - n] = q;
        }
        Ok((poly::trimmed(f, quo), rem))
    }

    /// Left division: `P = D * Q + R` with `deg R < deg D`.
    pub fn divmod_left(
        &self,
        p: &OrePoly,
        d: &OrePoly,
    ) -> Result<(OrePoly, OrePoly), AlgebraError> {
        let f = &*self.base;
        let dl = *d.last().ok_or(AlgebraError::DivisionByZero)?;
        let n = d.len() - 1;
        let mut rem = p.clone();
        let mut quo = vec![Fq::ZERO; p.len().saturating_sub(n)];
        while rem.len() > n {
            let m = rem.len() - 1;
            // d F^n q F^(m-n) = d phi^n(q) F^m
            let c = f.mul_elem(*rem.last().unwrap(), f.inv_elem(dl).unwrap());
            let q = f.frobenius_inv(c, n as u64);
            let t = self.mul(d, &self.term(q, m - n));
            rem = poly::sub(f, &rem, &t);
            quo[m - n] = q;
        }
        Ok((poly::trimmed(f, quo), rem))
    }

    /// Parts `a_i(s)` with `P = sum_{i<ell} a_i(F^ell) F^i`.
    pub fn center_decompose(&self, p: &OrePoly) -> Vec<CPoly> {
        let ell = self.ell();
        let f = &*self.base;
        let mut parts = vec![Vec::new(); ell];
        for (k, c) in p.iter().enumerate() {
            let part = &mut parts[k % ell];
            let idx = k / ell;
            if part.len() <= idx {
                part.resize(idx + 1, Fq::ZERO);
            }
            part[idx] = *c;
        }
        parts.into_iter().map(|x| poly::trimmed(f, x)).collect()
    }

    pub fn recompose(&self, parts: &[CPoly]) -> OrePoly {
        let ell = parts.len();
        let mut out = Vec::new();
        for (i, part) in parts.iter().enumerate() {
            for (k, c) in part.iter().enumerate() {
                let idx = k * ell + i;
                if out.len() <= idx {
                    out.resize(idx + 1, Fq::ZERO);
                }
                out[idx] = *c;
            }
        }
        poly::trimmed(&*self.base, out)
    }

    /// Membership in the center `F_p[F^ell]`.
    pub fn is_central(&self, p: &OrePoly) -> bool {
        let ell = self.ell();
        p.iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || (k % ell == 0 && self.base.in_prime_field(*c)))
    }

    /// The central element `c(F^ell)` for `c` in `F_q[s]`.
    pub fn from_center(&self, c: &CPoly) -> OrePoly {
        let mut parts = vec![Vec::new(); self.ell()];
        parts[0] = c.clone();
        self.recompose(&parts)
    }

    /// Rewrites `sum F^i b_i` (coefficients on the right) in left form.
    pub fn from_right_coeffs(&self, right: &[Fq]) -> OrePoly {
        let f = &*self.base;
        poly::trimmed(
            f,
            right
                .iter()
                .enumerate()
                .map(|(i, &b)| f.frobenius(b, i as u64))
                .collect(),
        )
    }
}

impl Ring for OreRing {
    type Elem = OrePoly;

    fn zero(&self) -> OrePoly {
        Vec::new()
    }
    fn one(&self) -> OrePoly {
        vec![Fq::ONE]
    }
    fn is_zero(&self, a: &OrePoly) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &OrePoly, b: &OrePoly) -> OrePoly {
        poly::add(&*self.base, a, b)
    }
    fn neg(&self, a: &OrePoly) -> OrePoly {
        poly::neg(&*self.base, a)
    }
    fn sub(&self, a: &OrePoly, b: &OrePoly) -> OrePoly {
        poly::sub(&*self.base, a, b)
    }
    fn mul(&self, a: &OrePoly, b: &OrePoly) -> OrePoly {
        let f = &*self.base;
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Fq::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = f.mul_elem(x, f.frobenius(y, i as u64));
                out[i + j] = f.add_elem(out[i + j], t);
            }
        }
        out
    }
    /// Exact right quotient `a = q * b`.
    fn div_exact(&self, a: &OrePoly, b: &OrePoly) -> Option<OrePoly> {
        let (q, r) = self.divmod_right(a, b).ok()?;
        r.is_empty().then_some(q)
    }
    fn from_int(&self, n: i64) -> OrePoly {
        poly::constant(&*self.base, self.base.from_int(n))
    }
}

/// Degree of a twisted polynomial; `None` for zero.
pub fn degree(p: &OrePoly) -> Option<usize> {
    p.len().checked_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rand_ore(f: &FieldSpec, deg: usize, rng: &mut ChaCha8Rng) -> OrePoly {
        poly::trimmed(f, (0..=deg).map(|_| f.random(rng)).collect())
    }

    #[test]
    fn twist_rule_over_f4() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let r = OreRing::new(f.clone());
        let w = f.x();
        let lhs = r.mul(&r.f_pow(1), &r.constant(w));
        assert_eq!(lhs, r.term(f.add_elem(w, Fq::ONE), 1));
    }

    #[test]
    fn square_of_f_plus_one_over_f2() {
        let f = FieldSpec::prime(2).unwrap();
        let r = OreRing::new(f.clone());
        let p = vec![Fq::ONE, Fq::ONE];
        assert_eq!(r.mul(&p, &p), vec![Fq::ONE, Fq::ZERO, Fq::ONE]);
        assert_eq!(r.mul(&p, &r.one()), p);
        assert!(r.mul(&p, &r.zero()).is_empty());
    }

    #[test]
    fn evaluation_examples() {
        let f = FieldSpec::prime(2).unwrap();
        let r = OreRing::new(f.clone());
        let p = vec![Fq::ONE, Fq::ONE];
        for c in f.elements() {
            let expected = f.add_elem(f.mul_elem(c, c), c);
            assert_eq!(r.eval(&f, &p, &c), expected);
        }
        let k = MRatFunField::new(f.clone(), 1);
        let t1 = k.add(&k.var(0), &k.one());
        let t4 = k.add(&k.pow(&k.var(0), 4), &k.one());
        assert!(k.equal(&r.eval(&k, &r.f_pow(2), &t1), &t4));
        assert!(k.is_zero(&r.eval(&k, &p, &k.zero())));
    }

    #[test]
    fn division_roundtrips() {
        let f = FieldSpec::new(3, 2, None).unwrap();
        let r = OreRing::new(f.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        assert_eq!(
            r.divmod_right(&r.f_pow(2), &r.f_pow(1)).unwrap(),
            (r.f_pow(1), vec![])
        );
        let fp1 = vec![Fq::ONE, Fq::ONE];
        assert_eq!(r.divmod_right(&fp1, &fp1).unwrap(), (r.one(), vec![]));
        assert_eq!(
            r.divmod_right(&fp1, &vec![]),
            Err(AlgebraError::DivisionByZero)
        );
        for _ in 0..200 {
            let p = rand_ore(&f, 7, &mut rng);
            let d = rand_ore(&f, 3, &mut rng);
            if d.is_empty() {
                continue;
            }
            let (q, rem) = r.divmod_right(&p, &d).unwrap();
            assert!(rem.len() < d.len());
            assert_eq!(r.add(&r.mul(&q, &d), &rem), p);
            let (q, rem) = r.divmod_left(&p, &d).unwrap();
            assert!(rem.len() < d.len());
            assert_eq!(r.add(&r.mul(&d, &q), &rem), p);
        }
    }

    #[test]
    fn center_decomposition() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let r = OreRing::new(f.clone());
        assert_eq!(r.center_decompose(&r.f_pow(1)), vec![vec![], vec![Fq::ONE]]);
        assert_eq!(
            r.center_decompose(&r.f_pow(2)),
            vec![vec![Fq::ZERO, Fq::ONE], vec![]]
        );
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let p = rand_ore(&f, 9, &mut rng);
            assert_eq!(r.recompose(&r.center_decompose(&p)), p);
        }
    }

    #[test]
    fn centrality() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let r = OreRing::new(f.clone());
        assert!(r.is_central(&r.f_pow(2)));
        assert!(r.is_central(&r.one()));
        let w = r.constant(f.x());
        assert!(!r.is_central(&w));
        assert_ne!(r.mul(&w, &r.f_pow(1)), r.mul(&r.f_pow(1), &w));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let gen = r.constant(f.primitive_element());
        for _ in 0..300 {
            let p = rand_ore(&f, 5, &mut rng);
            let commutes = r.mul(&p, &r.f_pow(1)) == r.mul(&r.f_pow(1), &p)
                && r.mul(&p, &gen) == r.mul(&gen, &p);
            assert_eq!(commutes, r.is_central(&p));
        }
    }

    #[test]
    fn right_coefficients_normalize() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let r = OreRing::new(f.clone());
        let w = f.x();
        // F * w = w^2 * F
        assert_eq!(
            r.from_right_coeffs(&[Fq::ZERO, w]),
            r.mul(&r.f_pow(1), &r.constant(w))
        );
    }
}
