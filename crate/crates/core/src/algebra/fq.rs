//! Finite fields `F_q`, `q = p^ell`, with table-driven arithmetic.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{ell-1} p^{ell-1}`
//! of its coefficient vector modulo the defining polynomial. The prime subfield
//! is therefore exactly the indices `0..p`, identical across all fields of the
//! same characteristic.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::factor::{is_irreducible, FiniteField};
use super::ring::{Field, Ring};
use crate::error::AlgebraError;

/// Largest field order handled with lookup tables.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

const NO_LOG: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fq(u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn index(self) -> u32 {
        self.0
    }

    /// Element with the given packed index. The caller guarantees `i < q`.
    pub fn from_index(i: u32) -> Fq {
        Fq(i)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

pub struct FieldSpec {
    p: u32,
    ell: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[i] = g^i`, doubled so that sums of two logs index directly.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[d] = log(1 + g^d)`, `NO_LOG` when `1 + g^d = 0`. Odd `p` only.
    zech: Vec<u32>,
    frob: Vec<u32>,
    generator: u32,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.p, self.ell, self.modulus)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mul_digits(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let ell = modulus.len() - 1;
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * ell];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    for k in (ell..2 * ell).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (j, &m) in modulus.iter().enumerate().take(ell) {
            let t = (c * m as u64) % p64;
            prod[k - ell + j] = (prod[k - ell + j] + p64 - t) % p64;
        }
    }
    prod.truncate(ell);
    prod.into_iter().map(|x| x as u32).collect()
}

fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

fn unpack(mut idx: u32, p: u32, ell: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(ell as usize);
    for _ in 0..ell {
        out.push(idx % p);
        idx /= p;
    }
    out
}

impl FieldSpec {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Arc<FieldSpec>, AlgebraError> {
        if !is_prime(p as u64) {
            return Err(AlgebraError::NotPrime(p as u64));
        }
        if p as u64 > MAX_FIELD_ORDER {
            return Err(AlgebraError::FieldTooLarge { p, ell: 1 });
        }
        Ok(Arc::new(Self::build(p, 1, vec![0, 1])))
    }

    /// `F_{p^ell}` defined by `modulus` (coefficients low to high, monic of
    /// degree `ell`), or by the default modulus when `None`.
    pub fn new(
        p: u32,
        ell: u32,
        modulus: Option<Vec<u32>>,
    ) -> Result<Arc<FieldSpec>, AlgebraError> {
        if !is_prime(p as u64) {
            return Err(AlgebraError::NotPrime(p as u64));
        }
        if ell == 0 {
            return Err(AlgebraError::BadModulus(
                "extension degree must be at least 1".into(),
            ));
        }
        let order = (p as u64).checked_pow(ell).unwrap_or(u64::MAX);
        if order > MAX_FIELD_ORDER {
            return Err(AlgebraError::FieldTooLarge { p, ell });
        }
        let modulus = match modulus {
            None => default_modulus(p, ell)?,
            Some(m) => {
                if m.len() != ell as usize + 1 {
                    return Err(AlgebraError::BadModulus(format!(
                        "expected {} coefficients, got {}",
                        ell + 1,
                        m.len()
                    )));
                }
                let m: Vec<u32> = m.into_iter().map(|c| c % p).collect();
                if m[ell as usize] != 1 {
                    return Err(AlgebraError::BadModulus("modulus must be monic".into()));
                }
                let fp = FieldSpec::prime(p)?;
                let mp: Vec<Fq> = m.iter().map(|&c| Fq(c)).collect();
                if !is_irreducible(&fp, &mp) {
                    return Err(AlgebraError::ReducibleModulus { p });
                }
                m
            }
        };
        Ok(Arc::new(Self::build(p, ell, modulus)))
    }

    fn build(p: u32, ell: u32, modulus: Vec<u32>) -> FieldSpec {
        let q = p.pow(ell);
        let order = (q - 1) as u64;
        let one = {
            let mut v = vec![0u32; ell as usize];
            v[0] = 1;
            v
        };
        let pow_digits = |base: &[u32], mut e: u64| {
            let mut acc = one.clone();
            let mut b = base.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul_digits(&acc, &b, &modulus, p);
                }
                e >>= 1;
                if e > 0 {
                    b = mul_digits(&b, &b, &modulus, p);
                }
            }
            acc
        };
        let factors = prime_factors(order);
        let generator = (1..q)
            .find(|&g| {
                let d = unpack(g, p, ell);
                factors.iter().all(|&r| pow_digits(&d, order / r) != one)
            })
            .expect("multiplicative group is cyclic");
        let gd = unpack(generator, p, ell);
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![NO_LOG; q as usize];
        let mut cur = one.clone();
        for (i, slot) in exp.iter_mut().enumerate().take(n) {
            let idx = pack(&cur, p);
            *slot = idx;
            log[idx as usize] = i as u32;
            cur = mul_digits(&cur, &gd, &modulus, p);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        let mut zech = Vec::new();
        if p != 2 {
            zech = vec![NO_LOG; n];
            for (d, z) in zech.iter_mut().enumerate() {
                let mut digits = unpack(exp[d], p, ell);
                digits[0] = (digits[0] + 1) % p;
                let idx = pack(&digits, p);
                if idx != 0 {
                    *z = log[idx as usize];
                }
            }
        }
        let mut frob = vec![0u32; q as usize];
        for (a, slot) in frob.iter_mut().enumerate().skip(1) {
            let la = log[a] as u64;
            *slot = exp[((la * p as u64) % order) as usize];
        }
        FieldSpec {
            p,
            ell,
            q,
            modulus,
            exp,
            log,
            zech,
            frob,
            generator,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn same_as(&self, other: &FieldSpec) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }

    /// Element from a coefficient vector; entries are reduced mod `p` and
    /// vectors longer than `ell` are reduced modulo the defining polynomial.
    pub fn elem(&self, coeffs: &[i64]) -> Fq {
        let p = self.p as i64;
        let x = if self.ell > 1 { self.x() } else { Fq::ZERO };
        let mut acc = Fq::ZERO;
        let mut xp = Fq::ONE;
        for (i, &c) in coeffs.iter().enumerate() {
            let c = Fq(c.rem_euclid(p) as u32);
            if i < self.ell as usize {
                let mut d = vec![0u32; self.ell as usize];
                d[i] = c.0;
                acc = self.add_elem(acc, Fq(pack(&d, self.p)));
            } else {
                acc = self.add_elem(acc, self.mul_elem(c, xp));
            }
            if self.ell > 1 {
                xp = self.mul_elem(xp, x);
            }
        }
        acc
    }

    pub fn coeffs(&self, a: Fq) -> Vec<u32> {
        unpack(a.0, self.p, self.ell)
    }

    /// The class of the polynomial variable (`ell >= 2`).
    pub fn x(&self) -> Fq {
        assert!(self.ell >= 2, "F_p has no polynomial generator");
        Fq(self.p)
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fq {
        Fq(self.generator)
    }

    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn in_prime_field(&self, a: Fq) -> bool {
        a.0 < self.p
    }

    /// Prime-field element as an integer in `0..p`.
    pub fn to_prime(&self, a: Fq) -> Option<u32> {
        self.in_prime_field(a).then_some(a.0)
    }

    #[inline]
    pub fn add_elem(&self, a: Fq, b: Fq) -> Fq {
        if self.p == 2 {
            return Fq(a.0 ^ b.0);
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let n = self.q - 1;
        let d = if lb >= la { lb - la } else { lb + n - la };
        let z = self.zech[d as usize];
        if z == NO_LOG {
            Fq::ZERO
        } else {
            Fq(self.exp[(la + z) as usize])
        }
    }

    #[inline]
    pub fn neg_elem(&self, a: Fq) -> Fq {
        if self.p == 2 || a.0 == 0 {
            return a;
        }
        let l = self.log[a.0 as usize] + (self.q - 1) / 2;
        Fq(self.exp[l as usize])
    }

    #[inline]
    pub fn sub_elem(&self, a: Fq, b: Fq) -> Fq {
        self.add_elem(a, self.neg_elem(b))
    }

    #[inline]
    pub fn mul_elem(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        Fq(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv_elem(&self, a: Fq) -> Option<Fq> {
        if a.0 == 0 {
            return None;
        }
        let l = self.log[a.0 as usize];
        Some(Fq(self.exp[(self.q - 1 - l) as usize]))
    }

    pub fn pow_elem(&self, a: Fq, e: u64) -> Fq {
        if e == 0 {
            return Fq::ONE;
        }
        if a.0 == 0 {
            return Fq::ZERO;
        }
        let n = (self.q - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % n)) % n;
        Fq(self.exp[l as usize])
    }

    /// Discrete logarithm to the base [`primitive_element`](Self::primitive_element).
    pub fn log_elem(&self, a: Fq) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }

    /// `a^(p^i)`; the identity when `ell` divides `i`.
    pub fn frobenius(&self, a: Fq, i: u64) -> Fq {
        let mut x = a;
        for _ in 0..(i % self.ell as u64) {
            x = Fq(self.frob[x.0 as usize]);
        }
        x
    }

    /// Inverse Frobenius `a^(p^{-i})`.
    pub fn frobenius_inv(&self, a: Fq, i: u64) -> Fq {
        let ell = self.ell as u64;
        self.frobenius(a, (ell - i % ell) % ell)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fq {
        Fq(rng.gen_range(0..self.q))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fq {
        Fq(rng.gen_range(1..self.q))
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q).map(Fq)
    }

    /// Field trace down to `F_p`.
    pub fn trace(&self, a: Fq) -> Fq {
        let mut acc = Fq::ZERO;
        let mut x = a;
        for _ in 0..self.ell {
            acc = self.add_elem(acc, x);
            x = Fq(self.frob[x.0 as usize]);
        }
        acc
    }

    /// Writes an element as text: a plain integer in the prime field,
    /// otherwise the bracketed coefficient vector.
    pub fn format(&self, a: Fq) -> String {
        if self.in_prime_field(a) {
            a.0.to_string()
        } else {
            let c = self.coeffs(a);
            let items: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("[{}]", items.join(","))
        }
    }
}

/// Lexicographically smallest monic irreducible of degree `ell` over `F_p`,
/// ordering candidates by the packed integer `c_0 + c_1 p + ...` of their
/// lower coefficients.
pub fn default_modulus(p: u32, ell: u32) -> Result<Vec<u32>, AlgebraError> {
    if ell == 1 {
        return Ok(vec![0, 1]);
    }
    let fp = FieldSpec::prime(p)?;
    let count = (p as u64).pow(ell);
    for k in 0..count {
        let mut m = unpack(k as u32, p, ell);
        m.push(1);
        if m[0] == 0 {
            continue;
        }
        let mp: Vec<Fq> = m.iter().map(|&c| Fq(c)).collect();
        if is_irreducible(&fp, &mp) {
            return Ok(m);
        }
    }
    Err(AlgebraError::BadModulus(format!(
        "no irreducible of degree {ell} over F_{p}"
    )))
}

impl Ring for FieldSpec {
    type Elem = Fq;

    fn zero(&self) -> Fq {
        Fq::ZERO
    }
    fn one(&self) -> Fq {
        Fq::ONE
    }
    fn is_zero(&self, a: &Fq) -> bool {
        a.0 == 0
    }
    fn add(&self, a: &Fq, b: &Fq) -> Fq {
        self.add_elem(*a, *b)
    }
    fn neg(&self, a: &Fq) -> Fq {
        self.neg_elem(*a)
    }
    fn sub(&self, a: &Fq, b: &Fq) -> Fq {
        self.sub_elem(*a, *b)
    }
    fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        self.mul_elem(*a, *b)
    }
    fn div_exact(&self, a: &Fq, b: &Fq) -> Option<Fq> {
        self.inv_elem(*b).map(|bi| self.mul_elem(*a, bi))
    }
    fn from_int(&self, n: i64) -> Fq {
        FieldSpec::from_int(self, n)
    }
    fn pow(&self, a: &Fq, e: u64) -> Fq {
        self.pow_elem(*a, e)
    }
}

impl Field for FieldSpec {
    fn inv(&self, a: &Fq) -> Option<Fq> {
        self.inv_elem(*a)
    }
}

impl FiniteField for FieldSpec {
    fn order(&self) -> u64 {
        self.q as u64
    }
    fn characteristic(&self) -> u32 {
        self.p
    }
    fn enumerate(&self, i: u64) -> Fq {
        Fq(i as u32)
    }
}
