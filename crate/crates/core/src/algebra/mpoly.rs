//! Sparse multivariate polynomials and rational functions over `F_q`, in the
//! variables `t_1, ..., t_d`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use super::ext::{ExtElem, ExtField};
use super::fq::{FieldSpec, Fq};
use super::poly;
use super::ring::{Field, Ring};

/// Exponent vector; one entry per variable.
pub type Monomial = Vec<u64>;

/// Graded-lexicographic order: total degree first, then lexicographic.
pub fn grlex(a: &[u64], b: &[u64]) -> Ordering {
    let da: u64 = a.iter().sum();
    let db: u64 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Terms sorted by decreasing graded-lexicographic monomial, no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: Vec<(Monomial, Fq)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Fq)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(nvars: usize, c: Fq) -> Self {
        Self::from_terms(vec![(vec![0; nvars], c)])
    }

    pub fn monomial(m: Monomial, c: Fq) -> Self {
        Self::from_terms(vec![(m, c)])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        Self::monomial(m, Fq::ONE)
    }

    /// Builds from arbitrary terms; equal monomials must already be combined.
    pub fn from_terms(mut terms: Vec<(Monomial, Fq)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by(|a, b| grlex(&b.0, &a.0));
        MPoly { terms }
    }

    fn from_map(map: BTreeMap<Monomial, Fq>) -> Self {
        Self::from_terms(map.into_iter().collect())
    }

    /// Univariate polynomial in variable `var`.
    pub fn from_univariate(nvars: usize, var: usize, p: &[Fq]) -> Self {
        let terms = p
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| {
                let mut m = vec![0; nvars];
                m[var] = k as u64;
                (m, c)
            })
            .collect();
        Self::from_terms(terms)
    }

    pub fn leading(&self) -> Option<&(Monomial, Fq)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.iter().sum::<u64>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u64 {
        self.terms.iter().map(|(m, _)| m[var]).max().unwrap_or(0)
    }

    /// Variables that occur with positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.terms.first().map_or(0, |(m, _)| m.len());
        (0..n)
            .filter(|&i| self.terms.iter().any(|(m, _)| m[i] > 0))
            .collect()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.iter().all(|&e| e == 0))
    }

    /// Constant term value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Fq> {
        match self.terms.as_slice() {
            [] => Some(Fq::ZERO),
            [(m, c)] if m.iter().all(|&e| e == 0) => Some(*c),
            _ => None,
        }
    }
}

/// Arithmetic context for [`MPoly`] over a table field.
#[derive(Clone, Debug)]
pub struct MPolyRing {
    base: Arc<FieldSpec>,
    nvars: usize,
}

impl MPolyRing {
    pub fn new(base: Arc<FieldSpec>, nvars: usize) -> Self {
        MPolyRing { base, nvars }
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        &self.base
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let f = &*self.base;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match grlex(&a.terms[i].0, &b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add_elem(a.terms[i].1, b.terms[j].1);
                    if !c.is_zero() {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        MPoly { terms: out }
    }

    pub fn neg(&self, a: &MPoly) -> MPoly {
        MPoly {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.base.neg_elem(*c)))
                .collect(),
        }
    }

    pub fn sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, c: Fq, a: &MPoly) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: a
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), self.base.mul_elem(c, *x)))
                .collect(),
        }
    }

    /// Multiply by the monomial `c * t^m`.
    pub fn mul_term(&self, a: &MPoly, m: &[u64], c: Fq) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: a
                .terms
                .iter()
                .map(|(e, x)| {
                    (
                        e.iter().zip(m).map(|(u, v)| u + v).collect(),
                        self.base.mul_elem(c, *x),
                    )
                })
                .collect(),
        }
    }

    pub fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        if a.is_zero() || b.is_zero() {
            return MPoly::zero();
        }
        if a.terms.len() == 1 {
            return self.mul_term(b, &a.terms[0].0, a.terms[0].1);
        }
        if b.terms.len() == 1 {
            return self.mul_term(a, &b.terms[0].0, b.terms[0].1);
        }
        let f = &*self.base;
        let mut map: BTreeMap<Monomial, Fq> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(u, v)| u + v).collect();
                let c = f.mul_elem(*ca, *cb);
                let e = map.entry(m).or_insert(Fq::ZERO);
                *e = f.add_elem(*e, c);
            }
        }
        MPoly::from_map(map)
    }

    pub fn pow(&self, a: &MPoly, mut e: u64) -> MPoly {
        let mut acc = MPoly::constant(self.nvars, Fq::ONE);
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^(p^i)`: Frobenius on coefficients, exponents multiplied by `p^i`.
    pub fn frobenius(&self, a: &MPoly, i: u32) -> MPoly {
        let k = (self.base.p() as u64).pow(i);
        MPoly {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        m.iter().map(|&e| e * k).collect(),
                        self.base.frobenius(*c, i as u64),
                    )
                })
                .collect(),
        }
    }

    /// Exact quotient `a / b`, `None` if `b` does not divide `a` or the
    /// division exceeds `max_steps` reduction steps.
    pub fn div_exact(&self, a: &MPoly, b: &MPoly, max_steps: usize) -> Option<MPoly> {
        let (lm, lc) = b.leading()?.clone();
        let lci = self.base.inv_elem(lc).unwrap();
        let mut rem = a.clone();
        let mut quo = Vec::new();
        let mut steps = 0;
        while let Some((m, c)) = rem.leading().cloned() {
            steps += 1;
            if steps > max_steps {
                return None;
            }
            if m.iter().zip(&lm).any(|(x, y)| x < y) {
                return None;
            }
            let qm: Monomial = m.iter().zip(&lm).map(|(x, y)| x - y).collect();
            let qc = self.base.mul_elem(c, lci);
            rem = self.sub(&rem, &self.mul_term(b, &qm, qc));
            quo.push((qm, qc));
        }
        Some(MPoly::from_terms(quo))
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self, a: &MPoly) -> Monomial {
        let mut out: Option<Monomial> = None;
        for (m, _) in &a.terms {
            out = Some(match out {
                None => m.clone(),
                Some(o) => o.iter().zip(m).map(|(x, y)| *x.min(y)).collect(),
            });
        }
        out.unwrap_or_else(|| vec![0; self.nvars])
    }

    pub fn divide_monomial(&self, a: &MPoly, m: &[u64]) -> MPoly {
        MPoly {
            terms: a
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(x, y)| x - y).collect(), *c))
                .collect(),
        }
    }

    /// Dense coefficients in variable `var` if it is the only one present
    /// and the degree is at most `max_deg`.
    pub fn to_univariate(&self, a: &MPoly, var: usize, max_deg: u64) -> Option<Vec<Fq>> {
        let d = a.degree_in(var);
        if d > max_deg {
            return None;
        }
        let mut out = vec![Fq::ZERO; d as usize + 1];
        for (m, c) in &a.terms {
            if m.iter().enumerate().any(|(i, &e)| i != var && e != 0) {
                return None;
            }
            out[m[var] as usize] = *c;
        }
        Some(poly::trimmed(&*self.base, out))
    }

    pub fn eval_ext(&self, ext: &ExtField, a: &MPoly, point: &[ExtElem]) -> ExtElem {
        let mut acc = ext.zero();
        let mut cache: Vec<BTreeMap<u64, ExtElem>> = vec![BTreeMap::new(); self.nvars];
        for (m, c) in &a.terms {
            let mut t = ext.embed(*c);
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = cache[i]
                    .entry(e)
                    .or_insert_with(|| ext.pow(&point[i], e))
                    .clone();
                t = ext.mul(&t, &pw);
            }
            acc = ext.add(&acc, &t);
        }
        acc
    }

    pub fn eval(&self, a: &MPoly, point: &[Fq]) -> Fq {
        let f = &*self.base;
        let mut acc = Fq::ZERO;
        for (m, c) in &a.terms {
            let mut t = *c;
            for (i, &e) in m.iter().enumerate() {
                t = f.mul_elem(t, f.pow_elem(point[i], e));
            }
            acc = f.add_elem(acc, t);
        }
        acc
    }
}

/// `num / den` with denominator leading coefficient (graded-lex) one, no
/// common monomial factor, and a reduced quotient whenever one of the
/// reductions in [`MRatFunField::make`] applies.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MRatFun {
    pub num: MPoly,
    pub den: MPoly,
}

impl MRatFun {
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

/// Rational functions `F_q(t_1, ..., t_d)`.
#[derive(Clone, Debug)]
pub struct MRatFunField {
    ring: MPolyRing,
}

/// Densification limit for univariate gcds during canonicalization.
const DENSE_GCD_LIMIT: u64 = 1 << 14;
const DIVISION_STEPS: usize = 1 << 16;

impl MRatFunField {
    pub fn new(base: Arc<FieldSpec>, nvars: usize) -> Self {
        MRatFunField {
            ring: MPolyRing::new(base, nvars),
        }
    }

    pub fn ring(&self) -> &MPolyRing {
        &self.ring
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        self.ring.base()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn var(&self, i: usize) -> MRatFun {
        self.from_poly(MPoly::var(self.nvars(), i))
    }

    pub fn constant(&self, c: Fq) -> MRatFun {
        self.from_poly(MPoly::constant(self.nvars(), c))
    }

    pub fn from_poly(&self, p: MPoly) -> MRatFun {
        MRatFun {
            num: p,
            den: MPoly::constant(self.nvars(), Fq::ONE),
        }
    }

    /// Univariate rational function `num(t_var) / den(t_var)`.
    pub fn from_univariate(&self, var: usize, num: &[Fq], den: &[Fq]) -> Option<MRatFun> {
        let n = self.nvars();
        self.make(
            MPoly::from_univariate(n, var, num),
            MPoly::from_univariate(n, var, den),
        )
    }

    pub fn make(&self, num: MPoly, den: MPoly) -> Option<MRatFun> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(self.zero());
        }
        let r = &self.ring;
        let f = &**r.base();
        let cn = r.monomial_content(&num);
        let cd = r.monomial_content(&den);
        let common: Monomial = cn.iter().zip(&cd).map(|(x, y)| *x.min(y)).collect();
        let mut num = r.divide_monomial(&num, &common);
        let mut den = r.divide_monomial(&den, &common);
        if den.len() > 1 {
            if let Some(q) = r.div_exact(&num, &den, DIVISION_STEPS) {
                num = q;
                den = MPoly::constant(self.nvars(), Fq::ONE);
            } else {
                let vars_n = num.support_vars();
                let vars_d = den.support_vars();
                if vars_d.len() == 1 && vars_n.iter().all(|v| *v == vars_d[0]) {
                    let v = vars_d[0];
                    if let (Some(a), Some(b)) = (
                        r.to_univariate(&num, v, DENSE_GCD_LIMIT),
                        r.to_univariate(&den, v, DENSE_GCD_LIMIT),
                    ) {
                        let g = poly::gcd(f, &a, &b);
                        if g.len() > 1 {
                            num = MPoly::from_univariate(
                                self.nvars(),
                                v,
                                &poly::div_exact(f, &a, &g).unwrap(),
                            );
                            den = MPoly::from_univariate(
                                self.nvars(),
                                v,
                                &poly::div_exact(f, &b, &g).unwrap(),
                            );
                        }
                    }
                }
            }
        }
        let lc = den.leading().unwrap().1;
        let li = f.inv_elem(lc).unwrap();
        Some(MRatFun {
            num: r.scale(li, &num),
            den: r.scale(li, &den),
        })
    }

    /// Exact equality by cross multiplication.
    pub fn equal(&self, a: &MRatFun, b: &MRatFun) -> bool {
        if a == b {
            return true;
        }
        let r = &self.ring;
        r.mul(&a.num, &b.den) == r.mul(&b.num, &a.den)
    }

    /// `a^(p^i)`.
    pub fn frobenius(&self, a: &MRatFun, i: u32) -> MRatFun {
        MRatFun {
            num: self.ring.frobenius(&a.num, i),
            den: self.ring.frobenius(&a.den, i),
        }
    }

    /// Value at a point of an extension field; `None` where the denominator
    /// vanishes.
    pub fn eval_ext(&self, ext: &ExtField, a: &MRatFun, point: &[ExtElem]) -> Option<ExtElem> {
        let d = self.ring.eval_ext(ext, &a.den, point);
        let di = ext.inv(&d)?;
        Some(ext.mul(&self.ring.eval_ext(ext, &a.num, point), &di))
    }

    pub fn scale(&self, c: Fq, a: &MRatFun) -> MRatFun {
        if c.is_zero() {
            return self.zero();
        }
        MRatFun {
            num: self.ring.scale(c, &a.num),
            den: a.den.clone(),
        }
    }
}

impl Ring for MRatFunField {
    type Elem = MRatFun;

    fn zero(&self) -> MRatFun {
        self.from_poly(MPoly::zero())
    }
    fn one(&self) -> MRatFun {
        self.constant(Fq::ONE)
    }
    fn is_zero(&self, a: &MRatFun) -> bool {
        a.num.is_zero()
    }
    fn add(&self, a: &MRatFun, b: &MRatFun) -> MRatFun {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let r = &self.ring;
        if a.den == b.den {
            let num = r.add(&a.num, &b.num);
            if a.den.is_constant() {
                return MRatFun {
                    num,
                    den: a.den.clone(),
                };
            }
            return self.make(num, a.den.clone()).unwrap();
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        let den = r.mul(&a.den, &b.den);
        self.make(num, den).unwrap()
    }
    fn neg(&self, a: &MRatFun) -> MRatFun {
        MRatFun {
            num: self.ring.neg(&a.num),
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &MRatFun, b: &MRatFun) -> MRatFun {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let r = &self.ring;
        if a.den.is_constant() && b.den.is_constant() {
            return MRatFun {
                num: r.mul(&a.num, &b.num),
                den: a.den.clone(),
            };
        }
        self.make(r.mul(&a.num, &b.num), r.mul(&a.den, &b.den))
            .unwrap()
    }
    fn div_exact(&self, a: &MRatFun, b: &MRatFun) -> Option<MRatFun> {
        self.div(a, b)
    }
    fn from_int(&self, n: i64) -> MRatFun {
        self.constant(self.base().from_int(n))
    }
    fn pow(&self, a: &MRatFun, e: u64) -> MRatFun {
        let r = &self.ring;
        MRatFun {
            num: r.pow(&a.num, e),
            den: r.pow(&a.den, e),
        }
    }
}

impl Field for MRatFunField {
    fn inv(&self, a: &MRatFun) -> Option<MRatFun> {
        if a.is_zero() {
            return None;
        }
        self.make(a.den.clone(), a.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn univariate_reduction_is_canonical() {
        let f = FieldSpec::prime(2).unwrap();
        let k = MRatFunField::new(f.clone(), 1);
        let t = k.var(0);
        let one = k.one();
        let t1 = k.add(&t, &one);
        // (t^2 + 1) / (t + 1) = t + 1 in characteristic two
        let sq = k.mul(&t1, &t1);
        assert_eq!(k.div(&sq, &t1).unwrap(), t1);
        let a = k.div(&one, &t).unwrap();
        let b = k.div(&one, &t1).unwrap();
        let s = k.add(&a, &b);
        // 1/t + 1/(t+1) = 1/(t^2+t)
        let expected = k.inv(&k.mul(&t, &t1)).unwrap();
        assert_eq!(s, expected);
        assert_eq!(k.mul(&s, &k.inv(&s).unwrap()), one);
    }

    #[test]
    fn frobenius_matches_power() {
        let f = FieldSpec::new(3, 2, None).unwrap();
        let k = MRatFunField::new(f.clone(), 2);
        let x = k.add(&k.var(0), &k.scale(f.x(), &k.var(1)));
        let y = k.div(&x, &k.add(&k.var(1), &k.one())).unwrap();
        assert!(k.equal(&k.frobenius(&y, 1), &k.pow(&y, 3)));
        assert!(k.equal(&k.frobenius(&y, 2), &k.pow(&y, 9)));
    }

    #[test]
    fn multivariate_exact_division() {
        let f = FieldSpec::prime(5).unwrap();
        let k = MRatFunField::new(f.clone(), 2);
        let a = k.add(&k.var(0), &k.var(1));
        let b = k.sub(&k.var(0), &k.var(1));
        let prod = k.mul(&a, &b);
        assert_eq!(k.div(&prod, &b).unwrap(), a);
    }
}
