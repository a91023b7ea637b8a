//! The skew field `K = F_q[F] (x) F_p(F^ell)` and matrices over it.
//!
//! An element of `K` is stored as `sum_{i<ell} a_i(s) F^i` with `a_i` in
//! `F_q(s)` and `s = F^ell` central. Multiplication uses
//! `F c(s) = phi(c)(s) F`, where `phi` is the Frobenius on coefficients.

use std::sync::Arc;

use crate::algebra::fq::{FieldSpec, Fq};
use crate::algebra::linalg::{self, Echelon, Matrix};
use crate::algebra::poly;
use crate::algebra::ratfun::{self, kernel_basis, CPoly, RatFun, RatFunField};
use crate::algebra::ring::{Field, Ring};
use crate::error::AlgebraError;
use crate::ore::{OrePoly, OreRing};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewElem {
    pub parts: Vec<RatFun>,
}

pub type SkewMatrix = Matrix<SkewElem>;

/// Polynomial in `x` over the center `F_p(s)`, coefficients low to high.
pub type CenterPoly = Vec<RatFun>;

#[derive(Clone, Debug)]
pub struct SkewField {
    base: Arc<FieldSpec>,
    rf: RatFunField,
    prime: RatFunField,
    ore: OreRing,
}

impl SkewField {
    pub fn new(base: Arc<FieldSpec>) -> Self {
        let prime = FieldSpec::prime(base.p()).expect("characteristic is prime");
        SkewField {
            rf: RatFunField::new(base.clone()),
            prime: RatFunField::new(prime),
            ore: OreRing::new(base.clone()),
            base,
        }
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        &self.base
    }

    pub fn ell(&self) -> usize {
        self.base.ell() as usize
    }

    /// `F_q(s)`.
    pub fn ratfun(&self) -> &RatFunField {
        &self.rf
    }

    /// The center `F_p(s)`.
    pub fn center(&self) -> &RatFunField {
        &self.prime
    }

    pub fn ore(&self) -> &OreRing {
        &self.ore
    }

    pub fn from_parts(&self, parts: Vec<RatFun>) -> SkewElem {
        assert_eq!(parts.len(), self.ell());
        SkewElem { parts }
    }

    /// Embeds `c` in `F_q(s)` as `c(F^ell)`.
    pub fn scalar(&self, c: RatFun) -> SkewElem {
        let mut parts = vec![self.rf.zero(); self.ell()];
        parts[0] = c;
        SkewElem { parts }
    }

    pub fn s(&self) -> SkewElem {
        self.scalar(self.rf.s())
    }

    pub fn from_ore(&self, p: &OrePoly) -> SkewElem {
        let parts = self
            .ore
            .center_decompose(p)
            .into_iter()
            .map(|c| self.rf.from_poly(c))
            .collect();
        SkewElem { parts }
    }

    /// The twisted polynomial equal to `u`, if all parts are polynomials.
    pub fn to_ore(&self, u: &SkewElem) -> Option<OrePoly> {
        if u.parts.iter().any(|a| !a.is_poly()) {
            return None;
        }
        let parts: Vec<CPoly> = u.parts.iter().map(|a| a.num.clone()).collect();
        Some(self.ore.recompose(&parts))
    }

    pub fn is_central(&self, u: &SkewElem) -> bool {
        u.parts[1..].iter().all(|a| a.is_zero()) && self.rf.is_prime(&u.parts[0])
    }

    /// Monic `c` in `F_p[s]` of least degree with `c * u` in `F_q[F]`.
    pub fn central_denominator(&self, u: &SkewElem) -> CPoly {
        let f = &**self.base();
        let mut l = vec![Fq::ONE];
        for a in &u.parts {
            if !a.is_poly() {
                l = poly::lcm(f, &l, &ratfun::prime_multiple(f, &a.den));
            }
        }
        l
    }

    /// `u` scaled on the left by `c(s)`, `c` central.
    pub fn scale_central(&self, c: &RatFun, u: &SkewElem) -> SkewElem {
        SkewElem {
            parts: u.parts.iter().map(|a| self.rf.mul(c, a)).collect(),
        }
    }

    /// Inverse via a central multiplier of a polynomial representative.
    pub fn skew_inverse(&self, u: &SkewElem) -> Result<SkewElem, AlgebraError> {
        if self.is_zero(u) {
            return Err(AlgebraError::DivisionByZero);
        }
        let f = &**self.base();
        let mut d = vec![Fq::ONE];
        for a in &u.parts {
            d = poly::lcm(f, &d, &a.den);
        }
        let dd = self.scalar(self.rf.from_poly(d));
        let p = self
            .to_ore(&self.mul(&dd, u))
            .expect("cleared element is polynomial");
        let (q, c) = central_multiplier(self, &p)?;
        let cinv = self.rf.inv(&self.rf.from_poly(c)).unwrap();
        Ok(self.mul(&self.scale_central(&cinv, &self.from_ore(&q)), &dd))
    }
}

impl Ring for SkewField {
    type Elem = SkewElem;

    fn zero(&self) -> SkewElem {
        SkewElem {
            parts: vec![self.rf.zero(); self.ell()],
        }
    }
    fn one(&self) -> SkewElem {
        self.scalar(self.rf.one())
    }
    fn is_zero(&self, a: &SkewElem) -> bool {
        a.parts.iter().all(|x| x.is_zero())
    }
    fn add(&self, a: &SkewElem, b: &SkewElem) -> SkewElem {
        SkewElem {
            parts: a
                .parts
                .iter()
                .zip(&b.parts)
                .map(|(x, y)| self.rf.add(x, y))
                .collect(),
        }
    }
    fn neg(&self, a: &SkewElem) -> SkewElem {
        SkewElem {
            parts: a.parts.iter().map(|x| self.rf.neg(x)).collect(),
        }
    }
    fn sub(&self, a: &SkewElem, b: &SkewElem) -> SkewElem {
        SkewElem {
            parts: a
                .parts
                .iter()
                .zip(&b.parts)
                .map(|(x, y)| self.rf.sub(x, y))
                .collect(),
        }
    }
    fn mul(&self, a: &SkewElem, b: &SkewElem) -> SkewElem {
        let ell = self.ell();
        let rf = &self.rf;
        let mut out = vec![rf.zero(); ell];
        for (i, x) in a.parts.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.parts.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let mut t = rf.mul(x, &rf.frobenius(y, i as u64));
                let k = i + j;
                if k >= ell {
                    t = RatFun {
                        num: poly::shift(&**self.base(), &t.num, 1),
                        den: t.den,
                    };
                    t = rf.make(t.num, t.den).unwrap();
                }
                out[k % ell] = rf.add(&out[k % ell], &t);
            }
        }
        SkewElem { parts: out }
    }
    /// `a * b^{-1}`.
    fn div_exact(&self, a: &SkewElem, b: &SkewElem) -> Option<SkewElem> {
        self.div(a, b)
    }
    fn from_int(&self, n: i64) -> SkewElem {
        self.scalar(self.rf.from_int(n))
    }
}

impl Field for SkewField {
    fn inv(&self, a: &SkewElem) -> Option<SkewElem> {
        self.skew_inverse(a).ok()
    }
}

pub fn from_ore_matrix(k: &SkewField, m: &Matrix<OrePoly>) -> SkewMatrix {
    m.map(|p| k.from_ore(p))
}

/// The twisted-polynomial matrix equal to `m`, if every entry is polynomial.
pub fn to_ore_matrix(k: &SkewField, m: &SkewMatrix) -> Option<Matrix<OrePoly>> {
    let entries: Option<Vec<OrePoly>> = m.entries().iter().map(|u| k.to_ore(u)).collect();
    Some(Matrix::from_vec(m.rows(), m.cols(), entries?))
}

/// Monic `c` in `F_p[s]` of least degree with `c * M` over `F_q[F]`.
pub fn central_denominator(k: &SkewField, m: &SkewMatrix) -> CPoly {
    let f = &**k.base();
    m.entries().iter().fold(vec![Fq::ONE], |acc, u| {
        poly::lcm(f, &acc, &k.central_denominator(u))
    })
}

/// The matrix `Ã` over `F_q(s)` with
/// `((BA)_0, ..., (BA)_{ell-1}) = (B_0, ..., B_{ell-1}) Ã` for every `B`,
/// where `X_j` is the matrix of `j`-th parts of `X`. Block `(i, j)` is the
/// `j`-th part of `F^i A`.
pub fn tilde(k: &SkewField, a: &SkewMatrix) -> Matrix<RatFun> {
    let ell = k.ell();
    let (r, c) = (a.rows(), a.cols());
    let f_pows: Vec<SkewElem> = (0..ell).map(|i| k.from_ore(&k.ore().f_pow(i))).collect();
    let mut out = linalg::zero(k.ratfun(), r * ell, c * ell);
    for (i, fi) in f_pows.iter().enumerate() {
        for x in 0..r {
            for y in 0..c {
                let prod = k.mul(fi, a.get(x, y));
                for (j, part) in prod.parts.into_iter().enumerate() {
                    out.set(i * r + x, j * c + y, part);
                }
            }
        }
    }
    out
}

/// Coordinates of a matrix over `K` as a vector over the center `F_p(s)`.
fn center_coords(k: &SkewField, a: &SkewMatrix) -> Vec<RatFun> {
    let mut out = Vec::new();
    for u in a.entries() {
        for part in &u.parts {
            out.extend(k.ratfun().prime_coords(part));
        }
    }
    out
}

/// Monic polynomial of least degree over `F_p(s)` annihilating `A`.
pub fn min_poly_center(k: &SkewField, a: &SkewMatrix) -> CenterPoly {
    assert!(a.is_square());
    let n = a.rows();
    let center = k.center();
    let mut cols = vec![center_coords(k, &linalg::identity(k, n))];
    let mut power = linalg::identity(k, n);
    for deg in 1..=n * k.ell() {
        power = linalg::mul(k, &power, a);
        cols.push(center_coords(k, &power));
        let m = Matrix::from_fn(cols[0].len(), deg + 1, |i, j| cols[j][i].clone());
        let ker = kernel_basis(center, &m);
        if let Some(v) = ker.first() {
            let lead = center
                .inv(&v[deg])
                .expect("first dependence involves the top power");
            return v.iter().map(|c| center.mul(c, &lead)).collect();
        }
    }
    unreachable!("an n x n matrix over K satisfies a polynomial of degree n * ell over the center")
}

/// `Q(A)` for `Q` over the center.
pub fn eval_center_poly(k: &SkewField, q: &CenterPoly, a: &SkewMatrix) -> SkewMatrix {
    let n = a.rows();
    let mut acc = linalg::zero(k, n, n);
    for c in q.iter().rev() {
        acc = linalg::mul(k, &acc, a);
        let id = linalg::scale_left(k, &k.scalar(c.clone()), &linalg::identity(k, n));
        acc = linalg::add(k, &acc, &id);
    }
    acc
}

/// Nonzero `Q` in `F_q[F]` and monic `c` in `F_p[s]` with `Q P = c(F^ell)`.
///
/// Solves `(Q_0, ..., Q_{ell-1}) P̃ = (1, 0, ..., 0)` over `F_q(s)`, clears
/// the denominator `D` of the solution, multiplies by the Frobenius
/// conjugates of `D` so the product becomes the norm of `D`, and finally
/// removes common `F_p[s]` factors of `Q` and `c`.
pub fn central_multiplier(k: &SkewField, p: &OrePoly) -> Result<(OrePoly, CPoly), AlgebraError> {
    if p.is_empty() {
        return Err(AlgebraError::InvalidInput(
            "central multiplier of zero".into(),
        ));
    }
    let f = &**k.base();
    let rf = k.ratfun();
    let pt = tilde(k, &Matrix::from_vec(1, 1, vec![k.from_ore(p)]));
    let inv = linalg::inverse(rf, &pt).ok_or(AlgebraError::Singular)?;
    let x = inv.row(0).to_vec();
    let mut d = vec![Fq::ONE];
    for a in &x {
        d = poly::lcm(f, &d, &a.den);
    }
    let cof = ratfun::norm_cofactor(f, &d);
    let mut c = poly::mul(f, &d, &cof);
    let mut parts: Vec<CPoly> = x
        .iter()
        .map(|a| {
            if a.is_zero() {
                Vec::new()
            } else {
                let scaled = poly::mul(f, &a.num, &poly::div_exact(f, &d, &a.den).unwrap());
                poly::mul(f, &scaled, &cof)
            }
        })
        .collect();
    let mut g = c.clone();
    for part in &parts {
        g = poly::gcd(f, &g, part);
    }
    let g = ratfun::prime_divisor(f, &g);
    if g.len() > 1 {
        c = poly::div_exact(f, &c, &g).unwrap();
        for part in parts.iter_mut() {
            if !part.is_empty() {
                *part = poly::div_exact(f, part, &g).unwrap();
            }
        }
    }
    let li = f.inv_elem(*c.last().unwrap()).unwrap();
    let c = poly::scale(f, &li, &c);
    let parts: Vec<CPoly> = parts.iter().map(|x| poly::scale(f, &li, x)).collect();
    Ok((k.ore().recompose(&parts), c))
}

/// Row reduction over `K` with the left transformation record.
pub fn gauss_eliminate(k: &SkewField, m: &SkewMatrix) -> Echelon<SkewElem> {
    linalg::echelon(k, m)
}

pub fn matrix_inverse(k: &SkewField, m: &SkewMatrix) -> Result<SkewMatrix, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::Dimension(
            "inverse of a non-square matrix".into(),
        ));
    }
    linalg::inverse(k, m).ok_or(AlgebraError::Singular)
}

/// Characteristic polynomial of `Ã` over `F_q(s)`.
pub fn tilde_charpoly(k: &SkewField, a: &SkewMatrix) -> Vec<RatFun> {
    linalg::charpoly(k.ratfun(), &tilde(k, a))
}
