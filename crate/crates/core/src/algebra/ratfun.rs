//! Univariate polynomials and rational functions in a central variable `s`
//! over a finite field.

use std::sync::Arc;

use super::fq::{FieldSpec, Fq};
use super::linalg::Matrix;
use super::poly;
use super::ring::{Field, Ring};

/// Polynomial in `s`, coefficients low to high, no trailing zeros.
pub type CPoly = Vec<Fq>;

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    pub num: CPoly,
    pub den: CPoly,
}

impl RatFun {
    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_poly(&self) -> bool {
        self.den.len() == 1
    }
}

/// The field `F_q(s)`.
#[derive(Clone, Debug)]
pub struct RatFunField {
    base: Arc<FieldSpec>,
}

impl RatFunField {
    pub fn new(base: Arc<FieldSpec>) -> Self {
        RatFunField { base }
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        &self.base
    }

    /// Canonical form of `num / den`; `None` when `den = 0`.
    pub fn make(&self, num: CPoly, den: CPoly) -> Option<RatFun> {
        let f = &*self.base;
        let num = poly::trimmed(f, num);
        let den = poly::trimmed(f, den);
        if den.is_empty() {
            return None;
        }
        if num.is_empty() {
            return Some(self.zero());
        }
        if den.len() == 1 {
            let li = f.inv_elem(den[0]).unwrap();
            return Some(RatFun {
                num: poly::scale(f, &li, &num),
                den: vec![Fq::ONE],
            });
        }
        let g = poly::gcd(f, &num, &den);
        let (num, den) = if g.len() > 1 {
            (
                poly::div_exact(f, &num, &g).unwrap(),
                poly::div_exact(f, &den, &g).unwrap(),
            )
        } else {
            (num, den)
        };
        let li = f.inv_elem(*den.last().unwrap()).unwrap();
        Some(RatFun {
            num: poly::scale(f, &li, &num),
            den: poly::scale(f, &li, &den),
        })
    }

    pub fn from_poly(&self, p: CPoly) -> RatFun {
        RatFun {
            num: poly::trimmed(&*self.base, p),
            den: vec![Fq::ONE],
        }
    }

    pub fn constant(&self, c: Fq) -> RatFun {
        self.from_poly(vec![c])
    }

    /// `s^k`.
    pub fn s_pow(&self, k: usize) -> RatFun {
        self.from_poly(poly::monomial(&*self.base, Fq::ONE, k))
    }

    pub fn s(&self) -> RatFun {
        self.s_pow(1)
    }

    /// Coefficientwise Frobenius `a -> a^(p^i)` on numerator and denominator.
    pub fn frobenius(&self, a: &RatFun, i: u64) -> RatFun {
        if i % self.base.ell() as u64 == 0 {
            return a.clone();
        }
        RatFun {
            num: conj(&self.base, &a.num, i),
            den: conj(&self.base, &a.den, i),
        }
    }

    /// True when every coefficient lies in the prime field.
    pub fn is_prime(&self, a: &RatFun) -> bool {
        a.num
            .iter()
            .chain(&a.den)
            .all(|&c| self.base.in_prime_field(c))
    }

    pub fn eval(&self, a: &RatFun, x: Fq) -> Option<Fq> {
        let f = &*self.base;
        let d = poly::eval(f, &a.den, &x);
        f.inv_elem(d)
            .map(|di| f.mul_elem(poly::eval(f, &a.num, &x), di))
    }

    /// Rewrites `a` over a denominator in `F_p[s]` and splits the numerator
    /// into its `ell` coordinates over `F_p`. The returned rational functions
    /// have prime-field coefficients; their indices are valid in any field of
    /// characteristic `p`.
    pub fn prime_coords(&self, a: &RatFun) -> Vec<RatFun> {
        let f = &*self.base;
        let ell = f.ell() as usize;
        if a.is_zero() {
            return vec![self.zero(); ell];
        }
        let cof = norm_cofactor(f, &a.den);
        let num = poly::mul(f, &a.num, &cof);
        let den = poly::mul(f, &a.den, &cof);
        let mut parts = vec![Vec::new(); ell];
        for c in &num {
            let digits = f.coeffs(*c);
            for (k, part) in parts.iter_mut().enumerate() {
                part.push(Fq::from_index(digits[k]));
            }
        }
        parts
            .into_iter()
            .map(|p| self.make(p, den.clone()).unwrap())
            .collect()
    }

    /// Inverse of [`prime_coords`](Self::prime_coords).
    pub fn from_prime_coords(&self, coords: &[RatFun]) -> RatFun {
        let f = &*self.base;
        let mut acc = self.zero();
        let mut basis = Fq::ONE;
        let x = if f.ell() > 1 { f.x() } else { Fq::ONE };
        for c in coords {
            let term = RatFun {
                num: poly::scale(f, &basis, &c.num),
                den: c.den.clone(),
            };
            acc = self.add(&acc, &self.make(term.num, term.den).unwrap());
            basis = f.mul_elem(basis, x);
        }
        acc
    }
}

/// Apply `Frobenius^i` to every coefficient.
pub fn conj(f: &FieldSpec, a: &[Fq], i: u64) -> CPoly {
    a.iter().map(|&c| f.frobenius(c, i)).collect()
}

/// `prod_{i=1}^{ell-1} conj(a, i)`, so that `a * cofactor` is the norm of `a`
/// and has coefficients in `F_p`.
pub fn norm_cofactor(f: &FieldSpec, a: &[Fq]) -> CPoly {
    let mut acc = vec![Fq::ONE];
    for i in 1..f.ell() as u64 {
        acc = poly::mul(f, &acc, &conj(f, a, i));
    }
    acc
}

pub fn norm(f: &FieldSpec, a: &[Fq]) -> CPoly {
    poly::mul(f, a, &norm_cofactor(f, a))
}

/// Largest monic divisor of `a` with coefficients in `F_p`.
pub fn prime_divisor(f: &FieldSpec, a: &[Fq]) -> CPoly {
    let mut h = poly::monic(f, a);
    loop {
        let c = conj(f, &h, 1);
        if c == h {
            return h;
        }
        h = poly::gcd(f, &h, &c);
    }
}

/// Smallest monic multiple of `a` with coefficients in `F_p`.
pub fn prime_multiple(f: &FieldSpec, a: &[Fq]) -> CPoly {
    let mut h = poly::monic(f, a);
    for i in 1..f.ell() as u64 {
        h = poly::lcm(f, &h, &conj(f, a, i));
    }
    h
}

impl Ring for RatFunField {
    type Elem = RatFun;

    fn zero(&self) -> RatFun {
        RatFun {
            num: Vec::new(),
            den: vec![Fq::ONE],
        }
    }
    fn one(&self) -> RatFun {
        self.constant(Fq::ONE)
    }
    fn is_zero(&self, a: &RatFun) -> bool {
        a.num.is_empty()
    }
    fn add(&self, a: &RatFun, b: &RatFun) -> RatFun {
        let f = &*self.base;
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            let num = poly::add(f, &a.num, &b.num);
            if a.is_poly() {
                return RatFun {
                    num,
                    den: a.den.clone(),
                };
            }
            return self.make(num, a.den.clone()).unwrap();
        }
        let g = poly::gcd(f, &a.den, &b.den);
        let bd = poly::div_exact(f, &b.den, &g).unwrap();
        let ad = poly::div_exact(f, &a.den, &g).unwrap();
        let num = poly::add(f, &poly::mul(f, &a.num, &bd), &poly::mul(f, &b.num, &ad));
        let den = poly::mul(f, &a.den, &bd);
        self.make(num, den).unwrap()
    }
    fn neg(&self, a: &RatFun) -> RatFun {
        RatFun {
            num: poly::neg(&*self.base, &a.num),
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &RatFun, b: &RatFun) -> RatFun {
        let f = &*self.base;
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        if a.is_poly() && b.is_poly() {
            return RatFun {
                num: poly::mul(f, &a.num, &b.num),
                den: vec![Fq::ONE],
            };
        }
        let g1 = poly::gcd(f, &a.num, &b.den);
        let g2 = poly::gcd(f, &b.num, &a.den);
        let an = poly::div_exact(f, &a.num, &g1).unwrap();
        let bd = poly::div_exact(f, &b.den, &g1).unwrap();
        let bn = poly::div_exact(f, &b.num, &g2).unwrap();
        let ad = poly::div_exact(f, &a.den, &g2).unwrap();
        let num = poly::mul(f, &an, &bn);
        let den = poly::mul(f, &ad, &bd);
        let li = f.inv_elem(*den.last().unwrap()).unwrap();
        RatFun {
            num: poly::scale(f, &li, &num),
            den: poly::scale(f, &li, &den),
        }
    }
    fn div_exact(&self, a: &RatFun, b: &RatFun) -> Option<RatFun> {
        self.div(a, b)
    }
    fn from_int(&self, n: i64) -> RatFun {
        self.constant(self.base.from_int(n))
    }
}

impl Field for RatFunField {
    fn inv(&self, a: &RatFun) -> Option<RatFun> {
        if a.is_zero() {
            return None;
        }
        self.make(a.den.clone(), a.num.clone())
    }
}

/// Basis of the right kernel of a matrix over `F_q(s)`.
///
/// Rows are cleared to `F_q[s]`, reduced to echelon form by fraction-free
/// elimination (each updated row divided by the gcd of its entries), and
/// the kernel is read off by back substitution. Each returned vector is
/// scaled to have polynomial, coprime entries.
pub fn kernel_basis(field: &RatFunField, m: &Matrix<RatFun>) -> Vec<Vec<RatFun>> {
    let f = &**field.base();
    let cols = m.cols();
    let mut rows: Vec<Vec<CPoly>> = Vec::new();
    for i in 0..m.rows() {
        let row = m.row(i);
        let mut l = vec![Fq::ONE];
        for x in row {
            if !x.is_zero() && !x.is_poly() {
                l = poly::lcm(f, &l, &x.den);
            }
        }
        let prow: Vec<CPoly> = row
            .iter()
            .map(|x| {
                if x.is_zero() {
                    Vec::new()
                } else {
                    let cof = poly::div_exact(f, &l, &x.den).unwrap();
                    poly::mul(f, &x.num, &cof)
                }
            })
            .collect();
        if prow.iter().any(|c| !c.is_empty()) {
            rows.push(prow);
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len())
            .filter(|&i| !rows[i][col].is_empty())
            .min_by_key(|&i| rows[i][col].len())
        else {
            continue;
        };
        rows.swap(r, pr);
        for i in r + 1..rows.len() {
            if rows[i][col].is_empty() {
                continue;
            }
            let a = rows[r][col].clone();
            let b = rows[i][col].clone();
            let g = poly::gcd(f, &a, &b);
            let a = poly::div_exact(f, &a, &g).unwrap();
            let b = poly::div_exact(f, &b, &g).unwrap();
            let new: Vec<CPoly> = (0..cols)
                .map(|k| {
                    poly::sub(
                        f,
                        &poly::mul(f, &a, &rows[i][k]),
                        &poly::mul(f, &b, &rows[r][k]),
                    )
                })
                .collect();
            rows[i] = primitive_row(f, new);
        }
        pivots.push(col);
        r += 1;
    }
    let mut out = Vec::new();
    for j in 0..cols {
        if pivots.contains(&j) {
            continue;
        }
        let mut x = vec![field.zero(); cols];
        x[j] = field.one();
        for (ri, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = field.zero();
            for (k, xk) in x.iter().enumerate().skip(pc + 1) {
                if xk.is_zero() || rows[ri][k].is_empty() {
                    continue;
                }
                acc = field.add(&acc, &field.mul(&field.from_poly(rows[ri][k].clone()), xk));
            }
            let piv = field.from_poly(rows[ri][pc].clone());
            x[pc] = field.neg(&field.div(&acc, &piv).unwrap());
        }
        out.push(primitive_vector(field, x));
    }
    out
}

fn primitive_row(f: &FieldSpec, row: Vec<CPoly>) -> Vec<CPoly> {
    let mut g: CPoly = Vec::new();
    for c in &row {
        if !c.is_empty() {
            g = poly::gcd(f, &g, c);
            if g.len() == 1 {
                return row;
            }
        }
    }
    if g.len() <= 1 {
        return row;
    }
    row.into_iter()
        .map(|c| {
            if c.is_empty() {
                c
            } else {
                poly::div_exact(f, &c, &g).unwrap()
            }
        })
        .collect()
}

/// Scales a nonzero vector so its entries are coprime polynomials with the
/// last nonzero entry monic.
pub fn primitive_vector(field: &RatFunField, v: Vec<RatFun>) -> Vec<RatFun> {
    let f = &**field.base();
    let mut l = vec![Fq::ONE];
    for x in &v {
        if !x.is_zero() {
            l = poly::lcm(f, &l, &x.den);
        }
    }
    let polys: Vec<CPoly> = v
        .iter()
        .map(|x| {
            if x.is_zero() {
                Vec::new()
            } else {
                poly::mul(f, &x.num, &poly::div_exact(f, &l, &x.den).unwrap())
            }
        })
        .collect();
    let polys = primitive_row(f, polys);
    let lead = polys
        .iter()
        .rev()
        .find(|c| !c.is_empty())
        .map(|c| *c.last().unwrap());
    let li = match lead {
        Some(c) => f.inv_elem(c).unwrap(),
        None => Fq::ONE,
    };
    polys
        .into_iter()
        .map(|c| field.from_poly(poly::scale(f, &li, &c)))
        .collect()
}
