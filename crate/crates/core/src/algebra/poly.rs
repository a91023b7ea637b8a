//! Dense univariate polynomials over a coefficient [`Ring`].
//!
//! A polynomial is a `Vec` of coefficients, lowest degree first, with no
//! trailing zeros; the zero polynomial is the empty vector.

use super::ring::{Field, Ring};

pub fn trim<R: Ring>(r: &R, v: &mut Vec<R::Elem>) {
    while let Some(last) = v.last() {
        if r.is_zero(last) {
            v.pop();
        } else {
            break;
        }
    }
}

pub fn trimmed<R: Ring>(r: &R, mut v: Vec<R::Elem>) -> Vec<R::Elem> {
    trim(r, &mut v);
    v
}

/// Degree, `None` for the zero polynomial.
pub fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn constant<R: Ring>(r: &R, c: R::Elem) -> Vec<R::Elem> {
    trimmed(r, vec![c])
}

/// `c * x^k`.
pub fn monomial<R: Ring>(r: &R, c: R::Elem, k: usize) -> Vec<R::Elem> {
    if r.is_zero(&c) {
        return Vec::new();
    }
    let mut v = vec![r.zero(); k + 1];
    v[k] = c;
    v
}

pub fn add<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let v = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => r.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(v);
    }
    trimmed(r, out)
}

pub fn neg<R: Ring>(r: &R, a: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().map(|x| r.neg(x)).collect()
}

pub fn sub<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let v = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => r.sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => r.neg(y),
            (None, None) => unreachable!(),
        };
        out.push(v);
    }
    trimmed(r, out)
}

pub fn mul<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![r.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if r.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = r.mul(x, y);
            out[i + j] = r.add(&out[i + j], &t);
        }
    }
    trimmed(r, out)
}

/// `c * a` coefficientwise (c on the left).
pub fn scale<R: Ring>(r: &R, c: &R::Elem, a: &[R::Elem]) -> Vec<R::Elem> {
    if r.is_zero(c) {
        return Vec::new();
    }
    trimmed(r, a.iter().map(|x| r.mul(c, x)).collect())
}

/// Multiply by `x^k`.
pub fn shift<R: Ring>(r: &R, a: &[R::Elem], k: usize) -> Vec<R::Elem> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut v = vec![r.zero(); k];
    v.extend_from_slice(a);
    v
}

pub fn pow<R: Ring>(r: &R, a: &[R::Elem], mut e: u64) -> Vec<R::Elem> {
    let mut acc = vec![r.one()];
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(r, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(r, &base, &base);
        }
    }
    acc
}

pub fn eval<R: Ring>(r: &R, a: &[R::Elem], x: &R::Elem) -> R::Elem {
    let mut acc = r.zero();
    for c in a.iter().rev() {
        acc = r.add(&r.mul(&acc, x), c);
    }
    acc
}

pub fn derivative<R: Ring>(r: &R, a: &[R::Elem]) -> Vec<R::Elem> {
    let out: Vec<_> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| r.mul(&r.from_int(i as i64), c))
        .collect();
    trimmed(r, out)
}

/// `a(b(x))` by Horner.
pub fn compose<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let mut acc: Vec<R::Elem> = Vec::new();
    for c in a.iter().rev() {
        acc = mul(r, &acc, b);
        acc = add(r, &acc, &constant(r, c.clone()));
    }
    acc
}

pub fn leading<R: Ring>(a: &[R::Elem]) -> Option<&R::Elem> {
    a.last()
}

/// Euclidean division `a = q*b + r`, `deg r < deg b`. `None` if `b = 0`.
pub fn divrem<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> Option<(Vec<F::Elem>, Vec<F::Elem>)> {
    let lb = b.last()?;
    let lb_inv = f.inv(lb)?;
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return Some((Vec::new(), rem));
    }
    let mut quo = vec![f.zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let c = f.mul(rem.last().unwrap(), &lb_inv);
        for (j, y) in b.iter().enumerate() {
            let t = f.mul(&c, y);
            rem[k + j] = f.sub(&rem[k + j], &t);
        }
        quo[k] = c;
        rem.pop();
        trim(f, &mut rem);
    }
    Some((trimmed(f, quo), rem))
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    divrem(f, a, b).expect("division by zero polynomial").1
}

/// Exact quotient, `None` when `b` does not divide `a`.
pub fn div_exact<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let (q, r) = divrem(f, a, b)?;
    if r.is_empty() {
        Some(q)
    } else {
        None
    }
}

pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(l) => {
            let li = f.inv(l).expect("nonzero leading coefficient");
            scale(f, &li, a)
        }
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn xgcd<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>, Vec<F::Elem>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![f.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1).unwrap();
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(l) => {
            let li = f.inv(l).unwrap();
            (scale(f, &li, &r0), scale(f, &li, &s0), scale(f, &li, &t0))
        }
    }
}

pub fn lcm<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let g = gcd(f, a, b);
    monic(f, &mul(f, &div_exact(f, a, &g).unwrap(), b))
}

pub fn mulmod<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod<F: Field>(f: &F, a: &[F::Elem], mut e: u64, m: &[F::Elem]) -> Vec<F::Elem> {
    let mut acc = rem(f, &[f.one()], m);
    let mut base = rem(f, a, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod(f, &base, &base, m);
        }
    }
    acc
}

/// Polynomials over `R` as a ring in their own right.
#[derive(Clone, Debug)]
pub struct PolyRing<R> {
    pub base: R,
}

impl<R> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        vec![self.base.one()]
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        add(&self.base, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        neg(&self.base, a)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        sub(&self.base, a, b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        mul(&self.base, a, b)
    }
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        div_exact(&self.base, a, b)
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        constant(&self.base, self.base.from_int(n))
    }
}
