//! Structure objects for rings and fields.
//!
//! Elements are plain values; the arithmetic lives on a context object
//! implementing [`Ring`]. Generic algorithms (polynomials, elimination,
//! characteristic polynomials) are written against these traits. Nothing here
//! assumes commutativity: elimination routines only ever multiply on the left,
//! so they are valid over division rings as well.

use std::fmt::Debug;
use std::sync::Arc;

pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Exact quotient `a / b` when `b` divides `a` (on the left: `a = b * q`
    /// is not assumed; commutative rings only). `None` if not divisible.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    fn from_int(&self, n: i64) -> Self::Elem {
        let mut acc = self.zero();
        let one = self.one();
        for _ in 0..n.unsigned_abs() {
            acc = self.add(&acc, &one);
        }
        if n < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
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
}

/// A division ring: every nonzero element has a two-sided inverse.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// `a * b^{-1}`.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

impl<R: Ring + ?Sized> Ring for Arc<R> {
    type Elem = R::Elem;
    fn zero(&self) -> Self::Elem {
        (**self).zero()
    }
    fn one(&self) -> Self::Elem {
        (**self).one()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        (**self).is_zero(a)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (**self).neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).sub(a, b)
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        (**self).is_one(a)
    }
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        (**self).div_exact(a, b)
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        (**self).from_int(n)
    }
    fn pow(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        (**self).pow(a, e)
    }
}

impl<F: Field + ?Sized> Field for Arc<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        (**self).inv(a)
    }
}
