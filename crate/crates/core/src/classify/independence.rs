//! Points whose Frobenius orbits are linearly independent from given
//! functions, and an exact checker for such independence.
//!
//! `gamma_1, ..., gamma_k` are independent from `delta_1, ..., delta_l` when
//! `sum P_i(F)(gamma_i) = sum Q_j(F)(delta_j)` forces every `P_i = 0`. The
//! construction takes `gamma_i = 1 / pi_i(t)` with `pi_i` irreducible and
//! coprime to every numerator and denominator of the `delta_j`, so each
//! `gamma_i` has a pole at a place where nothing else has one.
//!
//! The checker bounds the `F`-degree of the operators by `D` and solves for
//! relations by linear algebra over `F_q`. Since `F_q(t_1, ..., t_d)` and the
//! algebraic closure of `F_p` are linearly disjoint over `F_q`, a relation
//! with coefficients in any finite field exists iff one over `F_q` does.

use std::collections::BTreeMap;

use crate::algebra::factor::is_irreducible;
use crate::algebra::fq::Fq;
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::mpoly::{MPoly, MRatFun, MRatFunField, Monomial};
use crate::algebra::poly;
use crate::ore::OrePoly;

/// Whether the monic univariate `pi(t_1)` divides the polynomial `g`.
pub fn divides_in_first_variable(mf: &MRatFunField, pi: &[Fq], g: &MPoly) -> bool {
    let f = &**mf.base();
    let mut slices: BTreeMap<Monomial, Vec<Fq>> = BTreeMap::new();
    for (m, c) in g.terms() {
        let mut rest = m.clone();
        rest[0] = 0;
        let e = m[0] as usize;
        let slot = slices.entry(rest).or_default();
        if slot.len() <= e {
            slot.resize(e + 1, Fq::ZERO);
        }
        slot[e] = *c;
    }
    !g.is_zero() && slices.values().all(|u| poly::rem(f, u, pi).is_empty())
}

/// Monic irreducibles over `F_q`, by degree and then by coefficient index
/// with the constant term varying fastest.
pub fn irreducibles(mf: &MRatFunField) -> impl Iterator<Item = Vec<Fq>> + '_ {
    let f = mf.base().clone();
    let q = f.q() as u64;
    (1usize..).flat_map(move |deg| {
        let f = f.clone();
        (0..q.saturating_pow(deg as u32)).filter_map(move |idx| {
            let mut k = idx;
            let mut c: Vec<Fq> = (0..deg)
                .map(|_| {
                    let v = Fq::from_index((k % q) as u32);
                    k /= q;
                    v
                })
                .collect();
            c.push(Fq::ONE);
            is_irreducible(&*f, &c).then_some(c)
        })
    })
}

/// `k` functions `1 / pi_i(t_1)` independent from `deltas`.
pub fn construct_independent_points(
    mf: &MRatFunField,
    k: usize,
    deltas: &[MRatFun],
) -> Vec<MRatFun> {
    let mut out = Vec::with_capacity(k);
    if k == 0 {
        return out;
    }
    for pi in irreducibles(mf) {
        let clash = deltas.iter().any(|d| {
            divides_in_first_variable(mf, &pi, &d.num) || divides_in_first_variable(mf, &pi, &d.den)
        });
        if clash {
            continue;
        }
        out.push(
            mf.from_univariate(0, &[Fq::ONE], &pi)
                .expect("nonzero denominator"),
        );
        if out.len() == k {
            break;
        }
    }
    out
}

/// A relation `sum P_i(F)(gamma_i) = sum Q_j(F)(delta_j)` with some `P_i != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub p: Vec<OrePoly>,
    pub q: Vec<OrePoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Independence {
    pub independent: bool,
    pub relation: Option<Relation>,
    /// Operator degree bound used.
    pub degree: usize,
    /// Degree over `F_p` of the coefficient field that was asked about.
    pub coefficient_degree: usize,
}

/// Searches for relations with operators of `F`-degree `<= degree`.
pub fn check_independence(
    mf: &MRatFunField,
    gammas: &[MRatFun],
    deltas: &[MRatFun],
    degree: usize,
    coefficient_degree: usize,
) -> Independence {
    let f = mf.base().clone();
    let ring = mf.ring();
    let mut funcs: Vec<MRatFun> = Vec::new();
    for g in gammas.iter().chain(deltas) {
        for e in 0..=degree {
            funcs.push(mf.frobenius(g, e as u32));
        }
    }
    let mut dens: Vec<MPoly> = Vec::new();
    for x in &funcs {
        if !x.is_zero() && !dens.contains(&x.den) && !x.den.is_constant() {
            dens.push(x.den.clone());
        }
    }
    let one = MPoly::constant(mf.nvars(), Fq::ONE);
    let nums: Vec<MPoly> = funcs
        .iter()
        .map(|x| {
            if x.is_zero() {
                return MPoly::zero();
            }
            let lc = x.den.leading().map(|t| t.1).unwrap_or(Fq::ONE);
            let cof = dens
                .iter()
                .filter(|d| **d != x.den)
                .fold(one.clone(), |acc, d| ring.mul(&acc, d));
            ring.scale(f.inv_elem(lc).expect("nonzero"), &ring.mul(&x.num, &cof))
        })
        .collect();
    let mut rows: BTreeMap<Monomial, Vec<Fq>> = BTreeMap::new();
    for (j, n) in nums.iter().enumerate() {
        for (m, c) in n.terms() {
            rows.entry(m.clone())
                .or_insert_with(|| vec![Fq::ZERO; nums.len()])[j] = *c;
        }
    }
    let width = degree + 1;
    let split = gammas.len() * width;
    let result = |relation: Option<Relation>| Independence {
        independent: relation.is_none(),
        relation,
        degree,
        coefficient_degree,
    };
    if nums.is_empty() {
        return result(None);
    }
    let m = if rows.is_empty() {
        Matrix::from_fn(1, nums.len(), |_, _| Fq::ZERO)
    } else {
        Matrix::from_rows(rows.into_values().collect())
    };
    let kernel = linalg::right_kernel(&*f, &m);
    let found = kernel
        .into_iter()
        .find(|v| v[..split].iter().any(|c| !c.is_zero()));
    result(found.map(|v| {
        let ops = |chunk: &[Fq], negate: bool| -> OrePoly {
            let c: Vec<Fq> = chunk
                .iter()
                .map(|x| if negate { f.neg_elem(*x) } else { *x })
                .collect();
            poly::trimmed(&*f, c)
        };
        Relation {
            p: v[..split].chunks(width).map(|c| ops(c, false)).collect(),
            q: v[split..].chunks(width).map(|c| ops(c, true)).collect(),
        }
    }))
}
