//! Small-scale experiments with `F_p[F]`-modules, F-sets and the equation
//! `lambda^m = c_0 + sum c_i t^{n_i}`.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::fq::{FieldSpec, Fq};
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::mpoly::{MPoly, MRatFun, MRatFunField, Monomial};
use crate::algebra::poly;
use crate::algebra::ratfun::{CPoly, RatFun, RatFunField};
use crate::algebra::ring::Ring;
use crate::error::AlgebraError;
use crate::ore::OrePoly;

pub type Point = Vec<MRatFun>;

/// Default limit on the number of enumerated elements.
pub const DEFAULT_CAP: u64 = 1 << 16;

/// The `F_p[F]`-module generated by finitely many points.
#[derive(Clone, Debug, Default)]
pub struct FpFModule {
    pub generators: Vec<Point>,
}

/// `gamma_0 + { sum F^{n_i k_i}(gamma_i) } + H`.
#[derive(Clone, Debug)]
pub struct FSetDescriptor {
    pub gamma0: Point,
    pub gammas: Vec<Point>,
    pub ks: Vec<u64>,
    pub h: FpFModule,
    /// Optional `P` with `P(F)(gamma_i)` in the ambient module.
    pub divisor: Option<OrePoly>,
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Let the exponents `n_i` start at 0 instead of 1.
    pub zero_inclusive: bool,
    pub cap: u64,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            zero_inclusive: false,
            cap: DEFAULT_CAP,
        }
    }
}

fn add_points(mf: &MRatFunField, a: &[MRatFun], b: &[MRatFun]) -> Point {
    a.iter().zip(b).map(|(x, y)| mf.add(x, y)).collect()
}

fn frob_point(mf: &MRatFunField, a: &[MRatFun], e: u32) -> Point {
    a.iter().map(|x| mf.frobenius(x, e)).collect()
}

/// All `F_p`-coefficient operators of degree `<= bound`, as coefficient
/// vectors, for `r` generators.
fn operator_tuples(
    p: u32,
    r: usize,
    bound: usize,
    cap: u64,
) -> Result<Vec<Vec<Vec<u32>>>, AlgebraError> {
    let width = bound + 1;
    let slots = (r * width) as u32;
    let count = (p as u64)
        .checked_pow(slots)
        .filter(|&c| c <= cap)
        .ok_or_else(|| {
            AlgebraError::Capacity(format!("{p}^{slots} module elements exceed the cap {cap}"))
        })?;
    Ok((0..count)
        .map(|mut idx| {
            (0..r)
                .map(|_| {
                    (0..width)
                        .map(|_| {
                            let d = (idx % p as u64) as u32;
                            idx /= p as u64;
                            d
                        })
                        .collect()
                })
                .collect()
        })
        .collect())
}

/// `sum P_i(F)(g_i)` for operators given by `F_p` digits.
fn module_element(mf: &MRatFunField, gens: &[Point], ops: &[Vec<u32>], n: usize) -> Point {
    let mut acc = vec![mf.zero(); n];
    for (g, op) in gens.iter().zip(ops) {
        for (e, &c) in op.iter().enumerate() {
            if c != 0 {
                let term: Point = frob_point(mf, g, e as u32)
                    .iter()
                    .map(|x| mf.scale(Fq::from_index(c), x))
                    .collect();
                acc = add_points(mf, &acc, &term);
            }
        }
    }
    acc
}

fn ops_to_ore(ops: &[Vec<u32>]) -> Vec<OrePoly> {
    ops.iter()
        .map(|op| {
            let mut v: Vec<Fq> = op.iter().map(|&c| Fq::from_index(c)).collect();
            while v.last().is_some_and(|c| c.is_zero()) {
                v.pop();
            }
            v
        })
        .collect()
}

/// Points of the F-set with `n_i <= bound` and module part of operator
/// degree `<= module_bound`, deduplicated, in enumeration order.
pub fn fset_enumerate(
    mf: &MRatFunField,
    desc: &FSetDescriptor,
    bound: u64,
    module_bound: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<Point>, AlgebraError> {
    if desc.ks.len() != desc.gammas.len() || desc.ks.iter().any(|&k| k == 0) {
        return Err(AlgebraError::InvalidInput(
            "periods must be positive, one per gamma".into(),
        ));
    }
    let n = desc.gamma0.len();
    let p = mf.base().p();
    let hs: Vec<Point> = if desc.h.generators.is_empty() {
        vec![vec![mf.zero(); n]]
    } else {
        operator_tuples(p, desc.h.generators.len(), module_bound, opts.cap)?
            .iter()
            .map(|ops| module_element(mf, &desc.h.generators, ops, n))
            .collect()
    };
    let lo = if opts.zero_inclusive { 0 } else { 1 };
    let per = bound + 1 - lo;
    per.checked_pow(desc.gammas.len() as u32)
        .and_then(|c| c.checked_mul(hs.len() as u64))
        .filter(|&c| c <= opts.cap)
        .ok_or_else(|| {
            AlgebraError::Capacity(format!("F-set enumeration exceeds the cap {}", opts.cap))
        })?;
    let mut out: Vec<Point> = Vec::new();
    let mut exps = vec![lo; desc.gammas.len()];
    loop {
        let mut base = desc.gamma0.clone();
        for ((g, &k), &e) in desc.gammas.iter().zip(&desc.ks).zip(&exps) {
            base = add_points(mf, &base, &frob_point(mf, g, (e * k) as u32));
        }
        for h in &hs {
            let pt = add_points(mf, &base, h);
            if !out
                .iter()
                .any(|q| q.iter().zip(&pt).all(|(x, y)| mf.equal(x, y)))
            {
                out.push(pt);
            }
        }
        let mut i = 0;
        loop {
            if i == exps.len() {
                return Ok(out);
            }
            exps[i] += 1;
            if exps[i] <= bound {
                break;
            }
            exps[i] = lo;
            i += 1;
        }
    }
}

/// Rows over `F_p` expressing the coordinates of the given points: one row
/// per (coordinate, monomial of the cleared numerator, `F_p`-digit).
fn coefficient_rows(mf: &MRatFunField, cols: &[Point]) -> Matrix<Fq> {
    let f = mf.base().clone();
    let ring = mf.ring();
    let n = cols.first().map_or(0, |c| c.len());
    let mut rows: Vec<Vec<Fq>> = Vec::new();
    for coord in 0..n {
        let mut dens: Vec<MPoly> = Vec::new();
        for c in cols {
            let x = &c[coord];
            if !x.is_zero() && !x.den.is_constant() && !dens.contains(&x.den) {
                dens.push(x.den.clone());
            }
        }
        let one = MPoly::constant(mf.nvars(), Fq::ONE);
        let mut table: BTreeMap<Monomial, Vec<Fq>> = BTreeMap::new();
        for (j, c) in cols.iter().enumerate() {
            let x = &c[coord];
            if x.is_zero() {
                continue;
            }
            let lc = x.den.leading().map_or(Fq::ONE, |t| t.1);
            let cof = dens
                .iter()
                .filter(|d| **d != x.den)
                .fold(one.clone(), |acc, d| ring.mul(&acc, d));
            let num = ring.scale(f.inv_elem(lc).expect("nonzero"), &ring.mul(&x.num, &cof));
            for (m, v) in num.terms() {
                table
                    .entry(m.clone())
                    .or_insert_with(|| vec![Fq::ZERO; cols.len()])[j] = *v;
            }
        }
        for row in table.into_values() {
            let digits: Vec<Vec<u32>> = row.iter().map(|&c| f.coeffs(c)).collect();
            for i in 0..f.ell() as usize {
                rows.push(
                    digits
                        .iter()
                        .map(|d| Fq::from_index(d.get(i).copied().unwrap_or(0)))
                        .collect(),
                );
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![Fq::ZERO; cols.len()]);
    }
    Matrix::from_rows(rows)
}

/// A representation `x = sum P_i(F)(g_i)` with `P_i` over `F_p` of degree
/// `<= bound`, if one exists. `None` means "not found within the bound".
pub fn module_contains(
    mf: &MRatFunField,
    gamma: &FpFModule,
    x: &[MRatFun],
    bound: usize,
) -> Option<Vec<OrePoly>> {
    let fp = FieldSpec::prime(mf.base().p()).expect("prime");
    let mut cols: Vec<Point> = Vec::new();
    for g in &gamma.generators {
        for e in 0..=bound {
            cols.push(frob_point(mf, g, e as u32));
        }
    }
    cols.push(x.iter().map(|c| mf.neg(c)).collect());
    let m = coefficient_rows(mf, &cols);
    let kernel = linalg::right_kernel(&*fp, &m);
    let v = kernel.into_iter().find(|v| !v.last().unwrap().is_zero())?;
    let last = fp.inv_elem(*v.last().unwrap()).unwrap();
    let width = bound + 1;
    let ops: Vec<Vec<u32>> = v[..v.len() - 1]
        .chunks(width)
        .map(|c| c.iter().map(|a| fp.mul_elem(*a, last).index()).collect())
        .collect();
    Some(ops_to_ore(&ops))
}

/// A polynomial equation `sum coeff * x^monomial = 0` on `G_a^N`.
#[derive(Clone, Debug)]
pub struct Equation {
    pub terms: Vec<(MRatFun, Monomial)>,
}

impl Equation {
    pub fn eval(&self, mf: &MRatFunField, x: &[MRatFun]) -> MRatFun {
        self.terms.iter().fold(mf.zero(), |acc, (c, m)| {
            let t = m
                .iter()
                .zip(x)
                .fold(c.clone(), |t, (&e, v)| mf.mul(&t, &mf.pow(v, e)));
            mf.add(&acc, &t)
        })
    }
}

#[derive(Clone, Debug)]
pub struct IntersectionReport {
    /// Solutions with their operators `P_i`.
    pub solutions: Vec<(Point, Vec<OrePoly>)>,
    /// Number of solutions per signature: for each generator, the exponents
    /// of `F` occurring in `P_i`.
    pub patterns: BTreeMap<Vec<Vec<usize>>, usize>,
}

/// Every module element `sum P_i(F)(g_i)`, `deg P_i <= bound`, on all equations.
pub fn brute_force_intersection(
    mf: &MRatFunField,
    equations: &[Equation],
    gamma: &FpFModule,
    bound: usize,
    cap: u64,
) -> Result<IntersectionReport, AlgebraError> {
    let n = gamma.generators.first().map_or(0, |g| g.len());
    let p = mf.base().p();
    let mut solutions = Vec::new();
    let mut patterns: BTreeMap<Vec<Vec<usize>>, usize> = BTreeMap::new();
    let mut seen: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    for ops in operator_tuples(p, gamma.generators.len(), bound, cap)? {
        let pt = module_element(mf, &gamma.generators, &ops, n);
        if equations.iter().all(|e| e.eval(mf, &pt).is_zero()) && seen.insert(ops.clone()) {
            let sig: Vec<Vec<usize>> = ops
                .iter()
                .map(|op| {
                    op.iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(e, _)| e)
                        .collect()
                })
                .collect();
            *patterns.entry(sig).or_default() += 1;
            solutions.push((pt, ops_to_ore(&ops)));
        }
    }
    Ok(IntersectionReport {
        solutions,
        patterns,
    })
}

/// `lambda^m = c_0 + sum_{i=1}^r c_i t^{n_i}` over `F_q(t)`.
#[derive(Clone, Debug)]
pub struct LambdaEqInstance {
    pub lambda: RatFun,
    /// `c_0, c_1, ..., c_r`.
    pub c: Vec<Fq>,
}

impl LambdaEqInstance {
    pub fn r(&self) -> usize {
        self.c.len().saturating_sub(1)
    }
}

fn subset_sum_vanishes(f: &FieldSpec, c: &[Fq]) -> bool {
    let r = c.len();
    (1u32..(1 << r)).any(|mask| {
        let picked: Vec<Fq> = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| c[i])
            .collect();
        picked
            .iter()
            .fold(Fq::ZERO, |a, &b| f.add_elem(a, b))
            .is_zero()
    })
}

fn solve_for_power(f: &FieldSpec, inst: &LambdaEqInstance, pm: &RatFun) -> Vec<Vec<u64>> {
    if !pm.is_poly() {
        return Vec::new();
    }
    let rest: CPoly = poly::sub(f, &pm.num, &[inst.c[0]]);
    let cs = &inst.c[1..];
    let support: BTreeSet<u64> = rest
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, _)| e as u64)
        .collect();
    if support.contains(&0) {
        return Vec::new();
    }
    let bound = (pm.num.len() as u64).max(2) - 1;
    let candidates: Vec<u64> = if subset_sum_vanishes(f, cs) {
        (1..=bound).collect()
    } else {
        if support.len() > cs.len() {
            return Vec::new();
        }
        support.iter().copied().collect()
    };
    let mut out = Vec::new();
    if cs.is_empty() {
        if rest.is_empty() {
            out.push(Vec::new());
        }
        return out;
    }
    let mut idx = vec![0usize; cs.len()];
    if candidates.is_empty() {
        return out;
    }
    loop {
        let tuple: Vec<u64> = idx.iter().map(|&i| candidates[i]).collect();
        let mut sum: BTreeMap<u64, Fq> = BTreeMap::new();
        for (&n, &c) in tuple.iter().zip(cs) {
            let e = sum.entry(n).or_insert(Fq::ZERO);
            *e = f.add_elem(*e, c);
        }
        let ok = sum
            .iter()
            .all(|(&n, &c)| rest.get(n as usize).copied().unwrap_or(Fq::ZERO) == c)
            && support.iter().all(|n| sum.contains_key(n));
        if ok {
            out.push(tuple);
        }
        let mut i = 0;
        loop {
            if i == idx.len() {
                return out;
            }
            idx[i] += 1;
            if idx[i] < candidates.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// All tuples `(n_1, ..., n_r)` of positive integers solving the equation
/// for this `m`, in lexicographic order of the last index first.
pub fn solve_lambda_eq(
    rf: &RatFunField,
    inst: &LambdaEqInstance,
    m: u64,
) -> Result<Vec<Vec<u64>>, AlgebraError> {
    if inst.lambda.is_zero() || inst.c.is_empty() || m == 0 {
        return Err(AlgebraError::InvalidInput(
            "need lambda != 0, m >= 1 and c_0 given".into(),
        ));
    }
    Ok(solve_for_power(rf.base(), inst, &rf.pow(&inst.lambda, m)))
}

#[derive(Clone, Debug)]
pub struct LambdaDensity {
    pub max_m: u64,
    /// `(m, solutions)` for every `m <= max_m`.
    pub rows: Vec<(u64, Vec<Vec<u64>>)>,
}

impl LambdaDensity {
    pub fn solvable(&self) -> Vec<u64> {
        self.rows
            .iter()
            .filter(|(_, s)| !s.is_empty())
            .map(|(m, _)| *m)
            .collect()
    }

    pub fn count(&self) -> usize {
        self.rows.iter().filter(|(_, s)| !s.is_empty()).count()
    }

    pub fn density(&self) -> f64 {
        self.count() as f64 / self.max_m as f64
    }

    /// Count of solvable `m` up to each cut-off.
    pub fn count_up_to(&self, cut: u64) -> usize {
        self.rows
            .iter()
            .filter(|(m, s)| *m <= cut && !s.is_empty())
            .count()
    }

    /// Lines `m,solvable,tuple` with tuple entries joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,solvable,tuple\n");
        for (m, sols) in &self.rows {
            let tuple = sols
                .first()
                .map(|t| {
                    t.iter()
                        .map(|n| n.to_string())
                        .collect::<Vec<_>>()
                        .join(";")
                })
                .unwrap_or_default();
            out.push_str(&format!("{m},{},{tuple}\n", u8::from(!sols.is_empty())));
        }
        out
    }
}

pub fn lambda_density(
    rf: &RatFunField,
    inst: &LambdaEqInstance,
    max_m: u64,
) -> Result<LambdaDensity, AlgebraError> {
    if inst.lambda.is_zero() || inst.c.is_empty() || max_m == 0 {
        return Err(AlgebraError::InvalidInput(
            "need lambda != 0, M >= 1 and c_0 given".into(),
        ));
    }
    let mut pm = rf.one();
    let mut rows = Vec::with_capacity(max_m as usize);
    for m in 1..=max_m {
        pm = rf.mul(&pm, &inst.lambda);
        rows.push((m, solve_for_power(rf.base(), inst, &pm)));
    }
    Ok(LambdaDensity { max_m, rows })
}

/// Whether the `r x r` matrix `(lambda_i^n)`, `start <= n < start + r`, is
/// invertible; `r` is the number of lambdas.
pub fn vandermonde_check(f: &FieldSpec, lambdas: &[Fq], start: u64) -> Result<bool, AlgebraError> {
    if lambdas.iter().any(|l| l.is_zero()) {
        return Err(AlgebraError::InvalidInput("lambdas must be nonzero".into()));
    }
    let distinct: BTreeSet<u32> = lambdas.iter().map(|l| l.index()).collect();
    if distinct.len() != lambdas.len() {
        return Err(AlgebraError::InvalidInput(
            "lambdas must be distinct".into(),
        ));
    }
    let r = lambdas.len();
    let m = Matrix::from_fn(r, r, |i, j| f.pow_elem(lambdas[j], start + i as u64));
    Ok(linalg::right_kernel(f, &m).is_empty())
}
