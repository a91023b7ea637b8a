//! Splitting an endomorphism into a Frobenius-diagonal part and a part
//! whose eigenvalue data is multiplicatively independent of `s = F^ell`.
//!
//! Pipeline: minimal polynomial over the center, factorization over
//! `F_p(s)`, classification of each factor, passage to the power `A^n`,
//! central idempotents from a Bézout identity, Jordan chains on the
//! Frobenius part and finally a `p`-power that makes that part diagonal.

use std::fmt;

use crate::algebra::factor;
use crate::algebra::fq::{prime_factors, Fq};
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::poly;
use crate::algebra::ratfun::{kernel_basis, CPoly, RatFun, RatFunField};
use crate::algebra::ring::{Field, Ring};
use crate::error::{AlgebraError, SplitError};
use crate::ore::OrePoly;
use crate::skew::{
    self, central_denominator, eval_center_poly, from_ore_matrix, matrix_inverse, min_poly_center,
    CenterPoly, SkewElem, SkewField, SkewMatrix,
};

/// Upper limit on recombination subsets tried by [`factor_center`].
pub const RECOMBINATION_CAP: u64 = 1 << 18;
/// Largest exponent tried directly when minimizing a Frobenius power.
pub const DIRECT_POWER_CAP: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// Every root `u` satisfies `u^n = s^j`, with `n` minimal.
    Frobenius {
        n: u64,
        j: u64,
    },
    Independent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorClassification {
    pub factor: CenterPoly,
    pub kind: FactorKind,
    pub diagnostics: String,
}

/// A Jordan block `J_{s^exp, size}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JordanBlock {
    pub exp: u64,
    pub size: usize,
}

/// A diagonal block `s^n I_m` of the powered Frobenius part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusBlock {
    pub n: u64,
    pub m: usize,
}

#[derive(Clone, Debug)]
pub struct SplitData {
    /// Exponent with `P A^n P^{-1} = A_0 (+) A_1`.
    pub n: u64,
    pub p: SkewMatrix,
    pub p_inv: SkewMatrix,
    /// Diagonal blocks of `A_0`, in coordinate order.
    pub blocks: Vec<FrobeniusBlock>,
    pub a0: SkewMatrix,
    pub a1: SkewMatrix,
    /// Central element of `F_p[s]` clearing `P`, `P^{-1}` and all powers of `A_1`.
    pub h: CPoly,
    pub r0: CenterPoly,
    pub r1: CenterPoly,
    pub diagnostics: SplitDiagnostics,
}

#[derive(Clone, Debug)]
pub struct SplitDiagnostics {
    pub min_poly: CenterPoly,
    pub factors: Vec<(FactorClassification, u32)>,
    /// Exponent before the `p`-power step.
    pub base_n: u64,
    /// The `a` of the final `p^a` step.
    pub power_a: u32,
    pub jordan: Vec<JordanBlock>,
}

impl SplitData {
    pub fn n0(&self) -> usize {
        self.a0.rows()
    }

    pub fn n1(&self) -> usize {
        self.a1.rows()
    }

    /// Coordinate ranges of the Frobenius blocks.
    pub fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.blocks
            .iter()
            .map(|b| {
                let r = start..start + b.m;
                start += b.m;
                r
            })
            .collect()
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorKind::Frobenius { n, j } => write!(f, "frobenius n={n} j={j}"),
            FactorKind::Independent => write!(f, "independent"),
        }
    }
}

/// Clears denominators of a polynomial over `F_p(s)` and removes the
/// `F_p[s]`-content; the result is a list of coefficients in `F_p[s]`.
fn primitive_bivariate(c: &RatFunField, r: &[RatFun]) -> Vec<CPoly> {
    let f = &**c.base();
    let mut l = vec![Fq::ONE];
    for a in r {
        if !a.is_zero() {
            l = poly::lcm(f, &l, &a.den);
        }
    }
    let mut out: Vec<CPoly> = r
        .iter()
        .map(|a| {
            if a.is_zero() {
                Vec::new()
            } else {
                poly::mul(f, &a.num, &poly::div_exact(f, &l, &a.den).unwrap())
            }
        })
        .collect();
    let mut g: CPoly = Vec::new();
    for a in &out {
        g = poly::gcd(f, &g, a);
    }
    if g.len() > 1 {
        for a in out.iter_mut() {
            if !a.is_empty() {
                *a = poly::div_exact(f, a, &g).unwrap();
            }
        }
    }
    out
}

fn to_center_poly(c: &RatFunField, b: &[CPoly]) -> CenterPoly {
    let raw: Vec<RatFun> = b.iter().map(|x| c.from_poly(x.clone())).collect();
    poly::monic(c, &poly::trimmed(c, raw))
}

/// Factorization of a nonzero polynomial over `F_p(s)` into monic
/// irreducibles with multiplicities.
///
/// The primitive part in `F_p[s][x]` is mapped to `F_p[z]` by the Kronecker
/// substitution `x -> z, s -> z^D` with `D` above the `x`-degree, factored
/// there, and true factors are recovered from subsets of the univariate
/// factors by inverting the substitution and trial division.
pub fn factor_center(
    c: &RatFunField,
    r: &CenterPoly,
) -> Result<Vec<(CenterPoly, u32)>, AlgebraError> {
    let f = c.base().clone();
    if r.iter().all(|a| a.is_zero()) {
        return Err(AlgebraError::InvalidInput("factorization of zero".into()));
    }
    let mut cur = primitive_bivariate(c, &poly::trimmed(c, r.clone()));
    let dx = cur.len() - 1;
    if dx == 0 {
        return Ok(Vec::new());
    }
    let d = dx + 1;
    let mut uni: Vec<Fq> = Vec::new();
    for (i, cs) in cur.iter().enumerate() {
        for (k, &v) in cs.iter().enumerate() {
            let e = i + d * k;
            if uni.len() <= e {
                uni.resize(e + 1, Fq::ZERO);
            }
            uni[e] = v;
        }
    }
    let mut pool: Vec<CPoly> = Vec::new();
    for (g, e) in factor::factor(&*f, &uni) {
        for _ in 0..e {
            pool.push(g.clone());
        }
    }
    let decode = |u: &[Fq]| -> Vec<CPoly> {
        let mut out = vec![Vec::new(); d];
        for (e, &v) in u.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (i, k) = (e % d, e / d);
            let slot: &mut CPoly = &mut out[i];
            if slot.len() <= k {
                slot.resize(k + 1, Fq::ZERO);
            }
            slot[k] = v;
        }
        let mut out: Vec<CPoly> = out.into_iter().map(|x| poly::trimmed(&*f, x)).collect();
        while out.last().is_some_and(|x| x.is_empty()) {
            out.pop();
        }
        out
    };
    let mut found: Vec<(CenterPoly, u32)> = Vec::new();
    let mut tried: u64 = 0;
    let mut size = 1;
    while size <= pool.len() && cur.len() > 1 {
        let mut progress = false;
        let mut combo: Vec<usize> = (0..size).collect();
        'combos: loop {
            tried += 1;
            if tried > RECOMBINATION_CAP {
                return Err(AlgebraError::Capacity(format!(
                    "more than {RECOMBINATION_CAP} recombination subsets"
                )));
            }
            let prod = combo
                .iter()
                .fold(vec![Fq::ONE], |acc, &i| poly::mul(&*f, &acc, &pool[i]));
            let g = decode(&prod);
            {
                if g.len() > 1 {
                    let gc = to_center_poly(c, &g);
                    let mut mult = 0;
                    let mut current = to_center_poly(c, &cur);
                    while let Some((q, rem)) = poly::divrem(c, &current, &gc) {
                        if !rem.is_empty() {
                            break;
                        }
                        mult += 1;
                        current = q;
                    }
                    if mult > 0 {
                        cur = primitive_bivariate(c, &current);
                        let mut removed: Vec<usize> = combo.clone();
                        for _ in 1..mult {
                            for idx in &combo {
                                let target = &pool[*idx];
                                let pos = (0..pool.len())
                                    .find(|k| !removed.contains(k) && pool[*k] == *target)
                                    .expect("repeated factor has repeated image");
                                removed.push(pos);
                            }
                        }
                        removed.sort_unstable();
                        for idx in removed.into_iter().rev() {
                            pool.remove(idx);
                        }
                        found.push((gc, mult));
                        progress = true;
                        break 'combos;
                    }
                }
            }
            if !next_combination(&mut combo, pool.len()) {
                break;
            }
        }
        if !progress {
            size += 1;
        }
    }
    if cur.len() > 1 {
        found.push((to_center_poly(c, &cur), 1));
    }
    found.sort_by(|a, b| {
        a.0.len()
            .cmp(&b.0.len())
            .then_with(|| format!("{:?}", a.0).cmp(&format!("{:?}", b.0)))
    });
    Ok(found)
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// `c * s^e` with `c` a nonzero constant, as `(c, e)`.
fn as_monomial(a: &RatFun) -> Option<(Fq, i64)> {
    let single = |p: &CPoly| -> Option<(Fq, i64)> {
        let nz: Vec<(usize, Fq)> = p
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        match nz.as_slice() {
            [(e, c)] => Some((*c, *e as i64)),
            _ => None,
        }
    };
    let (cn, en) = single(&a.num)?;
    let (_, ed) = single(&a.den)?;
    Some((cn, en - ed))
}

/// Decides whether the roots `u` of an irreducible `g` over `F_p(s)` have a
/// power equal to a power of `s`.
///
/// With `k = deg g` and `g(0)` a unit times `s^e` (otherwise the norm test
/// already rules this out), `u^n = s^j` for some `n` iff `z = u^k s^{-e}` is
/// a root of unity, i.e. algebraic over `F_p`. Then `u^{k ord(z)} = s^{e ord(z)}`
/// and the minimal `n` is found among the divisors of `k ord(z)`.
pub fn classify_factor(
    c: &RatFunField,
    g: &CenterPoly,
) -> Result<FactorClassification, SplitError> {
    let g = poly::monic(c, &poly::trimmed(c, g.clone()));
    let k = g
        .len()
        .checked_sub(1)
        .filter(|&k| k >= 1)
        .ok_or_else(|| SplitError::Precondition("factor must have positive degree".into()))?;
    if g[0].is_zero() {
        return Err(SplitError::Precondition(
            "factor has zero constant term".into(),
        ));
    }
    let done = |kind: FactorKind, diag: String| FactorClassification {
        factor: g.clone(),
        kind,
        diagnostics: diag,
    };
    let Some((_, e)) = as_monomial(&g[0]) else {
        return Ok(done(
            FactorKind::Independent,
            "norm is not a monomial in s".into(),
        ));
    };
    if e < 0 {
        return Err(SplitError::NonCentralEigenvalues(
            "root norm has a pole at s = 0".into(),
        ));
    }
    let e = e as u64;
    let y = vec![c.zero(), c.one()];
    let yk = poly::powmod(c, &y, k as u64, &g);
    let s_inv_e = c.inv(&c.s_pow(e as usize)).unwrap();
    let z = poly::scale(c, &s_inv_e, &yk);
    // minimal polynomial of z over F_p(s) inside F_p(s)[y]/(g)
    let mut powers: Vec<Vec<RatFun>> = vec![vec![c.one()]];
    let mut mp: Option<Vec<RatFun>> = None;
    for deg in 1..=k {
        let next = poly::mulmod(c, powers.last().unwrap(), &z, &g);
        powers.push(next);
        let m = Matrix::from_fn(k, deg + 1, |i, j| {
            powers[j].get(i).cloned().unwrap_or_else(|| c.zero())
        });
        if let Some(v) = kernel_basis(c, &m).into_iter().next() {
            mp = Some(v);
            break;
        }
    }
    let mp = mp.expect("degree of z is at most deg g");
    let constant = mp.iter().all(|a| a.num.len() <= 1 && a.den.len() == 1);
    if !constant {
        return Ok(done(
            FactorKind::Independent,
            "u^k / s^e is transcendental over F_p".into(),
        ));
    }
    let f_deg = (mp.len() - 1) as u32;
    let p = c.base().p() as u64;
    let group = p
        .checked_pow(f_deg)
        .map(|x| x - 1)
        .ok_or_else(|| SplitError::Unknown {
            factor: format!("{g:?}"),
            cap: u64::MAX,
        })?;
    let one = vec![c.one()];
    let zpow = |m: u64| poly::powmod(c, &z, m, &g);
    let mut ord = group;
    for r in prime_factors(group) {
        while ord % r == 0 && zpow(ord / r) == one {
            ord /= r;
        }
    }
    let bound = k as u64 * ord;
    for n in divisors(bound) {
        if (e * n) % k as u64 != 0 {
            continue;
        }
        let j = e * n / k as u64;
        let hit = if n % k as u64 == 0 {
            zpow(n / k as u64) == one
        } else if n <= DIRECT_POWER_CAP {
            poly::powmod(c, &y, n, &g) == vec![c.s_pow(j as usize)]
        } else {
            false
        };
        if hit {
            return Ok(done(
                FactorKind::Frobenius { n, j },
                format!("candidates divide {bound}"),
            ));
        }
    }
    unreachable!("u^(k ord z) = s^(e ord z) always holds")
}

fn linear_factor(c: &RatFunField, j: u64) -> CenterPoly {
    vec![c.neg(&c.s_pow(j as usize)), c.one()]
}

/// Pivot columns of `m`, each scaled on the right so its first nonzero
/// entry is one.
fn column_basis(k: &SkewField, m: &SkewMatrix) -> Vec<Vec<SkewElem>> {
    let e = linalg::echelon(k, m);
    e.pivots
        .iter()
        .map(|&j| {
            let col = m.column(j);
            let first = col.iter().find(|x| !k.is_zero(x)).unwrap().clone();
            let inv = k.inv(&first).unwrap();
            col.iter().map(|x| k.mul(x, &inv)).collect()
        })
        .collect()
}

fn from_columns(k: &SkewField, rows: usize, cols: &[Vec<SkewElem>]) -> SkewMatrix {
    if cols.is_empty() {
        return linalg::zero(k, rows, 0);
    }
    Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
}

fn columns_rank(k: &SkewField, rows: usize, cols: &[Vec<SkewElem>]) -> usize {
    if cols.is_empty() {
        0
    } else {
        linalg::rank(k, &from_columns(k, rows, cols))
    }
}

/// Jordan form of a matrix whose eigenvalues are the central elements
/// `s^j`, `j` in `exps`. Returns `Pj` and the blocks with
/// `Pj^{-1} A0 Pj = J_{s^{j_1}, r_1} (+) ...`, blocks ordered by increasing
/// exponent and decreasing size; chains are built top-down from the kernel
/// filtration of `A0 - s^j`.
pub fn jordan_form_central(
    k: &SkewField,
    a0: &SkewMatrix,
    exps: &[u64],
) -> Result<(SkewMatrix, Vec<JordanBlock>), SplitError> {
    let n = a0.rows();
    let mut exps = exps.to_vec();
    exps.sort_unstable();
    exps.dedup();
    let mut columns: Vec<Vec<SkewElem>> = Vec::new();
    let mut blocks = Vec::new();
    for &j in &exps {
        let lambda = k.scalar(k.ratfun().s_pow(j as usize));
        let nil = linalg::sub(
            k,
            a0,
            &linalg::scale_left(k, &lambda, &linalg::identity(k, n)),
        );
        let mut kernels: Vec<Vec<Vec<SkewElem>>> = vec![Vec::new()];
        let mut power = linalg::identity(k, n);
        loop {
            power = linalg::mul(k, &power, &nil);
            let ker = linalg::right_kernel(k, &power);
            if ker.len() == kernels.last().unwrap().len() {
                break;
            }
            kernels.push(ker);
        }
        let depth = kernels.len() - 1;
        if depth == 0 {
            continue;
        }
        // chains: (top vector, length)
        let mut chains: Vec<(Vec<SkewElem>, usize)> = Vec::new();
        for level in (1..=depth).rev() {
            let mut span: Vec<Vec<SkewElem>> = kernels[level - 1].clone();
            for (top, len) in &chains {
                let mut v = top.clone();
                for _ in 0..(len - level) {
                    v = linalg::mul_vec(k, &nil, &v);
                }
                span.push(v);
            }
            let mut r = columns_rank(k, n, &span);
            for cand in &kernels[level] {
                span.push(cand.clone());
                let r2 = columns_rank(k, n, &span);
                if r2 > r {
                    r = r2;
                    chains.push((cand.clone(), level));
                } else {
                    span.pop();
                }
            }
        }
        chains.sort_by(|a, b| b.1.cmp(&a.1));
        for (top, len) in chains {
            let mut chain = vec![top];
            for _ in 1..len {
                let next = linalg::mul_vec(k, &nil, chain.last().unwrap());
                chain.push(next);
            }
            chain.reverse();
            columns.extend(chain);
            blocks.push(JordanBlock { exp: j, size: len });
        }
    }
    if columns.len() != n {
        return Err(SplitError::NonCentralEigenvalues(format!(
            "generalized eigenspaces span {} of {} dimensions",
            columns.len(),
            n
        )));
    }
    let pj = from_columns(k, n, &columns);
    Ok((pj, blocks))
}

/// The Jordan matrix with the given blocks.
pub fn jordan_matrix(k: &SkewField, blocks: &[JordanBlock]) -> SkewMatrix {
    let n: usize = blocks.iter().map(|b| b.size).sum();
    let mut m = linalg::zero(k, n, n);
    let mut at = 0;
    for b in blocks {
        let lambda = k.scalar(k.ratfun().s_pow(b.exp as usize));
        for i in 0..b.size {
            m.set(at + i, at + i, lambda.clone());
            if i + 1 < b.size {
                m.set(at + i, at + i + 1, k.one());
            }
        }
        at += b.size;
    }
    m
}

/// Smallest `a` with `p^a` at least the largest block size, and the
/// diagonal blocks `s^{exp p^a} I` after merging equal exponents.
pub fn power_up(blocks: &[JordanBlock], p: u32) -> (u32, Vec<FrobeniusBlock>) {
    let max = blocks.iter().map(|b| b.size).max().unwrap_or(1);
    let mut a = 0u32;
    let mut pa = 1usize;
    while pa < max {
        pa *= p as usize;
        a += 1;
    }
    let mut merged: Vec<FrobeniusBlock> = Vec::new();
    for b in blocks {
        let n = b.exp * pa as u64;
        match merged.iter_mut().find(|x| x.n == n) {
            Some(x) => x.m += b.size,
            None => merged.push(FrobeniusBlock { n, m: b.size }),
        }
    }
    merged.sort_by_key(|b| b.n);
    (a, merged)
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Splits a dominant endomorphism given by a matrix over `F_q[F]`.
pub fn split_endomorphism(k: &SkewField, a: &Matrix<OrePoly>) -> Result<SplitData, SplitError> {
    if !a.is_square() {
        return Err(AlgebraError::Dimension("endomorphism matrix must be square".into()).into());
    }
    let n_dim = a.rows();
    let c = k.center();
    let ak = from_ore_matrix(k, a);
    let r = min_poly_center(k, &ak);
    if r[0].is_zero() {
        return Err(SplitError::NonDominant);
    }
    let mut factors = Vec::new();
    for (g, e) in factor_center(c, &r)? {
        factors.push((classify_factor(c, &g)?, e));
    }
    let mut base_n = 1u64;
    for (fc, _) in &factors {
        if let FactorKind::Frobenius { n, .. } = fc.kind {
            base_n = lcm_u64(base_n, n);
        }
    }
    let mut exps: Vec<u64> = factors
        .iter()
        .filter_map(|(fc, _)| match fc.kind {
            FactorKind::Frobenius { n, j } => Some(j * (base_n / n)),
            FactorKind::Independent => None,
        })
        .collect();
    exps.sort_unstable();
    exps.dedup();

    let b = linalg::pow(k, &ak, base_n);
    let rb = min_poly_center(k, &b);
    let mut r0: CenterPoly = vec![c.one()];
    let mut r1 = rb.clone();
    for &j in &exps {
        let lin = linear_factor(c, j);
        while let Some((q, rem)) = poly::divrem(c, &r1, &lin) {
            if !rem.is_empty() {
                break;
            }
            r1 = q;
            r0 = poly::mul(c, &r0, &lin);
        }
    }
    let (g, u0, u1) = poly::xgcd(c, &r0, &r1);
    if g != vec![c.one()] {
        return Err(SplitError::NonCentralEigenvalues(
            "r0 and r1 are not coprime".into(),
        ));
    }
    let e0 = linalg::mul(
        k,
        &eval_center_poly(k, &u1, &b),
        &eval_center_poly(k, &r1, &b),
    );
    let e1 = linalg::mul(
        k,
        &eval_center_poly(k, &u0, &b),
        &eval_center_poly(k, &r0, &b),
    );
    let w0 = column_basis(k, &e0);
    let w1 = column_basis(k, &e1);
    let (n0, n1) = (w0.len(), w1.len());
    if n0 + n1 != n_dim {
        return Err(SplitError::NonCentralEigenvalues(
            "idempotent images do not span".into(),
        ));
    }
    let mut all = w0;
    all.extend(w1);
    let q = from_columns(k, n_dim, &all);
    let p = matrix_inverse(k, &q)?;
    let conj = linalg::mul(k, &linalg::mul(k, &p, &b), &q);
    let idx0: Vec<usize> = (0..n0).collect();
    let idx1: Vec<usize> = (n0..n_dim).collect();
    let a0 = conj.submatrix(&idx0, &idx0);
    let a1 = conj.submatrix(&idx1, &idx1);

    let (pj, jordan) = jordan_form_central(k, &a0, &exps)?;
    let (power_a, blocks) = power_up(&jordan, k.base().p());
    let pa = (k.base().p() as u64).pow(power_a);
    let n = base_n * pa;
    let pj_inv = matrix_inverse(k, &pj)?;
    let lift = linalg::block_diag(k, &pj_inv, &linalg::identity(k, n1));
    let p_final = linalg::mul(k, &lift, &p);
    let p_final_inv = matrix_inverse(k, &p_final)?;
    let a0_final = linalg::diagonal(
        k,
        &blocks
            .iter()
            .flat_map(|bl| std::iter::repeat(k.scalar(k.ratfun().s_pow(bl.n as usize))).take(bl.m))
            .collect::<Vec<_>>(),
    );
    let a1_final = linalg::pow(k, &a1, pa);

    let mut r0_final: CenterPoly = vec![c.one()];
    for bl in &blocks {
        r0_final = poly::mul(c, &r0_final, &linear_factor(c, bl.n));
    }
    let r1_final = if n1 == 0 {
        vec![c.one()]
    } else {
        min_poly_center(k, &a1_final)
    };
    let f = &**k.base();
    let mut h = central_denominator(k, &p_final);
    h = poly::lcm(f, &h, &central_denominator(k, &p_final_inv));
    let mut pw = linalg::identity(k, n1);
    for _ in 0..r1_final.len().saturating_sub(1) {
        h = poly::lcm(f, &h, &central_denominator(k, &pw));
        pw = linalg::mul(k, &pw, &a1_final);
    }
    Ok(SplitData {
        n,
        p: p_final,
        p_inv: p_final_inv,
        blocks,
        a0: a0_final,
        a1: a1_final,
        h,
        r0: r0_final,
        r1: r1_final,
        diagnostics: SplitDiagnostics {
            min_poly: r,
            factors,
            base_n,
            power_a,
            jordan,
        },
    })
}

/// Checks `P A^n P^{-1} = A_0 (+) A_1` exactly.
pub fn check_split(k: &SkewField, a: &Matrix<OrePoly>, s: &SplitData) -> bool {
    let an = linalg::pow(k, &from_ore_matrix(k, a), s.n);
    let lhs = linalg::mul(k, &linalg::mul(k, &s.p, &an), &s.p_inv);
    lhs == linalg::block_diag(k, &s.a0, &s.a1)
}

/// `h * A_1^m` has entries in `F_q[F]`.
pub fn h_clears_power(k: &SkewField, s: &SplitData, m: u64) -> bool {
    let h = k.scalar(k.ratfun().from_poly(s.h.clone()));
    let pw = linalg::pow(k, &s.a1, m);
    skew::to_ore_matrix(k, &linalg::scale_left(k, &h, &pw)).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fq::FieldSpec;
    use crate::ore::OreRing;

    fn center(p: u32) -> RatFunField {
        RatFunField::new(FieldSpec::prime(p).unwrap())
    }

    fn cp(c: &RatFunField, coeffs: Vec<RatFun>) -> CenterPoly {
        poly::trimmed(c, coeffs)
    }

    #[test]
    fn factor_examples() {
        let c = center(2);
        let s = c.s();
        // x^2 - s is irreducible
        let g = cp(&c, vec![c.neg(&s), c.zero(), c.one()]);
        assert_eq!(factor_center(&c, &g).unwrap(), vec![(g.clone(), 1)]);
        // x^2 - 1 = (x - 1)^2 in characteristic two
        let g = cp(&c, vec![c.neg(&c.one()), c.zero(), c.one()]);
        let lin = vec![c.neg(&c.one()), c.one()];
        assert_eq!(factor_center(&c, &g).unwrap(), vec![(lin, 2)]);
        // (x - s)(x - s - 1)
        let a = vec![c.neg(&s), c.one()];
        let b = vec![c.neg(&c.add(&s, &c.one())), c.one()];
        let prod = poly::mul(&c, &a, &b);
        let fs = factor_center(&c, &prod).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&(a, 1)) && fs.contains(&(b, 1)));
    }

    #[test]
    fn factor_with_rational_coefficients_and_multiplicity() {
        let c = center(3);
        let s = c.s();
        let half = c.div(&c.one(), &c.add(&s, &c.one())).unwrap();
        let a = vec![half, c.one()];
        let b = vec![c.neg(&c.mul(&s, &s)), c.zero(), c.one()];
        let prod = poly::mul(&c, &poly::pow(&c, &a, 3), &b);
        let fs = factor_center(&c, &prod).unwrap();
        let mut back = vec![c.one()];
        for (g, e) in &fs {
            back = poly::mul(&c, &back, &poly::pow(&c, g, *e as u64));
        }
        assert_eq!(back, prod);
        assert!(fs.contains(&(a, 3)));
    }

    #[test]
    fn classify_examples() {
        let c = center(2);
        let s = c.s();
        let g = vec![c.neg(&s), c.one()];
        assert_eq!(
            classify_factor(&c, &g).unwrap().kind,
            FactorKind::Frobenius { n: 1, j: 1 }
        );
        let g = vec![c.neg(&s), c.zero(), c.one()];
        assert_eq!(
            classify_factor(&c, &g).unwrap().kind,
            FactorKind::Frobenius { n: 2, j: 1 }
        );
        let g = vec![c.neg(&c.add(&s, &c.one())), c.one()];
        assert_eq!(
            classify_factor(&c, &g).unwrap().kind,
            FactorKind::Independent
        );
        // x^2 + x + 1 has roots the primitive cube roots of unity
        let g = vec![c.one(), c.one(), c.one()];
        assert_eq!(
            classify_factor(&c, &g).unwrap().kind,
            FactorKind::Frobenius { n: 3, j: 0 }
        );
        // x^2 + s x + s^2: roots w s, w^2 s
        let g = vec![c.mul(&s, &s), s.clone(), c.one()];
        assert_eq!(
            classify_factor(&c, &g).unwrap().kind,
            FactorKind::Frobenius { n: 3, j: 3 }
        );
    }

    #[test]
    fn power_up_examples() {
        let bl = |exp, size| JordanBlock { exp, size };
        assert_eq!(power_up(&[bl(1, 1), bl(2, 1)], 2).0, 0);
        let (a, blocks) = power_up(&[bl(1, 2)], 2);
        assert_eq!(a, 1);
        assert_eq!(blocks, vec![FrobeniusBlock { n: 2, m: 2 }]);
        assert_eq!(power_up(&[bl(1, 3)], 2).0, 2);
        let k = SkewField::new(FieldSpec::prime(2).unwrap());
        let j = jordan_matrix(&k, &[bl(1, 2)]);
        let sq = linalg::mul(&k, &j, &j);
        let s2 = k.scalar(k.ratfun().s_pow(2));
        assert_eq!(sq, linalg::scale_left(&k, &s2, &linalg::identity(&k, 2)));
    }

    #[test]
    fn jordan_examples() {
        let k = SkewField::new(FieldSpec::new(2, 2, None).unwrap());
        let s = k.scalar(k.ratfun().s());
        let d = linalg::diagonal(&k, &[s.clone(), k.scalar(k.ratfun().s_pow(2))]);
        let (pj, blocks) = jordan_form_central(&k, &d, &[1, 2]).unwrap();
        assert_eq!(pj, linalg::identity(&k, 2));
        assert_eq!(
            blocks,
            vec![
                JordanBlock { exp: 1, size: 1 },
                JordanBlock { exp: 2, size: 1 }
            ]
        );
        let j = Matrix::from_rows(vec![vec![s.clone(), k.one()], vec![k.zero(), s.clone()]]);
        let (pj, blocks) = jordan_form_central(&k, &j, &[1]).unwrap();
        assert_eq!(blocks, vec![JordanBlock { exp: 1, size: 2 }]);
        let back = linalg::mul(
            &k,
            &linalg::mul(&k, &matrix_inverse(&k, &pj).unwrap(), &j),
            &pj,
        );
        assert_eq!(back, jordan_matrix(&k, &blocks));
    }

    #[test]
    fn split_of_frobenius() {
        for (p, ell) in [(2, 1), (2, 2), (3, 2)] {
            let f = FieldSpec::new(p, ell, None).unwrap();
            let k = SkewField::new(f.clone());
            let a = Matrix::from_vec(1, 1, vec![OreRing::new(f).f_pow(1)]);
            let sd = split_endomorphism(&k, &a).unwrap();
            assert_eq!(sd.n, ell as u64);
            assert_eq!(sd.blocks, vec![FrobeniusBlock { n: 1, m: 1 }]);
            assert_eq!(sd.n1(), 0);
            assert_eq!(sd.p, linalg::identity(&k, 1));
            assert!(check_split(&k, &a, &sd));
        }
    }

    #[test]
    fn split_of_block_diagonal() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let k = SkewField::new(f.clone());
        let o = OreRing::new(f);
        let a = Matrix::from_rows(vec![
            vec![o.f_pow(2), vec![]],
            vec![vec![], o.add(&o.f_pow(2), &o.one())],
        ]);
        let sd = split_endomorphism(&k, &a).unwrap();
        assert_eq!(sd.n, 1);
        assert_eq!(sd.blocks, vec![FrobeniusBlock { n: 1, m: 1 }]);
        assert_eq!(sd.p, linalg::identity(&k, 2));
        assert_eq!(
            sd.a1,
            Matrix::from_vec(1, 1, vec![k.from_ore(&o.add(&o.f_pow(2), &o.one()))])
        );
        assert!(check_split(&k, &a, &sd));
    }

    #[test]
    fn split_rejects_non_dominant() {
        let f = FieldSpec::prime(3).unwrap();
        let k = SkewField::new(f.clone());
        let a = Matrix::from_rows(vec![
            vec![vec![Fq::ONE], vec![Fq::ONE]],
            vec![vec![Fq::ONE], vec![Fq::ONE]],
        ]);
        assert!(matches!(
            split_endomorphism(&k, &a),
            Err(SplitError::NonDominant)
        ));
    }
}
