//! Finite stand-in for Zariski density: do `M` points lie on a hypersurface
//! of degree at most `D`?
//!
//! Ranks are computed after substituting random elements of a large
//! extension field for `t_1, ..., t_d`. A full-rank trial proves that no
//! polynomial of degree `<= D` vanishes on the points. Otherwise a kernel
//! vector over `F_q` is extracted from all trials at once and the resulting
//! polynomial is re-checked, exactly when the symbolic points are at hand.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::ext::{ExtElem, ExtField};
use crate::algebra::fq::Fq;
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::mpoly::{MPoly, MRatFun, MRatFunField, Monomial};
use crate::algebra::ring::Ring;

#[derive(Clone, Debug)]
pub struct DensityOptions {
    pub trials: usize,
    /// Lower bound on the size of the specialization field.
    pub min_field_order: u64,
    pub seed: u64,
}

impl Default for DensityOptions {
    fn default() -> Self {
        DensityOptions {
            trials: 3,
            min_field_order: 1 << 20,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DensityOutcome {
    /// No nonzero polynomial of degree `<= D` vanishes on the points.
    DenseUpTo(usize),
    /// A polynomial vanishing on all points; `symbolic` tells whether this
    /// was re-checked exactly or at further random specializations.
    Found { poly: MPoly, symbolic: bool },
    /// Every trial was rank deficient but no relation over `F_q` exists.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub points: usize,
    pub degree: usize,
    pub monomials: usize,
    pub outcome: DensityOutcome,
    /// Rank of the evaluation matrix in each trial.
    pub ranks: Vec<usize>,
    /// `(p, exponent)` with the specialization field of order `p^exponent`.
    pub field: (u32, usize),
}

impl DensityReport {
    pub fn is_dense(&self) -> bool {
        matches!(self.outcome, DensityOutcome::DenseUpTo(_))
    }
}

impl fmt::Display for DensityOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityOutcome::DenseUpTo(d) => write!(f, "dense-up-to-{d}"),
            DensityOutcome::Found { symbolic, .. } => {
                write!(
                    f,
                    "found-polynomial ({})",
                    if *symbolic { "exact" } else { "specialized" }
                )
            }
            DensityOutcome::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

/// Exponent vectors of total degree `<= d` in `n` variables, by degree and
/// then with earlier variables first.
pub fn monomials(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for deg in 0..=d {
        let mut cur = vec![0u64; n];
        fill(&mut cur, 0, deg as u64, &mut out);
    }
    out
}

fn fill(cur: &mut Vec<u64>, i: usize, left: u64, out: &mut Vec<Monomial>) {
    if i + 1 >= cur.len() {
        if cur.is_empty() {
            if left == 0 {
                out.push(Vec::new());
            }
            return;
        }
        cur[i] = left;
        out.push(cur.clone());
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

fn eval_monomial(ext: &ExtField, m: &[u64], x: &[ExtElem]) -> ExtElem {
    m.iter()
        .zip(x)
        .fold(ext.one(), |acc, (&e, v)| ext.mul(&acc, &ext.pow(v, e)))
}

/// A polynomial in `x_1, ..., x_N` from coefficients on [`monomials`].
pub fn poly_from_coeffs(mons: &[Monomial], coeffs: &[Fq]) -> MPoly {
    MPoly::from_terms(mons.iter().cloned().zip(coeffs.iter().copied()).collect())
}

/// Evaluates a polynomial in the point coordinates at a symbolic point.
pub fn eval_at_point(mf: &MRatFunField, poly: &MPoly, x: &[MRatFun]) -> MRatFun {
    poly.terms().iter().fold(mf.zero(), |acc, (m, c)| {
        let term = m
            .iter()
            .zip(x)
            .fold(mf.constant(*c), |t, (&e, v)| mf.mul(&t, &mf.pow(v, e)));
        mf.add(&acc, &term)
    })
}

/// Density check for points given symbolically.
pub fn density_check(
    mf: &MRatFunField,
    points: &[Vec<MRatFun>],
    degree: usize,
    opts: &DensityOptions,
) -> DensityReport {
    let n = points.first().map_or(0, |p| p.len());
    density_check_with(
        mf,
        n,
        points.len(),
        degree,
        opts,
        |ext, tau| {
            points
                .iter()
                .map(|pt| {
                    pt.iter()
                        .map(|c| mf.eval_ext(ext, c, tau))
                        .collect::<Option<Vec<_>>>()
                })
                .collect()
        },
        Some(points),
    )
}

/// Density check for points available through a specialization routine:
/// `specialize(ext, tau)` returns the `count` points with `t_i = tau_i`, or
/// `None` if `tau` hits a pole.
pub fn density_check_with<S>(
    mf: &MRatFunField,
    n: usize,
    count: usize,
    degree: usize,
    opts: &DensityOptions,
    specialize: S,
    symbolic: Option<&[Vec<MRatFun>]>,
) -> DensityReport
where
    S: Fn(&ExtField, &[ExtElem]) -> Option<Vec<Vec<ExtElem>>>,
{
    let base = mf.base().clone();
    let ext = ExtField::with_min_order(base.clone(), opts.min_field_order);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mons = monomials(n, degree);
    let field = (base.p(), base.ell() as usize * ext.degree());
    let report = |outcome, ranks| DensityReport {
        points: count,
        degree,
        monomials: mons.len(),
        outcome,
        ranks,
        field,
    };
    let sample = |rng: &mut ChaCha8Rng| loop {
        let tau: Vec<ExtElem> = (0..mf.nvars()).map(|_| ext.random(rng)).collect();
        if let Some(pts) = specialize(&ext, &tau) {
            return pts;
        }
    };
    let mut ranks = Vec::new();
    let mut stacked: Vec<Vec<Fq>> = Vec::new();
    for _ in 0..opts.trials.max(1) {
        let pts = sample(&mut rng);
        let m = Matrix::from_fn(count, mons.len(), |i, j| {
            eval_monomial(&ext, &mons[j], &pts[i])
        });
        let r = linalg::rank(&ext, &m);
        ranks.push(r);
        if r == mons.len() {
            return report(DensityOutcome::DenseUpTo(degree), ranks);
        }
        for i in 0..count {
            for c in 0..ext.degree() {
                stacked.push((0..mons.len()).map(|j| m.get(i, j)[c]).collect());
            }
        }
    }
    let big = Matrix::from_rows(stacked);
    let Some(v) = linalg::right_kernel(&*base, &big).into_iter().next() else {
        return report(DensityOutcome::Inconclusive, ranks);
    };
    let poly = poly_from_coeffs(&mons, &v);
    let holds = match symbolic {
        Some(points) => points
            .iter()
            .all(|pt| eval_at_point(mf, &poly, pt).is_zero()),
        None => (0..opts.trials.max(1)).all(|_| {
            let pts = sample(&mut rng);
            pts.iter().all(|pt| {
                let val = mons.iter().zip(&v).fold(ext.zero(), |acc, (m, c)| {
                    ext.add(&acc, &ext.mul(&ext.embed(*c), &eval_monomial(&ext, m, pt)))
                });
                ext.is_zero(&val)
            })
        }),
    };
    if holds {
        report(
            DensityOutcome::Found {
                poly,
                symbolic: symbolic.is_some(),
            },
            ranks,
        )
    } else {
        report(DensityOutcome::Inconclusive, ranks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fq::FieldSpec;

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(1, 2), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(monomials(2, 2).len(), 6);
        assert_eq!(monomials(3, 3).len(), 20);
    }

    #[test]
    fn powers_of_t_are_dense() {
        let f = FieldSpec::prime(2).unwrap();
        let mf = MRatFunField::new(f, 1);
        let t = mf.var(0);
        let pts: Vec<Vec<MRatFun>> = (0..5).map(|i| vec![mf.frobenius(&t, i)]).collect();
        let r = density_check(&mf, &pts, 2, &DensityOptions::default());
        assert_eq!(r.outcome, DensityOutcome::DenseUpTo(2));
    }

    #[test]
    fn zero_points_give_first_coordinate() {
        let f = FieldSpec::prime(3).unwrap();
        let mf = MRatFunField::new(f, 1);
        let pts = vec![vec![mf.zero(), mf.var(0)]; 4];
        let r = density_check(&mf, &pts, 1, &DensityOptions::default());
        let DensityOutcome::Found { poly, symbolic } = r.outcome else {
            panic!()
        };
        assert!(symbolic);
        assert_eq!(poly, MPoly::monomial(vec![1, 0], Fq::ONE));
    }
}
