//! Witness points for verdict A and orbit computations.
//!
//! In split coordinates the point is `(alpha_0, alpha_1)`: inside each
//! Frobenius block the coordinates are `t_1, ..., t_{m_i}` (blocks may share
//! variables since every `m_i <= d`), and `alpha_1` consists of functions
//! independent from the coordinates of `alpha_0`. The point of `G_a^N` is
//! `h P^{-1} (alpha_0, alpha_1)`, which `h` makes integral.

use crate::algebra::ext::{ExtElem, ExtField};
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::mpoly::{MRatFun, MRatFunField};
use crate::error::SplitError;
use crate::ore::{OrePoly, OreRing};
use crate::skew::{self, SkewField};
use crate::split::SplitData;

use super::density::{density_check_with, DensityOptions, DensityReport};
use super::independence::construct_independent_points;
use super::{applicable, apply_matrix, AdditiveMap, ClassifyOptions, VerdictKind};

/// Total number of stored terms above which orbits are only handled after
/// specialization.
pub const SYMBOLIC_TERM_CAP: usize = 1 << 15;

#[derive(Clone, Debug)]
pub struct WitnessA {
    /// Number of variables `t_1, ..., t_d`.
    pub d: usize,
    /// The witness point in `G_a^N`.
    pub alpha: Vec<MRatFun>,
    pub alpha0: Vec<MRatFun>,
    pub alpha1: Vec<MRatFun>,
    /// Density of the orbit of `alpha` under the map.
    pub report: DensityReport,
    /// Density of the sequence `h (A_0^m (+) A_1^m)(alpha_0, alpha_1)`.
    pub sequence_report: DensityReport,
}

fn terms(x: &MRatFun) -> usize {
    x.num.len() + x.den.len()
}

/// `alpha, A alpha, ..., A^{m-1} alpha`.
pub fn orbit(mf: &MRatFunField, a: &AdditiveMap, alpha: &[MRatFun], m: usize) -> Vec<Vec<MRatFun>> {
    orbit_capped(mf, a, alpha, m, usize::MAX).expect("uncapped")
}

fn orbit_capped(
    mf: &MRatFunField,
    a: &AdditiveMap,
    alpha: &[MRatFun],
    m: usize,
    cap: usize,
) -> Option<Vec<Vec<MRatFun>>> {
    let mut out: Vec<Vec<MRatFun>> = Vec::with_capacity(m);
    let mut size = 0;
    let mut cur = alpha.to_vec();
    for i in 0..m {
        if i > 0 {
            cur = a.apply(mf, &cur);
        }
        size += cur.iter().map(terms).sum::<usize>();
        if size > cap {
            return None;
        }
        out.push(cur.clone());
    }
    Some(out)
}

/// The operators `h (A_0^i (+) A_1^i)`, `i < m`, over `F_q[F]`.
pub fn sequence_operators(k: &SkewField, split: &SplitData, m: usize) -> Vec<Matrix<OrePoly>> {
    let h = k.scalar(k.ratfun().from_poly(split.h.clone()));
    let mut a0 = linalg::identity(k, split.n0());
    let mut a1 = linalg::identity(k, split.n1());
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        if i > 0 {
            a0 = linalg::mul(k, &a0, &split.a0);
            a1 = linalg::mul(k, &a1, &split.a1);
        }
        let op = linalg::scale_left(k, &h, &linalg::block_diag(k, &a0, &a1));
        out.push(skew::to_ore_matrix(k, &op).expect("h clears every power of A_1"));
    }
    out
}

/// The sequence `h (A_0^i (+) A_1^i)(alpha)` for `i < m`.
pub fn orbit_sequence(
    k: &SkewField,
    mf: &MRatFunField,
    split: &SplitData,
    alpha: &[MRatFun],
    m: usize,
) -> Vec<Vec<MRatFun>> {
    let ore = OreRing::new(k.base().clone());
    sequence_operators(k, split, m)
        .iter()
        .map(|op| apply_matrix(&ore, mf, op, alpha))
        .collect()
}

fn specialize_point(
    mf: &MRatFunField,
    ext: &ExtField,
    x: &[MRatFun],
    tau: &[ExtElem],
) -> Option<Vec<ExtElem>> {
    x.iter().map(|c| mf.eval_ext(ext, c, tau)).collect()
}

/// Density of the first `m` orbit points of `alpha` up to degree `degree`.
pub fn orbit_density(
    mf: &MRatFunField,
    a: &AdditiveMap,
    alpha: &[MRatFun],
    m: usize,
    degree: usize,
    opts: &DensityOptions,
) -> DensityReport {
    let symbolic = orbit_capped(mf, a, alpha, m, SYMBOLIC_TERM_CAP);
    density_check_with(
        mf,
        a.dim(),
        m,
        degree,
        opts,
        |ext, tau| {
            let mut cur = specialize_point(mf, ext, alpha, tau)?;
            let mut pts = Vec::with_capacity(m);
            for i in 0..m {
                if i > 0 {
                    cur = a.apply(ext, &cur);
                }
                pts.push(cur.clone());
            }
            Some(pts)
        },
        symbolic.as_deref(),
    )
}

pub fn witness_a(
    a: &AdditiveMap,
    split: &SplitData,
    opts: &ClassifyOptions,
) -> Result<WitnessA, SplitError> {
    let d = opts.d;
    if applicable(split, d) != vec![VerdictKind::A] {
        return Err(SplitError::Precondition(format!(
            "witness A needs all n_i >= 1 and all m_i <= {d}"
        )));
    }
    let k = a.skew();
    let ore = a.ore();
    let mf = MRatFunField::new(a.field().clone(), d);
    let mut alpha0 = Vec::with_capacity(split.n0());
    for b in &split.blocks {
        for j in 0..b.m {
            alpha0.push(mf.var(j));
        }
    }
    let alpha1 = construct_independent_points(&mf, split.n1(), &alpha0);
    let mut split_point = alpha0.clone();
    split_point.extend(alpha1.iter().cloned());
    let h = k.scalar(k.ratfun().from_poly(split.h.clone()));
    let pull = skew::to_ore_matrix(&k, &linalg::scale_left(&k, &h, &split.p_inv))
        .expect("h clears P^{-1}");
    let alpha = apply_matrix(&ore, &mf, &pull, &split_point);

    let m = opts.density_m;
    let report = orbit_density(&mf, a, &alpha, m, opts.density_d, &opts.density);
    let ops = sequence_operators(&k, split, m);
    let seq_symbolic: Option<Vec<Vec<MRatFun>>> = {
        let mut size = 0;
        let mut out = Vec::new();
        for op in &ops {
            let pt = apply_matrix(&ore, &mf, op, &split_point);
            size += pt.iter().map(terms).sum::<usize>();
            if size > SYMBOLIC_TERM_CAP {
                break;
            }
            out.push(pt);
        }
        (out.len() == m).then_some(out)
    };
    let sequence_report = density_check_with(
        &mf,
        a.dim(),
        m,
        opts.density_d,
        &opts.density,
        |ext, tau| {
            let x = specialize_point(&mf, ext, &split_point, tau)?;
            Some(
                ops.iter()
                    .map(|op| apply_matrix(&ore, ext, op, &x))
                    .collect(),
            )
        },
        seq_symbolic.as_deref(),
    );
    Ok(WitnessA {
        d,
        alpha,
        alpha0,
        alpha1,
        report,
        sequence_report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fq::FieldSpec;
    use crate::algebra::ring::Ring;

    #[test]
    fn orbit_of_t_under_frobenius() {
        let f = FieldSpec::prime(3).unwrap();
        let a = AdditiveMap::new(
            f.clone(),
            Matrix::from_vec(1, 1, vec![OreRing::new(f.clone()).f_pow(1)]),
        )
        .unwrap();
        let mf = MRatFunField::new(f, 1);
        let t = mf.var(0);
        let orb = orbit(&mf, &a, &[t.clone()], 4);
        for (i, pt) in orb.iter().enumerate() {
            assert_eq!(pt[0], mf.pow(&t, 3u64.pow(i as u32)));
        }
    }
}
