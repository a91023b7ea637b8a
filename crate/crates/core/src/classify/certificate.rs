//! Exact certificates for verdicts B and C and their verification.

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::ratfun::CPoly;
use crate::algebra::ring::Ring;
use crate::error::SplitError;
use crate::ore::{OrePoly, OreRing};
use crate::skew::{self, from_ore_matrix, SkewField};
use crate::split::SplitData;

use super::{AdditiveMap, Certificate};

/// A nonzero linear functional `v` with `v A^n = v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateB {
    pub v: Vec<OrePoly>,
    pub n: u64,
}

/// A matrix `T` of full row rank with `T A^m = F^r T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateC {
    pub t: Matrix<OrePoly>,
    pub m: u64,
    pub r: u64,
}

impl CertificateC {
    /// The certificate for the `k`-th iterate: `T A^{km} = F^{kr} T`.
    pub fn iterate(&self, k: u64) -> CertificateC {
        CertificateC {
            t: self.t.clone(),
            m: self.m * k,
            r: self.r * k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    /// The identity that was checked, in words.
    pub identity: String,
    pub reason: Option<String>,
}

impl Verification {
    fn pass(identity: String) -> Self {
        Verification {
            ok: true,
            identity,
            reason: None,
        }
    }

    fn fail(identity: String, reason: &str) -> Self {
        Verification {
            ok: false,
            identity,
            reason: Some(reason.to_string()),
        }
    }
}

/// Rows `rows` of `P`, cleared on the left by their central denominator.
fn cleared_rows(k: &SkewField, p: &crate::skew::SkewMatrix, rows: &[usize]) -> Matrix<OrePoly> {
    let sub = p.select_rows(rows);
    let c: CPoly = skew::central_denominator(k, &sub);
    let cs = k.scalar(k.ratfun().from_poly(c));
    let cleared = linalg::scale_left(k, &cs, &sub);
    skew::to_ore_matrix(k, &cleared).expect("central denominator clears the rows")
}

pub fn build_certificate_b(k: &SkewField, split: &SplitData) -> Result<CertificateB, SplitError> {
    let ranges = split.block_ranges();
    let idx = split
        .blocks
        .iter()
        .position(|b| b.n == 0 && b.m > 0)
        .ok_or_else(|| SplitError::Precondition("no block with n_i = 0".into()))?;
    let row = ranges[idx].start;
    let v = cleared_rows(k, &split.p, &[row]).row(0).to_vec();
    Ok(CertificateB { v, n: split.n })
}

pub fn build_certificate_c(
    k: &SkewField,
    split: &SplitData,
    d: usize,
) -> Result<CertificateC, SplitError> {
    let ranges = split.block_ranges();
    let best = split
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.n >= 1)
        .max_by(|(i, a), (j, b)| a.m.cmp(&b.m).then(j.cmp(i)))
        .filter(|(_, b)| b.m > d)
        .ok_or_else(|| SplitError::Precondition(format!("no block with n_i >= 1 and m_i > {d}")))?;
    let rows: Vec<usize> = ranges[best.0].clone().collect();
    Ok(CertificateC {
        t: cleared_rows(k, &split.p, &rows),
        m: split.n,
        r: best.1.n * k.ell() as u64,
    })
}

pub fn verify_b(a: &AdditiveMap, cert: &CertificateB) -> Verification {
    let identity = format!("v * A^{} = v", cert.n);
    let ore = a.ore();
    if cert.v.len() != a.dim() {
        return Verification::fail(identity, "shape mismatch");
    }
    if cert.v.iter().all(|x| ore.is_zero(x)) {
        return Verification::fail(identity, "v is zero");
    }
    let lhs = linalg::vec_mul(&ore, &cert.v, &a.power(cert.n));
    let v: Vec<OrePoly> = cert
        .v
        .iter()
        .map(|x| crate::algebra::poly::trimmed(&**a.field(), x.clone()))
        .collect();
    if lhs == v {
        Verification::pass(identity)
    } else {
        Verification::fail(identity, "identity fails")
    }
}

pub fn verify_c(a: &AdditiveMap, cert: &CertificateC) -> Verification {
    let identity = format!("T * A^{} = F^{} * T", cert.m, cert.r);
    let ore: OreRing = a.ore();
    if cert.t.cols() != a.dim() || cert.t.rows() == 0 {
        return Verification::fail(identity, "shape mismatch");
    }
    let t = cert
        .t
        .map(|x| crate::algebra::poly::trimmed(&**a.field(), x.clone()));
    let lhs = linalg::mul(&ore, &t, &a.power(cert.m));
    let rhs = linalg::scale_left(&ore, &ore.f_pow(cert.r as usize), &t);
    if lhs != rhs {
        return Verification::fail(identity, "identity fails");
    }
    let k = a.skew();
    if linalg::rank(&k, &from_ore_matrix(&k, &t)) != t.rows() {
        return Verification::fail(identity, "T is not of full row rank");
    }
    Verification::pass(identity)
}

/// Exact check of a B or C certificate. Witnesses for A are empirical and
/// are re-checked through their density reports instead.
pub fn verify_certificate(a: &AdditiveMap, cert: &Certificate) -> Verification {
    match cert {
        Certificate::B(b) => verify_b(a, b),
        Certificate::C(c) => verify_c(a, c),
        Certificate::A(_) => Verification::fail(
            "orbit density".into(),
            "witness A carries an empirical density report, not an identity",
        ),
    }
}
