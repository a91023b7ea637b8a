//! The A/B/C decision for dominant additive endomorphisms of `G_a^N`.
//!
//! * B: some coordinate functional is invariant under an iterate.
//! * C: a dominant map `tau` to `G_a^{d+1}` or more intertwines an iterate
//!   with a power of Frobenius.
//! * A: neither holds, and a point with a dense orbit is produced,
//!   together with an empirical density report.

pub mod certificate;
pub mod density;
pub mod independence;
pub mod witness;

use std::fmt;
use std::sync::Arc;

use crate::algebra::fq::FieldSpec;
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::ratfun::CPoly;
use crate::error::{AlgebraError, SplitError};
use crate::ore::{FrobeniusField, OrePoly, OreRing};
use crate::skew::SkewField;
use crate::split::{split_endomorphism, SplitData};

pub use certificate::{
    build_certificate_b, build_certificate_c, verify_certificate, CertificateB, CertificateC,
    Verification,
};
pub use density::{density_check, DensityOptions, DensityOutcome, DensityReport};
pub use independence::{check_independence, construct_independent_points, Independence};
pub use witness::{orbit, orbit_density, orbit_sequence, witness_a, WitnessA};

/// `x -> A x` on `G_a^N`, entries additive polynomials.
#[derive(Clone, Debug)]
pub struct AdditiveMap {
    field: Arc<FieldSpec>,
    entries: Matrix<OrePoly>,
}

impl AdditiveMap {
    pub fn new(field: Arc<FieldSpec>, entries: Matrix<OrePoly>) -> Result<Self, AlgebraError> {
        if !entries.is_square() || entries.rows() == 0 {
            return Err(AlgebraError::Dimension(format!(
                "map matrix is {}x{}, expected square and nonempty",
                entries.rows(),
                entries.cols()
            )));
        }
        let entries = entries.map(|p| crate::algebra::poly::trimmed(&*field, p.clone()));
        Ok(AdditiveMap { field, entries })
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn entries(&self) -> &Matrix<OrePoly> {
        &self.entries
    }

    pub fn ore(&self) -> OreRing {
        OreRing::new(self.field.clone())
    }

    pub fn skew(&self) -> SkewField {
        SkewField::new(self.field.clone())
    }

    /// The matrix of the `n`-th iterate.
    pub fn power(&self, n: u64) -> Matrix<OrePoly> {
        linalg::pow(&self.ore(), &self.entries, n)
    }

    pub fn apply<K: FrobeniusField>(&self, k: &K, x: &[K::Elem]) -> Vec<K::Elem> {
        apply_matrix(&self.ore(), k, &self.entries, x)
    }
}

/// Applies a matrix of additive polynomials to a point.
pub fn apply_matrix<K: FrobeniusField>(
    ore: &OreRing,
    k: &K,
    a: &Matrix<OrePoly>,
    x: &[K::Elem],
) -> Vec<K::Elem> {
    (0..a.rows())
        .map(|i| {
            (0..a.cols()).fold(k.zero(), |acc, j| {
                k.add(&acc, &ore.eval(k, a.get(i, j), &x[j]))
            })
        })
        .collect()
}

/// `x -> {y : [h](y) = B x}`: a finite-to-finite map.
#[derive(Clone, Debug)]
pub struct FiniteToFiniteMap {
    pub h: CPoly,
    pub b: Matrix<OrePoly>,
}

impl FiniteToFiniteMap {
    /// Checks that `y` lies over `x`.
    pub fn relates<K: FrobeniusField>(
        &self,
        ore: &OreRing,
        k: &K,
        x: &[K::Elem],
        y: &[K::Elem],
    ) -> bool {
        let hy: Vec<K::Elem> = y
            .iter()
            .map(|v| ore.eval(k, &ore.from_center(&self.h), v))
            .collect();
        hy == apply_matrix(ore, k, &self.b, x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerdictKind {
    A,
    B,
    C,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            VerdictKind::A => "A",
            VerdictKind::B => "B",
            VerdictKind::C => "C",
        };
        f.write_str(c)
    }
}

#[derive(Clone, Debug)]
pub enum Certificate {
    A(Box<WitnessA>),
    B(CertificateB),
    C(CertificateC),
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub certificate: Certificate,
    pub split: SplitData,
    /// Every verdict whose defining condition holds, sorted.
    pub applicable: Vec<VerdictKind>,
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Transcendence degree of the field of definition of points.
    pub d: usize,
    /// Orbit length for the density report.
    pub density_m: usize,
    /// Degree bound for the density report.
    pub density_d: usize,
    pub density: DensityOptions,
}

impl ClassifyOptions {
    pub fn new(d: usize) -> Self {
        ClassifyOptions {
            d,
            density_m: 20,
            density_d: 2,
            density: DensityOptions::default(),
        }
    }
}

/// The verdicts whose conditions hold for the given split.
pub fn applicable(split: &SplitData, d: usize) -> Vec<VerdictKind> {
    let mut out = Vec::new();
    let b = split.blocks.iter().any(|b| b.n == 0 && b.m > 0);
    let c = split.blocks.iter().any(|b| b.n >= 1 && b.m > d);
    if !b && !c {
        out.push(VerdictKind::A);
    }
    if b {
        out.push(VerdictKind::B);
    }
    if c {
        out.push(VerdictKind::C);
    }
    out
}

pub fn classify(a: &AdditiveMap, opts: &ClassifyOptions) -> Result<Verdict, SplitError> {
    if opts.d == 0 {
        return Err(SplitError::Precondition(
            "transcendence degree must be at least 1".into(),
        ));
    }
    let k = a.skew();
    let split = split_endomorphism(&k, a.entries())?;
    let applicable = applicable(&split, opts.d);
    let (kind, certificate) = if applicable.contains(&VerdictKind::B) {
        (
            VerdictKind::B,
            Certificate::B(build_certificate_b(&k, &split)?),
        )
    } else if applicable.contains(&VerdictKind::C) {
        (
            VerdictKind::C,
            Certificate::C(build_certificate_c(&k, &split, opts.d)?),
        )
    } else {
        let w = witness_a(a, &split, opts)?;
        (VerdictKind::A, Certificate::A(Box::new(w)))
    };
    Ok(Verdict {
        kind,
        certificate,
        split,
        applicable,
    })
}
