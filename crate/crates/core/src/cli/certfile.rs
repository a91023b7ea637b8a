//! Certificate files.
//!
//! A certificate records the verdict, the data needed to check it and a
//! SHA-256 digest of the problem file it was produced from. Verification
//! needs only the two files: B and C certificates are checked through
//! their defining identities, A certificates by re-running the recorded
//! density check on the witness point.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::ring::Ring;
use crate::classify::certificate::{verify_b, verify_c};
use crate::classify::{
    orbit_density, Certificate, CertificateB, CertificateC, DensityOptions, DensityOutcome,
    DensityReport, Verdict, Verification,
};
use crate::split::SplitData;
use crate::text;

use super::problem::Problem;
use super::CliError;

pub const TOOL_VERSION: &str = concat!("frobdyn ", env!("CARGO_PKG_VERSION"));

pub fn digest(bytes: &[u8]) -> String {
    let h = Sha256::digest(bytes);
    let hex: String = h.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub tool: String,
    pub digest: String,
    pub verdict: String,
    /// Transcendence degree the verdict refers to.
    pub d: usize,
    pub applicable: Vec<String>,
    pub split: SplitSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<BSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<CSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<ASection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitSection {
    pub n: u64,
    pub base_n: u64,
    pub power_a: u32,
    /// `(n_i, m_i)` for each Frobenius block.
    pub blocks: Vec<[u64; 2]>,
    pub n1: usize,
    pub r0: String,
    pub r1: String,
    pub h: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BSection {
    pub n: u64,
    pub v: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CSection {
    pub m: u64,
    pub r: u64,
    pub t: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ASection {
    pub d: usize,
    pub alpha: Vec<String>,
    pub alpha0: Vec<String>,
    pub alpha1: Vec<String>,
    pub density_m: usize,
    pub density_d: usize,
    pub seed: u64,
    pub trials: usize,
    pub min_field_order: u64,
    pub orbit: ReportSection,
    pub sequence: ReportSection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportSection {
    pub outcome: String,
    pub monomials: usize,
    pub ranks: Vec<usize>,
    /// `[p, e]`: trials ran in the field of order `p^e`.
    pub field: [u64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
}

fn report_section(p: &Problem, r: &DensityReport) -> ReportSection {
    let relation = match &r.outcome {
        DensityOutcome::Found { poly, .. } => Some(text::format_coordinate_poly(&p.field, poly)),
        _ => None,
    };
    ReportSection {
        outcome: r.outcome.to_string(),
        monomials: r.monomials,
        ranks: r.ranks.clone(),
        field: [r.field.0 as u64, r.field.1 as u64],
        relation,
    }
}

fn split_section(p: &Problem, s: &SplitData) -> SplitSection {
    let f = &*p.field;
    SplitSection {
        n: s.n,
        base_n: s.diagnostics.base_n,
        power_a: s.diagnostics.power_a,
        blocks: s.blocks.iter().map(|b| [b.n, b.m as u64]).collect(),
        n1: s.n1(),
        r0: text::format_center_poly(f, &s.r0),
        r1: text::format_center_poly(f, &s.r1),
        h: text::format_upoly(f, &s.h, "s"),
    }
}

impl CertificateFile {
    pub fn from_toml(s: &str) -> Result<Self, CliError> {
        toml::from_str(s).map_err(|e| CliError::Parse(format!("certificate: {}", e.message())))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("certificates always serialize")
    }

    /// Serializes a verdict for the problem whose file bytes are `source`.
    pub fn from_verdict(p: &Problem, source: &[u8], v: &Verdict, density: &DensityOptions) -> Self {
        let f = &*p.field;
        let mf = p.mfield();
        let point = |xs: &[crate::algebra::mpoly::MRatFun]| -> Vec<String> {
            xs.iter().map(|x| text::format_mratfun(&mf, x)).collect()
        };
        let (mut b, mut c, mut a) = (None, None, None);
        match &v.certificate {
            Certificate::B(cb) => {
                b = Some(BSection {
                    n: cb.n,
                    v: cb.v.iter().map(|x| text::format_ore(f, x)).collect(),
                })
            }
            Certificate::C(cc) => {
                c = Some(CSection {
                    m: cc.m,
                    r: cc.r,
                    t: cc
                        .t
                        .to_rows()
                        .iter()
                        .map(|r| r.iter().map(|x| text::format_ore(f, x)).collect())
                        .collect(),
                })
            }
            Certificate::A(w) => {
                a = Some(ASection {
                    d: w.d,
                    alpha: point(&w.alpha),
                    alpha0: point(&w.alpha0),
                    alpha1: point(&w.alpha1),
                    density_m: w.report.points,
                    density_d: w.report.degree,
                    seed: density.seed,
                    trials: density.trials,
                    min_field_order: density.min_field_order,
                    orbit: report_section(p, &w.report),
                    sequence: report_section(p, &w.sequence_report),
                })
            }
        }
        CertificateFile {
            tool: TOOL_VERSION.to_string(),
            digest: digest(source),
            verdict: v.kind.to_string(),
            d: p.d,
            applicable: v.applicable.iter().map(|k| k.to_string()).collect(),
            split: split_section(p, &v.split),
            b,
            c,
            a,
        }
    }

    /// Checks the certificate against the problem file bytes `source`.
    pub fn verify(&self, source: &[u8]) -> Result<Verification, CliError> {
        let actual = digest(source);
        if actual != self.digest {
            return Err(CliError::Digest {
                expected: self.digest.clone(),
                actual,
            });
        }
        let text_src = std::str::from_utf8(source)
            .map_err(|_| CliError::Parse("problem file is not UTF-8".into()))?;
        let mut p = Problem::parse(text_src)?;
        if self.d == 0 {
            return Err(CliError::Invalid("certificate d must be at least 1".into()));
        }
        p.d = self.d;
        let ore = p.map.ore();
        let sections = [self.b.is_some(), self.c.is_some(), self.a.is_some()];
        if sections.iter().filter(|x| **x).count() != 1 {
            return Err(CliError::Invalid(
                "certificate must carry exactly one of [b], [c], [a]".into(),
            ));
        }
        match (self.verdict.as_str(), &self.b, &self.c, &self.a) {
            ("B", Some(b), _, _) => {
                let v =
                    b.v.iter()
                        .map(|x| text::parse_ore(&ore, x))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| CliError::Parse(format!("b.v: {e}")))?;
                Ok(verify_b(&p.map, &CertificateB { v, n: b.n }))
            }
            ("C", _, Some(c), _) => {
                let t = text::matrix_from_strings(&c.t, |x| text::parse_ore(&ore, x))
                    .map_err(|e| CliError::Parse(format!("c.t: {e}")))?;
                let cert = CertificateC { t, m: c.m, r: c.r };
                let mut v = verify_c(&p.map, &cert);
                if v.ok && cert.t.rows() <= p.d {
                    v.ok = false;
                    v.reason = Some(format!(
                        "T has {} rows, need more than d = {}",
                        cert.t.rows(),
                        p.d
                    ));
                }
                Ok(v)
            }
            ("A", _, _, Some(a)) => verify_a(&p, a),
            _ => Err(CliError::Invalid(format!(
                "verdict '{}' does not match the certificate section",
                self.verdict
            ))),
        }
    }
}

fn verify_a(p: &Problem, a: &ASection) -> Result<Verification, CliError> {
    let identity = format!(
        "no nonzero polynomial of degree <= {} vanishes on the first {} orbit points of alpha",
        a.density_d, a.density_m
    );
    if a.d != p.d {
        return Err(CliError::Invalid(format!(
            "certificate d = {} but problem d = {}",
            a.d, p.d
        )));
    }
    let mf = p.mfield();
    let alpha = a
        .alpha
        .iter()
        .map(|x| text::parse_mratfun(&mf, x))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Parse(format!("a.alpha: {e}")))?;
    if alpha.len() != p.map.dim() {
        return Ok(Verification {
            ok: false,
            identity,
            reason: Some("shape mismatch".into()),
        });
    }
    if alpha.iter().all(|x| mf.is_zero(x)) {
        return Ok(Verification {
            ok: false,
            identity,
            reason: Some("alpha is zero".into()),
        });
    }
    let opts = DensityOptions {
        trials: a.trials,
        min_field_order: a.min_field_order,
        seed: a.seed,
    };
    let report = orbit_density(&mf, &p.map, &alpha, a.density_m, a.density_d, &opts);
    let ok = report.is_dense();
    Ok(Verification {
        ok,
        identity,
        reason: (!ok).then(|| format!("density check gave {}", report.outcome)),
    })
}
