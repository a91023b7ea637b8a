//! Problem files.
//!
//! ```toml
//! [field]
//! p = 2
//! ell = 1
//! modulus = [0, 1]        # optional, monic, coefficients low to high
//!
//! [map]
//! n = 1
//! entries = [["F + 1"]]   # twisted polynomials, row by row
//!
//! [question]
//! d = 1
//! density_m = 25          # optional
//! density_d = 3           # optional
//!
//! [[lambda]]              # optional, any number
//! lambda = "t + 1"        # element of F_q(t)
//! c = ["1", "1"]          # c_0, c_1, ...
//!
//! [[fset]]                # optional, any number; points in F_q(t_1..t_d)
//! gamma0 = ["0"]
//! gammas = [["t"]]
//! ks = [1]
//! h = []                  # generators of the module part
//! divisor = "F - 1"       # optional
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::fq::FieldSpec;
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::mpoly::{MRatFun, MRatFunField};
use crate::algebra::ratfun::RatFunField;
use crate::classify::AdditiveMap;
use crate::error::{AlgebraError, ParseError};
use crate::fsets::{FSetDescriptor, FpFModule, LambdaEqInstance, Point};
use crate::ore::OreRing;
use crate::skew::from_ore_matrix;
use crate::text;

use super::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub field: FieldSection,
    pub map: MapSection,
    pub question: QuestionSection,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lambda: Vec<LambdaSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fset: Vec<FSetSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSection {
    pub p: u32,
    #[serde(default = "one")]
    pub ell: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSection {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuestionSection {
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density_m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density_d: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LambdaSection {
    pub lambda: String,
    pub c: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FSetSection {
    pub gamma0: Vec<String>,
    pub gammas: Vec<Vec<String>>,
    pub ks: Vec<u64>,
    #[serde(default)]
    pub h: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<String>,
}

/// A validated problem.
#[derive(Clone, Debug)]
pub struct Problem {
    pub field: Arc<FieldSpec>,
    pub map: AdditiveMap,
    pub d: usize,
    pub density_m: Option<usize>,
    pub density_d: Option<usize>,
    pub lambdas: Vec<LambdaEqInstance>,
    pub fsets: Vec<FSetDescriptor>,
}

fn at(what: impl Into<String>) -> impl FnOnce(ParseError) -> CliError {
    let what = what.into();
    move |e| CliError::Parse(format!("{what}: {e}"))
}

fn field_error(e: AlgebraError) -> CliError {
    match e {
        AlgebraError::ReducibleModulus { .. } => CliError::Modulus(e.to_string()),
        other => CliError::Field(other.to_string()),
    }
}

fn parse_point(mf: &MRatFunField, xs: &[String], what: &str) -> Result<Point, CliError> {
    xs.iter()
        .enumerate()
        .map(|(i, x)| text::parse_mratfun(mf, x).map_err(at(format!("{what}[{i}]"))))
        .collect()
}

impl ProblemFile {
    pub fn from_toml(s: &str) -> Result<Self, CliError> {
        toml::from_str(s).map_err(|e| CliError::Parse(e.message().to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("problem files always serialize")
    }

    pub fn validate(&self) -> Result<Problem, CliError> {
        let f = &self.field;
        let field = FieldSpec::new(f.p, f.ell, f.modulus.clone()).map_err(field_error)?;
        let ore = OreRing::new(field.clone());
        let n = self.map.n;
        if n == 0 || self.map.entries.len() != n || self.map.entries.iter().any(|r| r.len() != n) {
            return Err(CliError::Invalid(format!(
                "map.entries must be {n}x{n} with n >= 1"
            )));
        }
        let mut rows = Vec::with_capacity(n);
        for (i, r) in self.map.entries.iter().enumerate() {
            let row = r
                .iter()
                .enumerate()
                .map(|(j, e)| {
                    text::parse_ore(&ore, e).map_err(at(format!("map.entries[{i}][{j}]")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        let map = AdditiveMap::new(field.clone(), Matrix::from_rows(rows))
            .map_err(|e| CliError::Invalid(e.to_string()))?;
        let k = map.skew();
        if linalg::rank(&k, &from_ore_matrix(&k, map.entries())) != n {
            return Err(CliError::NonDominant(
                "the matrix is singular over the skew field of fractions".into(),
            ));
        }
        let d = self.question.d;
        if d == 0 {
            return Err(CliError::Invalid("question.d must be at least 1".into()));
        }
        let rf = RatFunField::new(field.clone());
        let lambdas = self
            .lambda
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let lambda = text::parse_ratfun(&rf, "t", &l.lambda)
                    .map_err(at(format!("lambda[{i}].lambda")))?;
                let c =
                    l.c.iter()
                        .enumerate()
                        .map(|(j, c)| {
                            text::parse_fq(&field, c).map_err(at(format!("lambda[{i}].c[{j}]")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                if lambda.is_zero() || c.is_empty() {
                    return Err(CliError::Invalid(format!(
                        "lambda[{i}] needs lambda != 0 and c_0"
                    )));
                }
                Ok(LambdaEqInstance { lambda, c })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let mf = MRatFunField::new(field.clone(), d);
        let fsets = self
            .fset
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let gamma0 = parse_point(&mf, &s.gamma0, &format!("fset[{i}].gamma0"))?;
                let dim = gamma0.len();
                let gammas = s
                    .gammas
                    .iter()
                    .map(|g| parse_point(&mf, g, &format!("fset[{i}].gammas")))
                    .collect::<Result<Vec<_>, _>>()?;
                let generators =
                    s.h.iter()
                        .map(|g| parse_point(&mf, g, &format!("fset[{i}].h")))
                        .collect::<Result<Vec<_>, _>>()?;
                if dim == 0 || gammas.iter().chain(&generators).any(|g| g.len() != dim) {
                    return Err(CliError::Invalid(format!(
                        "fset[{i}]: points must share a positive length"
                    )));
                }
                if s.ks.len() != gammas.len() || s.ks.contains(&0) {
                    return Err(CliError::Invalid(format!(
                        "fset[{i}]: need one positive k per gamma"
                    )));
                }
                let divisor = s
                    .divisor
                    .as_ref()
                    .map(|p| text::parse_ore(&ore, p).map_err(at(format!("fset[{i}].divisor"))))
                    .transpose()?;
                Ok(FSetDescriptor {
                    gamma0,
                    gammas,
                    ks: s.ks.clone(),
                    h: FpFModule { generators },
                    divisor,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(Problem {
            field,
            map,
            d,
            density_m: self.question.density_m,
            density_d: self.question.density_d,
            lambdas,
            fsets,
        })
    }
}

impl Problem {
    pub fn parse(s: &str) -> Result<Problem, CliError> {
        ProblemFile::from_toml(s)?.validate()
    }

    pub fn mfield(&self) -> MRatFunField {
        MRatFunField::new(self.field.clone(), self.d)
    }

    /// The canonical file for this problem: explicit modulus and every
    /// expression in formatter output.
    pub fn canonical(&self) -> ProblemFile {
        let f = &*self.field;
        let mf = self.mfield();
        let point = |p: &[MRatFun]| -> Vec<String> {
            p.iter().map(|x| text::format_mratfun(&mf, x)).collect()
        };
        let e = self.map.entries();
        ProblemFile {
            field: FieldSection {
                p: f.p(),
                ell: f.ell(),
                modulus: Some(f.modulus().to_vec()),
            },
            map: MapSection {
                n: self.map.dim(),
                entries: e
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(|x| text::format_ore(f, x)).collect())
                    .collect(),
            },
            question: QuestionSection {
                d: self.d,
                density_m: self.density_m,
                density_d: self.density_d,
            },
            lambda: self
                .lambdas
                .iter()
                .map(|l| LambdaSection {
                    lambda: text::format_ratfun(f, &l.lambda, "t"),
                    c: l.c.iter().map(|c| text::format_fq(f, *c)).collect(),
                })
                .collect(),
            fset: self
                .fsets
                .iter()
                .map(|s| FSetSection {
                    gamma0: point(&s.gamma0),
                    gammas: s.gammas.iter().map(|g| point(g)).collect(),
                    ks: s.ks.clone(),
                    h: s.h.generators.iter().map(|g| point(g)).collect(),
                    divisor: s.divisor.as_ref().map(|p| text::format_ore(f, p)),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
[field]
p = 3
ell = 2

[map]
n = 2
entries = [["F*[0,1]", "0"], ["1", "F + 1"]]

[question]
d = 2
density_m = 10

[[lambda]]
lambda = "(t + 1) / t"
c = ["1", "2"]

[[fset]]
gamma0 = ["0", "t1"]
gammas = [["t2", "1"]]
ks = [2]
"#;

    #[test]
    fn canonical_roundtrip() {
        let p = Problem::parse(SAMPLE).unwrap();
        let canon = p.canonical();
        let again = Problem::parse(&canon.to_toml()).unwrap().canonical();
        assert_eq!(canon, again);
        assert_eq!(ProblemFile::from_toml(&canon.to_toml()).unwrap(), canon);
    }

    #[test]
    fn rejections_have_distinct_codes() {
        let unknown = SAMPLE.replace("[question]", "[question]\nextra = 1");
        assert!(matches!(Problem::parse(&unknown), Err(CliError::Parse(_))));
        let reducible = SAMPLE.replace("ell = 2", "ell = 2\nmodulus = [2, 0, 1]");
        let e1 = Problem::parse(&reducible).unwrap_err();
        let singular = SAMPLE.replace(
            r#"[["F*[0,1]", "0"], ["1", "F + 1"]]"#,
            r#"[["F", "F"], ["1", "1"]]"#,
        );
        let e2 = Problem::parse(&singular).unwrap_err();
        assert!(matches!(e1, CliError::Modulus(_)));
        assert!(matches!(e2, CliError::NonDominant(_)));
        assert_ne!(e1.tag(), e2.tag());
    }
}
