//! `frobdyn tools ...`: one subcommand per underlying computation.
//!
//! Every tool reads a problem file for the field, the map and `d`. Output
//! is `key = value` lines, with values in the text grammar of
//! [`crate::text`], except `lambda-density --csv`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Subcommand};

use crate::algebra::mpoly::MRatFun;
use crate::algebra::ratfun::RatFunField;
use crate::classify::{
    check_independence, construct_independent_points, orbit, orbit_density, DensityOptions,
    DensityOutcome,
};
use crate::fsets::{fset_enumerate, lambda_density, EnumerateOptions, DEFAULT_CAP};
use crate::skew::{from_ore_matrix, min_poly_center, tilde};
use crate::split::split_endomorphism;
use crate::text;

use super::problem::Problem;
use super::{io, load_problem, CliError};

#[derive(Debug, Subcommand)]
pub enum ToolCommand {
    /// Minimal central polynomial of the map, in x over F_p(s) with s = F^ell.
    Minpoly { problem: PathBuf },
    /// The matrix over F_p(s) representing the map on coordinates over F_p(s).
    Tilde { problem: PathBuf },
    /// The split P A^n P^{-1} = A_0 (+) A_1 and its diagnostics.
    Split { problem: PathBuf },
    /// The first M points of the orbit of a point.
    Orbit(PointArgs),
    /// Density check for the first M orbit points of a point.
    Density(DensityArgs),
    /// Solvable m in [1, M] for lambda^m = c_0 + c_1 t^{n_1} + ... + c_r t^{n_r}.
    ///
    /// Without --csv, prints `density = count/M` and the solvable m. With
    /// --csv, prints the header `m,solvable,tuple` and one row per m:
    /// `solvable` is 0 or 1, `tuple` is the exponents (n_1, ..., n_r) of the
    /// first solution joined by ';' and empty when there is none.
    LambdaDensity(LambdaArgs),
    /// Enumerate an F-set of the problem file.
    Fset(FsetArgs),
    /// Search for F-linear relations between points of F_q(t_1..t_d).
    Independence(IndependenceArgs),
}

#[derive(Debug, Args)]
pub struct PointArgs {
    pub problem: PathBuf,
    /// Coordinates of the point in F_q(t_1..t_d), one per flag.
    #[arg(long = "point", required = true)]
    pub point: Vec<String>,
    /// Number of orbit points.
    #[arg(long = "M", default_value_t = 5)]
    pub m: usize,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Degree bound.
    #[arg(long = "D", default_value_t = 2)]
    pub degree: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
}

#[derive(Debug, Args)]
pub struct LambdaArgs {
    pub problem: PathBuf,
    /// Which [[lambda]] entry of the problem file.
    #[arg(long, default_value_t = 0)]
    pub index: usize,
    #[arg(long = "M", default_value_t = 512)]
    pub max_m: u64,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct FsetArgs {
    pub problem: PathBuf,
    /// Which [[fset]] entry of the problem file.
    #[arg(long, default_value_t = 0)]
    pub index: usize,
    /// Largest exponent n_i.
    #[arg(long = "bound-n", default_value_t = 3)]
    pub bound: u64,
    /// Largest F-degree of the operators in the module part.
    #[arg(long = "bound-module", default_value_t = 0)]
    pub module_bound: usize,
    /// Let the exponents n_i start at 0.
    #[arg(long)]
    pub zero_inclusive: bool,
    #[arg(long = "bound-count", default_value_t = DEFAULT_CAP)]
    pub cap: u64,
}

#[derive(Debug, Args)]
pub struct IndependenceArgs {
    pub problem: PathBuf,
    /// Functions gamma_i, one per flag.
    #[arg(long = "gamma")]
    pub gammas: Vec<String>,
    /// Functions delta_j, one per flag.
    #[arg(long = "delta")]
    pub deltas: Vec<String>,
    /// Append this many constructed functions independent from the deltas.
    #[arg(long, default_value_t = 0)]
    pub construct: usize,
    /// Bound on the F-degree of the relation operators.
    #[arg(long = "D", default_value_t = 4)]
    pub degree: usize,
    /// Degree over F_p of the coefficient field asked about.
    #[arg(long = "coefficient-degree", default_value_t = 1)]
    pub coefficient_degree: usize,
}

fn parse_points(p: &Problem, xs: &[String], what: &str) -> Result<Vec<MRatFun>, CliError> {
    let mf = p.mfield();
    xs.iter()
        .map(|x| text::parse_mratfun(&mf, x).map_err(|e| CliError::Parse(format!("{what}: {e}"))))
        .collect()
}

fn join_point(p: &Problem, x: &[MRatFun]) -> String {
    let mf = p.mfield();
    let items: Vec<String> = x.iter().map(|c| text::format_mratfun(&mf, c)).collect();
    format!("[{}]", items.join(", "))
}

pub fn run(cmd: &ToolCommand, out: &mut dyn Write) -> Result<(), CliError> {
    let mut lines: Vec<String> = Vec::new();
    match cmd {
        ToolCommand::Minpoly { problem } => {
            let (_, p) = load_problem(problem)?;
            let k = p.map.skew();
            let q = min_poly_center(&k, &from_ore_matrix(&k, p.map.entries()));
            lines.push(format!(
                "minpoly = {}",
                text::format_center_poly(&p.field, &q)
            ));
        }
        ToolCommand::Tilde { problem } => {
            let (_, p) = load_problem(problem)?;
            let k = p.map.skew();
            let t = tilde(&k, &from_ore_matrix(&k, p.map.entries()));
            lines.push(format!(
                "tilde = {}",
                text::format_matrix(&t, |r| text::format_ratfun(&p.field, r, "s"))
            ));
        }
        ToolCommand::Split { problem } => {
            let (_, p) = load_problem(problem)?;
            let k = p.map.skew();
            let s = split_endomorphism(&k, p.map.entries())?;
            let f = &*p.field;
            let skew =
                |m: &crate::skew::SkewMatrix| text::format_matrix(m, |u| text::format_skew(f, u));
            lines.push(format!("n = {}", s.n));
            lines.push(format!("base_n = {}", s.diagnostics.base_n));
            lines.push(format!("power_a = {}", s.diagnostics.power_a));
            lines.push(format!(
                "minpoly = {}",
                text::format_center_poly(f, &s.diagnostics.min_poly)
            ));
            for (fc, mult) in &s.diagnostics.factors {
                lines.push(format!(
                    "factor = {} ; multiplicity {} ; {}",
                    text::format_center_poly(f, &fc.factor),
                    mult,
                    fc.kind
                ));
            }
            let blocks: Vec<String> = s
                .blocks
                .iter()
                .map(|b| format!("({}, {})", b.n, b.m))
                .collect();
            lines.push(format!("blocks = [{}]", blocks.join(", ")));
            lines.push(format!("n1 = {}", s.n1()));
            lines.push(format!("r0 = {}", text::format_center_poly(f, &s.r0)));
            lines.push(format!("r1 = {}", text::format_center_poly(f, &s.r1)));
            lines.push(format!("h = {}", text::format_upoly(f, &s.h, "s")));
            lines.push(format!("P = {}", skew(&s.p)));
            lines.push(format!("A0 = {}", skew(&s.a0)));
            lines.push(format!("A1 = {}", skew(&s.a1)));
        }
        ToolCommand::Orbit(a) => {
            let (_, p) = load_problem(&a.problem)?;
            let x = parse_points(&p, &a.point, "point")?;
            check_len(&p, &x)?;
            for (i, pt) in orbit(&p.mfield(), &p.map, &x, a.m).iter().enumerate() {
                lines.push(format!("orbit[{i}] = {}", join_point(&p, pt)));
            }
        }
        ToolCommand::Density(a) => {
            let (_, p) = load_problem(&a.point.problem)?;
            let x = parse_points(&p, &a.point.point, "point")?;
            check_len(&p, &x)?;
            let opts = DensityOptions {
                trials: a.trials,
                seed: a.seed,
                ..DensityOptions::default()
            };
            let r = orbit_density(&p.mfield(), &p.map, &x, a.point.m, a.degree, &opts);
            lines.push(format!("points = {}", r.points));
            lines.push(format!("degree = {}", r.degree));
            lines.push(format!("monomials = {}", r.monomials));
            lines.push(format!("ranks = {:?}", r.ranks));
            lines.push(format!("field = {}^{}", r.field.0, r.field.1));
            lines.push(format!("outcome = {}", r.outcome));
            if let DensityOutcome::Found { poly, .. } = &r.outcome {
                lines.push(format!(
                    "relation = {}",
                    text::format_coordinate_poly(&p.field, poly)
                ));
            }
        }
        ToolCommand::LambdaDensity(a) => {
            let (_, p) = load_problem(&a.problem)?;
            let inst = p
                .lambdas
                .get(a.index)
                .ok_or_else(|| CliError::Invalid(format!("no [[lambda]] entry {}", a.index)))?;
            let rf = RatFunField::new(p.field.clone());
            let d =
                lambda_density(&rf, inst, a.max_m).map_err(|e| CliError::Invalid(e.to_string()))?;
            if a.csv {
                write!(out, "{}", d.to_csv()).map_err(io)?;
                return Ok(());
            }
            lines.push(format!("density = {}/{}", d.count(), d.max_m));
            let sol: Vec<String> = d.solvable().iter().map(|m| m.to_string()).collect();
            lines.push(format!("solvable = [{}]", sol.join(", ")));
        }
        ToolCommand::Fset(a) => {
            let (_, p) = load_problem(&a.problem)?;
            let desc = p
                .fsets
                .get(a.index)
                .ok_or_else(|| CliError::Invalid(format!("no [[fset]] entry {}", a.index)))?;
            let opts = EnumerateOptions {
                zero_inclusive: a.zero_inclusive,
                cap: a.cap,
            };
            let pts = fset_enumerate(&p.mfield(), desc, a.bound, a.module_bound, &opts)
                .map_err(|e| CliError::Unknown(format!("fset: {e}")))?;
            lines.push(format!("count = {}", pts.len()));
            for pt in &pts {
                lines.push(format!("point = {}", join_point(&p, pt)));
            }
        }
        ToolCommand::Independence(a) => {
            let (_, p) = load_problem(&a.problem)?;
            let mf = p.mfield();
            let mut gammas = parse_points(&p, &a.gammas, "gamma")?;
            let deltas = parse_points(&p, &a.deltas, "delta")?;
            gammas.extend(construct_independent_points(&mf, a.construct, &deltas));
            let res = check_independence(&mf, &gammas, &deltas, a.degree, a.coefficient_degree);
            lines.push(format!("gammas = {}", join_point(&p, &gammas)));
            lines.push(format!("degree = {}", res.degree));
            lines.push(format!("independent = {}", res.independent));
            if let Some(rel) = &res.relation {
                let ops = |v: &[crate::ore::OrePoly]| -> String {
                    let items: Vec<String> =
                        v.iter().map(|x| text::format_ore(&p.field, x)).collect();
                    format!("[{}]", items.join(", "))
                };
                lines.push(format!("relation_p = {}", ops(&rel.p)));
                lines.push(format!("relation_q = {}", ops(&rel.q)));
            }
        }
    }
    for l in lines {
        writeln!(out, "{l}").map_err(io)?;
    }
    Ok(())
}

fn check_len(p: &Problem, x: &[MRatFun]) -> Result<(), CliError> {
    if x.len() == p.map.dim() {
        Ok(())
    } else {
        Err(CliError::Invalid(format!(
            "point has {} coordinates, map acts on {}",
            x.len(),
            p.map.dim()
        )))
    }
}
