//! Acceptance suite: one line per criterion with its tolerance and timing.
//!
//! Run with: cargo test -p frobdyn --test acceptance

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use frobdyn::algebra::ext::ExtField;
use frobdyn::algebra::fq::{FieldSpec, Fq};
use frobdyn::algebra::linalg::{self, Matrix};
use frobdyn::algebra::mpoly::MRatFunField;
use frobdyn::algebra::poly;
use frobdyn::algebra::ratfun::{RatFun, RatFunField};
use frobdyn::algebra::ring::{Field, Ring};
use frobdyn::classify::certificate::verify_c;
use frobdyn::classify::{
    check_independence, classify, construct_independent_points, Certificate, ClassifyOptions,
};
use frobdyn::fsets::{lambda_density, vandermonde_check, LambdaEqInstance};
use frobdyn::ore::OreRing;
use frobdyn::skew::{
    central_multiplier, eval_center_poly, from_ore_matrix, min_poly_center, tilde, tilde_charpoly,
    SkewField,
};
use frobdyn::split::split_endomorphism;
use rand::seq::SliceRandom;
use rand::Rng;

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// 1. Ore ring axioms and evaluation, against the naive product and
/// evaluation formulas.
fn ore_ring() -> Outcome {
    let mut rng = rng(1);
    for case in 0..1000 {
        let f = random_field(&mut rng, &[2, 3, 5], 3);
        let ore = OreRing::new(f.clone());
        let (a, b, c) = (
            random_ore(&f, 6, &mut rng),
            random_ore(&f, 6, &mut rng),
            random_ore(&f, 6, &mut rng),
        );
        let ab = ore.mul(&a, &b);
        ensure(ab == naive_ore_mul(&f, &a, &b), || {
            format!("case {case}: product differs from oracle")
        })?;
        ensure(ore.mul(&ab, &c) == ore.mul(&a, &ore.mul(&b, &c)), || {
            format!("case {case}: associativity")
        })?;
        ensure(
            ore.mul(&a, &ore.add(&b, &c)) == ore.add(&ab, &ore.mul(&a, &c)),
            || format!("case {case}: left distributivity"),
        )?;
        ensure(
            ore.mul(&ore.add(&a, &b), &c) == ore.add(&ore.mul(&a, &c), &ore.mul(&b, &c)),
            || format!("case {case}: right distributivity"),
        )?;
        let ext = ExtField::new(f.clone(), 3);
        let x = ext.random(&mut rng);
        let lhs = ore.eval(&ext, &ab, &x);
        ensure(lhs == ore.eval(&ext, &a, &ore.eval(&ext, &b, &x)), || {
            format!("case {case}: eval(PQ) != P(Q(x))")
        })?;
        ensure(lhs == naive_eval(&ext, &ab, &x), || {
            format!("case {case}: eval differs from oracle")
        })?;
    }
    Ok("1000 cases".into())
}

fn random_square(
    f: &Arc<FieldSpec>,
    rng: &mut TestRng,
) -> (usize, Matrix<Vec<Fq>>, Matrix<Vec<Fq>>) {
    let n = rng.gen_range(1..=3);
    (
        n,
        random_ore_matrix(f, n, n, 2, rng),
        random_ore_matrix(f, n, n, 2, rng),
    )
}

/// 2. `tilde` is an injective ring homomorphism.
fn tilde_embedding() -> Outcome {
    let mut rng = rng(2);
    for case in 0..500 {
        let f = random_field(&mut rng, &[2, 3], 3);
        let k = SkewField::new(f.clone());
        let rf = k.ratfun();
        let (_, a, b) = random_square(&f, &mut rng);
        let (sa, sb) = (from_ore_matrix(&k, &a), from_ore_matrix(&k, &b));
        let (ta, tb) = (tilde(&k, &sa), tilde(&k, &sb));
        let prod = tilde(&k, &linalg::mul(&k, &sa, &sb));
        ensure(prod == linalg::mul(rf, &ta, &tb), || {
            format!("case {case}: tilde(AB) != tilde(A) tilde(B)")
        })?;
        let sum = tilde(&k, &linalg::add(&k, &sa, &sb));
        ensure(sum == linalg::add(rf, &ta, &tb), || {
            format!("case {case}: tilde(A+B) != tilde(A) + tilde(B)")
        })?;
        let a_zero = linalg::is_zero(&k, &sa);
        ensure(linalg::is_zero(rf, &ta) == a_zero, || {
            format!("case {case}: tilde(A) = 0 but A != 0")
        })?;
    }
    Ok("500 pairs".into())
}

/// 3. Central multiples and two-sided inverses in the skew field.
fn center_and_inverses() -> Outcome {
    let mut rng = rng(3);
    for case in 0..500 {
        let f = random_field(&mut rng, &[2, 3, 5], 3);
        let k = SkewField::new(f.clone());
        let ore = OreRing::new(f.clone());
        let p = random_nonzero_ore(&f, 5, &mut rng);
        let (q, c) = central_multiplier(&k, &p).map_err(|e| format!("case {case}: {e}"))?;
        let qp = ore.mul(&q, &p);
        ensure(!qp.is_empty(), || format!("case {case}: QP = 0"))?;
        ensure(ore.is_central(&qp), || {
            format!("case {case}: QP not in F_p[F^ell]")
        })?;
        ensure(qp == ore.from_center(&c), || {
            format!("case {case}: QP != c(F^ell)")
        })?;
    }
    for case in 0..200 {
        let f = random_field(&mut rng, &[2, 3, 5], 3);
        let k = SkewField::new(f.clone());
        let rf = k.ratfun();
        let parts: Vec<RatFun> = (0..k.ell())
            .map(|_| {
                let num = random_ore(&f, 2, &mut rng);
                let den = random_nonzero_ore(&f, 2, &mut rng);
                rf.make(num, den).unwrap()
            })
            .collect();
        let u = k.from_parts(parts);
        if k.is_zero(&u) {
            continue;
        }
        let ui = k
            .inv(&u)
            .ok_or_else(|| format!("inverse case {case}: no inverse"))?;
        ensure(
            k.is_one(&k.mul(&u, &ui)) && k.is_one(&k.mul(&ui, &u)),
            || format!("inverse case {case}: not two-sided"),
        )?;
    }
    Ok("500 central multiples, 200 inverses".into())
}

/// 4. Minimal central polynomials.
fn minimal_polynomials() -> Outcome {
    for (p, ell) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 2)] {
        let f = field(p, ell);
        let k = SkewField::new(f.clone());
        let c = k.center();
        let a = from_ore_matrix(&k, &Matrix::from_vec(1, 1, vec![k.ore().f_pow(1)]));
        let mut expect = vec![c.neg(&c.s())];
        expect.resize(ell as usize, c.zero());
        expect.push(c.one());
        let got = min_poly_center(&k, &a);
        ensure(got == expect, || {
            format!("[F] over F_{p}^{ell}: got a polynomial other than x^ell - s")
        })?;
    }
    let mut rng = rng(4);
    for case in 0..100 {
        let f = random_field(&mut rng, &[2, 3], 2);
        let k = SkewField::new(f.clone());
        let n = rng.gen_range(1..=2);
        let a = from_ore_matrix(&k, &random_ore_matrix(&f, n, n, 2, &mut rng));
        let q = min_poly_center(&k, &a);
        ensure(linalg::is_zero(&k, &eval_center_poly(&k, &q, &a)), || {
            format!("case {case}: Q(A) != 0")
        })?;
        let chi = tilde_charpoly(&k, &a);
        ensure(poly::rem(k.ratfun(), &chi, &q).is_empty(), || {
            format!("case {case}: Q does not divide the characteristic polynomial of tilde(A)")
        })?;
    }
    Ok("x^ell - s for 6 fields, 100 random matrices".into())
}

/// Block-diagonal fixtures mixing Frobenius-type and independent eigenvalues.
fn split_fixtures() -> Vec<(Arc<FieldSpec>, Vec<Vec<i64>>)> {
    vec![
        (field(2, 1), vec![vec![0, 1], vec![1, 1]]),
        (field(2, 1), vec![vec![0, 1], vec![0, 1], vec![1, 1]]),
        (field(2, 1), vec![vec![0, 0, 1], vec![1, 1]]),
        (field(3, 1), vec![vec![0, 1], vec![1, 1]]),
        (field(2, 2), vec![vec![0, 0, 1], vec![1, 0, 1]]),
        (field(2, 2), vec![vec![0, 1], vec![1, 1]]),
    ]
}

/// 5. Splitting of random conjugates of block-diagonal fixtures.
fn splitting() -> Outcome {
    let mut rng = rng(5);
    let fixtures = split_fixtures();
    for case in 0..50 {
        let (f, diag) = &fixtures[case % fixtures.len()];
        let d: Vec<Vec<Fq>> = diag
            .iter()
            .map(|c| poly::trimmed(&**f, c.iter().map(|&x| f.elem(&[x])).collect()))
            .collect();
        let dm = diag_map(f, d).entries().clone();
        let a = random_conjugate(f, &dm, 2, 1, &mut rng);
        let k = SkewField::new(f.clone());
        let s = split_endomorphism(&k, &a).map_err(|e| format!("case {case}: {e}"))?;
        let sa = from_ore_matrix(&k, &a);
        let an = linalg::pow(&k, &sa, s.n);
        let lhs = linalg::mul(&k, &linalg::mul(&k, &s.p, &an), &s.p_inv);
        ensure(lhs == linalg::block_diag(&k, &s.a0, &s.a1), || {
            format!("case {case}: P A^n P^-1 not block diagonal")
        })?;
        ensure(
            linalg::mul(&k, &s.p, &s.p_inv) == linalg::identity(&k, a.rows()),
            || format!("case {case}: P P^-1 != I"),
        )?;
        let c = k.center();
        let g = poly::gcd(c, &s.r0, &s.r1);
        ensure(g.len() == 1, || format!("case {case}: gcd(r0, r1) != 1"))?;
        let mut diag_a0 = Vec::new();
        for b in &s.blocks {
            for _ in 0..b.m {
                diag_a0.push(k.scalar(c.s_pow(b.n as usize)));
            }
        }
        ensure(s.a0 == linalg::diagonal(&k, &diag_a0), || {
            format!("case {case}: A0 is not diag(s^n_i I)")
        })?;
    }
    Ok("50 conjugates".into())
}

fn write(dir: &std::path::Path, name: &str, body: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut all = vec!["frobdyn"];
    all.extend_from_slice(args);
    let code = frobdyn::cli::run_with(all, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// 6. Trichotomy fixtures through the command line, re-verified from file.
fn trichotomy() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cases = [
        ("identity", "[field]\np = 2\n[map]\nn = 1\nentries = [[\"1\"]]\n[question]\nd = 1\n", "B"),
        (
            "diag",
            "[field]\np = 3\n[map]\nn = 2\nentries = [[\"F\", \"0\"], [\"0\", \"F\"]]\n[question]\nd = 1\n",
            "C",
        ),
        (
            "fplus1",
            "[field]\np = 2\n[map]\nn = 1\nentries = [[\"F + 1\"]]\n[question]\nd = 1\ndensity_m = 25\ndensity_d = 3\n",
            "A",
        ),
        ("frob", "[field]\np = 2\n[map]\nn = 1\nentries = [[\"F\"]]\n[question]\nd = 1\n", "A"),
    ];
    let mut seen = Vec::new();
    for (name, body, want) in cases {
        let prob = write(dir.path(), &format!("{name}.toml"), body);
        let cert = dir.path().join(format!("{name}.cert"));
        let (code, out, err) = run_cli(&[
            "classify",
            prob.to_str().unwrap(),
            "--out",
            cert.to_str().unwrap(),
        ]);
        ensure(code == 0, || format!("{name}: classify exit {code}: {err}"))?;
        ensure(out.contains(&format!("verdict = {want}")), || {
            format!("{name}: expected {want}, got {out}")
        })?;
        let (code, out, err) = run_cli(&["verify", cert.to_str().unwrap(), prob.to_str().unwrap()]);
        ensure(code == 0 && out.contains("result = ok"), || {
            format!("{name}: verify exit {code}: {err}")
        })?;
        if want == "C" {
            ensure(out.contains("T * A^1 = F^1 * T"), || {
                format!("{name}: unexpected identity {out}")
            })?;
        }
        if want == "A" && name == "fplus1" {
            let text = std::fs::read_to_string(&cert).unwrap();
            ensure(
                text.contains("dense-up-to-3") && text.contains("density_m = 25"),
                || format!("{name}: density report missing"),
            )?;
        }
        seen.push(format!("{name}={want}"));
    }
    Ok(seen.join(" "))
}

/// 7. Every emitted C certificate also certifies `(2m, 2r)`.
fn iterate_compatibility() -> Outcome {
    let mut rng = rng(7);
    let mut count = 0;
    let mut maps = vec![
        {
            let f = field(3, 1);
            let o = OreRing::new(f.clone());
            diag_map(&f, vec![o.f_pow(1), o.f_pow(1)])
        },
        {
            let f = field(2, 1);
            let o = OreRing::new(f.clone());
            diag_map(&f, vec![o.f_pow(2), o.f_pow(2), o.f_pow(1)])
        },
    ];
    let f = field(2, 1);
    let o = OreRing::new(f.clone());
    let base = diag_map(
        &f,
        vec![o.f_pow(1), o.f_pow(1), o.add(&o.f_pow(1), &o.one())],
    );
    for _ in 0..4 {
        let a = random_conjugate(&f, base.entries(), 2, 1, &mut rng);
        maps.push(frobdyn::classify::AdditiveMap::new(f.clone(), a).unwrap());
    }
    for (i, a) in maps.iter().enumerate() {
        let v = classify(a, &ClassifyOptions::new(1)).map_err(|e| format!("map {i}: {e}"))?;
        let Certificate::C(c) = &v.certificate else {
            return Err(format!("map {i}: expected verdict C, got {}", v.kind));
        };
        ensure(verify_c(a, c).ok, || format!("map {i}: certificate fails"))?;
        let c2 = c.iterate(2);
        ensure((c2.m, c2.r) == (2 * c.m, 2 * c.r), || {
            format!("map {i}: iterate changed T")
        })?;
        ensure(verify_c(a, &c2).ok, || {
            format!("map {i}: (2m, 2r) certificate fails")
        })?;
        count += 1;
    }
    Ok(format!("{count} certificates"))
}

/// 8. Density of `m` with `(t + 1)^m = 1 + t^n` over `F_2`, and the control `lambda = t`.
fn lambda_densities() -> Outcome {
    let f = field(2, 1);
    let rf = RatFunField::new(f.clone());
    let t = rf.s();
    let inst = LambdaEqInstance {
        lambda: rf.add(&t, &rf.one()),
        c: vec![Fq::ONE, Fq::ONE],
    };
    let d = lambda_density(&rf, &inst, 512).map_err(|e| e.to_string())?;
    let expect: Vec<u64> = (0..=9).map(|k| 1u64 << k).collect();
    ensure(d.solvable() == expect, || {
        format!("solvable set {:?}", d.solvable())
    })?;
    ensure(d.count() == 10, || format!("count {}", d.count()))?;
    let control = LambdaEqInstance {
        lambda: t,
        c: vec![Fq::ZERO, Fq::ONE],
    };
    let dc = lambda_density(&rf, &control, 512).map_err(|e| e.to_string())?;
    ensure(dc.count() == 512, || {
        format!("control count {}", dc.count())
    })?;
    Ok(format!(
        "{}/512 = {:.4}, control {:.1}",
        d.count(),
        d.density(),
        dc.density()
    ))
}

/// 9. Vandermonde matrices of distinct nonzero elements are invertible.
fn vandermonde() -> Outcome {
    let mut rng = rng(9);
    let mut done = 0;
    while done < 200 {
        let f = random_field(&mut rng, &[2, 3, 5, 7], 3);
        let r = rng.gen_range(1..=4usize);
        if (f.q() as usize) <= r {
            continue;
        }
        let mut all: Vec<Fq> = (1..f.q()).map(Fq::from_index).collect();
        all.shuffle(&mut rng);
        let lambdas = &all[..r];
        let start = rng.gen_range(0..5u64);
        let ok = vandermonde_check(&f, lambdas, start).map_err(|e| e.to_string())?;
        ensure(ok, || {
            format!("nontrivial kernel for {lambdas:?} over F_{}", f.q())
        })?;
        done += 1;
    }
    Ok("200 tuples".into())
}

/// 10. Constructed points are independent; a planted pair is caught.
fn independence() -> Outcome {
    for (p, ell) in [(2, 1), (2, 2), (3, 1)] {
        let f = field(p, ell);
        let mf = MRatFunField::new(f.clone(), 1);
        let t = mf.var(0);
        let deltas = vec![t.clone(), mf.add(&t, &mf.one())];
        let pts = construct_independent_points(&mf, 2, &deltas);
        let res = check_independence(&mf, &pts, &deltas, 4, 2);
        ensure(res.independent, || {
            format!("F_{p}^{ell}: constructed points are dependent")
        })?;
        let gamma = mf
            .inv(&mf.add(&mf.pow(&t, 2), &t))
            .unwrap_or_else(|| mf.one());
        let gp = mf.frobenius(&gamma, 1);
        let res = check_independence(&mf, &[gamma.clone(), gp.clone()], &[], 4, 2);
        let rel = res
            .relation
            .ok_or_else(|| format!("F_{p}^{ell}: planted pair not detected"))?;
        let ore = OreRing::new(f.clone());
        let total = mf.add(
            &ore.eval(&mf, &rel.p[0], &gamma),
            &ore.eval(&mf, &rel.p[1], &gp),
        );
        ensure(mf.is_zero(&total), || {
            format!("F_{p}^{ell}: reported relation does not vanish")
        })?;
    }
    Ok("3 fields, D = 4, coefficient degree 2".into())
}

fn main() {
    let criteria: Vec<(&str, &str, Duration, fn() -> Outcome)> = vec![
        (
            "1",
            "ore ring and evaluation (exact)",
            Duration::from_secs(10),
            ore_ring,
        ),
        (
            "2",
            "tilde embedding (exact)",
            Duration::from_secs(30),
            tilde_embedding,
        ),
        (
            "3",
            "central multiples and inverses (exact)",
            Duration::from_secs(120),
            center_and_inverses,
        ),
        (
            "4",
            "minimal central polynomials (exact)",
            Duration::from_secs(120),
            minimal_polynomials,
        ),
        (
            "5",
            "splitting of conjugates (exact)",
            Duration::from_secs(120),
            splitting,
        ),
        (
            "6",
            "trichotomy fixtures (exit codes 0, re-verified)",
            Duration::from_secs(120),
            trichotomy,
        ),
        (
            "7",
            "iterate compatibility (exact)",
            Duration::from_secs(120),
            iterate_compatibility,
        ),
        (
            "8",
            "lambda density (tolerance 0)",
            Duration::from_secs(60),
            lambda_densities,
        ),
        (
            "9",
            "vandermonde (exact)",
            Duration::from_secs(120),
            vandermonde,
        ),
        (
            "10",
            "independence (exact)",
            Duration::from_secs(120),
            independence,
        ),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let res = run();
        let el = start.elapsed();
        let (ok, detail) = match res {
            Ok(d) if el <= limit => (true, d),
            Ok(d) => (false, format!("{d}; too slow")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {id:>2}: {} {name}: {detail} [{:.2}s, limit {}s]",
            if ok { "PASS" } else { "FAIL" },
            el.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
