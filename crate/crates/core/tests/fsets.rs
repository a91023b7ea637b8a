mod common;

use frobdyn::algebra::fq::Fq;
use frobdyn::algebra::mpoly::MRatFunField;
use frobdyn::algebra::ratfun::RatFunField;
use frobdyn::algebra::ring::{Field, Ring};
use frobdyn::classify::density::monomials;
use frobdyn::fsets::{
    brute_force_intersection, fset_enumerate, lambda_density, module_contains, solve_lambda_eq,
    vandermonde_check, EnumerateOptions, Equation, FSetDescriptor, FpFModule, LambdaEqInstance,
};
use frobdyn::ore::OreRing;
use proptest::prelude::*;

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn module_elements_are_found(c0 in 0u32..2, c1 in 0u32..2, d0 in 0u32..2, d1 in 0u32..2) {
        let f = field(2, 1);
        let mf = MRatFunField::new(f.clone(), 1);
        let t = mf.var(0);
        let g2 = mf.inv(&mf.add(&t, &mf.one())).unwrap();
        let module = FpFModule { generators: vec![vec![t.clone()], vec![g2.clone()]] };
        let ore = OreRing::new(f.clone());
        let op = |a: u32, b: u32| frobdyn::algebra::poly::trimmed(&*f, vec![Fq::from_index(a), Fq::from_index(b)]);
        let x = mf.add(&ore.eval(&mf, &op(c0, c1), &t), &ore.eval(&mf, &op(d0, d1), &g2));
        let rep = module_contains(&mf, &module, &[x.clone()], 1).unwrap();
        let back = mf.add(&ore.eval(&mf, &rep[0], &t), &ore.eval(&mf, &rep[1], &g2));
        prop_assert!(mf.equal(&back, &x));
    }

    #[test]
    fn lambda_solutions_satisfy_the_equation(m in 1u64..40) {
        let f = field(2, 1);
        let rf = RatFunField::new(f.clone());
        let t = rf.s();
        let inst = LambdaEqInstance { lambda: rf.add(&t, &rf.one()), c: vec![Fq::ONE, Fq::ONE] };
        for sol in solve_lambda_eq(&rf, &inst, m).unwrap() {
            let rhs = rf.add(&rf.one(), &rf.s_pow(sol[0] as usize));
            prop_assert_eq!(rf.pow(&inst.lambda, m), rhs);
        }
        prop_assert_eq!(solve_lambda_eq(&rf, &inst, m).unwrap().is_empty(), !m.is_power_of_two());
    }
}

#[test]
fn enumerate_with_module_and_period() {
    let f = field(2, 1);
    let mf = MRatFunField::new(f.clone(), 1);
    let t = mf.var(0);
    let desc = FSetDescriptor {
        gamma0: vec![mf.one()],
        gammas: vec![vec![t.clone()]],
        ks: vec![2],
        h: FpFModule {
            generators: vec![vec![mf.one()]],
        },
        divisor: None,
    };
    let pts = fset_enumerate(&mf, &desc, 2, 0, &EnumerateOptions::default()).unwrap();
    // 1 + t^(4^n) + {0, 1}
    assert_eq!(pts.len(), 4);
    assert!(pts.iter().any(|p| mf.equal(&p[0], &mf.pow(&t, 16))));
    let zero = EnumerateOptions {
        zero_inclusive: true,
        ..EnumerateOptions::default()
    };
    assert_eq!(fset_enumerate(&mf, &desc, 2, 0, &zero).unwrap().len(), 6);
    let tiny = EnumerateOptions {
        cap: 1,
        ..EnumerateOptions::default()
    };
    assert!(fset_enumerate(&mf, &desc, 2, 0, &tiny).is_err());
}

#[test]
fn intersection_with_a_line() {
    let f = field(2, 1);
    let mf = MRatFunField::new(f.clone(), 1);
    let t = mf.var(0);
    let module = FpFModule {
        generators: vec![vec![t.clone(), mf.one()]],
    };
    let mons = monomials(2, 1);
    let y = mons
        .iter()
        .find(|m| m.as_slice() == [0, 1])
        .unwrap()
        .clone();
    let line = Equation {
        terms: vec![(mf.one(), y)],
    };
    let rep = brute_force_intersection(&mf, &[line], &module, 2, 1 << 10).unwrap();
    // P(F)(1) = P(1) vanishes for P in {0, 1 + F, 1 + F^2, F + F^2}
    assert_eq!(rep.solutions.len(), 4);
    assert_eq!(rep.patterns.values().sum::<usize>(), 4);
}

#[test]
fn lambda_density_csv() {
    let f = field(2, 1);
    let rf = RatFunField::new(f.clone());
    let inst = LambdaEqInstance {
        lambda: rf.add(&rf.s(), &rf.one()),
        c: vec![Fq::ONE, Fq::ONE],
    };
    let d = lambda_density(&rf, &inst, 8).unwrap();
    assert_eq!(d.solvable(), vec![1, 2, 4, 8]);
    assert_eq!(d.count_up_to(3), 2);
    let csv = d.to_csv();
    assert!(csv.starts_with("m,solvable,tuple\n1,1,1\n2,1,2\n3,0,\n"));
}

#[test]
fn vandermonde_over_extension() {
    let f = field(2, 3);
    let all: Vec<Fq> = (1..8).map(Fq::from_index).collect();
    assert!(vandermonde_check(&f, &all, 0).unwrap());
    assert!(vandermonde_check(&f, &[Fq::ZERO], 0).is_err());
}

#[test]
fn frobenius_curve_contains_the_whole_cyclic_module() {
    for p in [2u32, 3] {
        let f = field(p, 1);
        let mf = MRatFunField::new(f.clone(), 1);
        let t = mf.var(0);
        let module = FpFModule {
            generators: vec![vec![t.clone(), mf.frobenius(&t, 1)]],
        };
        let curve = Equation {
            terms: vec![
                (mf.one(), vec![0, 1]),
                (mf.neg(&mf.one()), vec![p as u64, 0]),
            ],
        };
        let bound = 2;
        let rep = brute_force_intersection(&mf, &[curve], &module, bound, 1 << 12).unwrap();
        assert_eq!(rep.solutions.len() as u64, (p as u64).pow(bound as u32 + 1));
    }
}
