//! Which m solve lambda^m = c_0 + c_1 t^n over F_q(t).
//!
//! Run with: cargo run --example lambda_density

use frobdyn::algebra::fq::{FieldSpec, Fq};
use frobdyn::algebra::ratfun::RatFunField;
use frobdyn::algebra::ring::Ring;
use frobdyn::fsets::{lambda_density, LambdaEqInstance};

fn main() {
    let f = FieldSpec::prime(2).unwrap();
    let rf = RatFunField::new(f);
    let t = rf.s();
    let cases = [
        (
            "(t + 1)^m = 1 + t^n",
            rf.add(&t, &rf.one()),
            vec![Fq::ONE, Fq::ONE],
        ),
        ("t^m = t^n", t.clone(), vec![Fq::ZERO, Fq::ONE]),
        (
            "(t^2 + t + 1)^m = 1 + t^n1 + t^n2",
            rf.add(&rf.mul(&t, &t), &rf.add(&t, &rf.one())),
            vec![Fq::ONE; 3],
        ),
    ];
    for (name, lambda, c) in cases {
        let d = lambda_density(&rf, &LambdaEqInstance { lambda, c }, 256).unwrap();
        let cuts: Vec<String> = [16, 64, 256]
            .iter()
            .map(|&m| format!("{}/{m}", d.count_up_to(m)))
            .collect();
        println!("{name}: {}", cuts.join(", "));
        println!(
            "  first solvable m: {:?}",
            &d.solvable()[..d.count().min(8)]
        );
    }
}
