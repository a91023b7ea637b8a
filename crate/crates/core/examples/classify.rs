//! The trichotomy on a few maps of G_a^N, with certificate checks.
//!
//! Run with: cargo run --example classify

use frobdyn::algebra::fq::FieldSpec;
use frobdyn::classify::{classify, verify_certificate, AdditiveMap, Certificate, ClassifyOptions};
use frobdyn::ore::OreRing;
use frobdyn::text;

fn main() {
    let cases = [
        (2, "[[1]]"),
        (2, "[[1, 0], [0, F]]"),
        (3, "[[F, 0], [0, F]]"),
        (2, "[[F, 0, 0], [0, F, 0], [0, 0, F]]"),
        (2, "[[F + 1]]"),
    ];
    for (p, entries) in cases {
        let f = FieldSpec::prime(p).unwrap();
        let ore = OreRing::new(f.clone());
        let m = text::parse_matrix(entries, |e| text::parse_ore(&ore, e)).unwrap();
        let a = AdditiveMap::new(f.clone(), m).unwrap();
        let mut opts = ClassifyOptions::new(1);
        opts.density_m = 16;
        let v = classify(&a, &opts).expect("classification succeeds");
        let detail = match &v.certificate {
            Certificate::B(b) => format!("v A^{} = v", b.n),
            Certificate::C(c) => format!("T A^{} = F^{} T with {} rows", c.m, c.r, c.t.rows()),
            Certificate::A(w) => format!("orbit {}", w.report.outcome),
        };
        let check = match &v.certificate {
            Certificate::A(_) => "density".to_string(),
            c => format!("verified {}", verify_certificate(&a, c).ok),
        };
        println!("F_{p} {entries}: verdict {} ({detail}; {check})", v.kind);
    }
}
