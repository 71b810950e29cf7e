//! Basepoint-freeness and ampleness of `a·D(-1,0) + b·D_a2`.

use horofan::cli::parse_input;
use horofan::divisors::{positivity_check, BInvariantDivisor, PrimeDivisor};
use horofan::intlin::ivec;

fn main() {
    let doc = parse_input(include_str!("../data/class_group.json")).unwrap();
    let (_, fan) = doc.load().unwrap();
    println!("a\\b  -1   0   1   2");
    for a in -1..=2i64 {
        let mut row = format!("{a:>3} ");
        for b in -1..=2i64 {
            let delta = BInvariantDivisor::from_terms(
                &fan,
                &[
                    (PrimeDivisor::Ray(ivec(&[-1, 0])), a.into()),
                    (PrimeDivisor::Colour(1), b.into()),
                ],
            )
            .unwrap();
            let p = positivity_check(&delta, &fan).unwrap();
            let mark = if p.ample {
                "A"
            } else if p.basepoint_free {
                "B"
            } else {
                "."
            };
            row.push_str(&format!("{mark:>4}"));
        }
        println!("{row}");
    }
    println!("A = ample, B = basepoint free");
}
