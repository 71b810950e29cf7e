//! Anticanonical divisors.

use std::collections::BTreeSet;

use horofan::cli::parse_input;
use horofan::divisors::{anticanonical, positivity_check};
use horofan::rootsys::RootDatum;

fn main() {
    let doc = parse_input(include_str!("../data/class_group.json")).unwrap();
    let (d, fan) = doc.load().unwrap();
    let k = anticanonical(&fan, &d).unwrap();
    let p = positivity_check(&k, &fan).unwrap();
    println!("-K_X = {}", k.describe(fan.lattice()));
    println!("Cartier {}, ample {}", p.cartier, p.ample);

    let g = RootDatum::parse("B3", 0).unwrap();
    for i in [BTreeSet::new(), BTreeSet::from([0]), BTreeSet::from([1, 2])] {
        let b: Vec<String> = (0..3)
            .filter(|a| !i.contains(a))
            .map(|a| format!("b_{} = {}", g.label(a), g.anticanonical_coefficient(&i, a)))
            .collect();
        println!("B3, I = {i:?}: {}", b.join(", "));
    }
}
