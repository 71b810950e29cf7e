//! Root data, parabolic subsets and flag variety dimensions.

use std::collections::BTreeSet;

use horofan::rootsys::RootDatum;

fn main() {
    for desc in ["A3", "B2", "G2", "A1xA2", "D4"] {
        let g = RootDatum::parse(desc, 0).unwrap();
        let none = BTreeSet::new();
        let b: Vec<i64> = (0..g.semisimple_rank())
            .map(|a| g.anticanonical_coefficient(&none, a))
            .collect();
        println!(
            "{desc}: {} positive roots, dim G/B = {}, b = {b:?}",
            g.positive_roots().len(),
            g.flag_dimension(&none)
        );
    }
    let g = RootDatum::parse("A4", 0).unwrap();
    let i: BTreeSet<usize> = [1, 3].into();
    println!(
        "SL5 with I = {{a2, a4}}: dim G/P_I = {}",
        g.flag_dimension(&i)
    );
    let (levi, roots) = g.levi(&i, 2);
    println!(
        "Levi: {} with torus rank {}, roots {roots:?}",
        levi.descriptor(),
        levi.torus_rank()
    );
}
