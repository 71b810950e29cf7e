//! Orbit closures are horospherical varieties for smaller homogeneous spaces.

use horofan::cli::parse_input;
use horofan::dictionary::{orbit_closure, orbit_table};

fn main() {
    let (d, fan) = parse_input(include_str!("../data/orbits.json"))
        .unwrap()
        .load()
        .unwrap();
    for o in orbit_table(&fan, &d).unwrap() {
        let (sub, sub_d) = orbit_closure(&fan, o.cone_index, &d).unwrap();
        let cones: Vec<String> = sub
            .cones()
            .iter()
            .map(|c| sub.lattice().describe(c))
            .collect();
        println!(
            "closure of O{}: G/H{sub_d}, {} cones: {}",
            fan.lattice().describe(&fan.cones()[o.cone_index]),
            sub.len(),
            cones.join(" ")
        );
    }
}
