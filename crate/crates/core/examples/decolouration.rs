//! Decolouration and the open toroidal subvariety.

use horofan::cli::parse_input;
use horofan::dictionary::{decolouration, morphism_check, open_toroidal_subfan};
use horofan::horo::ColouredLatticeMap;

fn main() {
    let (_, fan) = parse_input(include_str!("../data/class_group.json"))
        .unwrap()
        .load()
        .unwrap();
    let lat = fan.lattice();
    let dec = decolouration(&fan);
    println!("decoloured fan:");
    for c in dec.cones() {
        println!("  {}", lat.describe(c));
    }
    let r = morphism_check(&ColouredLatticeMap::identity(lat), &dec, &fan).unwrap();
    println!(
        "decolouration morphism: compatible {}, proper {}",
        r.compatible, r.proper
    );
    println!("open toroidal subvariety:");
    for c in open_toroidal_subfan(&fan).cones() {
        println!("  {}", lat.describe(c));
    }
}
