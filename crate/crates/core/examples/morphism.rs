//! Equivariant morphisms between `SL2`-varieties.

use horofan::cli::parse_input;
use horofan::dictionary::morphism_check;
use horofan::horo::coloured_lattice_map;

fn main() {
    let load = |text: &str| parse_input(text).unwrap().load().unwrap();
    let (flag_d, flag) = load(include_str!("../data/sl2_flag.json"));
    for (name, text) in [
        ("A^2", include_str!("../data/sl2_plane.json")),
        ("blow-up of A^2", include_str!("../data/sl2_blowup.json")),
        ("P^2", include_str!("../data/sl2_projective_plane.json")),
    ] {
        let (d, fan) = load(text);
        let map = coloured_lattice_map(&d, &flag_d).unwrap();
        let r = morphism_check(&map, &fan, &flag).unwrap();
        println!(
            "{name} -> P^1: extends {}, proper {}",
            r.compatible, r.proper
        );
    }
}
