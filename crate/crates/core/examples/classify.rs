//! Geometric properties of a few `SL2/U2`-varieties.

use horofan::dictionary::classify_variety;
use horofan::horo::{build_coloured_lattice, ColouredCone, ColouredFan, HorosphericalDatum};
use horofan::polyhedra::Cone;
use horofan::rootsys::RootDatum;

fn main() {
    let d = HorosphericalDatum::full(RootDatum::parse("A1", 0).unwrap());
    let lat = build_coloured_lattice(&d);
    let plus =
        |colours: &[usize]| ColouredCone::new(Cone::from_i64(1, &[&[1]]), colours.iter().copied());
    let minus = ColouredCone::new(Cone::from_i64(1, &[&[-1]]), []);
    let fans = [
        ("A^2", vec![plus(&[0])]),
        ("blow-up of A^2", vec![plus(&[])]),
        ("P^2 minus a point", vec![minus.clone()]),
        ("P^2", vec![plus(&[0]), minus.clone()]),
        ("blow-up of P^2", vec![plus(&[]), minus]),
    ];
    for (name, cones) in fans {
        let fan = ColouredFan::from_cones(lat.clone(), cones).unwrap();
        let r = classify_variety(&fan, &d).unwrap();
        println!(
            "{name:<18} simple {:<5} affine {:<5} complete {:<5} projective {:<5} toroidal {:<5} smooth {}",
            r.is_simple, r.is_affine, r.is_complete, r.is_projective, r.is_toroidal, r.is_smooth
        );
    }
}
