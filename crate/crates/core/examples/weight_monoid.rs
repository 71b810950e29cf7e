//! Generators of the weight monoid of an affine horospherical variety.

use horofan::dictionary::weight_monoid_generators;
use horofan::horo::ColouredCone;
use horofan::polyhedra::Cone;

fn main() {
    for gens in [
        &[&[1i64, 0][..], &[0, 1]][..],
        &[&[1, 0], &[1, 2]],
        &[&[2, -1], &[-1, 2]],
    ] {
        let sigma = ColouredCone::new(Cone::from_i64(2, gens), [0, 1]);
        let monoid = weight_monoid_generators(&sigma).unwrap();
        println!("{} -> {:?}", sigma.cone, monoid);
    }
}
