//! The affine local structure of a simple variety.

use horofan::dictionary::affine_local_structure;
use horofan::horo::{ColouredCone, HorosphericalDatum};
use horofan::polyhedra::Cone;
use horofan::rootsys::RootDatum;

fn main() {
    let d = HorosphericalDatum::full(RootDatum::parse("A2", 0).unwrap());
    for colours in [vec![], vec![0], vec![0, 1]] {
        let sigma = ColouredCone::new(Cone::from_i64(2, &[&[1, 0], &[0, 1]]), colours.clone());
        let ls = affine_local_structure(&sigma, &d).unwrap();
        let levi = match ls.levi.group().descriptor() {
            s if s.is_empty() => "a torus".to_string(),
            s => s,
        };
        println!(
            "F = {colours:?}: Q = {:?}, Levi {levi} (roots {:?}), L/(L ∩ H){}",
            ls.q_index, ls.levi_roots, ls.levi
        );
    }
}
