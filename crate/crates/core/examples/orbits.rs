//! The orbit table of a complete `SL3/U3`-variety.

use horofan::dictionary::orbit_table;
use horofan::horo::{build_coloured_lattice, ColouredCone, ColouredFan, HorosphericalDatum};
use horofan::polyhedra::Cone;
use horofan::rootsys::RootDatum;

fn main() {
    let d = HorosphericalDatum::full(RootDatum::parse("A2", 0).unwrap());
    let cones = vec![
        ColouredCone::new(Cone::from_i64(2, &[&[1, 0], &[0, 1]]), [0]),
        ColouredCone::new(Cone::from_i64(2, &[&[0, 1], &[-1, -1]]), []),
        ColouredCone::new(Cone::from_i64(2, &[&[1, 0], &[-1, -1]]), [0]),
    ];
    let fan = ColouredFan::from_cones(build_coloured_lattice(&d), cones).unwrap();
    for o in orbit_table(&fan, &d).unwrap() {
        println!(
            "{:<28} dim {}  G/H{}  faces {:?}",
            fan.lattice().describe(&fan.cones()[o.cone_index]),
            o.dimension,
            o.datum,
            o.in_closure_of
        );
    }
}
