//! Coloured lattices of horospherical homogeneous spaces `G/H_(I,M)`.

use std::collections::BTreeSet;

use horofan::horo::{build_coloured_lattice, HorosphericalDatum};
use horofan::intlin::IntMatrix;
use horofan::rootsys::RootDatum;

fn show(d: &HorosphericalDatum) {
    let lat = build_coloured_lattice(d);
    println!("G/H{d}: N = Z^{}", lat.rank());
    for c in lat.colours() {
        println!("  u_{} = {:?}", d.group().label(c.root), c.point);
    }
}

fn main() {
    for n in 2..=4 {
        show(&HorosphericalDatum::full(
            RootDatum::parse(&format!("A{}", n - 1), 0).unwrap(),
        ));
    }
    let sl2 = RootDatum::parse("A1", 0).unwrap();
    show(&HorosphericalDatum::new(sl2, BTreeSet::new(), IntMatrix::from_i64(&[&[2]])).unwrap());
    let sl3 = RootDatum::parse("A2", 0).unwrap();
    show(
        &HorosphericalDatum::new(sl3, BTreeSet::new(), IntMatrix::from_i64(&[&[1], &[1]])).unwrap(),
    );
    let sl5 = RootDatum::parse("A4", 0).unwrap();
    let m = IntMatrix::from_i64(&[&[1, 0], &[0, 0], &[0, 1], &[0, 0]]);
    show(&HorosphericalDatum::new(sl5, [1, 3].into(), m).unwrap());
}
