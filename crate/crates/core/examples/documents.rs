//! Building a JSON document from a fan and running a command on it.

use horofan::cli::{execute, parse_input, Command, InputDocument, Options};
use horofan::horo::{build_coloured_lattice, ColouredCone, ColouredFan, HorosphericalDatum};
use horofan::polyhedra::Cone;
use horofan::rootsys::RootDatum;

fn main() {
    let d = HorosphericalDatum::full(RootDatum::parse("A1", 1).unwrap());
    let sigma = ColouredCone::new(Cone::from_i64(2, &[&[1, 0], &[0, 1]]), [0]);
    let fan = ColouredFan::from_cones(build_coloured_lattice(&d), vec![sigma]).unwrap();
    let doc = InputDocument::from_fan(&d, &fan);
    let text = doc.to_json_string();
    println!("{text}");
    let report = execute(
        Command::Classify,
        &parse_input(&text).unwrap(),
        &Options::default(),
    );
    print!("{}", report.render());
}
