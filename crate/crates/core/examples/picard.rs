//! Picard groups and Cartier data.

use horofan::cli::parse_input;
use horofan::divisors::{cartier_data, picard_group};

fn main() {
    let doc = parse_input(include_str!("../data/class_group.json")).unwrap();
    let (_, fan) = doc.load().unwrap();
    let p = picard_group(&fan);
    println!("Pic(X) = {}, PLF/LF = {}", p.pic, p.plf_mod_lf);
    println!("exact sequence consistent: {}", p.sequence.ranks_agree);

    for name in ["D_minus_e1", "D_e1_plus_e2"] {
        let delta = doc.divisor(name, &fan).unwrap();
        match cartier_data(&delta, &fan) {
            Some(data) => {
                println!("{name} is Cartier:");
                for (i, m) in data.cones.iter().zip(&data.m) {
                    println!(
                        "  m on {} = {:?}",
                        fan.lattice().describe(&fan.cones()[*i]),
                        m
                    );
                }
            }
            None => println!("{name} is not Cartier"),
        }
    }
}
