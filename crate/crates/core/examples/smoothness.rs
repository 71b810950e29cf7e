//! Regularity and smoothness of coloured cones for `SL5/H`.

use horofan::cli::parse_input;
use horofan::dictionary::regularity_report;

fn main() {
    let docs = [
        include_str!("../data/sl5_cone1.json"),
        include_str!("../data/sl5_cone2.json"),
        include_str!("../data/sl5_cone3.json"),
    ];
    for text in docs {
        let (d, fan) = parse_input(text).unwrap().load().unwrap();
        let top = &regularity_report(&fan, &d).unwrap()[0];
        let why: Vec<String> = top
            .smoothness
            .violations
            .iter()
            .map(|v| v.describe(d.group()))
            .collect();
        println!(
            "{:<24} regular {:<5} smooth {:<5} {}",
            fan.lattice().describe(&fan.cones()[0]),
            top.regular,
            top.smooth,
            why.join("; ")
        );
    }
}
