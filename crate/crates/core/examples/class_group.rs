//! The class group of a complete `SL3/U3`-variety.

use horofan::cli::parse_input;
use horofan::divisors::{class_group, prime_divisors};

fn main() {
    let doc = parse_input(include_str!("../data/class_group.json")).unwrap();
    let (_, fan) = doc.load().unwrap();
    let lat = fan.lattice();
    let primes: Vec<String> = prime_divisors(&fan).iter().map(|p| p.label(lat)).collect();
    let cl = class_group(&fan);
    println!("prime divisors: {}", primes.join(", "));
    println!("Cl(X) = {}", cl.group);
    for r in &cl.relations {
        println!("  relation {} = 0", r.describe(lat));
    }
    let gens: Vec<String> = cl.generators.iter().map(|p| p.label(lat)).collect();
    println!("generated by {}", gens.join(", "));
    let k = doc.divisor("D_a2", &fan).unwrap();
    println!("[D_a2] = {:?}", cl.class_of(&k));
}
