//! Rational polyhedral cones: H- and V-descriptions, duals, faces, Hilbert bases.

use horofan::polyhedra::Cone;

fn main() {
    let sigma = Cone::from_i64(2, &[&[1, 0], &[1, 3]]);
    println!("sigma = {sigma}");
    println!("facet normals: {:?}", sigma.facet_normals());
    println!("dual = {}", sigma.dual());
    println!("faces:");
    for f in sigma.faces() {
        println!("  {f}");
    }
    println!("Hilbert basis: {:?}", sigma.hilbert_basis().unwrap());

    let tau = Cone::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, -1]]);
    println!("tau simplicial: {}, dim {}", tau.is_simplicial(), tau.dim());
    println!("triangulation: {:?}", tau.triangulate());

    let half = Cone::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
    println!(
        "half-plane lineality {:?}, strongly convex: {}",
        half.lineality(),
        half.is_strongly_convex()
    );
}
