//! Smith and Hermite normal forms, kernels and cokernels.

use horofan::intlin::{
    cokernel, hermite_normal_form, integer_kernel, smith_normal_form, IntMatrix,
};

fn show(name: &str, m: &IntMatrix) {
    println!("{name}:");
    for r in m.row_vecs() {
        println!(
            "  {:?}",
            r.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        );
    }
}

fn main() {
    let a = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let s = smith_normal_form(&a);
    show("A", &a);
    show("D = U A V", &s.d);
    println!(
        "invariant factors: {:?}",
        s.invariant_factors()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
    );
    println!("coker A = {}", cokernel(&a));

    let b = IntMatrix::from_i64(&[&[2, 4], &[1, 3]]);
    show("HNF of [[2,4],[1,3]]", &hermite_normal_form(&b).h);

    let c = IntMatrix::from_i64(&[&[1, 1, 1], &[1, -1, 0]]);
    println!("kernel of [[1,1,1],[1,-1,0]]: {:?}", integer_kernel(&c));
}
