//! Matrices and subspaces over GF(5), and the text format.

use lyons::gf5::{format_matrix, parse_matrix, Gf5Matrix, Subspace};

fn main() {
    let a = Gf5Matrix::from_rows(&[[1, 2, 0], [0, 1, 3], [4, 0, 2]]);
    let inv = a.inverse().expect("invertible");
    println!("det(a) = {}", a.det().unwrap());
    println!("a * a^-1 is identity: {}", (&a * &inv).is_identity());
    println!("order of a: {}", a.element_order(1000).unwrap());

    let n = Gf5Matrix::from_rows(&[[0, 1, 0], [0, 0, 1], [0, 0, 0]]);
    let u = n.exp5().unwrap();
    println!("exp of a nilpotent:\n{}", format_matrix(&u));
    println!("log recovers it: {}", u.log5().unwrap() == n);

    let s = Subspace::row_space(&Gf5Matrix::from_rows(&[[1, 2, 3], [2, 4, 1]]));
    println!("row space basis (rref):\n{}", format_matrix(s.basis()));
    let fixed = Subspace::fixed_space(&[&a]).unwrap();
    println!("fixed space of a has dimension {}", fixed.dim());

    let text = format_matrix(&a);
    assert_eq!(parse_matrix(&text).unwrap(), a);
    match parse_matrix("2 2\n15\n00\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("bad digit rejected: {e}"),
    }
}
