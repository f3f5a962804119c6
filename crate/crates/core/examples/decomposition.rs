//! Unit-vector subspaces invariant under N, and the eigenspaces of the torus involutions.

use lyons::generators::GeneratorBundle;
use lyons::gf5::{Gf5Matrix, Subspace};
use lyons::verifier::closure_enumerate;

fn main() {
    let b = GeneratorBundle::build().expect("construction");
    let gens = b.n_generators();
    let j7: Vec<usize> = (0..12).map(|k| 27 + 7 * k).collect();
    let sets: Vec<(&str, Vec<usize>)> = vec![
        ("U1", vec![0]),
        ("U7", j7.clone()),
        ("U9", j7.iter().flat_map(|&x| [x + 3, x + 4]).collect()),
    ];
    for (name, idx) in sets {
        let u = Subspace::unit_span(111, &idx);
        let inv = gens.iter().all(|g| u.is_invariant(g).unwrap());
        println!("{name}: dim {}, N-invariant {inv}", u.dim());
    }
    let t = closure_enumerate(&[&b.torus_words()[0], &b.torus_words()[1]], 64).unwrap();
    let one = Gf5Matrix::identity(111);
    for z in t.elements().filter(|z| !z.is_identity() && &(z * z) == &one) {
        let plus = Subspace::fixed_space(&[&z]).unwrap();
        let minus = Subspace::fixed_space(&[&-&z]).unwrap();
        println!("involution: dim V+ = {}, dim V- = {}", plus.dim(), minus.dim());
    }
    println!("dim fix(gamma) = {}", Subspace::fixed_space(&[&b.gamma]).unwrap().dim());
}
