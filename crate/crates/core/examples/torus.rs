//! The line torus: eigenvalue rows of t1..t6 and the 16 elements of T.

use lyons::apartment::{base_line, OrientedLine};
use lyons::blocks::classify;
use lyons::generators::GeneratorBundle;
use lyons::gf5::Gf5Matrix;
use lyons::verifier::closure_enumerate;

fn row(m: &Gf5Matrix) -> String {
    match classify(m).unwrap().scalars {
        Some(s) => s.iter().map(|x| x.to_string()).collect(),
        None => "not block scalar".into(),
    }
}

fn main() {
    let b = GeneratorBundle::build().expect("construction");
    let line: OrientedLine = std::env::args().nth(1).map(|s| s.parse().expect("line")).unwrap_or_else(base_line);
    let hex = b.hex(&line);
    let ts: Vec<Gf5Matrix> = (1..=6).map(|i| hex.torus(i)).collect();
    for (i, t) in ts.iter().enumerate() {
        println!("t{} at {line}: {}", i + 1, row(t));
    }
    let t = closure_enumerate(&ts.iter().collect::<Vec<_>>(), 64).unwrap();
    println!("|T| = {}", t.order());
    for m in t.elements() {
        println!("  {}", row(&m));
    }
    let rw = &b.r_big(&"(4a,1b)".parse().unwrap()).inverse().unwrap() * &b.r_big(&"(1a,4b)".parse().unwrap());
    println!("R(4a,1b)^-1 R(1a,4b) = {}", row(&rw));
}
