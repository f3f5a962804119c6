//! The Sylow 5-subgroup spanned by hexagon generators and the smallest
//! subspaces containing its fixed vector that are invariant under various groups.

use lyons::apartment::base_line;
use lyons::blocks::format_rows;
use lyons::generators::GeneratorBundle;
use lyons::gf5::{Gf5Matrix, Subspace};
use std::time::Instant;

fn show(name: &str, s: &Subspace) {
    println!("{name} (dim {})", s.dim());
    for r in format_rows(s.basis()) {
        println!("  {r}");
    }
}

fn main() {
    let b = GeneratorBundle::build().expect("construction");
    let t0 = Instant::now();
    let s = b.sylow5().expect("Sylow subgroup");
    println!("S = <{}>, |S| = {} ({:?}, {} subsets examined)", s.labels.join(","), s.group.order(), t0.elapsed(), s.examined);
    show("fix S", &s.fixed);
    let hex = b.hex(&base_line());
    show("closure under the hexagon generators", &s.fixed.span_closure(&hex.all()).unwrap());
    let gens: Vec<&Gf5Matrix> = s.generators.iter().collect();
    show("closure under S", &s.fixed.span_closure(&gens).unwrap());
    println!("isotropic: {}", s.fixed.span_closure(&hex.all()).unwrap().is_isotropic(&b.f).unwrap());
}
