//! The quartet elements h1..h4 and the group they generate.

use lyons::apartment::base_line;
use lyons::generators::GeneratorBundle;
use lyons::verifier::closure_enumerate;

fn main() {
    let b = GeneratorBundle::build().expect("construction");
    let d = b.derived(&base_line());
    for (k, h) in d.h.iter().enumerate() {
        println!("h{} has order {}", k + 1, h.element_order(10).unwrap());
    }
    let z = (&d.h[0] * &d.h[1]).pow(2);
    let same = (0..4).all(|i| (0..4).all(|j| i == j || (&d.h[i] * &d.h[j]).pow(2) == z));
    println!("all (hi hj)^2 equal: {same}; the common value has order {}", z.element_order(10).unwrap());
    let g = closure_enumerate(&d.h.iter().collect::<Vec<_>>(), 1000).unwrap();
    println!("|<h1,h2,h3,h4>| = {}", g.order());
}
