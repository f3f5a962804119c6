//! The symmetric form preserved by the generators.

use lyons::apartment::OrientedLine;
use lyons::generators::GeneratorBundle;

fn main() {
    let b = GeneratorBundle::build().expect("construction");
    let f = &b.f;
    println!("f symmetric: {}, det f = {}", f.is_symmetric(), f.det().unwrap());
    for (name, x) in [("alpha", &b.alpha), ("beta", &b.beta), ("gamma", &b.gamma), ("xi", &b.xi)] {
        println!("{name:5} x f x^T = f: {}", &(x * f) * &x.transpose() == *f);
    }
    let mut w = b.xi.clone();
    for l in ["(3a,1b)", "(2c,4a)", "(1b,2c)"] {
        let l: OrientedLine = l.parse().unwrap();
        w = &w * b.root(&l);
    }
    println!("a root word preserves f: {}", &(&w * f) * &w.transpose() == *f);
}
