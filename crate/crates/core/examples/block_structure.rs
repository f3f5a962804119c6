//! The 16-section scheme and the block shape of the base matrices.

use lyons::blocks::{classify, format_sections, monomial_decompose, SectionScheme, SECTIONS};
use lyons::generators::build_base;

fn main() {
    for i in 1..=SECTIONS {
        println!("section {i:2}: coordinates {:3}..={:3}, minisections {:?}", SectionScheme::start(i), SectionScheme::end(i), SectionScheme::mini_cuts(i));
    }
    println!("{} minisections", SectionScheme::minisections().len());

    let base = build_base();
    for (name, m) in [("alpha", &base.alpha), ("beta", &base.beta), ("gamma", &base.gamma), ("f", &base.f)] {
        let p = classify(m).unwrap();
        println!(
            "{name:5}: monomial {} diagonal {} scalar {} support {}",
            p.is_monomial,
            p.is_diagonal,
            p.is_scalar,
            if p.support_cycles().is_empty() { "1".to_string() } else { p.support_cycles() }
        );
    }
    let (d, p) = monomial_decompose(&base.beta).unwrap();
    println!("beta = D * P with D block diagonal: {}", classify(&d).unwrap().is_diagonal);
    println!("P has support {}", classify(&p).unwrap().support_cycles());

    let mut v = vec![0u8; 111];
    v[SectionScheme::range(5).start] = 1;
    v[SectionScheme::range(5).start + 2] = 3;
    println!("a vector in section notation: {}", format_sections(&v));
}
