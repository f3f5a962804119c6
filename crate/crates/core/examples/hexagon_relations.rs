//! The commutator relations among the twelve hexagon generators of a line.
//!
//! Usage: `cargo run --example hexagon_relations -- "(3a,1b)"`

use lyons::apartment::OrientedLine;
use lyons::generators::{relations, GeneratorBundle};
use lyons::verifier::commutator_convention_probe;

fn main() {
    let line: OrientedLine = std::env::args().nth(1).as_deref().unwrap_or("(1a,2b)").parse().expect("line");
    let b = GeneratorBundle::build().expect("construction");
    let probe = commutator_convention_probe(&b);
    println!(
        "a^-1 b^-1 a b: {}/{}   a b a^-1 b^-1: {}/{}",
        probe.inverse_first, probe.total, probe.inverse_last, probe.total
    );
    let conv = probe.frozen.expect("one convention satisfies every relation");
    let hex = b.hex(&line);
    for o in relations::evaluate(&hex, conv, |_| true).unwrap() {
        println!("{} {:28} i={}", if o.holds { "ok  " } else { "FAIL" }, o.relation, o.i);
    }
}
