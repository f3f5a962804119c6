//! Builds the generators, reports the calibration of the nilpotent
//! generator, and writes every matrix to a directory.
//!
//! Usage: `cargo run --example build_generators -- OUT_DIR`

use lyons::generators::GeneratorBundle;

fn main() {
    let b = GeneratorBundle::build().expect("construction");
    let c = &b.calibration;
    println!("{} candidate completions, {} distinct matrices", c.candidates, c.distinct_candidates);
    for fill in &c.chosen {
        println!(
            "chosen: block {:?} row {} gets {} inserted at column {}",
            fill.block, fill.row, fill.value, fill.position
        );
    }
    let survivors = c.outcomes.iter().filter(|o| o.rejected_by.is_none()).count();
    println!("survivors: {survivors}");
    println!("xi = exp(eta) has order {}", b.xi.element_order(10).unwrap());

    if let Some(dir) = std::env::args().nth(1) {
        let files = lyons::cli::build(&b, std::path::Path::new(&dir)).expect("write");
        println!("wrote {} files to {dir}", files.len());
    }
}
