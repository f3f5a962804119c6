//! Runs one check suite and prints the JSON report.
//!
//! Usage: `cargo run --release --example verify_suite -- form`

use lyons::verifier::{Context, Suite};

fn main() {
    let suite: Suite = match std::env::args().nth(1).as_deref().unwrap_or("form").parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let ctx = Context::new().expect("construction");
    let report = suite.run(&ctx);
    println!("{}", report.to_json());
    std::process::exit(if report.passed() { 0 } else { 1 });
}
