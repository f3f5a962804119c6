//! The apartment, the Weyl group acting on it, and the configuration of a line.
//!
//! Usage: `cargo run --example apartment -- "(1a,2b)"`

use lyons::apartment::{Apartment, Configuration, OrientedLine, WeylElem};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "(1a,2b)".into());
    let line: OrientedLine = match arg.parse() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let ap = Apartment::build();
    println!("{} points, {} lines, {} planes, {} flags", ap.points.len(), ap.lines.len(), ap.planes.len(), ap.flags.len());
    println!("Weyl group order {}", WeylElem::all().len());

    let c = Configuration::of(&line);
    let show = |ls: &[OrientedLine]| ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
    println!("line    {line}");
    println!("star    {}", show(&c.star));
    println!("hexagon {}", show(&c.hexagon));
    let q = c.quartet();
    println!("quartet {}", show(&[q.l1, q.m1, q.l6, q.m6]));

    let w = WeylElem::parse_cycles("(1,2)(a,b,c)").unwrap();
    println!("{w} maps {line} to {}", w.act_line(&line));
    println!("planes through {line}: {}", ap.planes_through(&line).len());
    let fig = serde_json::to_string(&ap.figure()).unwrap();
    println!("figure JSON: {} bytes, starts {}", fig.len(), &fig[..40]);
}
