//! The 3x3 images of the star generators and the group they generate.

use lyons::generators::{relations, star_torus_table, CommutatorConvention, StarImages};
use lyons::gf5::format_matrix;
use lyons::verifier::closure_enumerate;
use std::time::Instant;

fn main() {
    let s = StarImages::printed();
    for (k, m) in s.big.iter().enumerate() {
        println!("L*{}:\n{}", k + 1, format_matrix(m));
    }
    let ok = relations::evaluate(&s, CommutatorConvention::InverseFirst, |r| r.big_only()).unwrap();
    println!("{}/{} star relations hold", ok.iter().filter(|o| o.holds).count(), ok.len());
    for i in 1..=6 {
        println!("t*{i} from the word equals the printed diagonal: {}", s.torus(i) == star_torus_table()[i as usize - 1]);
    }
    let t0 = Instant::now();
    let g = closure_enumerate(&s.big.iter().collect::<Vec<_>>(), 400_000).unwrap();
    println!("order {} ({:?})", g.order(), t0.elapsed());
}
