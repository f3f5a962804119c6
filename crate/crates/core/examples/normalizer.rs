//! Enumerates the torus normalizer N and its map onto the Weyl group.

use lyons::apartment::WeylElem;
use lyons::generators::GeneratorBundle;
use lyons::verifier::{Normalizer, N_CAP};
use std::collections::HashMap;
use std::time::Instant;

fn main() {
    let b = GeneratorBundle::build().expect("construction");
    let t0 = Instant::now();
    let n = Normalizer::enumerate(&b, N_CAP).expect("enumeration");
    println!("|N| = {} ({:?})", n.order(), t0.elapsed());
    for (k, w) in ["n1", "n2", "n3", "n4"].iter().zip(n.gens.iter().map(|g| n.group.index_of(g).unwrap())) {
        println!("pi({k}) = {}", n.pi[w]);
    }
    let mut fibers: HashMap<WeylElem, usize> = HashMap::new();
    for w in &n.pi {
        *fibers.entry(*w).or_default() += 1;
    }
    println!("{} Weyl images, fiber sizes {:?}", fibers.len(), fibers.values().collect::<std::collections::BTreeSet<_>>());
    println!("|ker pi| = {}", n.kernel().len());
}
