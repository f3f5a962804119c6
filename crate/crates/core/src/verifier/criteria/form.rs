use super::super::report::CheckResult;
use super::super::Context;
use crate::gf5::Gf5Matrix;
use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

/// Seed and shape of the random root words.
pub const WORD_SEED: u64 = 2024;
pub const WORD_COUNT: usize = 100;
pub const WORD_LENGTH: usize = 8;

fn preserves(x: &Gf5Matrix, f: &Gf5Matrix) -> bool {
    &(x * f) * &x.transpose() == *f
}

pub fn form(ctx: &Context) -> Vec<CheckResult> {
    let b = &ctx.bundle;
    let f = &b.f;
    let mut out: Vec<CheckResult> = [("alpha", &b.alpha), ("beta", &b.beta), ("gamma", &b.gamma), ("xi", &b.xi)]
        .into_iter()
        .map(|(name, x)| CheckResult::new(format!("form.invariant.{name}"), preserves(x, f), json!(null)))
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(WORD_SEED);
    let mut failing = Vec::new();
    for w in 0..WORD_COUNT {
        let mut x = Gf5Matrix::identity(f.rows());
        for _ in 0..WORD_LENGTH {
            let (_, r) = b.roots.iter().choose(&mut rng).expect("36 roots");
            x = &x * &r.pow(rng.gen_range(1..5));
        }
        if !preserves(&x, f) {
            failing.push(w);
        }
    }
    out.push(CheckResult::new(
        "form.invariant.random_root_words",
        failing.is_empty(),
        json!({ "seed": WORD_SEED, "words": WORD_COUNT, "length": WORD_LENGTH, "failing": failing }),
    ));
    let det = f.det().ok().map(|d| d.value());
    out.push(CheckResult::new("form.det_4", det == Some(4), json!({ "det": det })));
    out.push(CheckResult::new("form.symmetric", f.is_symmetric(), json!(null)));
    out
}
