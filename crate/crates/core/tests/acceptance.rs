//! Runs acceptance criteria 1 to 12 against one shared context and prints one
//! line per criterion.
//!
//! A criterion passes when every one of its checks passes within its runtime
//! budget. Three criteria fail on reference data that the computation
//! contradicts; those checks are listed in `KNOWN_CONFLICTS` and stay FAIL.
//! The target exits nonzero on any other failure, on a blown budget, or when
//! a listed conflict stops reproducing.

use lyons::verifier::{Context, Criterion};
use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

const KNOWN_CONFLICTS: [&str; 17] = [
    "torus.table.t1",
    "torus.table.t2",
    "torus.conjugate.t1_alpha.row",
    "torus.conjugate.t1_alpha.word",
    "torus.conjugate.t2_alpha.row",
    "torus.conjugate.t2_alpha.word",
    "torus.conjugate.t1_beta.row",
    "torus.conjugate.t1_beta.word",
    "torus.conjugate.t2_beta.row",
    "torus.conjugate.t2_beta.word",
    "torus.conjugate.t1_gamma.row",
    "torus.conjugate.t2_gamma.row",
    "normalizer.r_word.t1",
    "normalizer.r_word.t2",
    "normalizer.r_word.t3",
    "subspaces.m_pk",
    "subspaces.m_fk",
];

fn budget(c: Criterion) -> Duration {
    let secs = match c {
        Criterion::Base | Criterion::Nilpotency => 1,
        Criterion::Calibration => 30,
        Criterion::Hexagon | Criterion::Star => 60,
        Criterion::Quartet | Criterion::Form => 10,
        Criterion::Torus | Criterion::Decomposition => 120,
        Criterion::Normalizer | Criterion::Character => 300,
        Criterion::Subspaces => 600,
    };
    Duration::from_secs(secs)
}

fn main() -> ExitCode {
    let t0 = Instant::now();
    let ctx = match Context::new() {
        Ok(c) => c.with_all_lines(true),
        Err(e) => {
            println!("construction failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let construction = t0.elapsed();

    let known: BTreeSet<&'static str> = KNOWN_CONFLICTS.into_iter().collect();
    let mut seen_conflicts: BTreeSet<&'static str> = BTreeSet::new();
    let mut unexpected = Vec::new();
    let mut passed = 0;
    println!();
    for c in Criterion::ALL {
        let t = Instant::now();
        let checks = c.run(&ctx);
        let mut elapsed = t.elapsed();
        if c == Criterion::Calibration {
            elapsed += construction;
        }
        let failing: Vec<&str> = checks.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect();
        let in_budget = elapsed <= budget(c);
        let ok = failing.is_empty() && in_budget && !checks.is_empty();
        passed += ok as usize;
        println!(
            "criterion {:2} {}: {} ({} checks, {} failed, {} ms{})",
            c.number(),
            c.name(),
            if ok { "PASS" } else { "FAIL" },
            checks.len(),
            failing.len(),
            elapsed.as_millis(),
            if in_budget { String::new() } else { format!(", over the {} s budget", budget(c).as_secs()) },
        );
        for name in &failing {
            let tag = if known.contains(*name) { "conflicts with reference data" } else { "unexpected" };
            println!("    FAIL {name} [{tag}]");
            if let Some(k) = known.get(*name) {
                seen_conflicts.insert(*k);
            } else {
                unexpected.push(name.to_string());
            }
        }
        if !in_budget {
            unexpected.push(format!("{} runtime", c.name()));
        }
        if checks.is_empty() {
            unexpected.push(format!("{} ran no checks", c.name()));
        }
    }
    let vanished: Vec<&&str> = known.iter().filter(|n| !seen_conflicts.contains(*n)).collect();
    println!(
        "\n{passed} of 12 criteria pass; {} checks fail on reference-data conflicts; {} unexpected failures",
        seen_conflicts.len(),
        unexpected.len()
    );
    for v in &vanished {
        println!("    listed conflict {v} no longer fails; update KNOWN_CONFLICTS");
    }
    if unexpected.is_empty() && vanished.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
