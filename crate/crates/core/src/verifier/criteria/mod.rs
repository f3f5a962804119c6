//! The checks behind each criterion.

mod character;
mod form;
mod relations;
mod subspaces;
mod torus;
mod weyl;

pub use character::character;
pub use form::form;
pub use relations::{base, calibration, commutator_convention_probe, hexagon, nilpotency, quartet, star, ConventionProbe};
pub use subspaces::{decomposition, subspaces};
pub use torus::torus;
pub use weyl::normalizer;

use super::report::CheckResult;
use crate::apartment::OrientedLine;
use crate::blocks::classify;
use crate::gf5::Gf5Matrix;

fn line(s: &str) -> OrientedLine {
    s.parse().expect("static line literal")
}

/// Per-section eigenvalues of a block scalar matrix, e.g. `1144132422123433`.
fn eigen_row(m: &Gf5Matrix) -> Option<String> {
    classify(m).ok()?.scalars.map(|s| s.iter().map(|x| x.to_string()).collect())
}

/// Block scalar matrix with the given per-section eigenvalues.
fn from_eigen_row(row: &str) -> Gf5Matrix {
    let mut m = Gf5Matrix::zeros(crate::blocks::DIM, crate::blocks::DIM);
    for (i, ch) in row.chars().enumerate() {
        for k in crate::blocks::SectionScheme::range(i + 1) {
            m.set(k, k, (ch as u8 - b'0') as i64);
        }
    }
    m
}

/// Turns a fallible block of checks into a single failing check on error.
fn guarded(name: &str, f: impl FnOnce() -> Result<Vec<CheckResult>, String>) -> Vec<CheckResult> {
    f().unwrap_or_else(|e| vec![CheckResult::error(name, e)])
}
