//! The twenty commutator relations among the hexagon generators of a line,
//! parametrized by a square `i` in `F7^×`.

use crate::gf5::{Gf5Matrix, LinalgError};
use serde::Serialize;
use std::fmt;

/// A hexagon generator whose index is `coeff · i` in `F7^×`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    /// `Λ_{c·i}`
    Big(i64),
    /// `λ_{c·i}`
    Small(i64),
}

impl Gen {
    pub fn index(self, i: i64) -> i64 {
        match self {
            Gen::Big(c) | Gen::Small(c) => (c * i).rem_euclid(7),
        }
    }

    pub fn is_big(self) -> bool {
        matches!(self, Gen::Big(_))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, c) = match self {
            Gen::Big(c) => ("L", c),
            Gen::Small(c) => ("l", c),
        };
        match c {
            1 => write!(f, "{name}[i]"),
            -1 => write!(f, "{name}[-i]"),
            c => write!(f, "{name}[{c}i]"),
        }
    }
}

/// `[lhs.0, lhs.1] = rhs`, with `rhs` a product of generator powers (empty = identity).
#[derive(Clone, Copy, Debug)]
pub struct HexRelation {
    pub lhs: (Gen, Gen),
    pub rhs: &'static [(Gen, u32)],
}

impl HexRelation {
    pub fn name(&self) -> String {
        let rhs = if self.rhs.is_empty() {
            "1".to_string()
        } else {
            self.rhs.iter().map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") }).collect::<Vec<_>>().join(" ")
        };
        format!("[{},{}] = {}", self.lhs.0, self.lhs.1, rhs)
    }

    /// True iff every generator involved is a `Λ`.
    pub fn big_only(&self) -> bool {
        self.lhs.0.is_big() && self.lhs.1.is_big() && self.rhs.iter().all(|(g, _)| g.is_big())
    }
}

use Gen::{Big as L, Small as S};

pub const HEX_RELATIONS: [HexRelation; 20] = [
    HexRelation { lhs: (L(1), L(-4)), rhs: &[] },
    HexRelation { lhs: (L(1), L(2)), rhs: &[(L(-4), 4)] },
    HexRelation { lhs: (S(1), S(-4)), rhs: &[(L(2), 1)] },
    HexRelation { lhs: (S(1), S(2)), rhs: &[(L(2), 1), (S(-4), 3), (L(-1), 3)] },
    HexRelation { lhs: (L(1), S(1)), rhs: &[] },
    HexRelation { lhs: (L(1), S(-4)), rhs: &[(S(-2), 3), (L(-4), 1), (S(1), 2), (L(2), 4)] },
    HexRelation { lhs: (L(1), S(2)), rhs: &[(S(4), 2), (L(-2), 1), (S(-1), 2), (L(4), 1)] },
    HexRelation { lhs: (L(1), S(-1)), rhs: &[] },
    HexRelation { lhs: (L(1), S(4)), rhs: &[] },
    HexRelation { lhs: (L(1), S(-2)), rhs: &[] },
    HexRelation { lhs: (L(-1), L(4)), rhs: &[] },
    HexRelation { lhs: (L(-1), L(-2)), rhs: &[(L(4), 3)] },
    HexRelation { lhs: (S(-1), S(4)), rhs: &[(L(-2), 2)] },
    HexRelation { lhs: (S(-1), S(-2)), rhs: &[(L(-2), 2), (S(4), 3), (L(1), 4)] },
    HexRelation { lhs: (L(-1), S(-1)), rhs: &[] },
    HexRelation { lhs: (L(-1), S(4)), rhs: &[(S(2), 4), (L(4), 2), (S(-1), 1), (L(-2), 4)] },
    HexRelation { lhs: (L(-1), S(-2)), rhs: &[(S(-4), 1), (L(2), 2), (S(1), 1), (L(-4), 1)] },
    HexRelation { lhs: (L(-1), S(1)), rhs: &[] },
    HexRelation { lhs: (L(-1), S(-4)), rhs: &[] },
    HexRelation { lhs: (L(-1), S(2)), rhs: &[] },
];

/// The squares of `F7^×`.
pub const SQUARES: [i64; 3] = [1, 2, 4];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CommutatorConvention {
    /// `[a,b] = a⁻¹b⁻¹ab`
    InverseFirst,
    /// `[a,b] = aba⁻¹b⁻¹`
    InverseLast,
}

impl CommutatorConvention {
    pub fn apply(self, a: &Gf5Matrix, ai: &Gf5Matrix, b: &Gf5Matrix, bi: &Gf5Matrix) -> Gf5Matrix {
        match self {
            CommutatorConvention::InverseFirst => &(&(ai * bi) * a) * b,
            CommutatorConvention::InverseLast => &(&(a * b) * ai) * bi,
        }
    }
}

impl fmt::Display for CommutatorConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CommutatorConvention::InverseFirst => "a^-1 b^-1 a b",
            CommutatorConvention::InverseLast => "a b a^-1 b^-1",
        })
    }
}

/// Outcome of one relation at one value of `i`.
#[derive(Clone, Debug, Serialize)]
pub struct RelationOutcome {
    pub relation: String,
    pub i: i64,
    pub holds: bool,
}

/// Supplies `Λ_k`, `λ_k` (k in 1..=6) and their inverses for relation evaluation.
pub trait HexFamily {
    fn dim(&self) -> usize;
    fn get(&self, big: bool, k: usize) -> &Gf5Matrix;
    fn get_inv(&self, big: bool, k: usize) -> &Gf5Matrix;
}

fn fetch<'a>(fam: &'a dyn HexFamily, g: Gen, i: i64, inv: bool) -> &'a Gf5Matrix {
    let k = g.index(i) as usize;
    if inv {
        fam.get_inv(g.is_big(), k)
    } else {
        fam.get(g.is_big(), k)
    }
}

/// Evaluates one relation at index `i`.
pub fn relation_holds(
    fam: &dyn HexFamily,
    rel: &HexRelation,
    i: i64,
    conv: CommutatorConvention,
) -> Result<bool, LinalgError> {
    let (a, b) = rel.lhs;
    let lhs = conv.apply(fetch(fam, a, i, false), fetch(fam, a, i, true), fetch(fam, b, i, false), fetch(fam, b, i, true));
    let mut rhs = Gf5Matrix::identity(fam.dim());
    for &(g, e) in rel.rhs {
        rhs = rhs.try_mul(&fetch(fam, g, i, false).pow(e as u64))?;
    }
    Ok(lhs == rhs)
}

/// Evaluates the selected relations for all `i` in `SQUARES`.
pub fn evaluate(
    fam: &dyn HexFamily,
    conv: CommutatorConvention,
    filter: impl Fn(&HexRelation) -> bool,
) -> Result<Vec<RelationOutcome>, LinalgError> {
    let mut out = Vec::new();
    for &i in &SQUARES {
        for rel in HEX_RELATIONS.iter().filter(|r| filter(r)) {
            out.push(RelationOutcome { relation: rel.name(), i, holds: relation_holds(fam, rel, i, conv)? });
        }
    }
    Ok(out)
}
