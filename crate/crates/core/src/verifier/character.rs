//! Conjugacy classes of an enumerated group and the exact Brauer character
//! of its natural module.

use super::char_table::{self, CLASS_NAMES};
use super::closure::GroupClosure;
use super::cyclotomic::{CyclotomicValue, Cyc24};
use crate::gf5::{Gf5Matrix, LinalgError, Subspace};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("a conjugate of element {0} is outside the group")]
    NotClosed(usize),
    #[error("element order {0} does not divide 24")]
    OrderNot24(usize),
    #[error("eigenvalue multiplicities sum to {0}, not the dimension {1}")]
    EigenCount(usize, usize),
    #[error("character value {0:?} is not in Z[√-3]")]
    NotEisenstein([i64; 8]),
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyClass {
    /// Index of the representative in the group's discovery order.
    pub representative: usize,
    pub size: usize,
    pub order: usize,
    pub value: CyclotomicValue,
}

/// Classes as orbits of conjugation by the generators.
pub fn conjugacy_orbits(group: &GroupClosure, gens: &[&Gf5Matrix]) -> Result<Vec<Vec<usize>>, CharError> {
    let inv: Vec<Gf5Matrix> = gens.iter().map(|g| g.inverse()).collect::<Result<_, _>>()?;
    let n = group.order();
    let mut class_of = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        class_of[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = group.element(orbit[head]);
            head += 1;
            for (g, gi) in gens.iter().zip(&inv) {
                let y = x.conj_with(g, gi);
                let k = group.index_of(&y).ok_or(CharError::NotClosed(orbit[head - 1]))?;
                if class_of[k] == usize::MAX {
                    class_of[k] = id;
                    orbit.push(k);
                }
            }
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// `GF(25) = GF(5)[s]/(s² - 2)`, as `a + b·s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct F25(u8, u8);

impl F25 {
    fn mul(self, o: F25) -> F25 {
        let (a, b, c, d) = (self.0 as u32, self.1 as u32, o.0 as u32, o.1 as u32);
        F25(((a * c + 2 * b * d) % 5) as u8, ((a * d + b * c) % 5) as u8)
    }

    fn add(self, o: F25) -> F25 {
        F25((self.0 + o.0) % 5, (self.1 + o.1) % 5)
    }

    fn pow(self, e: usize) -> F25 {
        (0..e).fold(F25(1, 0), |acc, _| acc.mul(self))
    }

    /// The first element of multiplicative order 24 in `(a, b)` order.
    fn generator() -> F25 {
        (0..25u8)
            .map(|k| F25(k / 5, k % 5))
            .find(|x| *x != F25(0, 0) && (1..24).all(|e| x.pow(e) != F25(1, 0)))
            .expect("GF(25)^× is cyclic of order 24")
    }
}

/// Minimal polynomial over GF(5) of `ε^k`, as coefficients from the constant term up.
fn min_poly(eps: F25, k: usize) -> Vec<u8> {
    let z = eps.pow(k);
    let zf = eps.pow(5 * k % 24);
    if z == zf {
        debug_assert_eq!(z.1, 0);
        vec![(5 - z.0) % 5, 1]
    } else {
        let s = z.add(zf);
        let p = z.mul(zf);
        debug_assert!(s.1 == 0 && p.1 == 0);
        vec![p.0, (5 - s.0) % 5, 1]
    }
}

fn eval_poly(g: &Gf5Matrix, coeffs: &[u8]) -> Gf5Matrix {
    let n = g.rows();
    let mut acc = Gf5Matrix::zeros(n, n);
    for &c in coeffs.iter().rev() {
        acc = &(&acc * g) + &Gf5Matrix::scalar(n, crate::gf5::Gf5Scalar::new(c as i64));
    }
    acc
}

/// The Brauer character value of `g`, lifting a fixed generator of
/// `GF(25)^×` to `exp(2πi/24)`. The order of `g` must divide 24.
pub fn brauer_value(g: &Gf5Matrix) -> Result<(usize, CyclotomicValue), CharError> {
    let n = g.rows();
    let ord = g.element_order(24)?;
    if 24 % ord != 0 {
        return Err(CharError::OrderNot24(ord));
    }
    let eps = F25::generator();
    let step = 24 / ord;
    let mut done = [false; 24];
    let mut total = Cyc24::default();
    let mut count = 0;
    for k in (0..24).step_by(step) {
        if done[k] {
            continue;
        }
        let k5 = 5 * k % 24;
        done[k] = true;
        done[k5] = true;
        let poly = min_poly(eps, k);
        let deg = poly.len() - 1;
        let kernel = n - Subspace::row_space(&eval_poly(g, &poly)).dim();
        let mult = kernel / deg;
        count += kernel;
        total.add_scaled(&Cyc24::zeta_pow(k), mult as i64);
        if deg == 2 {
            total.add_scaled(&Cyc24::zeta_pow(k5), mult as i64);
        }
    }
    if count != n {
        return Err(CharError::EigenCount(count, n));
    }
    let v = total.to_eisenstein().ok_or(CharError::NotEisenstein(total.0))?;
    Ok((ord, v))
}

/// Conjugacy classes with element order and character value.
pub fn classes(group: &GroupClosure, gens: &[&Gf5Matrix]) -> Result<Vec<ConjugacyClass>, CharError> {
    conjugacy_orbits(group, gens)?
        .into_iter()
        .map(|orbit| {
            let representative = orbit[0];
            let (order, value) = brauer_value(&group.element(representative))?;
            Ok(ConjugacyClass { representative, size: orbit.len(), order, value })
        })
        .collect()
}

/// One column of the printed table: order from the class name, size from
/// column orthogonality, and the printed character value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableColumn {
    pub name: &'static str,
    pub order: usize,
    pub centralizer: i64,
    pub size: i64,
    pub psi: i64,
}

pub fn table_columns(group_order: i64) -> Vec<TableColumn> {
    let irr = char_table::irreducibles();
    let psi = char_table::psi();
    (0..30)
        .map(|j| {
            let centralizer: i64 = irr.iter().map(|row| row[j].norm()).sum();
            TableColumn {
                name: CLASS_NAMES[j],
                order: char_table::class_order(CLASS_NAMES[j]),
                centralizer,
                size: group_order / centralizer,
                psi: psi[j],
            }
        })
        .collect()
}

/// `⟨χ, ψ⟩ = (1/|G|) Σ |C| ψ(C) conj(χ(C))`, or `None` if not an integer.
pub fn multiplicity(
    sizes: &[i64],
    psi: &[CyclotomicValue],
    chi: &[CyclotomicValue],
    group_order: i64,
) -> Option<i64> {
    let sum = sizes
        .iter()
        .zip(psi)
        .zip(chi)
        .fold(CyclotomicValue::ZERO, |acc, ((&s, &p), &c)| acc + CyclotomicValue::int(s) * p * c.conj());
    sum.div_exact(group_order).filter(|v| v.is_integer() && v.a >= 0).map(|v| v.a)
}
