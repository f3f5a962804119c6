//! Exact arithmetic in `Z[√-3]` and in `Z[ζ24]`.

use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b·√-3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclotomicValue {
    pub a: i64,
    pub b: i64,
}

impl CyclotomicValue {
    pub const ZERO: CyclotomicValue = CyclotomicValue { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        CyclotomicValue { a, b }
    }

    pub const fn int(a: i64) -> Self {
        CyclotomicValue { a, b: 0 }
    }

    pub fn conj(self) -> Self {
        CyclotomicValue { a: self.a, b: -self.b }
    }

    /// `|z|² = a² + 3b²`.
    pub fn norm(self) -> i64 {
        self.a * self.a + 3 * self.b * self.b
    }

    pub fn is_integer(self) -> bool {
        self.b == 0
    }

    /// Exact division by an integer, if it divides both parts.
    pub fn div_exact(self, d: i64) -> Option<Self> {
        (d != 0 && self.a % d == 0 && self.b % d == 0).then(|| CyclotomicValue::new(self.a / d, self.b / d))
    }
}

impl Add for CyclotomicValue {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        CyclotomicValue::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for CyclotomicValue {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        CyclotomicValue::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for CyclotomicValue {
    type Output = Self;
    fn neg(self) -> Self {
        CyclotomicValue::new(-self.a, -self.b)
    }
}

impl Mul for CyclotomicValue {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        CyclotomicValue::new(self.a * o.a - 3 * self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}√-3"),
            (a, b) if b < 0 => write!(f, "{a}-{}√-3", -b),
            (a, b) => write!(f, "{a}+{b}√-3"),
        }
    }
}

/// An element of `Z[x]/Φ24(x)` with `Φ24 = x⁸ - x⁴ + 1`, where `x` stands for `ζ24`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Cyc24(pub [i64; 8]);

impl Cyc24 {
    /// `ζ24^k`.
    pub fn zeta_pow(k: usize) -> Cyc24 {
        let mut full = [0i64; 24];
        full[k % 24] = 1;
        // x^e = x^(e-4) - x^(e-8) for e >= 8.
        for e in (8..24).rev() {
            let v = full[e];
            full[e - 4] += v;
            full[e - 8] -= v;
        }
        let mut out = [0i64; 8];
        out.copy_from_slice(&full[..8]);
        Cyc24(out)
    }

    pub fn add_scaled(&mut self, o: &Cyc24, s: i64) {
        for (a, b) in self.0.iter_mut().zip(o.0.iter()) {
            *a += s * b;
        }
    }

    /// Reads the value as `a + b√-3`; `√-3 = 2x⁴ - 1`.
    pub fn to_eisenstein(&self) -> Option<CyclotomicValue> {
        let c = &self.0;
        if c.iter().enumerate().any(|(k, &v)| k != 0 && k != 4 && v != 0) || c[4] % 2 != 0 {
            return None;
        }
        let b = c[4] / 2;
        Some(CyclotomicValue::new(c[0] + b, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_relations() {
        assert_eq!(Cyc24::zeta_pow(0).to_eisenstein(), Some(CyclotomicValue::int(1)));
        assert_eq!(Cyc24::zeta_pow(12).to_eisenstein(), Some(CyclotomicValue::int(-1)));
        // ζ24^8 is a primitive cube root of unity (-1+√-3)/2, so 2ζ^8+1 = √-3.
        let mut v = Cyc24::zeta_pow(8);
        v.add_scaled(&v.clone(), 1);
        v.add_scaled(&Cyc24::zeta_pow(0), 1);
        assert_eq!(v.to_eisenstein(), Some(CyclotomicValue::new(0, 1)));
        // ζ^6 = i is not in Z[√-3].
        assert_eq!(Cyc24::zeta_pow(6).to_eisenstein(), None);
        // The sum of all 24th roots of unity vanishes.
        let mut s = Cyc24::default();
        for k in 0..24 {
            s.add_scaled(&Cyc24::zeta_pow(k), 1);
        }
        assert_eq!(s, Cyc24::default());
    }

    #[test]
    fn eisenstein_arithmetic() {
        let a = CyclotomicValue::new(-1, -2);
        assert_eq!(a * a.conj(), CyclotomicValue::int(13));
        assert_eq!(a.norm(), 13);
        assert_eq!(a.to_string(), "-1-2√-3");
    }
}
