use super::{LinalgError, INV};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of GF(5), stored as its canonical representative 0..=4.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf5Scalar(u8);

impl Gf5Scalar {
    pub const ZERO: Self = Gf5Scalar(0);
    pub const ONE: Self = Gf5Scalar(1);

    /// Reduces any integer into the field.
    pub fn new(v: i64) -> Self {
        Gf5Scalar(v.rem_euclid(5) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        (self.0 != 0).then(|| Gf5Scalar(INV[self.0 as usize]))
    }

    pub fn is_square(self) -> bool {
        matches!(self.0, 1 | 4)
    }
}

impl Add for Gf5Scalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Gf5Scalar((self.0 + o.0) % 5)
    }
}

impl Sub for Gf5Scalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Gf5Scalar((self.0 + 5 - o.0) % 5)
    }
}

impl Mul for Gf5Scalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Gf5Scalar((self.0 * o.0) % 5)
    }
}

impl Neg for Gf5Scalar {
    type Output = Self;
    fn neg(self) -> Self {
        Gf5Scalar((5 - self.0) % 5)
    }
}

impl fmt::Display for Gf5Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dense matrix over GF(5) with entries in `0..5`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf5Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for Gf5Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf5Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(12) {
            let row: String = self.row(r).iter().take(40).map(|&d| (b'0' + d) as char).collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

impl Gf5Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf5Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Gf5Scalar::ONE)
    }

    pub fn scalar(n: usize, s: Gf5Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = s.0;
        }
        m
    }

    /// Builds from raw row-major data; every entry is reduced mod 5.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<u8>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                op: "from_vec",
                lhs: (rows, cols),
                rhs: (data.len(), 1),
            });
        }
        Ok(Gf5Matrix { rows, cols, data: data.into_iter().map(|v| v % 5).collect() })
    }

    /// Builds from integer rows, reducing each entry mod 5. Rows must have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&v| v.rem_euclid(5) as u8));
        }
        Gf5Matrix { rows: rows.len(), cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j).rem_euclid(5) as u8);
            }
        }
        Gf5Matrix { rows, cols, data }
    }

    /// Diagonal matrix from integer entries.
    pub fn diag(entries: &[i64]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i] } else { 0 })
    }

    /// Permutation matrix with `e_i P = e_{perm[i]}` (0-based).
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.data[i * n + p] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    /// Sets one entry (reduced mod 5). Intended for construction only.
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v.rem_euclid(5) as u8;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(k, &v)| {
                let (i, j) = (k / self.cols, k % self.cols);
                v == u8::from(i == j)
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i) as i64)
    }

    /// Sum of the diagonal, in GF(5).
    pub fn trace(&self) -> Gf5Scalar {
        let n = self.rows.min(self.cols);
        Gf5Scalar::new((0..n).map(|i| self.get(i, i) as i64).sum())
    }

    pub fn scale(&self, s: Gf5Scalar) -> Self {
        Gf5Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| (v * s.0) % 5).collect(),
        }
    }

    fn zip_with(&self, o: &Self, op: &'static str, f: impl Fn(u8, u8) -> u8) -> Result<Self, LinalgError> {
        if self.shape() != o.shape() {
            return Err(LinalgError::DimensionMismatch { op, lhs: self.shape(), rhs: o.shape() });
        }
        Ok(Gf5Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, LinalgError> {
        self.zip_with(o, "add", |a, b| (a + b) % 5)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, LinalgError> {
        self.zip_with(o, "sub", |a, b| (a + 5 - b) % 5)
    }

    /// Exact product. Rows of `rhs` are added into a `u16` accumulator, skipping
    /// zero coefficients; one reduction per output row.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch { op: "mul", lhs: self.shape(), rhs: rhs.shape() });
        }
        let (n, k) = (rhs.cols, self.cols);
        let nnz = rhs.data.iter().filter(|&&v| v != 0).count();
        if nnz * 8 < rhs.data.len() {
            return Ok(self.mul_sparse_rhs(rhs));
        }
        let mut out = vec![0u8; self.rows * n];
        let mut acc = vec![0u16; n];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            let mut pending = 0u32;
            for (kk, &a) in self.data[i * k..(i + 1) * k].iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as u16;
                for (s, &b) in acc.iter_mut().zip(&rhs.data[kk * n..(kk + 1) * n]) {
                    *s += a * b as u16;
                }
                pending += 1;
                if pending == 4000 {
                    acc.iter_mut().for_each(|a| *a %= 5);
                    pending = 0;
                }
            }
            for (o, &s) in out[i * n..(i + 1) * n].iter_mut().zip(&acc) {
                *o = (s % 5) as u8;
            }
        }
        Ok(Gf5Matrix { rows: self.rows, cols: n, data: out })
    }

    /// Product against a sparse right factor: each nonzero of `self` touches
    /// only the nonzeros of one row of `rhs`.
    fn mul_sparse_rhs(&self, rhs: &Self) -> Self {
        let (n, k) = (rhs.cols, self.cols);
        let csr: Vec<Vec<(u16, u16)>> = (0..rhs.rows)
            .map(|r| {
                rhs.row(r).iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c as u16, v as u16)).collect()
            })
            .collect();
        let mut out = vec![0u8; self.rows * n];
        let mut acc = vec![0u32; n];
        for i in 0..self.rows {
            for (kk, &a) in self.data[i * k..(i + 1) * k].iter().enumerate() {
                if a != 0 {
                    for &(c, v) in &csr[kk] {
                        acc[c as usize] += a as u32 * v as u32;
                    }
                }
            }
            for (o, s) in out[i * n..(i + 1) * n].iter_mut().zip(acc.iter_mut()) {
                *o = (*s % 5) as u8;
                *s = 0;
            }
        }
        Gf5Matrix { rows: self.rows, cols: n, data: out }
    }

    /// `self^e` by square and multiply. Requires a square matrix.
    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square(), "pow of non-square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power allowing negative exponents; requires invertibility for `e < 0`.
    pub fn pow_signed(&self, e: i64) -> Result<Self, LinalgError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Gf5Scalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = 1u8;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r * n + c] != 0) else {
                return Ok(Gf5Scalar::ZERO);
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = (5 - det) % 5;
            }
            let piv = a[c * n + c];
            det = (det * piv) % 5;
            let pinv = INV[piv as usize];
            for r in c + 1..n {
                let f = (a[r * n + c] * pinv) % 5;
                if f == 0 {
                    continue;
                }
                let m = 5 - f;
                for j in c..n {
                    a[r * n + j] = (a[r * n + j] + m * a[c * n + j]) % 5;
                }
            }
        }
        Ok(Gf5Scalar(det))
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let w = 2 * n;
        let mut a = vec![0u8; n * w];
        for i in 0..n {
            a[i * w..i * w + n].copy_from_slice(self.row(i));
            a[i * w + n + i] = 1;
        }
        for c in 0..n {
            let p = (c..n).find(|&r| a[r * w + c] != 0).ok_or(LinalgError::Singular)?;
            if p != c {
                for j in 0..w {
                    a.swap(p * w + j, c * w + j);
                }
            }
            let pinv = INV[a[c * w + c] as usize];
            for j in 0..w {
                a[c * w + j] = (a[c * w + j] * pinv) % 5;
            }
            let pivot_row: Vec<u8> = a[c * w..(c + 1) * w].to_vec();
            for r in 0..n {
                let f = a[r * w + c];
                if r == c || f == 0 {
                    continue;
                }
                let m = 5 - f;
                for (x, &y) in a[r * w..(r + 1) * w].iter_mut().zip(&pivot_row) {
                    *x = (*x + m * y) % 5;
                }
            }
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            out.data[i * n..(i + 1) * n].copy_from_slice(&a[i * w + n..(i + 1) * w]);
        }
        Ok(out)
    }

    /// Least `n >= 1` with `self^n = 1`.
    pub fn element_order(&self, cap: usize) -> Result<usize, LinalgError> {
        if self.det()? == Gf5Scalar::ZERO {
            return Err(LinalgError::Singular);
        }
        let mut p = self.clone();
        for n in 1..=cap {
            if p.is_identity() {
                return Ok(n);
            }
            p = &p * self;
        }
        Err(LinalgError::OrderCapExceeded(cap))
    }

    /// Least `n` with `self^n = 0`, or `None` if `self^rows != 0`.
    pub fn nilpotency_index(&self) -> Result<Option<usize>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let mut p = self.clone();
        for n in 1..=self.rows.max(1) {
            if p.is_zero() {
                return Ok(Some(n));
            }
            p = &p * self;
        }
        Ok(None)
    }

    /// `1 + u + 3u^2 + u^3 + 4u^4`, defined when `u^5 = 0`.
    pub fn exp5(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let powers = self.powers_to_5()?;
        Ok(Self::poly(&[1, 1, 3, 1, 4], &powers))
    }

    /// With `u = self - 1`: `u + 2u^2 + 2u^3 + u^4`, defined when `u^5 = 0`.
    pub fn log5(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let u = self - &Self::identity(self.rows);
        let powers = u.powers_to_5()?;
        Ok(Self::poly(&[0, 1, 2, 2, 1], &powers))
    }

    fn powers_to_5(&self) -> Result<[Self; 5], LinalgError> {
        let u2 = self * self;
        let u3 = &u2 * self;
        let u4 = &u3 * self;
        if !(&u4 * self).is_zero() {
            return Err(LinalgError::NotNilpotent5);
        }
        Ok([Self::identity(self.rows), self.clone(), u2, u3, u4])
    }

    fn poly(coeffs: &[u8; 5], powers: &[Self; 5]) -> Self {
        let n = powers[0].rows;
        let mut out = Self::zeros(n, n);
        for (c, p) in coeffs.iter().zip(powers) {
            if *c != 0 {
                for (o, &v) in out.data.iter_mut().zip(&p.data) {
                    *o = (*o + c * v) % 5;
                }
            }
        }
        out
    }

    /// Block-diagonal stack `self ⊕ other`.
    pub fn dirsum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, self.cols, other);
        m
    }

    /// Direct sum of a list of matrices.
    pub fn dirsum_all(parts: &[Self]) -> Self {
        parts.iter().skip(1).fold(parts[0].clone(), |acc, p| acc.dirsum(p))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        Self::from_fn(r, c, |i, j| {
            (self.get(i / other.rows, j / other.cols) * other.get(i % other.rows, j % other.cols)) as i64
        })
    }

    /// Copy of the submatrix with the given row and column ranges.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let c0 = cols.start;
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows.start + i, c0 + j) as i64)
    }

    /// Overwrites the region starting at `(r0, c0)` with `block`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(i));
        }
    }

    /// Stacks matrices with equal column counts vertically.
    pub fn vstack(parts: &[&Self]) -> Result<Self, LinalgError> {
        let cols = parts.first().map_or(0, |p| p.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.cols != cols {
                return Err(LinalgError::DimensionMismatch { op: "vstack", lhs: (rows, cols), rhs: p.shape() });
            }
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Ok(Gf5Matrix { rows, cols, data })
    }

    /// Stacks matrices with equal row counts horizontally.
    pub fn hstack(parts: &[&Self]) -> Result<Self, LinalgError> {
        let rows = parts.first().map_or(0, |p| p.rows);
        if let Some(p) = parts.iter().find(|p| p.rows != rows) {
            return Err(LinalgError::DimensionMismatch { op: "hstack", lhs: (rows, 0), rhs: p.shape() });
        }
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut c0 = 0;
        for p in parts {
            m.paste(0, c0, p);
            c0 += p.cols;
        }
        Ok(m)
    }

    /// `b⁻¹ · self · b`.
    pub fn conj(&self, b: &Self) -> Result<Self, LinalgError> {
        Ok(&(&b.inverse()? * self) * b)
    }

    /// Conjugation when `b_inv` is already known.
    pub fn conj_with(&self, b: &Self, b_inv: &Self) -> Self {
        &(b_inv * self) * b
    }

    /// Commutator `a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Self, b: &Self) -> Result<Self, LinalgError> {
        let (ai, bi) = (a.inverse()?, b.inverse()?);
        Ok(&(&(&ai * &bi) * a) * b)
    }

    /// Product of a sequence of square matrices of size `n`.
    pub fn product<'a>(n: usize, factors: impl IntoIterator<Item = &'a Self>) -> Self {
        factors.into_iter().fold(Self::identity(n), |acc, f| &acc * f)
    }

    /// Base-5 digits packed three per byte (5³ = 125 < 256).
    pub fn packed_key(&self) -> Vec<u8> {
        self.data
            .chunks(3)
            .map(|c| c.iter().rev().fold(0u8, |acc, &d| acc * 5 + d))
            .collect()
    }

    /// Inverse of [`Gf5Matrix::packed_key`] for a known shape.
    pub fn from_packed_key(rows: usize, cols: usize, key: &[u8]) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for &b in key {
            let mut b = b;
            for _ in 0..3 {
                data.push(b % 5);
                b /= 5;
            }
        }
        data.truncate(rows * cols);
        Gf5Matrix { rows, cols, data }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Gf5Matrix> for &Gf5Matrix {
            type Output = Gf5Matrix;
            fn $m(self, rhs: &Gf5Matrix) -> Gf5Matrix {
                self.$f(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Gf5Matrix> for Gf5Matrix {
            type Output = Gf5Matrix;
            fn $m(self, rhs: Gf5Matrix) -> Gf5Matrix {
                (&self).$f(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

binop!(Mul, mul, try_mul);
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);

impl Neg for &Gf5Matrix {
    type Output = Gf5Matrix;
    fn neg(self) -> Gf5Matrix {
        self.scale(Gf5Scalar::new(-1))
    }
}
