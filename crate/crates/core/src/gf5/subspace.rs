use super::{Gf5Matrix, LinalgError, INV};

/// A subspace of `GF(5)^n`, held as its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Gf5Matrix,
    pivots: Vec<usize>,
}

/// In-place reduced row echelon form of a list of rows; returns pivot columns.
fn rref_rows(rows: &mut Vec<Vec<u8>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = INV[rows[rank][c] as usize];
        if inv != 1 {
            rows[rank].iter_mut().for_each(|x| *x = (*x * inv) % 5);
        }
        let pivot = std::mem::take(&mut rows[rank]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row.is_empty() || row[c] == 0 {
                continue;
            }
            let m = 5 - row[c];
            for (x, &y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = (*x + m * y) % 5;
            }
        }
        rows[rank] = pivot;
        pivots.push(c);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

impl Subspace {
    /// Row space of `m`, in canonical echelon form.
    pub fn row_space(m: &Gf5Matrix) -> Self {
        let n = m.cols();
        let mut rows: Vec<Vec<u8>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let pivots = rref_rows(&mut rows, n);
        let flat: Vec<u8> = rows.concat();
        Subspace { ambient: n, basis: Gf5Matrix::from_vec(pivots.len(), n, flat).expect("shape"), pivots }
    }

    pub fn zero(n: usize) -> Self {
        Subspace { ambient: n, basis: Gf5Matrix::zeros(0, n), pivots: vec![] }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient: n, basis: Gf5Matrix::identity(n), pivots: (0..n).collect() }
    }

    /// Span of unit vectors at the given 0-based indices.
    pub fn unit_span(n: usize, indices: &[usize]) -> Self {
        let m = Gf5Matrix::from_fn(indices.len(), n, |i, j| i64::from(indices[i] == j));
        Self::row_space(&m)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Gf5Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after elimination against the basis; zero iff `v` is in the span.
    fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let mut v = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            if v[c] != 0 {
                let m = 5 - v[c];
                for (x, &y) in v.iter_mut().zip(self.basis.row(r)) {
                    *x = (*x + m * y) % 5;
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        Ok(Self::row_space(&Gf5Matrix::vstack(&[&self.basis, &other.basis])?))
    }

    /// Image under right multiplication by `op`.
    pub fn image(&self, op: &Gf5Matrix) -> Result<Subspace, LinalgError> {
        Ok(Self::row_space(&self.basis.try_mul(op)?))
    }

    /// True iff `U·op ⊆ U`.
    pub fn is_invariant(&self, op: &Gf5Matrix) -> Result<bool, LinalgError> {
        let img = self.basis.try_mul(op)?;
        Ok((0..img.rows()).all(|i| self.contains_vector(img.row(i))))
    }

    /// Left kernel `{v : v·m = 0}`.
    pub fn left_kernel(m: &Gf5Matrix) -> Self {
        let r = m.rows();
        let t = m.transpose();
        let mut rows: Vec<Vec<u8>> = (0..t.rows()).map(|i| t.row(i).to_vec()).collect();
        let pivots = rref_rows(&mut rows, r);
        let free: Vec<usize> = (0..r).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Gf5Matrix::zeros(free.len(), r);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(k, fc, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(k, pc, -(rows[i][fc] as i64));
            }
        }
        Self::row_space(&basis)
    }

    /// Common fixed space `{v : v·g = v for all g}`.
    pub fn fixed_space(gens: &[&Gf5Matrix]) -> Result<Self, LinalgError> {
        let Some(first) = gens.first() else {
            return Err(LinalgError::DimensionMismatch { op: "fixed_space", lhs: (0, 0), rhs: (0, 0) });
        };
        let n = first.rows();
        let one = Gf5Matrix::identity(n);
        let diffs = gens.iter().map(|g| g.try_sub(&one)).collect::<Result<Vec<_>, _>>()?;
        let refs: Vec<&Gf5Matrix> = diffs.iter().collect();
        Ok(Self::left_kernel(&Gf5Matrix::hstack(&refs)?))
    }

    /// Smallest subspace containing `self` and closed under every operator.
    pub fn span_closure(&self, ops: &[&Gf5Matrix]) -> Result<Self, LinalgError> {
        let mut cur = self.clone();
        loop {
            let mut parts = vec![cur.basis.clone()];
            for op in ops {
                parts.push(cur.basis.try_mul(op)?);
            }
            let refs: Vec<&Gf5Matrix> = parts.iter().collect();
            let next = Self::row_space(&Gf5Matrix::vstack(&refs)?);
            if next.dim() == cur.dim() {
                return Ok(next);
            }
            cur = next;
        }
    }

    /// `{v : v·gram·wᵀ = 0 for all w in self}`.
    pub fn orth_complement(&self, gram: &Gf5Matrix) -> Result<Self, LinalgError> {
        if gram.shape() != (self.ambient, self.ambient) {
            return Err(LinalgError::DimensionMismatch {
                op: "orth_complement",
                lhs: gram.shape(),
                rhs: (self.ambient, self.ambient),
            });
        }
        Ok(Self::left_kernel(&gram.try_mul(&self.basis.transpose())?))
    }

    /// True iff the form vanishes on `self × other`.
    pub fn is_orthogonal_to(&self, other: &Subspace, gram: &Gf5Matrix) -> Result<bool, LinalgError> {
        Ok(self.basis.try_mul(gram)?.try_mul(&other.basis.transpose())?.is_zero())
    }

    /// True iff the form vanishes identically on `self`.
    pub fn is_isotropic(&self, gram: &Gf5Matrix) -> Result<bool, LinalgError> {
        self.is_orthogonal_to(self, gram)
    }

    /// True iff every echelon row is a unit vector.
    pub fn is_unit_spanned(&self) -> bool {
        (0..self.dim()).all(|i| self.basis.row(i).iter().filter(|&&x| x != 0).count() == 1)
    }
}
