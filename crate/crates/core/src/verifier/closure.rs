//! Breadth-first enumeration of finite matrix groups.

use crate::gf5::Gf5Matrix;
use indexmap::IndexSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosureError {
    #[error("closure exceeded cap {cap} (at least {partial} elements found)")]
    CapExceeded { cap: usize, partial: usize },
    #[error("generators must be square matrices of one common size")]
    BadGenerators,
}

/// A finite group given by its elements, stored as packed keys in discovery order.
#[derive(Clone, Debug)]
pub struct GroupClosure {
    dim: usize,
    keys: IndexSet<Box<[u8]>>,
    pub labels: Vec<String>,
}

impl GroupClosure {
    pub fn order(&self) -> usize {
        self.keys.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, m: &Gf5Matrix) -> bool {
        self.keys.contains(m.packed_key().as_slice())
    }

    pub fn index_of(&self, m: &Gf5Matrix) -> Option<usize> {
        self.keys.get_index_of(m.packed_key().as_slice())
    }

    /// The `k`-th element in discovery order (0 is the identity).
    pub fn element(&self, k: usize) -> Gf5Matrix {
        Gf5Matrix::from_packed_key(self.dim, self.dim, &self.keys[k])
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf5Matrix> + '_ {
        self.keys.iter().map(|k| Gf5Matrix::from_packed_key(self.dim, self.dim, k))
    }
}

/// Enumerates `⟨gens⟩` by multiplying each new element on the left by every
/// generator. Left multiplication costs one row operation per nonzero
/// generator entry, which favours the sparse generators used here.
pub fn closure_enumerate(gens: &[&Gf5Matrix], cap: usize) -> Result<GroupClosure, ClosureError> {
    closure_labeled(gens, &[], cap)
}

pub fn closure_labeled(gens: &[&Gf5Matrix], labels: &[&str], cap: usize) -> Result<GroupClosure, ClosureError> {
    let dim = gens.first().map_or(0, |g| g.rows());
    if gens.iter().any(|g| g.shape() != (dim, dim)) {
        return Err(ClosureError::BadGenerators);
    }
    let one = Gf5Matrix::identity(dim);
    let mut keys: IndexSet<Box<[u8]>> = IndexSet::new();
    keys.insert(one.packed_key().into_boxed_slice());
    let mut frontier = vec![one];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = *g * x;
                if keys.insert(y.packed_key().into_boxed_slice()) {
                    if keys.len() > cap {
                        return Err(ClosureError::CapExceeded { cap, partial: keys.len() });
                    }
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(GroupClosure { dim, keys, labels: labels.iter().map(|s| s.to_string()).collect() })
}
