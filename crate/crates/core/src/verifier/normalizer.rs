//! The torus normalizer `N = ⟨n1, n2, n3, n4⟩` and its action on root groups.

use super::closure::{closure_labeled, ClosureError, GroupClosure};
use crate::apartment::{OrientedLine, WeylElem};
use crate::generators::GeneratorBundle;
use crate::gf5::{Gf5Matrix, LinalgError};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PiError {
    #[error("conjugate of the root element of {0} is not in any root group")]
    NotARootGroup(OrientedLine),
    #[error("induced line permutation is not realized by the Weyl group")]
    NotInWeyl,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Lookup from every nontrivial element of every root group to its line.
#[derive(Clone, Debug)]
pub struct RootIndex {
    map: HashMap<Vec<u8>, (OrientedLine, u32)>,
    lines: Vec<OrientedLine>,
}

impl RootIndex {
    pub fn new(bundle: &GeneratorBundle) -> RootIndex {
        let mut map = HashMap::new();
        for (l, x) in &bundle.roots {
            let mut p = x.clone();
            for e in 1..5 {
                map.insert(p.packed_key(), (*l, e));
                p = &p * x;
            }
        }
        RootIndex { map, lines: bundle.roots.keys().copied().collect() }
    }

    /// Line and exponent with `m = x_L^e`, if any.
    pub fn lookup(&self, m: &Gf5Matrix) -> Option<(OrientedLine, u32)> {
        self.map.get(&m.packed_key()).copied()
    }
}

/// The permutation of root groups induced by conjugation with `n`, as a Weyl element.
pub fn pi_of(bundle: &GeneratorBundle, index: &RootIndex, n: &Gf5Matrix) -> Result<WeylElem, PiError> {
    let ni = n.inverse()?;
    let mut image = HashMap::new();
    for l in &index.lines {
        let y = &(&ni * bundle.root(l)) * n;
        let (l2, _) = index.lookup(&y).ok_or(PiError::NotARootGroup(*l))?;
        image.insert(*l, l2);
    }
    WeylElem::all()
        .into_iter()
        .find(|w| index.lines.iter().all(|l| w.act_line(l) == image[l]))
        .ok_or(PiError::NotInWeyl)
}

/// `N` enumerated, with `π` evaluated on every element.
#[derive(Clone, Debug)]
pub struct Normalizer {
    pub group: GroupClosure,
    pub gens: [Gf5Matrix; 4],
    pub pi: Vec<WeylElem>,
}

#[derive(Debug, Error)]
pub enum NormalizerError {
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error("element {0}: {1}")]
    Pi(usize, PiError),
}

impl Normalizer {
    pub fn enumerate(bundle: &GeneratorBundle, cap: usize) -> Result<Normalizer, NormalizerError> {
        let gens = bundle.n_generators();
        let refs: Vec<&Gf5Matrix> = gens.iter().collect();
        let group = closure_labeled(&refs, &["n1", "n2", "n3", "n4"], cap)?;
        let index = RootIndex::new(bundle);
        let pi = group
            .elements()
            .enumerate()
            .map(|(k, n)| pi_of(bundle, &index, &n).map_err(|e| NormalizerError::Pi(k, e)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Normalizer { group, gens, pi })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Elements whose image under `π` satisfies `pred`.
    pub fn lifts(&self, pred: impl Fn(&WeylElem) -> bool) -> Vec<Gf5Matrix> {
        self.pi.iter().enumerate().filter(|(_, w)| pred(w)).map(|(k, _)| self.group.element(k)).collect()
    }

    /// The kernel of `π`.
    pub fn kernel(&self) -> Vec<Gf5Matrix> {
        self.lifts(|w| *w == WeylElem::IDENTITY)
    }
}
