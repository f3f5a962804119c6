//! The five base matrices, the root elements attached to the 36 lines, and
//! the elements derived from them.

mod eta_data;
pub mod relations;
mod sylow;

pub use relations::{CommutatorConvention, Gen, HexFamily, HexRelation, HEX_RELATIONS, SQUARES};
pub use sylow::{SylowResult, EXPECTED_FIX_VECTOR};

use crate::apartment::{k_bar_words, k_for_line, k_generators, Configuration, OrientedLine, WeylElem};
use crate::blocks::{self, block_perm_matrix, index_perm_matrix, BlockError, SectionScheme, DIM};
use crate::gf5::{Gf5Matrix, LinalgError};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error("no completion of the transcription survives; rejections: {0:?}")]
    NoSurvivor(Vec<CandidateOutcome>),
    #[error("completions are ambiguous: {0:?}")]
    Ambiguous(Vec<Vec<Completion>>),
    #[error("transcription block ({0},{1}) row {2} has {3} entries, expected {4} or one fewer")]
    BadTranscription(usize, usize, usize, usize, usize),
    #[error("{0} is not in the group K̄")]
    NotInK(WeylElem),
    #[error("words for {0} in α, β, γ give different matrices")]
    KNotWellDefined(WeylElem),
    #[error("no subset of hexagon generators spans a Sylow 5-subgroup with the expected fixed vector")]
    SylowNotFound,
}

/// `B = [[0,1],[4,4]]`, of order 3.
pub fn b_matrix() -> Gf5Matrix {
    Gf5Matrix::from_rows(&[[0, 1], [4, 4]])
}

/// `D = [[3,1],[1,3]]`.
pub fn d_matrix() -> Gf5Matrix {
    Gf5Matrix::from_rows(&[[3, 1], [1, 3]])
}

/// `J = [[0,1],[1,0]]`.
pub fn j_matrix() -> Gf5Matrix {
    Gf5Matrix::from_rows(&[[0, 1], [1, 0]])
}

/// The matrices that do not depend on the nilpotent generator.
#[derive(Clone, Debug)]
pub struct BaseMatrices {
    pub alpha: Gf5Matrix,
    pub beta: Gf5Matrix,
    pub gamma: Gf5Matrix,
    pub f: Gf5Matrix,
}

const ALPHA_NEGATED: [usize; 14] = [6, 7, 8, 9, 11, 12, 13, 17, 20, 21, 24, 25, 26, 27];

pub fn build_alpha() -> Gf5Matrix {
    let mut a = block_perm_matrix(&[&[5, 8], &[6, 15], &[7, 13], &[9, 12], &[10, 16], &[11, 14]])
        .expect("admissible");
    for &k in &ALPHA_NEGATED {
        a.set(k - 1, k - 1, 4);
    }
    a
}

pub fn build_beta() -> Gf5Matrix {
    let p = index_perm_matrix(DIM, &[&[4, 6, 8], &[5, 7, 9]]).expect("valid cycles");
    let q = block_perm_matrix(&[&[2, 3, 4], &[5, 12, 16], &[6, 10, 11], &[7, 14, 9], &[8, 15, 13]])
        .expect("admissible");
    &p * &q
}

pub fn build_gamma() -> Gf5Matrix {
    let one = |n| Gf5Matrix::identity(n);
    let b = b_matrix();
    Gf5Matrix::dirsum_all(&[
        one(3),
        one(3).kron(&b),
        one(3).kron(&Gf5Matrix::dirsum_all(&[one(2), b.clone(), b.clone()])),
        one(12).kron(&Gf5Matrix::dirsum_all(&[one(1), b.clone(), b.clone(), b])),
    ])
}

pub fn build_form() -> Gf5Matrix {
    let one = |n| Gf5Matrix::identity(n);
    let d = d_matrix();
    let nd = -&d;
    let f1 = Gf5Matrix::dirsum_all(&[Gf5Matrix::diag(&[4, 4, 3]), d.clone(), d.clone(), d.clone()]);
    let two = crate::gf5::Gf5Scalar::new(2);
    let f2 = one(3).kron(&Gf5Matrix::dirsum_all(&[one(2), d.scale(two), nd.scale(two)]));
    let f4 = j_matrix().kron(&one(6)).kron(&Gf5Matrix::dirsum_all(&[one(1), nd.clone(), d, nd]));
    Gf5Matrix::dirsum_all(&[f1, f2, f4])
}

pub fn build_base() -> BaseMatrices {
    BaseMatrices { alpha: build_alpha(), beta: build_beta(), gamma: build_gamma(), f: build_form() }
}

/// One printed block of the nilpotent generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranscribedBlock {
    pub row_section: usize,
    pub col_section: usize,
    pub rows: Vec<Vec<u8>>,
}

/// The printed blocks; a row one entry short is an unknown cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaTranscription {
    pub blocks: Vec<TranscribedBlock>,
}

/// Fills one short row by inserting `value` before column `position` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Completion {
    pub block: (usize, usize),
    pub row: usize,
    pub position: usize,
    pub value: u8,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateOutcome {
    pub fills: Vec<Completion>,
    /// First failed filter, or `None` for a survivor.
    pub rejected_by: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CalibrationReport {
    pub candidates: usize,
    pub distinct_candidates: usize,
    pub outcomes: Vec<CandidateOutcome>,
    pub chosen: Vec<Completion>,
}

impl EtaTranscription {
    pub fn printed() -> Self {
        let blocks = eta_data::ETA_BLOCKS
            .iter()
            .map(|(i, j, rows)| TranscribedBlock {
                row_section: *i,
                col_section: *j,
                rows: rows.iter().map(|r| r.bytes().map(|b| b - b'0').collect()).collect(),
            })
            .collect();
        EtaTranscription { blocks }
    }

    /// Short rows as `(block index, row index)`.
    pub fn gaps(&self) -> Result<Vec<(usize, usize)>, GenError> {
        let mut out = Vec::new();
        for (bi, b) in self.blocks.iter().enumerate() {
            let want = SectionScheme::len(b.col_section);
            for (ri, r) in b.rows.iter().enumerate() {
                if r.len() + 1 == want {
                    out.push((bi, ri));
                } else if r.len() != want {
                    return Err(GenError::BadTranscription(b.row_section, b.col_section, ri, r.len(), want));
                }
            }
        }
        Ok(out)
    }

    /// Assembles the matrix with the given fills applied.
    pub fn complete(&self, fills: &[Completion]) -> Result<Gf5Matrix, GenError> {
        let mut parts = Vec::new();
        for b in &self.blocks {
            let mut rows = b.rows.clone();
            for c in fills.iter().filter(|c| c.block == (b.row_section, b.col_section)) {
                rows[c.row].insert(c.position, c.value);
            }
            let m = Gf5Matrix::from_rows(
                &rows.iter().map(|r| r.iter().map(|&v| v as i64).collect::<Vec<_>>()).collect::<Vec<_>>(),
            );
            parts.push((b.row_section, b.col_section, m));
        }
        Ok(blocks::assemble(&parts)?)
    }

    /// All completions of all gaps.
    pub fn candidates(&self) -> Result<Vec<Vec<Completion>>, GenError> {
        let mut out: Vec<Vec<Completion>> = vec![vec![]];
        for (bi, ri) in self.gaps()? {
            let b = &self.blocks[bi];
            let len = b.rows[ri].len();
            let mut next = Vec::new();
            for prefix in &out {
                for position in 0..=len {
                    for value in 0..5 {
                        let mut p = prefix.clone();
                        p.push(Completion { block: (b.row_section, b.col_section), row: ri, position, value });
                        next.push(p);
                    }
                }
            }
            out = next;
        }
        Ok(out)
    }
}

/// The group `K = ⟨α, β, γ⟩` indexed by its image in `K̄ ≤ W`.
#[derive(Clone, Debug)]
pub struct KModel {
    entries: HashMap<WeylElem, (Gf5Matrix, Gf5Matrix)>,
    order: Vec<WeylElem>,
}

impl KModel {
    /// Builds one matrix per element of `K̄` along BFS words, checking that
    /// every relation met during the search holds in the matrices.
    pub fn build(alpha: &Gf5Matrix, beta: &Gf5Matrix, gamma: &Gf5Matrix) -> Result<KModel, GenError> {
        let mats = [alpha, beta, gamma];
        let wg = k_generators();
        let mut entries: HashMap<WeylElem, (Gf5Matrix, Gf5Matrix)> = HashMap::new();
        let mut order = Vec::new();
        for (w, word) in k_bar_words() {
            let m = Gf5Matrix::product(DIM, word.iter().map(|&g| mats[g]));
            let inv = m.inverse()?;
            entries.insert(w, (m, inv));
            order.push(w);
        }
        for w in &order {
            for (g, gw) in wg.iter().enumerate() {
                let prod = &entries[w].0 * mats[g];
                if prod != entries[&w.then(gw)].0 {
                    return Err(GenError::KNotWellDefined(w.then(gw)));
                }
            }
        }
        Ok(KModel { entries, order })
    }

    pub fn matrix(&self, w: &WeylElem) -> Result<&Gf5Matrix, GenError> {
        self.entries.get(w).map(|e| &e.0).ok_or(GenError::NotInK(*w))
    }

    pub fn inverse(&self, w: &WeylElem) -> Result<&Gf5Matrix, GenError> {
        self.entries.get(w).map(|e| &e.1).ok_or(GenError::NotInK(*w))
    }

    /// Elements of `K̄` in BFS order.
    pub fn elements(&self) -> &[WeylElem] {
        &self.order
    }
}

/// Root element `k⁻¹ ξ k` for the line `(1a,2b)^k`.
pub fn root_from(xi: &Gf5Matrix, k: &KModel, l: &OrientedLine) -> Gf5Matrix {
    let w = k_for_line(l);
    xi.conj_with(k.matrix(&w).expect("k_for_line lies in K̄"), k.inverse(&w).expect("k_for_line lies in K̄"))
}

/// The Λ, λ and μ generators of one line with their inverses.
#[derive(Clone, Debug)]
pub struct HexGenerators {
    pub config: Configuration,
    pub big: [Gf5Matrix; 6],
    pub small: [Gf5Matrix; 6],
    pub big_inv: [Gf5Matrix; 6],
    pub small_inv: [Gf5Matrix; 6],
}

impl HexGenerators {
    pub fn new(config: Configuration, root: impl Fn(&OrientedLine) -> Gf5Matrix) -> Self {
        let big = config.star.map(|l| root(&l));
        let small = config.hexagon.map(|l| root(&l));
        let big_inv = std::array::from_fn(|k| big[k].pow(4));
        let small_inv = std::array::from_fn(|k| small[k].pow(4));
        HexGenerators { config, big, small, big_inv, small_inv }
    }

    /// `Λ_i` for `i` in `F7^×`.
    pub fn big(&self, i: i64) -> &Gf5Matrix {
        &self.big[crate::apartment::idx7(i) - 1]
    }

    /// `λ_i` for `i` in `F7^×`.
    pub fn small(&self, i: i64) -> &Gf5Matrix {
        &self.small[crate::apartment::idx7(i) - 1]
    }

    /// The twelve generators in the order `Λ1..Λ6, λ1..λ6`.
    pub fn all(&self) -> Vec<&Gf5Matrix> {
        self.big.iter().chain(self.small.iter()).collect()
    }

    /// `t_i = Λ_i Λ_{-i}² Λ_i² Λ_{-i}`.
    pub fn torus(&self, i: i64) -> Gf5Matrix {
        let (a, b) = (self.big(i), self.big(-i));
        let (a2, b2) = (a * a, b * b);
        Gf5Matrix::product(DIM, [a, &b2, &a2, b])
    }
}

impl HexFamily for HexGenerators {
    fn dim(&self) -> usize {
        DIM
    }
    fn get(&self, big: bool, k: usize) -> &Gf5Matrix {
        if big { &self.big[k - 1] } else { &self.small[k - 1] }
    }
    fn get_inv(&self, big: bool, k: usize) -> &Gf5Matrix {
        if big { &self.big_inv[k - 1] } else { &self.small_inv[k - 1] }
    }
}

/// Everything attached to one line.
#[derive(Clone, Debug)]
pub struct LineElements {
    pub hex: HexGenerators,
    pub mu1: Gf5Matrix,
    pub mu6: Gf5Matrix,
    /// `t_1..t_6`.
    pub t: [Gf5Matrix; 6],
    /// `R(L) = Λ1² Λ6⁴ Λ1²`.
    pub r_big: Gf5Matrix,
    /// `r(L) = λ1² λ6³ λ1²`.
    pub r_small: Gf5Matrix,
    /// `h_1..h_4`.
    pub h: [Gf5Matrix; 4],
}

impl LineElements {
    pub fn t(&self, i: i64) -> &Gf5Matrix {
        &self.t[crate::apartment::idx7(i) - 1]
    }
}

/// Assembled construction: base matrices, calibrated η, `K`, and the 36 root elements.
#[derive(Clone, Debug)]
pub struct GeneratorBundle {
    pub alpha: Gf5Matrix,
    pub beta: Gf5Matrix,
    pub gamma: Gf5Matrix,
    pub eta: Gf5Matrix,
    pub f: Gf5Matrix,
    pub xi: Gf5Matrix,
    pub k: KModel,
    pub roots: BTreeMap<OrientedLine, Gf5Matrix>,
    pub calibration: CalibrationReport,
}

/// Filter names used by [`calibrate_eta`], in evaluation order.
pub const CALIBRATION_FILTERS: [&str; 3] = ["eta^5 = 0", "xi f xi^T = f", "hexagon relations at (1a,2b)"];

/// Chooses the unique completion of the printed η passing every filter.
pub fn calibrate_eta(
    t: &EtaTranscription,
    base: &BaseMatrices,
    k: &KModel,
) -> Result<(Gf5Matrix, CalibrationReport), GenError> {
    let cands = t.candidates()?;
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut outcomes = Vec::new();
    let mut survivors: Vec<(Vec<Completion>, Gf5Matrix)> = Vec::new();
    let base_cfg = Configuration::base();
    for fills in &cands {
        let eta = t.complete(fills)?;
        let key = eta.packed_key();
        if let Some(&first) = seen.get(&key) {
            let prev: &CandidateOutcome = &outcomes[first];
            let rejected_by = prev.rejected_by.clone();
            outcomes.push(CandidateOutcome { fills: fills.clone(), rejected_by });
            continue;
        }
        seen.insert(key, outcomes.len());
        let rejected_by = match eta.exp5() {
            Err(_) => Some(CALIBRATION_FILTERS[0]),
            Ok(xi) if &(&xi * &base.f) * &xi.transpose() != base.f => Some(CALIBRATION_FILTERS[1]),
            Ok(xi) => {
                let hex = HexGenerators::new(base_cfg, |l| root_from(&xi, k, l));
                let passes = |conv| -> Result<bool, GenError> {
                    Ok(relations::evaluate(&hex, conv, |_| true)?.iter().all(|o| o.holds))
                };
                if passes(CommutatorConvention::InverseFirst)? || passes(CommutatorConvention::InverseLast)? {
                    survivors.push((fills.clone(), eta));
                    None
                } else {
                    Some(CALIBRATION_FILTERS[2])
                }
            }
        };
        outcomes.push(CandidateOutcome { fills: fills.clone(), rejected_by: rejected_by.map(String::from) });
    }
    match survivors.len() {
        0 => Err(GenError::NoSurvivor(outcomes)),
        1 => {
            let (chosen, eta) = survivors.pop().expect("one survivor");
            let report =
                CalibrationReport { candidates: cands.len(), distinct_candidates: seen.len(), outcomes, chosen };
            Ok((eta, report))
        }
        _ => Err(GenError::Ambiguous(survivors.into_iter().map(|s| s.0).collect())),
    }
}

impl GeneratorBundle {
    /// Full construction from the printed data.
    pub fn build() -> Result<GeneratorBundle, GenError> {
        Self::build_from(&EtaTranscription::printed())
    }

    pub fn build_from(t: &EtaTranscription) -> Result<GeneratorBundle, GenError> {
        let base = build_base();
        let k = KModel::build(&base.alpha, &base.beta, &base.gamma)?;
        let (eta, calibration) = calibrate_eta(t, &base, &k)?;
        let xi = eta.exp5()?;
        let roots = crate::apartment::OrientedLine::all()
            .into_iter()
            .map(|l| {
                let r = root_from(&xi, &k, &l);
                (l, r)
            })
            .collect();
        let BaseMatrices { alpha, beta, gamma, f } = base;
        Ok(GeneratorBundle { alpha, beta, gamma, eta, f, xi, k, roots, calibration })
    }

    pub fn k_matrix(&self, w: &WeylElem) -> Result<&Gf5Matrix, GenError> {
        self.k.matrix(w)
    }

    pub fn root(&self, l: &OrientedLine) -> &Gf5Matrix {
        &self.roots[l]
    }

    pub fn hex(&self, l: &OrientedLine) -> HexGenerators {
        HexGenerators::new(Configuration::of(l), |m| self.root(m).clone())
    }

    /// `R(L) = x_{L1}² x_{L6}⁴ x_{L1}²` computed from the star alone.
    pub fn r_big(&self, l: &OrientedLine) -> Gf5Matrix {
        let c = Configuration::of(l);
        let (a, b) = (self.root(&c.big(1)), self.root(&c.big(6)));
        let a2 = a * a;
        Gf5Matrix::product(DIM, [&a2, &b.pow(4), &a2])
    }

    /// `r(L) = x_{l1}² x_{l6}³ x_{l1}²`.
    pub fn r_small(&self, l: &OrientedLine) -> Gf5Matrix {
        let c = Configuration::of(l);
        let (a, b) = (self.root(&c.small(1)), self.root(&c.small(6)));
        let a2 = a * a;
        Gf5Matrix::product(DIM, [&a2, &b.pow(3), &a2])
    }

    pub fn derived(&self, l: &OrientedLine) -> LineElements {
        let hex = self.hex(l);
        let mu1 = self.root(&hex.config.m1).clone();
        let mu6 = self.root(&hex.config.m6).clone();
        let t = std::array::from_fn(|k| hex.torus(k as i64 + 1));
        let (l1, l6) = (hex.small(1), hex.small(6));
        let p = |m: &Gf5Matrix, e: u64| m.pow(e);
        let r_big = Gf5Matrix::product(DIM, [&p(hex.big(1), 2), &p(hex.big(6), 4), &p(hex.big(1), 2)]);
        let r_small = Gf5Matrix::product(DIM, [&p(l1, 2), &p(l6, 3), &p(l1, 2)]);
        let h = [
            Gf5Matrix::product(DIM, [&mu1, &p(l1, 4), &p(&mu1, 4), &p(l1, 3)]),
            Gf5Matrix::product(DIM, [&p(&mu1, 4), l1]),
            Gf5Matrix::product(DIM, [&p(l6, 2), &p(&mu6, 4), &p(l6, 4)]),
            Gf5Matrix::product(DIM, [&p(l6, 2), &p(&mu6, 2)]),
        ];
        LineElements { hex, mu1, mu6, t, r_big, r_small, h }
    }

    /// The generators `n_1..n_4` of the torus normalizer.
    pub fn n_generators(&self) -> [Gf5Matrix; 4] {
        let x = |s: &str| self.root(&s.parse().expect("static line literal")).clone();
        let (a, b, c, d) = (x("(3a,4b)"), x("(4a,3b)"), x("(1b,2c)"), x("(2c,1a)"));
        let n2 = Gf5Matrix::product(DIM, [&a, &b, &a]);
        let c3 = c.pow(3);
        let n4 = Gf5Matrix::product(DIM, [&c3, &d, &c3, &a, &b, &a]);
        [self.beta.clone(), n2, self.gamma.clone(), n4]
    }

    /// `n1 n4 n1⁻¹ n4` and `n1⁻¹ n4 n1 n4`.
    pub fn torus_words(&self) -> [Gf5Matrix; 2] {
        let [n1, _, _, n4] = self.n_generators();
        let n1i = n1.inverse().expect("invertible");
        [
            Gf5Matrix::product(DIM, [&n1, &n4, &n1i, &n4]),
            Gf5Matrix::product(DIM, [&n1i, &n4, &n1, &n4]),
        ]
    }
}

/// The printed 3×3 images `Λ*_1..Λ*_6` of the star generators.
pub fn star_image_table() -> [Gf5Matrix; 6] {
    let e = |r: usize, c: usize, v: i64| {
        let mut m = Gf5Matrix::identity(3);
        m.set(r, c, v);
        m
    };
    [e(1, 2, 3), e(2, 0, 3), e(1, 0, 1), e(0, 1, 3), e(0, 2, 1), e(2, 1, 1)]
}

/// The diagonal matrices `t*_1..t*_6`.
pub fn star_torus_table() -> [Gf5Matrix; 6] {
    [[1, 2, 3], [3, 1, 2], [3, 2, 1], [2, 3, 1], [2, 1, 3], [1, 3, 2]].map(|d| Gf5Matrix::diag(&d))
}

/// Star images packaged as a relation family; `λ` entries are unused.
pub struct StarImages {
    pub big: [Gf5Matrix; 6],
    pub big_inv: [Gf5Matrix; 6],
}

impl StarImages {
    pub fn printed() -> Self {
        let big = star_image_table();
        let big_inv = std::array::from_fn(|k| big[k].pow(4));
        StarImages { big, big_inv }
    }

    /// `t*_i` evaluated from the torus word.
    pub fn torus(&self, i: i64) -> Gf5Matrix {
        let a = &self.big[crate::apartment::idx7(i) - 1];
        let b = &self.big[crate::apartment::idx7(-i) - 1];
        Gf5Matrix::product(3, [a, &(b * b), &(a * a), b])
    }
}

impl HexFamily for StarImages {
    fn dim(&self) -> usize {
        3
    }
    fn get(&self, big: bool, k: usize) -> &Gf5Matrix {
        assert!(big, "star images carry no hexagon side generators");
        &self.big[k - 1]
    }
    fn get_inv(&self, big: bool, k: usize) -> &Gf5Matrix {
        assert!(big, "star images carry no hexagon side generators");
        &self.big_inv[k - 1]
    }
}
