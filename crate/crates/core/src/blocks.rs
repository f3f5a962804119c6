//! The fixed partition of the 111 coordinates into 16 sections, and the shape
//! classes of matrices relative to it.
//!
//! Sections are numbered 1..=16 and coordinates 1..=111 in the public
//! vocabulary; ranges returned for slicing are 0-based.

use crate::gf5::{Gf5Matrix, Gf5Scalar, LinalgError};
use std::ops::Range;
use thiserror::Error;

pub const DIM: usize = 111;
pub const SECTIONS: usize = 16;

const STARTS: [usize; SECTIONS] = [1, 10, 16, 22, 28, 35, 42, 49, 56, 63, 70, 77, 84, 91, 98, 105];
const LENGTHS: [usize; SECTIONS] = [9, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error("section index {0} outside 1..=16")]
    SectionOutOfRange(usize),
    #[error("section {from} (length {from_len}) cannot map to section {to} (length {to_len})")]
    Inadmissible { from: usize, to: usize, from_len: usize, to_len: usize },
    #[error("section {0} appears twice in the cycle list")]
    RepeatedSection(usize),
    #[error("matrix is not block monomial")]
    NotBlockMonomial,
    #[error("expected a {DIM}x{DIM} matrix, found {0}x{1}")]
    WrongShape(usize, usize),
    #[error("bad section notation '{0}'")]
    Notation(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The section scheme and its refinement into 58 minisections.
#[derive(Clone, Copy, Debug, Default)]
pub struct SectionScheme;

impl SectionScheme {
    fn check(i: usize) -> Result<(), BlockError> {
        if (1..=SECTIONS).contains(&i) {
            Ok(())
        } else {
            Err(BlockError::SectionOutOfRange(i))
        }
    }

    /// First coordinate of section `i` (1-based).
    pub fn start(i: usize) -> usize {
        STARTS[i - 1]
    }

    /// Last coordinate of section `i` (1-based, inclusive).
    pub fn end(i: usize) -> usize {
        STARTS[i - 1] + LENGTHS[i - 1] - 1
    }

    pub fn len(i: usize) -> usize {
        LENGTHS[i - 1]
    }

    /// 0-based coordinate range of section `i`.
    pub fn range(i: usize) -> Range<usize> {
        STARTS[i - 1] - 1..STARTS[i - 1] - 1 + LENGTHS[i - 1]
    }

    /// Section containing the 0-based coordinate `k`.
    pub fn section_of(k: usize) -> usize {
        (1..=SECTIONS).rev().find(|&i| STARTS[i - 1] - 1 <= k).expect("k < 111")
    }

    /// Minisection lengths of section `i`.
    pub fn mini_cuts(i: usize) -> &'static [usize] {
        match i {
            1 => &[1, 1, 1, 6],
            2..=4 => &[2, 4],
            _ => &[1, 2, 2, 2],
        }
    }

    /// All 58 minisections as 0-based ranges, in coordinate order.
    pub fn minisections() -> Vec<Range<usize>> {
        let mut out = Vec::with_capacity(58);
        for i in 1..=SECTIONS {
            let mut s = Self::range(i).start;
            for &c in Self::mini_cuts(i) {
                out.push(s..s + c);
                s += c;
            }
        }
        out
    }
}

fn check_shape(x: &Gf5Matrix) -> Result<(), BlockError> {
    if x.shape() == (DIM, DIM) {
        Ok(())
    } else {
        Err(BlockError::WrongShape(x.rows(), x.cols()))
    }
}

/// The `(i, j)` block of a 111×111 matrix.
pub fn block(x: &Gf5Matrix, i: usize, j: usize) -> Result<Gf5Matrix, BlockError> {
    SectionScheme::check(i)?;
    SectionScheme::check(j)?;
    check_shape(x)?;
    Ok(x.submatrix(SectionScheme::range(i), SectionScheme::range(j)))
}

/// Assembles a 111×111 matrix from `(i, j, block)` triples; unlisted blocks are zero.
pub fn assemble(blocks: &[(usize, usize, Gf5Matrix)]) -> Result<Gf5Matrix, BlockError> {
    let mut m = Gf5Matrix::zeros(DIM, DIM);
    for (i, j, b) in blocks {
        SectionScheme::check(*i)?;
        SectionScheme::check(*j)?;
        if b.shape() != (SectionScheme::len(*i), SectionScheme::len(*j)) {
            return Err(LinalgError::DimensionMismatch {
                op: "assemble",
                lhs: (SectionScheme::len(*i), SectionScheme::len(*j)),
                rhs: b.shape(),
            }
            .into());
        }
        m.paste(SectionScheme::range(*i).start, SectionScheme::range(*j).start, b);
    }
    Ok(m)
}

/// Turns a cycle list over `1..=n` into an image table (`img[k-1]` = image of `k`).
pub fn cycles_to_images(n: usize, cycles: &[&[usize]]) -> Result<Vec<usize>, BlockError> {
    let mut img: Vec<usize> = (1..=n).collect();
    let mut seen = vec![false; n + 1];
    for c in cycles {
        for (k, &a) in c.iter().enumerate() {
            if a == 0 || a > n {
                return Err(BlockError::SectionOutOfRange(a));
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(BlockError::RepeatedSection(a));
            }
            img[a - 1] = c[(k + 1) % c.len()];
        }
    }
    Ok(img)
}

/// Section permutation (images, 1-based) as a 111×111 matrix; section `i` maps onto section `img[i-1]`.
pub fn section_perm_matrix(img: &[usize]) -> Result<Gf5Matrix, BlockError> {
    let mut perm = vec![0; DIM];
    for i in 1..=SECTIONS {
        let j = img[i - 1];
        SectionScheme::check(j)?;
        if SectionScheme::len(i) != SectionScheme::len(j) {
            return Err(BlockError::Inadmissible {
                from: i,
                to: j,
                from_len: SectionScheme::len(i),
                to_len: SectionScheme::len(j),
            });
        }
        for (a, b) in SectionScheme::range(i).zip(SectionScheme::range(j)) {
            perm[a] = b;
        }
    }
    Ok(Gf5Matrix::permutation(&perm))
}

/// Block permutation matrix for a list of section cycles, e.g. `[[2, 3]]`.
pub fn block_perm_matrix(cycles: &[&[usize]]) -> Result<Gf5Matrix, BlockError> {
    section_perm_matrix(&cycles_to_images(SECTIONS, cycles)?)
}

/// Coordinate permutation matrix for cycles over `1..=n`.
pub fn index_perm_matrix(n: usize, cycles: &[&[usize]]) -> Result<Gf5Matrix, BlockError> {
    let img = cycles_to_images(n, cycles)?;
    Ok(Gf5Matrix::permutation(&img.iter().map(|k| k - 1).collect::<Vec<_>>()))
}

/// Shape class of a 111×111 matrix relative to the sections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProfile {
    pub is_monomial: bool,
    pub is_diagonal: bool,
    pub is_scalar: bool,
    /// `support[i-1] = Some(j)` when block row `i` has its only nonzero block in
    /// column `j` and that column has no other nonzero block.
    pub support: [Option<usize>; SECTIONS],
    /// Per-section scalar when block scalar.
    pub scalars: Option<[Gf5Scalar; SECTIONS]>,
}

impl BlockProfile {
    /// Support permutation in cycle notation, omitting fixed points, e.g. `(1,16,4,10)(2,13,3,7)`.
    pub fn support_cycles(&self) -> String {
        let mut seen = [false; SECTIONS + 1];
        let mut out = String::new();
        for s in 1..=SECTIONS {
            if seen[s] || self.support[s - 1] == Some(s) {
                continue;
            }
            let mut cyc = vec![s];
            seen[s] = true;
            let mut cur = s;
            while let Some(n) = self.support[cur - 1] {
                if n == s || seen[n] {
                    break;
                }
                seen[n] = true;
                cyc.push(n);
                cur = n;
            }
            if cyc.len() > 1 {
                let parts: Vec<String> = cyc.iter().map(|c| c.to_string()).collect();
                out.push_str(&format!("({})", parts.join(",")));
            }
        }
        out
    }
}

/// Classifies a 111×111 matrix by its nonzero block pattern.
pub fn classify(x: &Gf5Matrix) -> Result<BlockProfile, BlockError> {
    check_shape(x)?;
    let mut nz = [[false; SECTIONS]; SECTIONS];
    for (i, row) in nz.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = SectionScheme::range(i + 1)
                .any(|r| SectionScheme::range(j + 1).any(|c| x.get(r, c) != 0));
        }
    }
    let mut support = [None; SECTIONS];
    for i in 0..SECTIONS {
        let cols: Vec<usize> = (0..SECTIONS).filter(|&j| nz[i][j]).collect();
        if let [j] = cols[..] {
            if (0..SECTIONS).filter(|&k| nz[k][j]).count() == 1 {
                support[i] = Some(j + 1);
            }
        }
    }
    let is_monomial = support.iter().all(Option::is_some);
    let is_diagonal = is_monomial && (0..SECTIONS).all(|i| support[i] == Some(i + 1));
    let mut scalars = None;
    if is_diagonal {
        let mut sc = [Gf5Scalar::ZERO; SECTIONS];
        let mut ok = true;
        for (i, s) in sc.iter_mut().enumerate() {
            let r = SectionScheme::range(i + 1);
            let v = x.get(r.start, r.start);
            ok &= r.clone().all(|a| r.clone().all(|b| x.get(a, b) == if a == b { v } else { 0 }));
            *s = Gf5Scalar::new(v as i64);
        }
        if ok {
            scalars = Some(sc);
        }
    }
    Ok(BlockProfile { is_monomial, is_diagonal, is_scalar: scalars.is_some(), support, scalars })
}

/// Unique factorization `x = x_D · x_P` of a block monomial matrix into a block
/// diagonal part and a block permutation.
pub fn monomial_decompose(x: &Gf5Matrix) -> Result<(Gf5Matrix, Gf5Matrix), BlockError> {
    let p = classify(x)?;
    if !p.is_monomial {
        return Err(BlockError::NotBlockMonomial);
    }
    let img: Vec<usize> = p.support.iter().map(|s| s.expect("monomial")).collect();
    let xp = section_perm_matrix(&img)?;
    let xd = x * &xp.transpose();
    Ok((xd, xp))
}

/// True iff every minisection row and column carries exactly one nonzero miniblock.
pub fn miniblock_monomial(x: &Gf5Matrix) -> Result<bool, BlockError> {
    check_shape(x)?;
    let mini = SectionScheme::minisections();
    let m = mini.len();
    let mut row_count = vec![0usize; m];
    let mut col_count = vec![0usize; m];
    for (a, ra) in mini.iter().enumerate() {
        for (b, rb) in mini.iter().enumerate() {
            if ra.clone().any(|r| rb.clone().any(|c| x.get(r, c) != 0)) {
                row_count[a] += 1;
                col_count[b] += 1;
            }
        }
    }
    Ok(row_count.iter().chain(&col_count).all(|&c| c == 1))
}

/// Writes a vector as `[1.3..42]_5 [1.3..13]_7`, one bracket per nonzero
/// section, with `.` for zero.
pub fn format_sections(v: &[u8]) -> String {
    let mut parts = Vec::new();
    for i in 1..=SECTIONS {
        let seg = &v[SectionScheme::range(i)];
        if seg.iter().any(|&x| x != 0) {
            let digits: String = seg.iter().map(|&x| if x == 0 { '.' } else { (b'0' + x) as char }).collect();
            parts.push(format!("[{digits}]_{i}"));
        }
    }
    parts.join(" ")
}

/// Inverse of [`format_sections`].
pub fn parse_sections(s: &str) -> Result<Vec<u8>, BlockError> {
    let bad = || BlockError::Notation(s.to_string());
    let mut v = vec![0u8; DIM];
    for part in s.split_whitespace() {
        let (digits, sec) = part.strip_prefix('[').and_then(|p| p.split_once("]_")).ok_or_else(bad)?;
        let i: usize = sec.parse().map_err(|_| bad())?;
        SectionScheme::check(i)?;
        if digits.len() != SectionScheme::len(i) {
            return Err(bad());
        }
        for (k, ch) in digits.chars().enumerate() {
            v[SectionScheme::range(i).start + k] = match ch {
                '.' => 0,
                '1'..='4' => ch as u8 - b'0',
                _ => return Err(bad()),
            };
        }
    }
    Ok(v)
}

/// Rows of a matrix in section notation.
pub fn format_rows(m: &Gf5Matrix) -> Vec<String> {
    (0..m.rows()).map(|r| format_sections(m.row(r))).collect()
}

/// Matrix whose rows are given in section notation.
pub fn parse_rows(rows: &[&str]) -> Result<Gf5Matrix, BlockError> {
    let mut data = Vec::with_capacity(rows.len() * DIM);
    for r in rows {
        data.extend(parse_sections(r)?);
    }
    Ok(Gf5Matrix::from_vec(rows.len(), DIM, data)?)
}
