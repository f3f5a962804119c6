//! Plain text matrix format: a header line `rows cols`, then one line per row
//! of digits `0`..`4` with no separators.

use super::Gf5Matrix;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatrixFormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn perr(line: usize, msg: impl Into<String>) -> MatrixFormatError {
    MatrixFormatError::Parse { line, msg: msg.into() }
}

pub fn format_matrix(m: &Gf5Matrix) -> String {
    let mut s = String::with_capacity(m.rows() * (m.cols() + 1) + 16);
    s.push_str(&format!("{} {}\n", m.rows(), m.cols()));
    for i in 0..m.rows() {
        s.extend(m.row(i).iter().map(|&d| (b'0' + d) as char));
        s.push('\n');
    }
    s
}

pub fn parse_matrix(text: &str) -> Result<Gf5Matrix, MatrixFormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let (_, header) = lines.next().ok_or_else(|| perr(1, "missing header"))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| perr(1, format!("bad dimension {t:?}"))))
        .collect::<Result<_, _>>()?;
    let [rows, cols] = dims[..] else {
        return Err(perr(1, "header must be `rows cols`"));
    };
    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let (ln, line) = lines.next().ok_or_else(|| perr(r + 2, "missing row"))?;
        if line.len() != cols {
            return Err(perr(ln, format!("expected {cols} digits, found {}", line.len())));
        }
        for ch in line.bytes() {
            match ch {
                b'0'..=b'4' => data.push(ch - b'0'),
                _ => return Err(perr(ln, format!("invalid digit {:?}", ch as char))),
            }
        }
    }
    if let Some((ln, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(perr(ln, format!("trailing content {extra:?}")));
    }
    Ok(Gf5Matrix::from_vec(rows, cols, data).expect("length checked"))
}

pub fn write_matrix(m: &Gf5Matrix, path: impl AsRef<Path>) -> Result<(), MatrixFormatError> {
    std::fs::write(path, format_matrix(m))?;
    Ok(())
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<Gf5Matrix, MatrixFormatError> {
    parse_matrix(&std::fs::read_to_string(path)?)
}
