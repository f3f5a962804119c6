use super::{GenError, GeneratorBundle, HexGenerators};
use crate::apartment::base_line;
use crate::blocks::{SectionScheme, DIM};
use crate::gf5::{Gf5Matrix, Subspace};
use crate::verifier::closure::{closure_labeled, GroupClosure};

/// Expected generator of the fixed space: `(1,0,3,0,0,4,2)` on section 5.
pub const EXPECTED_FIX_VECTOR: [u8; 7] = [1, 0, 3, 0, 0, 4, 2];

const SYLOW_ORDER: usize = 15625;

pub fn expected_fix_space() -> Subspace {
    let mut v = Gf5Matrix::zeros(1, DIM);
    for (k, &x) in EXPECTED_FIX_VECTOR.iter().enumerate() {
        v.set(0, SectionScheme::range(5).start + k, x as i64);
    }
    Subspace::row_space(&v)
}

/// A Sylow 5-subgroup spanned by six of the base-line hexagon generators.
#[derive(Clone, Debug)]
pub struct SylowResult {
    /// Labels such as `L1`, `l4`.
    pub labels: Vec<String>,
    pub generators: Vec<Gf5Matrix>,
    pub group: GroupClosure,
    pub fixed: Subspace,
    /// Subsets examined before the match.
    pub examined: usize,
}

fn label(k: usize) -> String {
    if k < 6 { format!("L{}", k + 1) } else { format!("l{}", k - 5) }
}

fn six_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == 6 {
            out.push(cur.clone());
            return;
        }
        for k in start..n {
            cur.push(k);
            rec(k + 1, n, cur, out);
            cur.pop();
        }
    }
    rec(0, n, &mut cur, &mut out);
    out
}

/// Generators `k` and `k'` index opposite lines when their labels sum to 7.
fn has_opposite_pair(s: &[usize]) -> bool {
    s.iter().any(|&a| s.iter().any(|&b| a < b && a / 6 == b / 6 && a % 6 + b % 6 == 5))
}

impl GeneratorBundle {
    /// Searches the 6-subsets of `Λ1..Λ6, λ1..λ6` at `(1a,2b)` in lexicographic
    /// order. Subsets containing an opposite pair generate `SL2(5)` and are
    /// skipped first; the fallback pass tries every subset. A match consists
    /// of generators normalizing the root group of `(1a,2b)`, has the expected
    /// fixed vector, and closes at order 5⁶.
    pub fn sylow5(&self) -> Result<SylowResult, GenError> {
        let hex: HexGenerators = self.hex(&base_line());
        let gens = hex.all();
        let x = self.root(&base_line());
        let normalizes: Vec<bool> = gens
            .iter()
            .map(|g| {
                let y = x.conj_with(g, &g.pow(4));
                (1..5).any(|e| y == x.pow(e))
            })
            .collect();
        let target = expected_fix_space();
        let all = six_subsets(12);
        let (pref, rest): (Vec<_>, Vec<_>) = all.into_iter().partition(|s| !has_opposite_pair(s));
        let mut examined = 0;
        for s in pref.iter().chain(rest.iter()) {
            examined += 1;
            if !s.iter().all(|&k| normalizes[k]) {
                continue;
            }
            let chosen: Vec<&Gf5Matrix> = s.iter().map(|&k| gens[k]).collect();
            let fixed = Subspace::fixed_space(&chosen)?;
            if fixed != target {
                continue;
            }
            let labels: Vec<String> = s.iter().map(|&k| label(k)).collect();
            let lrefs: Vec<&str> = labels.iter().map(String::as_str).collect();
            if let Ok(group) = closure_labeled(&chosen, &lrefs, SYLOW_ORDER) {
                if group.order() == SYLOW_ORDER {
                    return Ok(SylowResult {
                        labels,
                        generators: chosen.into_iter().cloned().collect(),
                        group,
                        fixed,
                        examined,
                    });
                }
            }
        }
        Err(GenError::SylowNotFound)
    }
}
