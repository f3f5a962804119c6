use super::super::closure::closure_enumerate;
use super::super::report::CheckResult;
use super::super::Context;
use super::{eigen_row, from_eigen_row, guarded};
use crate::apartment::{base_line, OrientedLine};
use crate::gf5::Gf5Matrix;
use serde_json::json;
use std::collections::BTreeSet;

/// Printed eigenvalue rows of `t_1(1a,2b)` and `t_2(1a,2b)`.
pub const TABLE_T1: &str = "1144132422123433";
pub const TABLE_T2: &str = "1414213242312343";

/// Printed conjugates `t_1^α, t_2^α, t_1^β, t_2^β, t_1^γ, t_2^γ` with their words
/// as exponents `(a, b)` of `t_1^a t_2^b`.
pub const CONJUGATE_TABLE: [(&str, &str, &str, (u64, u64)); 6] = [
    ("t1", "alpha", "1144433123422132", (1, 2)),
    ("t2", "alpha", "1414242213343312", (2, 1)),
    ("t1", "beta", "1414312343213242", (0, 3)),
    ("t2", "beta", "1441334231224321", (1, 3)),
    ("t1", "gamma", TABLE_T1, (1, 0)),
    ("t2", "gamma", TABLE_T2, (0, 1)),
];

/// Rows and word identities of the conjugate table for a given pair `t1, t2`.
fn conjugate_checks(ctx: &Context, prefix: &str, t1: &Gf5Matrix, t2: &Gf5Matrix) -> Vec<CheckResult> {
    let b = &ctx.bundle;
    let mut out = Vec::new();
    for (t, k, row, (e1, e2)) in CONJUGATE_TABLE {
        let (tm, km) = (if t == "t1" { t1 } else { t2 }, match k {
            "alpha" => &b.alpha,
            "beta" => &b.beta,
            _ => &b.gamma,
        });
        let name = format!("{prefix}.conjugate.{t}_{k}");
        match tm.conj(km) {
            Ok(c) => {
                let got = eigen_row(&c);
                out.push(CheckResult::new(
                    format!("{name}.row"),
                    got.as_deref() == Some(row),
                    json!({ "computed": got, "printed": row }),
                ));
                let word = &t1.pow(e1) * &t2.pow(e2);
                out.push(CheckResult::new(
                    format!("{name}.word"),
                    c == word,
                    json!({ "word": format!("t1^{e1} t2^{e2}"), "word_row": eigen_row(&word), "conjugate_row": got }),
                ));
            }
            Err(e) => out.push(CheckResult::error(name, e)),
        }
    }
    out
}

fn torus_set(ctx: &Context, l: &OrientedLine) -> Result<BTreeSet<Vec<u8>>, String> {
    let hex = ctx.bundle.hex(l);
    let ts: Vec<Gf5Matrix> = (1..=6).map(|i| hex.torus(i)).collect();
    let g = closure_enumerate(&ts.iter().collect::<Vec<_>>(), 64).map_err(|e| e.to_string())?;
    Ok(g.elements().map(|m| m.packed_key()).collect())
}

pub fn torus(ctx: &Context) -> Vec<CheckResult> {
    let bl = base_line();
    let d = ctx.bundle.derived(&bl);
    let mut out = Vec::new();
    let rows: Vec<Option<String>> = (1..=6).map(|i| eigen_row(d.t(i))).collect();
    out.push(CheckResult::new(
        "torus.block_scalar",
        rows.iter().all(Option::is_some),
        json!({ "t1..t6": rows }),
    ));
    for (i, printed) in [(1, TABLE_T1), (2, TABLE_T2)] {
        let got = &rows[i - 1];
        out.push(CheckResult::new(
            format!("torus.table.t{i}"),
            got.as_deref() == Some(printed),
            json!({ "computed": got, "printed": printed }),
        ));
    }
    out.extend(conjugate_checks(ctx, "torus", d.t(1), d.t(2)));

    out.extend(guarded("torus.lines_equal", || {
        let base = torus_set(ctx, &bl)?;
        let mut differing = Vec::new();
        for l in OrientedLine::all() {
            if torus_set(ctx, &l)? != base {
                differing.push(l.to_string());
            }
        }
        Ok(vec![CheckResult::new("torus.lines_equal", differing.is_empty(), json!({ "differing": differing }))])
    }));

    out.extend(guarded("torus.order_16", || {
        let t = ctx.torus()?;
        let rows: BTreeSet<Option<String>> = t.iter().map(eigen_row).collect();
        let all_scalar = rows.iter().all(Option::is_some);
        Ok(vec![
            CheckResult::new("torus.order_16", t.len() == 16, json!({ "order": t.len() })),
            CheckResult::new(
                "torus.eigenvalue_combinations_16",
                all_scalar && rows.len() == 16,
                json!({ "distinct_rows": rows.len(), "block_scalar": all_scalar }),
            ),
        ])
    }));

    out.extend(guarded("torus.root_groups_normalized", || {
        let t = ctx.torus()?;
        let mut bad = Vec::new();
        for (l, x) in &ctx.bundle.roots {
            let powers: Vec<Gf5Matrix> = (1..5).map(|e| x.pow(e)).collect();
            for s in t {
                let y = x.conj(s).map_err(|e| e.to_string())?;
                if !powers.contains(&y) {
                    bad.push(l.to_string());
                    break;
                }
            }
        }
        Ok(vec![CheckResult::new("torus.root_groups_normalized", bad.is_empty(), json!({ "failing_lines": bad }))])
    }));

    // The printed rows read as matrices, tested against the R-word expressions
    // and the conjugate table on their own.
    let (p1, p2) = (from_eigen_row(TABLE_T1), from_eigen_row(TABLE_T2));
    let rw = |a: &str, b: &str| -> Result<Gf5Matrix, String> {
        let x = ctx.bundle.r_big(&super::line(a)).inverse().map_err(|e| e.to_string())?;
        Ok(&x * &ctx.bundle.r_big(&super::line(b)))
    };
    out.extend(guarded("torus.printed.r_words", || {
        let (w1, w2) = (rw("(4a,1b)", "(1a,4b)")?, rw("(2a,4b)", "(4a,2b)")?);
        let in_t = ctx.torus()?.iter().filter(|m| **m == p1 || **m == p2).count();
        Ok(vec![
            CheckResult::new(
                "torus.printed.r_words",
                w1 == p1 && w2 == p2,
                json!({ "R(4a,1b)^-1 R(1a,4b)": eigen_row(&w1), "R(2a,4b)^-1 R(4a,2b)": eigen_row(&w2) }),
            ),
            CheckResult::new("torus.printed.in_torus", in_t == 2, json!({ "found": in_t })),
        ])
    }));
    out.extend(conjugate_checks(ctx, "torus.printed", &p1, &p2));
    out
}
