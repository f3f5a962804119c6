use super::super::char_table;
use super::super::character::{multiplicity, table_columns};
use super::super::cyclotomic::CyclotomicValue;
use super::super::report::CheckResult;
use super::super::Context;
use super::guarded;
use serde_json::json;
use std::collections::BTreeMap;

/// Expected constituent degrees with multiplicity.
pub const DEGREES: [i64; 10] = [1, 1, 1, 6, 6, 12, 12, 24, 24, 24];

pub fn character(ctx: &Context) -> Vec<CheckResult> {
    guarded("character.classes", || {
        let n = ctx.normalizer()?;
        let order = n.order() as i64;
        let classes = ctx.classes()?;
        let cols = table_columns(2304);
        let irr = char_table::irreducibles();
        let mut out = vec![CheckResult::new("character.classes_30", classes.len() == 30, json!({ "classes": classes.len() }))];

        let col_sizes: Vec<i64> = cols.iter().map(|c| c.size).collect();
        let orthonormal = irr.iter().enumerate().all(|(a, x)| {
            irr.iter().enumerate().all(|(b, y)| multiplicity(&col_sizes, x, y, 2304) == Some((a == b) as i64))
        });
        out.push(CheckResult::new(
            "character.table_orthogonality",
            orthonormal && col_sizes.iter().sum::<i64>() == 2304,
            json!({ "class_sizes": col_sizes }),
        ));

        let identity = classes.iter().find(|c| c.order == 1).map(|c| c.value);
        out.push(CheckResult::new(
            "character.psi_identity_111",
            identity == Some(CyclotomicValue::int(111)),
            json!({ "value": identity }),
        ));

        // Match classes by (order, size, value).
        type Key = (usize, i64, CyclotomicValue);
        let mut computed: BTreeMap<Key, Vec<usize>> = BTreeMap::new();
        for (k, c) in classes.iter().enumerate() {
            computed.entry((c.order, c.size as i64, c.value)).or_default().push(k);
        }
        let mut assignment: Vec<Option<usize>> = vec![None; 30];
        let mut unmatched = Vec::new();
        for (j, col) in cols.iter().enumerate() {
            let key = (col.order, col.size, CyclotomicValue::int(col.psi));
            match computed.get_mut(&key).and_then(Vec::pop) {
                Some(k) => assignment[j] = Some(k),
                None => unmatched.push(json!({ "class": col.name, "order": col.order, "size": col.size, "psi": col.psi })),
            }
        }
        let leftover: Vec<_> = computed
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|((o, s, v), ks)| json!({ "order": o, "size": s, "value": v.to_string(), "count": ks.len() }))
            .collect();
        out.push(CheckResult::new(
            "character.psi_matches_table",
            unmatched.is_empty() && leftover.is_empty(),
            json!({ "unmatched_columns": unmatched, "unmatched_classes": leftover }),
        ));

        let psi: Vec<CyclotomicValue> = (0..30)
            .map(|j| assignment[j].map_or(CyclotomicValue::int(cols[j].psi), |k| classes[k].value))
            .collect();
        let sizes: Vec<i64> =
            (0..30).map(|j| assignment[j].map_or(cols[j].size, |k| classes[k].size as i64)).collect();
        let mults: Vec<Option<i64>> = irr.iter().map(|chi| multiplicity(&sizes, &psi, chi, order)).collect();
        out.push(CheckResult::new(
            "character.multiplicities_integral",
            mults.iter().all(Option::is_some),
            json!({ "multiplicities": mults }),
        ));

        let mut constituents: Vec<i64> = Vec::new();
        let mut twice = Vec::new();
        for (chi, m) in irr.iter().zip(&mults) {
            let m = m.unwrap_or(0);
            for _ in 0..m {
                constituents.push(chi[0].a);
            }
            if m > 1 {
                twice.push((chi[0].a, m));
            }
        }
        constituents.sort_unstable();
        let dim: i64 = constituents.iter().sum();
        out.push(CheckResult::new(
            "character.decomposition",
            constituents == DEGREES && twice == [(24, 2)] && dim == 111,
            json!({ "degrees": constituents, "sum": dim, "repeated": twice }),
        ));
        Ok(out)
    })
}
