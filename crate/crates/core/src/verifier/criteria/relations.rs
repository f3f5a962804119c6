use super::super::closure::closure_enumerate;
use super::super::report::CheckResult;
use super::super::Context;
use super::{guarded, line};
use crate::apartment::{base_line, Configuration, OrientedLine, WeylElem};
use crate::blocks::{block, SECTIONS};
use crate::generators::{relations, CommutatorConvention, GeneratorBundle, StarImages, HEX_RELATIONS};
use crate::gf5::Gf5Matrix;
use serde::Serialize;
use serde_json::json;

pub fn base(ctx: &Context) -> Vec<CheckResult> {
    let b = &ctx.bundle;
    let one = Gf5Matrix::identity(b.alpha.rows());
    let order = |m: &Gf5Matrix| m.element_order(12).ok();
    let (a, be, g) = (&b.alpha, &b.beta, &b.gamma);
    let mut out = vec![
        CheckResult::new("base.alpha_order_2", order(a) == Some(2), json!({ "order": order(a) })),
        CheckResult::new("base.beta_order_3", order(be) == Some(3), json!({ "order": order(be) })),
        CheckResult::new("base.gamma_order_3", order(g) == Some(3), json!({ "order": order(g) })),
        CheckResult::new("base.gamma_commutes_alpha", &(g * a) == &(a * g), json!(null)),
        CheckResult::new("base.gamma_commutes_beta", &(g * be) == &(be * g), json!(null)),
    ];
    out.extend(guarded("base.a4_presentation", || {
        let omega = a.conj(be).map_err(|e| e.to_string())?;
        let ob = omega.conj(be).map_err(|e| e.to_string())?;
        let ok = ob == a * &omega && ob == &omega * a && &(a * a) == &one;
        Ok(vec![CheckResult::new("base.a4_presentation", ok, json!({ "relations": "ω = α^β, ω^β = αω = ωα" }))])
    }));
    out.extend(guarded("base.k_order_36", || {
        let k = closure_enumerate(&[a, be, g], 100).map_err(|e| e.to_string())?;
        Ok(vec![CheckResult::new("base.k_order_36", k.order() == 36, json!({ "order": k.order() }))])
    }));
    out.extend(guarded("base.k_isomorphism", || {
        let w = WeylElem::parse_cycles("(1,3,4)(a,b,c)").map_err(|e| e.to_string())?;
        let m = b.k_matrix(&w).map_err(|e| e.to_string())?;
        let abc = Gf5Matrix::product(one.rows(), [a, be, g]);
        Ok(vec![CheckResult::new(
            "base.k_isomorphism",
            m == &abc && b.k.elements().len() == 36,
            json!({ "element": w.to_string(), "equals_alpha_beta_gamma": m == &abc, "k_bar_size": b.k.elements().len() }),
        )])
    }));
    out
}

pub fn nilpotency(ctx: &Context) -> Vec<CheckResult> {
    let b = &ctx.bundle;
    let eta4 = b.eta.pow(4);
    let eta5 = &eta4 * &b.eta;
    let zero_diag: Vec<usize> = (1..=SECTIONS)
        .filter(|&i| block(&eta4, i, i).map(|m| m.is_zero()).unwrap_or(false))
        .collect();
    let xi5 = b.xi.pow(5);
    let det = b.xi.det().ok().map(|d| d.value());
    let mut out = vec![
        CheckResult::new("nilpotency.eta4_nonzero", !eta4.is_zero(), json!(null)),
        CheckResult::new("nilpotency.eta5_zero", eta5.is_zero(), json!(null)),
        CheckResult::new(
            "nilpotency.eta4_zero_diagonal_blocks",
            zero_diag == [2, 3, 10, 16],
            json!({ "zero_diagonal_blocks": zero_diag, "expected": [2, 3, 10, 16] }),
        ),
        CheckResult::new("nilpotency.xi_order_5", xi5.is_identity() && !b.xi.is_identity(), json!(null)),
        CheckResult::new("nilpotency.xi_det_1", det == Some(1), json!({ "det": det })),
    ];
    let mut bad = Vec::new();
    for (l, x) in &b.roots {
        let ok = x.pow(5).is_identity() && !x.is_identity() && x.det().map(|d| d.value()) == Ok(1);
        if !ok {
            bad.push(l.to_string());
        }
    }
    out.push(CheckResult::new("nilpotency.roots_order_5_det_1", bad.is_empty(), json!({ "failing": bad })));
    let keys: std::collections::HashSet<Vec<u8>> = b.roots.values().map(Gf5Matrix::packed_key).collect();
    out.push(CheckResult::new(
        "nilpotency.roots_distinct",
        keys.len() == 36 && b.roots.len() == 36,
        json!({ "distinct": keys.len() }),
    ));
    out
}

pub fn calibration(ctx: &Context) -> Vec<CheckResult> {
    let c = &ctx.bundle.calibration;
    let survivors: Vec<_> = c.outcomes.iter().filter(|o| o.rejected_by.is_none()).collect();
    let mut rejected = std::collections::BTreeMap::new();
    for o in &c.outcomes {
        if let Some(r) = &o.rejected_by {
            *rejected.entry(r.clone()).or_insert(0usize) += 1;
        }
    }
    vec![
        CheckResult::new(
            "calibration.candidates_30",
            c.candidates == 30,
            json!({ "candidates": c.candidates, "distinct_matrices": c.distinct_candidates }),
        ),
        CheckResult::new(
            "calibration.unique_survivor",
            survivors.len() == 1,
            json!({ "survivors": survivors.len(), "chosen": c.chosen, "rejected_by": rejected }),
        ),
    ]
}

/// Outcome of evaluating the hexagon battery under both commutator conventions.
#[derive(Clone, Debug, Serialize)]
pub struct ConventionProbe {
    pub total: usize,
    pub inverse_first: usize,
    pub inverse_last: usize,
    /// The unique convention satisfying every relation, if there is one.
    pub frozen: Option<CommutatorConvention>,
}

/// Evaluates the base-line battery under `a⁻¹b⁻¹ab` and `aba⁻¹b⁻¹`.
pub fn commutator_convention_probe(bundle: &GeneratorBundle) -> ConventionProbe {
    let hex = bundle.hex(&base_line());
    let count = |conv| {
        relations::evaluate(&hex, conv, |_| true).map(|v| v.iter().filter(|o| o.holds).count()).unwrap_or(0)
    };
    let total = HEX_RELATIONS.len() * relations::SQUARES.len();
    let (f, l) = (count(CommutatorConvention::InverseFirst), count(CommutatorConvention::InverseLast));
    let frozen = match (f == total, l == total) {
        (true, false) => Some(CommutatorConvention::InverseFirst),
        (false, true) => Some(CommutatorConvention::InverseLast),
        _ => None,
    };
    ConventionProbe { total, inverse_first: f, inverse_last: l, frozen }
}

fn order_check(name: &str, gens: &[&Gf5Matrix], want: usize) -> CheckResult {
    match closure_enumerate(gens, want * 2) {
        Ok(g) => CheckResult::new(name, g.order() == want, json!({ "order": g.order(), "expected": want })),
        Err(e) => CheckResult::error(name, e),
    }
}

pub fn hexagon(ctx: &Context) -> Vec<CheckResult> {
    let probe = ctx.convention_probe();
    let conv = ctx.convention();
    let mut out = vec![CheckResult::new(
        "hexagon.convention",
        probe.frozen.is_some(),
        json!({
            "a^-1 b^-1 a b": probe.inverse_first,
            "a b a^-1 b^-1": probe.inverse_last,
            "of": probe.total,
            "frozen": probe.frozen.map(|c| c.to_string()),
        }),
    )];
    let bl = base_line();
    let hex = ctx.bundle.hex(&bl);
    for &i in &relations::SQUARES {
        for (r, rel) in HEX_RELATIONS.iter().enumerate() {
            let name = format!("hexagon.r{:02}.i{}", r + 1, i);
            match relations::relation_holds(&hex, rel, i, conv) {
                Ok(ok) => out.push(CheckResult::new(name, ok, json!({ "relation": rel.name(), "i": i }))),
                Err(e) => out.push(CheckResult::error(name, e)),
            }
        }
    }
    out.push(order_check("hexagon.sl2_big_order_120", &[hex.big(1), hex.big(6)], 120));
    out.push(order_check("hexagon.sl2_small_order_120", &[hex.small(1), hex.small(6)], 120));
    if ctx.all_lines {
        for l in OrientedLine::all().into_iter().filter(|l| *l != bl) {
            let h = ctx.bundle.hex(&l);
            let name = format!("hexagon.line.{}", l.slug());
            match relations::evaluate(&h, conv, |_| true) {
                Ok(v) => {
                    let failing: Vec<String> =
                        v.iter().filter(|o| !o.holds).map(|o| format!("{} (i={})", o.relation, o.i)).collect();
                    out.push(CheckResult::new(name, failing.is_empty(), json!({ "line": l.to_string(), "failing": failing })))
                }
                Err(e) => out.push(CheckResult::error(name, e)),
            }
        }
    }
    out
}

pub fn quartet(ctx: &Context) -> Vec<CheckResult> {
    let q = Configuration::base().quartet();
    let want = [line("(4b,3c)"), line("(3c,4a)"), line("(3b,4c)"), line("(4c,3a)")];
    let got = [q.l1, q.m1, q.l6, q.m6];
    let names = |ls: &[OrientedLine]| ls.iter().map(|l| l.to_string()).collect::<Vec<_>>();
    let mut out =
        vec![CheckResult::new("quartet.lines", got == want, json!({ "lines": names(&got), "expected": names(&want) }))];
    let d = ctx.bundle.derived(&base_line());
    let h = &d.h;
    let cubes: Vec<bool> = h.iter().map(|x| x.pow(3).is_identity() && !x.is_identity()).collect();
    out.push(CheckResult::new("quartet.h_cubes", cubes.iter().all(|&c| c), json!({ "h_i^3 = 1": cubes })));
    let sq = |i: usize, j: usize| (&h[i] * &h[j]).pow(2);
    let reference = sq(0, 1);
    let mut unequal = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j && sq(i, j) != reference {
                unequal.push(format!("(h{}h{})^2", i + 1, j + 1));
            }
        }
    }
    out.push(CheckResult::new(
        "quartet.hihj_squares_equal",
        unequal.is_empty(),
        json!({ "differs_from_(h1h2)^2": unequal, "(h1h2)^2_is_identity": reference.is_identity() }),
    ));
    let n = h[0].rows();
    let p = |k: usize, e: u64| h[k].pow(e);
    let subs = [
        ("quartet.back_substitution_lambda1", Gf5Matrix::product(n, [&h[0], &p(3, 2), &p(1, 2)]), d.hex.small(1)),
        ("quartet.back_substitution_mu1", Gf5Matrix::product(n, [&h[0], &p(3, 2), &h[1]]), &d.mu1),
        ("quartet.back_substitution_lambda6", Gf5Matrix::product(n, [&p(1, 2), &h[3], &p(2, 2)]), d.hex.small(6)),
        (
            "quartet.back_substitution_mu6",
            Gf5Matrix::product(n, [&h[2], &h[1], &h[3], &h[0], &h[2], &p(1, 2), &h[3], &h[0]]),
            &d.mu6,
        ),
    ];
    for (name, word, target) in subs {
        out.push(CheckResult::new(name, &word == target, json!(null)));
    }
    out.push(order_check("quartet.order_720", &h.iter().collect::<Vec<_>>(), 720));
    out
}

pub fn star(ctx: &Context) -> Vec<CheckResult> {
    let conv = ctx.convention();
    let hex = ctx.bundle.hex(&base_line());
    let imgs = StarImages::printed();
    let mut out = Vec::new();
    for (name, fam) in [
        ("star.lambda_relations", &hex as &dyn relations::HexFamily),
        ("star.image_relations", &imgs as &dyn relations::HexFamily),
    ] {
        match relations::evaluate(fam, conv, |r| r.big_only()) {
            Ok(v) => {
                let failing: Vec<String> =
                    v.iter().filter(|o| !o.holds).map(|o| format!("{} (i={})", o.relation, o.i)).collect();
                out.push(CheckResult::new(name, failing.is_empty(), json!({ "checked": v.len(), "failing": failing })));
            }
            Err(e) => out.push(CheckResult::error(name, e)),
        }
    }
    out.push(order_check("star.image_order_372000", &imgs.big.iter().collect::<Vec<_>>(), 372000));
    let printed = crate::generators::star_torus_table();
    for i in 1..=6i64 {
        let t = imgs.torus(i);
        let diag: Vec<u8> = (0..3).map(|k| t.get(k, k)).collect();
        out.push(CheckResult::new(
            format!("star.torus_image.t{i}"),
            t == printed[i as usize - 1],
            json!({ "diagonal": diag, "is_diagonal": (0..3).all(|r| (0..3).all(|c| r == c || t.get(r, c) == 0)) }),
        ));
    }
    let t = |i| hex.torus(i);
    let prod = Gf5Matrix::product(t(1).rows(), [&t(1), &t(2), &t(4)]);
    out.push(CheckResult::new("star.torus_product_t1t2t4", prod.is_identity(), json!(null)));
    let inverse_pairs: Vec<bool> = (1..=3).map(|i| (&t(i) * &t(-i)).is_identity()).collect();
    out.push(CheckResult::new(
        "star.torus_inverse_pairs",
        inverse_pairs.iter().all(|&x| x),
        json!({ "t_i t_-i = 1 for i = 1,2,3": inverse_pairs }),
    ));
    out
}
