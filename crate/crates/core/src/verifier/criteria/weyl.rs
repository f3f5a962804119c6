use super::super::closure::closure_enumerate;
use super::super::normalizer::{pi_of, RootIndex};
use super::super::report::CheckResult;
use super::super::Context;
use super::{eigen_row, guarded, line};
use crate::apartment::{base_line, WeylElem};
use crate::blocks::miniblock_monomial;
use crate::gf5::Gf5Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::collections::{BTreeMap, BTreeSet, HashMap};

fn keyset<'a>(ms: impl IntoIterator<Item = &'a Gf5Matrix>) -> BTreeSet<Vec<u8>> {
    ms.into_iter().map(Gf5Matrix::packed_key).collect()
}

pub fn normalizer(ctx: &Context) -> Vec<CheckResult> {
    let mut out = guarded("normalizer.enumerate", || {
        let n = ctx.normalizer()?;
        let t = ctx.torus()?;
        let mut out = vec![CheckResult::new("normalizer.order_2304", n.order() == 2304, json!({ "order": n.order() }))];

        let words = ctx.bundle.torus_words();
        let tw = closure_enumerate(&[&words[0], &words[1]], 64).map_err(|e| e.to_string())?;
        let tw_set: BTreeSet<Vec<u8>> = tw.elements().map(|m| m.packed_key()).collect();
        let t_set = keyset(t);
        out.push(CheckResult::new(
            "normalizer.torus_words",
            tw_set == t_set,
            json!({ "order_of_word_group": tw.order(), "words": ["n1 n4 n1^-1 n4", "n1^-1 n4 n1 n4"] }),
        ));

        let mut fibers: HashMap<WeylElem, usize> = HashMap::new();
        for w in &n.pi {
            *fibers.entry(*w).or_default() += 1;
        }
        let sizes: BTreeSet<usize> = fibers.values().copied().collect();
        out.push(CheckResult::new("normalizer.pi_surjective", fibers.len() == 144, json!({ "images": fibers.len() })));
        out.push(CheckResult::new(
            "normalizer.pi_fibers_16",
            sizes.len() == 1 && sizes.contains(&16),
            json!({ "fiber_sizes": sizes }),
        ));
        let kernel = n.kernel();
        out.push(CheckResult::new(
            "normalizer.kernel_is_torus",
            keyset(&kernel) == t_set,
            json!({ "kernel_order": kernel.len() }),
        ));

        let cent: Vec<Gf5Matrix> =
            n.group.elements().filter(|g| t.iter().all(|s| &(g * s) == &(s * g))).collect();
        let g = &ctx.bundle.gamma;
        let expected: BTreeSet<Vec<u8>> =
            t.iter().flat_map(|s| [s.clone(), s * g, &(s * g) * g]).map(|m| m.packed_key()).collect();
        out.push(CheckResult::new(
            "normalizer.torus_centralizer_48",
            cent.len() == 48 && keyset(&cent) == expected,
            json!({ "order": cent.len(), "equals_T_times_gamma": keyset(&cent) == expected }),
        ));

        // Ordered pairs (a, b) with {a^i b^j} = T are the automorphisms of T ≅ 4².
        let t_vec: Vec<&Gf5Matrix> = t.iter().collect();
        let mut aut = 0;
        for a in &t_vec {
            let ap: Vec<Gf5Matrix> = (0..4).map(|i| a.pow(i)).collect();
            for b in &t_vec {
                let span: BTreeSet<Vec<u8>> =
                    (0..4).flat_map(|j| ap.iter().map(move |x| (x * &b.pow(j)).packed_key())).collect();
                if span.len() == 16 {
                    aut += 1;
                }
            }
        }
        out.push(CheckResult::new("normalizer.torus_automorphisms_96", aut == 96, json!({ "generating_pairs": aut })));

        let mut not_mono = Vec::new();
        for (k, x) in n.group.elements().enumerate() {
            if !miniblock_monomial(&x).map_err(|e| e.to_string())? {
                not_mono.push(k);
            }
        }
        out.push(CheckResult::new(
            "normalizer.miniblock_monomial",
            not_mono.is_empty(),
            json!({ "checked": n.order(), "failing_indices": not_mono }),
        ));

        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut bad = 0;
        for _ in 0..64 {
            let (i, j) = (rng.gen_range(0..n.order()), rng.gen_range(0..n.order()));
            let prod = &n.group.element(i) * &n.group.element(j);
            let k = n.group.index_of(&prod).ok_or("product outside N")?;
            if n.pi[k] != n.pi[i].then(&n.pi[j]) {
                bad += 1;
            }
        }
        out.push(CheckResult::new("normalizer.pi_multiplicative", bad == 0, json!({ "pairs": 64, "failing": bad })));
        Ok(out)
    });

    out.extend(guarded("normalizer.pi_images", || {
        let b = &ctx.bundle;
        let idx = RootIndex::new(b);
        let bl = base_line();
        let [n1, n2, n3, n4] = b.n_generators();
        let cases = [
            ("R(1a,2b)", b.r_big(&bl), "(3,4)(b,c)"),
            ("r(1a,2b)", b.r_small(&bl), "(3,4)"),
            ("n1", n1, "(1,2,3)"),
            ("n2", n2, "(3,4)"),
            ("n3", n3, "(a,b,c)"),
            ("n4", n4, "(a,b)"),
        ];
        let mut got = BTreeMap::new();
        let mut ok = true;
        for (name, m, want) in cases {
            let w = pi_of(b, &idx, &m).map_err(|e| e.to_string())?;
            ok &= w == WeylElem::parse_cycles(want).map_err(|e| e.to_string())?;
            got.insert(name, w.to_string());
        }
        Ok(vec![CheckResult::new("normalizer.pi_images", ok, json!(got))])
    }));

    out.extend(guarded("normalizer.r_words", || {
        let b = &ctx.bundle;
        let r = |s: &str| b.r_big(&line(s));
        let ri = |s: &str| r(s).inverse().map_err(|e| e.to_string());
        let n = b.alpha.rows();
        let alpha = Gf5Matrix::product(n, [&r("(3a,1b)"), &r("(1a,3b)"), &r("(3a,4b)"), &ri("(2a,1b)")?]);
        let beta = Gf5Matrix::product(n, [&r("(1a,2b)"), &ri("(3a,4b)")?, &r("(2a,1b)"), &ri("(4a,2b)")?]);
        let gamma = &r("(1b,2c)") * &ri("(1a,2b)")?;
        let d = b.derived(&base_line());
        let t1 = &ri("(4a,1b)")? * &r("(1a,4b)");
        let t2 = &ri("(2a,4b)")? * &r("(4a,2b)");
        let t3 = &ri("(1a,2b)")? * &r("(2a,1b)");
        let mut out = vec![
            CheckResult::new("normalizer.r_word.alpha", alpha == b.alpha, json!("R(3a,1b) R(1a,3b) R(3a,4b) R(2a,1b)^-1")),
            CheckResult::new("normalizer.r_word.beta", beta == b.beta, json!("R(1a,2b) R(3a,4b)^-1 R(2a,1b) R(4a,2b)^-1")),
            CheckResult::new("normalizer.r_word.gamma", gamma == b.gamma, json!("R(1b,2c) R(1a,2b)^-1")),
        ];
        for (i, w, text) in
            [(1, &t1, "R(4a,1b)^-1 R(1a,4b)"), (2, &t2, "R(2a,4b)^-1 R(4a,2b)"), (3, &t3, "R(1a,2b)^-1 R(2a,1b)")]
        {
            let matches: Vec<i64> = (1..=6).filter(|&j| d.t(j) == w).collect();
            out.push(CheckResult::new(
                format!("normalizer.r_word.t{i}"),
                d.t(i) == w,
                json!({
                    "word": text,
                    "word_row": eigen_row(w),
                    "t_row": eigen_row(d.t(i)),
                    "word_equals_t_j_for_j": matches,
                }),
            ));
        }
        Ok(out)
    }));
    out
}
