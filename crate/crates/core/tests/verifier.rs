use lyons::apartment::{base_line, WeylElem};
use lyons::generators::{CommutatorConvention, GeneratorBundle};
use lyons::gf5::Gf5Matrix;
use lyons::verifier::char_table::{irreducibles, psi, CLASS_NAMES};
use lyons::verifier::character::{brauer_value, multiplicity, table_columns};
use lyons::verifier::{
    closure_enumerate, commutator_convention_probe, pi_of, CheckResult, ClosureError, Context, Criterion,
    CyclotomicValue, RootIndex, Status, Suite, VerificationReport,
};
use proptest::prelude::*;
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn bundle() -> &'static GeneratorBundle {
    static B: OnceLock<GeneratorBundle> = OnceLock::new();
    B.get_or_init(|| GeneratorBundle::build().expect("construction succeeds"))
}

fn root_index() -> &'static RootIndex {
    static I: OnceLock<RootIndex> = OnceLock::new();
    I.get_or_init(|| RootIndex::new(bundle()))
}

fn gl2() -> impl Strategy<Value = Gf5Matrix> {
    proptest::collection::vec(0u8..5, 4)
        .prop_map(|d| Gf5Matrix::from_vec(2, 2, d).unwrap())
        .prop_filter("invertible", |m| m.det().unwrap().value() != 0)
}

fn cyc() -> impl Strategy<Value = CyclotomicValue> {
    (-50i64..50, -50i64..50).prop_map(|(a, b)| CyclotomicValue::new(a, b))
}

fn n_word() -> impl Strategy<Value = Vec<(usize, u64)>> {
    proptest::collection::vec((0usize..4, 1u64..4), 0..4)
}

fn eval_word(gens: &[Gf5Matrix; 4], word: &[(usize, u64)]) -> Gf5Matrix {
    word.iter().fold(Gf5Matrix::identity(111), |acc, &(g, e)| &acc * &gens[g].pow(e))
}

#[test]
fn closure_examples() {
    let one = Gf5Matrix::identity(111);
    assert_eq!(closure_enumerate(&[&one], 10).unwrap().order(), 1);
    assert_eq!(closure_enumerate(&[], 10).unwrap().order(), 1);
    let b = bundle();
    let k = closure_enumerate(&[&b.alpha, &b.beta, &b.gamma], 100).unwrap();
    assert_eq!(k.order(), 36);
    assert!(k.element(0).is_identity());
    assert!(k.contains(&(&b.alpha * &b.gamma)));
    assert!(!k.contains(&b.xi));
    assert!(matches!(
        closure_enumerate(&[&b.alpha, &b.beta, &b.gamma], 20),
        Err(ClosureError::CapExceeded { cap: 20, .. })
    ));
    let a = Gf5Matrix::identity(2);
    let c = Gf5Matrix::identity(3);
    assert_eq!(closure_enumerate(&[&a, &c], 10).unwrap_err(), ClosureError::BadGenerators);
}

#[test]
fn pi_examples() {
    let b = bundle();
    let idx = root_index();
    let w = |s: &str| WeylElem::parse_cycles(s).unwrap();
    assert_eq!(pi_of(b, idx, &b.r_big(&base_line())).unwrap(), w("(3,4)(b,c)"));
    assert_eq!(pi_of(b, idx, &b.r_small(&base_line())).unwrap(), w("(3,4)"));
    let [n1, n2, n3, n4] = b.n_generators();
    assert_eq!(pi_of(b, idx, &n1).unwrap(), w("(1,2,3)"));
    assert_eq!(pi_of(b, idx, &n2).unwrap(), w("(3,4)"));
    assert_eq!(pi_of(b, idx, &n3).unwrap(), w("(a,b,c)"));
    assert_eq!(pi_of(b, idx, &n4).unwrap(), w("(a,b)"));
    assert!(pi_of(b, idx, &b.xi).is_err());
}

#[test]
fn convention_probe_is_idempotent() {
    let b = bundle();
    let p = commutator_convention_probe(b);
    assert_eq!(p.frozen, Some(CommutatorConvention::InverseFirst));
    assert_eq!(p.inverse_first, p.total);
    assert!(p.inverse_last < p.total);
    let again = commutator_convention_probe(b);
    assert_eq!((again.frozen, again.inverse_first, again.inverse_last), (p.frozen, p.inverse_first, p.inverse_last));
}

#[test]
fn brauer_values_of_small_matrices() {
    let b = Gf5Matrix::from_rows(&[[0, 1], [4, 4]]);
    assert_eq!(brauer_value(&Gf5Matrix::identity(5)).unwrap(), (1, CyclotomicValue::int(5)));
    assert_eq!(brauer_value(&b).unwrap(), (3, CyclotomicValue::int(-1)));
    assert_eq!(brauer_value(&-&b).unwrap(), (6, CyclotomicValue::int(1)));
    assert_eq!(brauer_value(&Gf5Matrix::diag(&[4, 4, 1])).unwrap(), (2, CyclotomicValue::int(-1)));
    assert_eq!(brauer_value(&Gf5Matrix::diag(&[2, 3])).unwrap(), (4, CyclotomicValue::int(0)));
    assert!(brauer_value(&Gf5Matrix::from_rows(&[[1, 1], [0, 1]])).is_err());
}

#[test]
fn printed_table_is_consistent() {
    let cols = table_columns(2304);
    assert_eq!(cols.len(), 30);
    assert_eq!(cols.iter().map(|c| c.name).collect::<Vec<_>>(), CLASS_NAMES);
    assert_eq!(cols.iter().map(|c| c.size).sum::<i64>(), 2304);
    assert!(cols.iter().all(|c| c.size * c.centralizer == 2304));
    let irr = irreducibles();
    assert_eq!(irr.iter().map(|x| x[0].a * x[0].a).sum::<i64>(), 2304);
    assert_eq!(psi()[0], 111);
}

#[test]
fn psi_multiplicities() {
    let cols = table_columns(2304);
    let sizes: Vec<i64> = cols.iter().map(|c| c.size).collect();
    let p: Vec<CyclotomicValue> = psi().iter().map(|&v| CyclotomicValue::int(v)).collect();
    let mut total = 0;
    for chi in irreducibles() {
        let m = multiplicity(&sizes, &p, &chi, 2304).expect("non-negative integer");
        total += m * chi[0].a;
    }
    assert_eq!(total, 111);
}

#[test]
fn report_json_schema() {
    let checks = vec![
        CheckResult::new("demo.ok", true, serde_json::json!({ "order": 36 })),
        CheckResult::new("demo.bad", false, serde_json::json!(null)),
        CheckResult::error("demo.err", "boom"),
    ];
    let r = VerificationReport::new("demo", checks, 7);
    assert!(!r.passed());
    assert_eq!(r.failures().map(|c| c.name.as_str()).collect::<Vec<_>>(), ["demo.bad", "demo.err"]);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["suite"], "demo");
    assert_eq!(v["elapsed-ms"], 7);
    assert_eq!(v["status"], "fail");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3);
    for c in checks {
        let keys: BTreeSet<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, BTreeSet::from(["name", "status", "witness"]));
    }
    assert_eq!(checks[0]["status"], "pass");
    assert_eq!(checks[0]["witness"]["order"], 36);
    assert_eq!(checks[1]["status"], "fail");
    let back: VerificationReport = serde_json::from_value(v).unwrap();
    assert_eq!(back.checks[2].status, Status::Fail);
}

#[test]
fn suites() {
    assert_eq!("weyl".parse::<Suite>().unwrap(), Suite::Weyl);
    assert!("bogus".parse::<Suite>().unwrap_err().contains("expected one of"));
    for name in Suite::NAMES {
        assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
    }
    let union: Vec<Criterion> =
        Suite::NAMES[1..].iter().flat_map(|s| s.parse::<Suite>().unwrap().criteria()).collect();
    let mut sorted = union.clone();
    sorted.sort();
    assert_eq!(sorted, Criterion::ALL);
    assert_eq!(union.len(), 12);
    assert_eq!(Criterion::ALL.iter().map(|c| c.number()).collect::<Vec<_>>(), (1..=12).collect::<Vec<_>>());
}

#[test]
fn form_suite_passes() {
    let ctx = Context::from_bundle(bundle().clone());
    let r = Suite::Form.run(&ctx);
    assert!(r.passed(), "{}", r.to_json());
    assert!(r.checks.iter().all(|c| c.name.starts_with("form.")));
}

#[test]
fn corrupted_form_fails_by_name() {
    let mut b = bundle().clone();
    let v = b.f.get(0, 0) as i64;
    b.f.set(0, 0, v + 1);
    let r = Suite::Form.run(&Context::from_bundle(b));
    assert!(!r.passed());
    let failing: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
    assert!(failing.contains(&"form.invariant.random_root_words"), "{failing:?}");
    assert!(failing.contains(&"form.invariant.xi"), "{failing:?}");
}

proptest! {
    #[test]
    fn redundant_generator_keeps_the_closure(a in gl2(), b in gl2(), k in 0usize..1000) {
        let g = closure_enumerate(&[&a, &b], 500).unwrap();
        prop_assert_eq!(480 % g.order(), 0);
        let extra = g.element(k % g.order());
        let h = closure_enumerate(&[&a, &b, &extra], 500).unwrap();
        prop_assert_eq!(h.order(), g.order());
        prop_assert!(g.elements().all(|x| h.contains(&x)));
    }

    #[test]
    fn eisenstein_ring_laws(x in cyc(), y in cyc(), z in cyc()) {
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.conj().conj(), x);
        prop_assert_eq!((x * x.conj()), CyclotomicValue::int(x.norm()));
        prop_assert_eq!((x * CyclotomicValue::int(6)).div_exact(6), Some(x));
    }

    #[test]
    fn multiplicities_recover_constituents(mults in proptest::collection::vec(0i64..3, 30)) {
        let cols = table_columns(2304);
        let sizes: Vec<i64> = cols.iter().map(|c| c.size).collect();
        let irr = irreducibles();
        let mut sum = vec![CyclotomicValue::ZERO; 30];
        for (chi, &m) in irr.iter().zip(&mults) {
            for (s, &v) in sum.iter_mut().zip(chi.iter()) {
                *s = *s + v * CyclotomicValue::int(m);
            }
        }
        let got: Vec<i64> = irr.iter().map(|chi| multiplicity(&sizes, &sum, chi, 2304).unwrap()).collect();
        prop_assert_eq!(&got, &mults);
        let dim: i64 = got.iter().zip(&irr).map(|(m, chi)| m * chi[0].a).sum();
        prop_assert_eq!(CyclotomicValue::int(dim), sum[0]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn pi_is_multiplicative(u in n_word(), v in n_word()) {
        let b = bundle();
        let idx = root_index();
        let gens = b.n_generators();
        let (x, y) = (eval_word(&gens, &u), eval_word(&gens, &v));
        let (px, py) = (pi_of(b, idx, &x).unwrap(), pi_of(b, idx, &y).unwrap());
        prop_assert_eq!(pi_of(b, idx, &(&x * &y)).unwrap(), px.then(&py));
    }
}
