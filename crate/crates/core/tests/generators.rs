use lyons::apartment::{base_line, k_bar_words, OrientedLine, WeylElem};
use lyons::blocks::{block, classify, SECTIONS};
use lyons::generators::{
    build_base, calibrate_eta, star_image_table, star_torus_table, Completion, EtaTranscription, GenError,
    GeneratorBundle, KModel, StarImages,
};
use lyons::gf5::{Gf5Matrix, Subspace};
use lyons::verifier::closure_enumerate;
use proptest::prelude::*;
use std::collections::HashSet;
use std::sync::OnceLock;

fn bundle() -> &'static GeneratorBundle {
    static B: OnceLock<GeneratorBundle> = OnceLock::new();
    B.get_or_init(|| GeneratorBundle::build().expect("construction succeeds"))
}

fn l(s: &str) -> OrientedLine {
    s.parse().unwrap()
}

fn preserves_form(x: &Gf5Matrix, f: &Gf5Matrix) -> bool {
    &(x * f) * &x.transpose() == *f
}

#[test]
fn base_relations() {
    let b = bundle();
    assert!(b.alpha.pow(2).is_identity());
    assert!(b.beta.pow(3).is_identity() && !b.beta.is_identity());
    assert!(b.gamma.pow(3).is_identity() && !b.gamma.is_identity());
    assert_eq!(&b.gamma * &b.alpha, &b.alpha * &b.gamma);
    assert_eq!(&b.gamma * &b.beta, &b.beta * &b.gamma);
}

#[test]
fn a4_presentation() {
    let b = bundle();
    let bi = b.beta.inverse().unwrap();
    let omega = b.alpha.conj(&b.beta).unwrap();
    assert_eq!(omega, Gf5Matrix::product(111, [&bi, &b.alpha, &b.beta]));
    let omega_beta = omega.conj(&b.beta).unwrap();
    assert_eq!(omega_beta, &b.alpha * &omega);
    assert_eq!(omega_beta, &omega * &b.alpha);
}

#[test]
fn k_has_order_36() {
    let b = bundle();
    assert_eq!(closure_enumerate(&[&b.alpha, &b.beta, &b.gamma], 100).unwrap().order(), 36);
    assert_eq!(b.k.elements().len(), 36);
}

#[test]
fn k_matrix_examples() {
    let b = bundle();
    assert!(b.k_matrix(&WeylElem::IDENTITY).unwrap().is_identity());
    let w = WeylElem::parse_cycles("(1,3,4)(a,b,c)").unwrap();
    assert_eq!(*b.k_matrix(&w).unwrap(), Gf5Matrix::product(111, [&b.alpha, &b.beta, &b.gamma]));
    let outside = WeylElem::parse_cycles("(1,2)").unwrap();
    assert!(matches!(b.k_matrix(&outside), Err(GenError::NotInK(_))));
}

#[test]
fn k_model_rejects_inconsistent_generators() {
    let base = build_base();
    let r = KModel::build(&base.beta, &base.alpha, &base.gamma);
    assert!(matches!(r, Err(GenError::KNotWellDefined(_))));
}

#[test]
fn eta_nilpotency() {
    let b = bundle();
    assert_eq!(b.eta.nilpotency_index().unwrap(), Some(5));
    let e4 = b.eta.pow(4);
    assert!(!e4.is_zero());
    assert!((&b.eta * &e4).is_zero());
    let vanishing: Vec<usize> = (1..=SECTIONS).filter(|&i| block(&e4, i, i).unwrap().is_zero()).collect();
    assert_eq!(vanishing, [2, 3, 10, 16]);
}

#[test]
fn xi_from_eta() {
    let b = bundle();
    assert_eq!(b.eta.exp5().unwrap(), b.xi);
    assert_eq!(b.xi.log5().unwrap(), b.eta);
    let u = &b.xi - &Gf5Matrix::identity(111);
    assert_eq!(u.pow(4), b.eta.pow(4));
    assert_eq!(b.xi.element_order(10).unwrap(), 5);
    assert_eq!(b.xi.det().unwrap().value(), 1);
    assert!(!b.xi.is_identity());
}

#[test]
fn form() {
    let b = bundle();
    assert!(b.f.is_symmetric());
    assert_eq!(b.f.det().unwrap().value(), 4);
    assert_eq!(Subspace::full(111).orth_complement(&b.f).unwrap().dim(), 0);
    for x in [&b.alpha, &b.beta, &b.gamma, &b.xi] {
        assert!(preserves_form(x, &b.f));
    }
}

#[test]
fn calibration_has_a_unique_survivor() {
    let r = &bundle().calibration;
    assert_eq!(r.candidates, 30);
    assert_eq!(r.distinct_candidates, 25);
    assert_eq!(r.outcomes.len(), 30);
    let survivors: Vec<_> = r.outcomes.iter().filter(|o| o.rejected_by.is_none()).collect();
    assert_eq!(survivors.len(), 1);
    assert_eq!(survivors[0].fills, r.chosen);
    assert_eq!(r.chosen, [Completion { block: (7, 2), row: 0, position: 0, value: 3 }]);
}

#[test]
fn complete_transcription_is_returned_unchanged() {
    let b = bundle();
    let printed = EtaTranscription::printed();
    let gaps = printed.gaps().unwrap();
    assert_eq!(gaps.len(), 1);
    let mut full = printed.clone();
    let (bi, ri) = gaps[0];
    let c = b.calibration.chosen[0];
    full.blocks[bi].rows[ri].insert(c.position, c.value);
    assert!(full.gaps().unwrap().is_empty());

    let base = build_base();
    let (eta, report) = calibrate_eta(&full, &base, &b.k).unwrap();
    assert_eq!(eta, b.eta);
    assert_eq!(report.candidates, 1);
    assert!(report.chosen.is_empty());
}

#[test]
fn corrupted_transcription_has_no_survivor() {
    let b = bundle();
    let mut t = EtaTranscription::printed();
    let k = t.blocks.iter().position(|x| (x.row_section, x.col_section) == (3, 7)).unwrap();
    t.blocks[k].rows[0][0] = (t.blocks[k].rows[0][0] + 1) % 5;
    match calibrate_eta(&t, &build_base(), &b.k) {
        Err(GenError::NoSurvivor(outcomes)) => {
            assert_eq!(outcomes.len(), 30);
            assert!(outcomes.iter().all(|o| o.rejected_by.is_some()));
        }
        other => panic!("expected no survivor, got {:?}", other.map(|r| r.1.chosen)),
    }
}

#[test]
fn malformed_transcription_is_rejected() {
    let mut t = EtaTranscription::printed();
    t.blocks[0].rows[0].truncate(2);
    assert!(matches!(t.gaps(), Err(GenError::BadTranscription(..))));
}

#[test]
fn root_elements() {
    let b = bundle();
    assert_eq!(b.roots.len(), 36);
    assert_eq!(*b.root(&base_line()), b.xi);
    let mut keys = HashSet::new();
    for (line, x) in &b.roots {
        assert!(x.pow(5).is_identity() && !x.is_identity(), "{line}");
        assert_eq!(x.det().unwrap().value(), 1);
        assert!(keys.insert(x.packed_key()));
        assert!(classify(&x.log5().unwrap()).unwrap().is_monomial, "{line}");
    }
}

#[test]
fn roots_transport_under_k() {
    let b = bundle();
    for (w, _) in k_bar_words() {
        let k = b.k_matrix(&w).unwrap();
        let ki = k.inverse().unwrap();
        for line in OrientedLine::all() {
            let image = w.act_line(&line);
            assert_eq!(*b.root(&image), b.root(&line).conj_with(k, &ki), "{line} under {w}");
        }
    }
}

#[test]
fn derived_elements() {
    let b = bundle();
    let d = b.derived(&base_line());
    assert!(Gf5Matrix::product(111, [d.t(1), d.t(2), d.t(4)]).is_identity());
    for i in 1..=6 {
        assert!((d.t(i) * d.t(-i)).is_identity());
        assert_eq!(d.t(i).element_order(10).unwrap(), 4);
    }
    let [h1, h2, h3, h4] = &d.h;
    let sq = |m: &Gf5Matrix| m * m;
    assert_eq!(*d.hex.small(1), Gf5Matrix::product(111, [h1, &sq(h4), &sq(h2)]));
    assert_eq!(d.mu1, Gf5Matrix::product(111, [h1, &sq(h4), h2]));
    assert_eq!(*d.hex.small(6), Gf5Matrix::product(111, [&sq(h2), h4, &sq(h3)]));
    assert_eq!(d.mu6, Gf5Matrix::product(111, [h3, h2, h4, h1, h3, &sq(h2), h4, h1]));
    assert_eq!(d.r_big, b.r_big(&base_line()));
    assert_eq!(d.r_small, b.r_small(&base_line()));
}

#[test]
fn normalizer_generators() {
    let b = bundle();
    let [n1, n2, n3, n4] = b.n_generators();
    assert_eq!(n1, b.beta);
    assert_eq!(n3, b.gamma);
    let (a, c) = (b.root(&l("(3a,4b)")), b.root(&l("(4a,3b)")));
    assert_eq!(n2, Gf5Matrix::product(111, [a, c, a]));
    assert!(n4.det().unwrap().value() != 0);
}

#[test]
fn star_images() {
    let imgs = star_image_table();
    assert_eq!(imgs[0], Gf5Matrix::from_rows(&[[1, 0, 0], [0, 1, 3], [0, 0, 1]]));
    assert_eq!(&imgs[0] * &imgs[2], &imgs[2] * &imgs[0]);
    let s = StarImages::printed();
    let t = star_torus_table();
    assert_eq!(t[0], Gf5Matrix::diag(&[1, 2, 3]));
    assert_eq!(t[1], Gf5Matrix::diag(&[3, 1, 2]));
    assert_eq!(t[5], Gf5Matrix::diag(&[1, 3, 2]));
    for i in 1..=6 {
        assert_eq!(s.torus(i), t[i as usize - 1]);
    }
}

#[test]
fn torus_word_orders() {
    let b = bundle();
    for line in [base_line(), l("(3b,2c)"), l("(4c,1a)")] {
        let d = b.derived(&line);
        assert_eq!(d.t(1).element_order(10).unwrap(), 4);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_root_words_preserve_f(word in proptest::collection::vec((0usize..36, 1u64..5), 1..8)) {
        let b = bundle();
        let lines = OrientedLine::all();
        let x = word.iter().fold(Gf5Matrix::identity(111), |acc, &(k, e)| &acc * &b.root(&lines[k]).pow(e));
        prop_assert!(preserves_form(&x, &b.f));
        prop_assert_eq!(x.det().unwrap().value(), 1);
    }
}
