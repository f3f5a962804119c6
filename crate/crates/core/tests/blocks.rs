use lyons::blocks::{
    block, block_perm_matrix, classify, format_rows, format_sections, index_perm_matrix, miniblock_monomial,
    monomial_decompose, parse_rows, parse_sections, section_perm_matrix, BlockError, SectionScheme, DIM, SECTIONS,
};
use lyons::generators::GeneratorBundle;
use lyons::gf5::Gf5Matrix;
use proptest::prelude::*;
use std::sync::OnceLock;

fn bundle() -> &'static GeneratorBundle {
    static B: OnceLock<GeneratorBundle> = OnceLock::new();
    B.get_or_init(|| GeneratorBundle::build().expect("construction succeeds"))
}

fn section_images(small: &[usize], big: &[usize]) -> Vec<usize> {
    let mut img = vec![1];
    img.extend(small.iter().map(|k| k + 2));
    img.extend(big.iter().map(|k| k + 5));
    img
}

/// Admissible section permutations: 1 fixed, {2,3,4} and {5..16} permuted among themselves.
fn admissible() -> impl Strategy<Value = Vec<usize>> {
    (Just((0..3).collect::<Vec<usize>>()).prop_shuffle(), Just((0..12).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|(s, b)| section_images(&s, &b))
}

fn section_scalars(s: &[i64]) -> Gf5Matrix {
    let d: Vec<i64> = (0..DIM).map(|k| s[SectionScheme::section_of(k) - 1]).collect();
    Gf5Matrix::diag(&d)
}

#[test]
fn sections_tile_the_coordinates() {
    assert_eq!((1..=SECTIONS).map(SectionScheme::len).sum::<usize>(), DIM);
    let mut next = 0;
    for i in 1..=SECTIONS {
        let r = SectionScheme::range(i);
        assert_eq!(r.start, next);
        next = r.end;
        assert_eq!(SectionScheme::mini_cuts(i).iter().sum::<usize>(), SectionScheme::len(i));
        assert!(r.clone().all(|k| SectionScheme::section_of(k) == i));
    }
    assert_eq!(next, DIM);
    let mini = SectionScheme::minisections();
    assert_eq!(mini.len(), 58);
    assert!(mini.windows(2).all(|w| w[0].end == w[1].start));
}

#[test]
fn identity_blocks() {
    let one = Gf5Matrix::identity(DIM);
    assert_eq!(block(&one, 7, 7).unwrap(), Gf5Matrix::identity(7));
    assert!(block(&one, 7, 8).unwrap().is_zero());
    assert_eq!(block(&one, 0, 1), Err(BlockError::SectionOutOfRange(0)));
    assert!(matches!(block(&Gf5Matrix::zeros(3, 3), 1, 1), Err(BlockError::WrongShape(3, 3))));
}

#[test]
fn eta_blocks() {
    let eta = &bundle().eta;
    assert_eq!(block(eta, 3, 7).unwrap().row(0), &[3, 4, 0, 3, 1, 4, 0]);
    assert!(block(eta, 1, 1).unwrap().is_zero());
    let nonzero = (1..=SECTIONS)
        .flat_map(|i| (1..=SECTIONS).map(move |j| (i, j)))
        .filter(|&(i, j)| !block(eta, i, j).unwrap().is_zero())
        .count();
    assert_eq!(nonzero, 16);
}

#[test]
fn block_perm_examples() {
    let p = block_perm_matrix(&[&[2, 3]]).unwrap();
    let q = index_perm_matrix(DIM, &[&[10, 16], &[11, 17], &[12, 18], &[13, 19], &[14, 20], &[15, 21]]).unwrap();
    assert_eq!(p, q);
    assert_eq!(
        block_perm_matrix(&[&[1, 2]]),
        Err(BlockError::Inadmissible { from: 1, to: 2, from_len: 9, to_len: 6 })
    );
    assert!(block_perm_matrix(&[]).unwrap().is_identity());
    assert_eq!(block_perm_matrix(&[&[5, 6], &[6, 7]]), Err(BlockError::RepeatedSection(6)));
}

#[test]
fn eta_support() {
    let eta = &bundle().eta;
    let p = classify(eta).unwrap();
    assert!(p.is_monomial && !p.is_diagonal);
    assert_eq!(p.support_cycles(), "(1,16,4,10)(2,13,3,7)(5,6,14,9)(8,12,11,15)");
    // Section 1 has 9 coordinates and section 16 has 7, so no block permutation matrix carries this support.
    let inadmissible = BlockError::Inadmissible { from: 1, to: 16, from_len: 9, to_len: 7 };
    assert_eq!(monomial_decompose(eta).unwrap_err(), inadmissible);
    let support: [&[usize]; 4] = [&[1, 16, 4, 10], &[2, 13, 3, 7], &[5, 6, 14, 9], &[8, 12, 11, 15]];
    assert_eq!(block_perm_matrix(&support).unwrap_err(), inadmissible);
}

#[test]
fn base_matrix_shapes() {
    let b = bundle();
    let gamma = classify(&b.gamma).unwrap();
    assert!(gamma.is_diagonal && !gamma.is_scalar);
    let f = classify(&b.f).unwrap();
    assert!(f.is_monomial && !f.is_diagonal);
    assert_eq!(f.support_cycles(), "(5,11)(6,12)(7,13)(8,14)(9,15)(10,16)");
    assert_eq!(classify(&b.alpha).unwrap().support_cycles(), "(5,8)(6,15)(7,13)(9,12)(10,16)(11,14)");
    assert_eq!(classify(&b.beta).unwrap().support_cycles(), "(2,3,4)(5,12,16)(6,10,11)(7,14,9)(8,15,13)");
}

#[test]
fn decomposition_recomposes() {
    let b = bundle();
    for x in [&b.alpha, &b.beta, &b.gamma, &b.f] {
        let (d, p) = monomial_decompose(x).unwrap();
        assert!(classify(&d).unwrap().is_diagonal);
        assert_eq!(&d * &p, *x);
    }
    assert_eq!(monomial_decompose(&b.xi), Err(BlockError::NotBlockMonomial));
    let (d, p) = monomial_decompose(&b.gamma).unwrap();
    assert_eq!(d, b.gamma);
    assert!(p.is_identity());
}

#[test]
fn miniblock_monomial_examples() {
    assert!(miniblock_monomial(&Gf5Matrix::identity(DIM)).unwrap());
    assert!(!miniblock_monomial(&bundle().xi).unwrap());
}

#[test]
fn torus_word_is_block_scalar() {
    let t = &bundle().derived(&lyons::apartment::base_line()).t[0];
    let p = classify(t).unwrap();
    assert!(p.is_scalar);
}

#[test]
fn section_notation() {
    let v = parse_sections("[1.3..42]_5").unwrap();
    let s = SectionScheme::range(5).start;
    assert_eq!(&v[s..s + 7], &[1, 0, 3, 0, 0, 4, 2]);
    assert_eq!(v.iter().filter(|&&x| x != 0).count(), 4);
    assert_eq!(format_sections(&v), "[1.3..42]_5");
    assert!(parse_sections("[1.3]_5").is_err());
    assert!(parse_sections("[1.3..45]_5").is_err());
    assert!(parse_sections("[1.3..42]_17").is_err());
    assert!(parse_sections("1.3..42_5").is_err());
    let rows = ["[..1124312]_1", "[1.3..42]_5 [1.3..13]_7"];
    assert_eq!(format_rows(&parse_rows(&rows).unwrap()), rows);
}

proptest! {
    #[test]
    fn block_perm_is_a_homomorphism(s in admissible(), t in admissible()) {
        let composed: Vec<usize> = s.iter().map(|&i| t[i - 1]).collect();
        let ps = section_perm_matrix(&s).unwrap();
        let pt = section_perm_matrix(&t).unwrap();
        prop_assert_eq!(&ps * &pt, section_perm_matrix(&composed).unwrap());
    }

    #[test]
    fn support_composes(
        s in admissible(),
        t in admissible(),
        a in proptest::collection::vec(1i64..5, SECTIONS),
        b in proptest::collection::vec(1i64..5, SECTIONS),
    ) {
        let x = &section_scalars(&a) * &section_perm_matrix(&s).unwrap();
        let y = &section_scalars(&b) * &section_perm_matrix(&t).unwrap();
        let (px, py, pxy) = (classify(&x).unwrap(), classify(&y).unwrap(), classify(&(&x * &y)).unwrap());
        prop_assert!(px.is_monomial && py.is_monomial && pxy.is_monomial);
        for i in 0..SECTIONS {
            let via = py.support[px.support[i].unwrap() - 1];
            prop_assert_eq!(pxy.support[i], via);
        }
    }

    #[test]
    fn decomposition_is_unique(s in admissible(), a in proptest::collection::vec(1i64..5, SECTIONS)) {
        let d = section_scalars(&a);
        let p = section_perm_matrix(&s).unwrap();
        let (xd, xp) = monomial_decompose(&(&d * &p)).unwrap();
        prop_assert_eq!(xd, d);
        prop_assert_eq!(xp, p);
    }

    #[test]
    fn section_notation_round_trip(v in proptest::collection::vec(0u8..5, DIM)) {
        prop_assert_eq!(parse_sections(&format_sections(&v)).unwrap(), v);
    }
}
