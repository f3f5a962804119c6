use lyons::gf5::{format_matrix, parse_matrix, read_matrix, write_matrix, Gf5Matrix, Gf5Scalar, MatrixFormatError, Subspace};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Gf5Matrix> {
    proptest::collection::vec(0u8..5, rows * cols).prop_map(move |d| Gf5Matrix::from_vec(rows, cols, d).unwrap())
}

/// Strictly upper triangular, hence `u^n = 0`; `n <= 5` gives `u^5 = 0`.
fn strict_upper(n: usize) -> impl Strategy<Value = Gf5Matrix> {
    matrix(n, n).prop_map(move |m| Gf5Matrix::from_fn(n, n, |i, j| if j > i { m.get(i, j) as i64 } else { 0 }))
}

/// Naive triple loop, independent of the accumulating product.
fn naive_mul(a: &Gf5Matrix, b: &Gf5Matrix) -> Gf5Matrix {
    Gf5Matrix::from_fn(a.rows(), b.cols(), |i, j| (0..a.cols()).map(|k| a.get(i, k) as i64 * b.get(k, j) as i64).sum())
}

/// Determinant by Laplace expansion.
fn laplace_det(m: &Gf5Matrix) -> i64 {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0) as i64;
    }
    (0..n)
        .map(|j| {
            let minor = Gf5Matrix::from_fn(n - 1, n - 1, |r, c| m.get(r + 1, if c < j { c } else { c + 1 }) as i64);
            let sign = if j % 2 == 0 { 1 } else { 4 };
            sign * m.get(0, j) as i64 * laplace_det(&minor)
        })
        .sum::<i64>()
        .rem_euclid(5)
}

#[test]
fn scalar_inverses() {
    for v in 1..5 {
        let s = Gf5Scalar::new(v);
        assert_eq!((s * s.inverse().unwrap()).value(), 1);
    }
    assert!(Gf5Scalar::new(0).inverse().is_none());
    assert_eq!(Gf5Scalar::new(-1).value(), 4);
}

#[test]
fn identity_is_neutral() {
    let x = Gf5Matrix::from_fn(111, 111, |i, j| (i * 7 + j * 3) as i64);
    assert_eq!(&Gf5Matrix::identity(111) * &x, x);
    assert_eq!(&x * &Gf5Matrix::identity(111), x);
}

#[test]
fn b_squared() {
    let b = Gf5Matrix::from_rows(&[[0, 1], [4, 4]]);
    assert_eq!(&b * &b, Gf5Matrix::from_rows(&[[4, 4], [1, 0]]));
    assert_eq!(b.element_order(10).unwrap(), 3);
}

#[test]
fn shape_mismatch_is_an_error() {
    let a = Gf5Matrix::zeros(2, 3);
    assert!(a.try_mul(&a).is_err());
    assert!(a.try_add(&Gf5Matrix::zeros(3, 2)).is_err());
    assert!(a.det().is_err());
}

#[test]
fn det_examples() {
    assert_eq!(Gf5Matrix::identity(7).det().unwrap().value(), 1);
    assert_eq!(Gf5Matrix::diag(&[2, 3, 4]).det().unwrap().value(), 4);
    assert_eq!(Gf5Matrix::zeros(3, 3).det().unwrap().value(), 0);
}

#[test]
fn nilpotency_examples() {
    assert_eq!(Gf5Matrix::zeros(3, 3).nilpotency_index().unwrap(), Some(1));
    assert_eq!(Gf5Matrix::from_rows(&[[0, 1], [0, 0]]).nilpotency_index().unwrap(), Some(2));
    assert_eq!(Gf5Matrix::identity(2).nilpotency_index().unwrap(), None);
}

#[test]
fn element_order_examples() {
    assert_eq!(Gf5Matrix::identity(4).element_order(10).unwrap(), 1);
    assert_eq!(Gf5Matrix::diag(&[2]).element_order(10).unwrap(), 4);
    assert!(Gf5Matrix::diag(&[2]).element_order(3).is_err());
    assert!(Gf5Matrix::zeros(2, 2).element_order(10).is_err());
}

#[test]
fn exp_log_examples() {
    let z = Gf5Matrix::zeros(4, 4);
    assert_eq!(z.exp5().unwrap(), Gf5Matrix::identity(4));
    assert_eq!(Gf5Matrix::identity(4).log5().unwrap(), z);
    let u = Gf5Matrix::from_rows(&[[0, 3], [0, 0]]);
    assert_eq!(u.exp5().unwrap(), &Gf5Matrix::identity(2) + &u);
    assert!(Gf5Matrix::identity(2).exp5().is_err());
}

#[test]
fn compose_examples() {
    let a = Gf5Matrix::identity(3);
    let b = Gf5Matrix::from_rows(&[[0, 1], [4, 4]]);
    assert_eq!(a.dirsum(&b).shape(), (5, 5));
    let k = a.kron(&b);
    assert_eq!(k.shape(), (6, 6));
    assert_eq!(k, Gf5Matrix::dirsum_all(&[b.clone(), b.clone(), b]));
}

#[test]
fn rref_sorts_unit_vectors() {
    let m = Gf5Matrix::from_rows(&[[0, 0, 1, 0], [1, 0, 0, 0]]);
    let s = Subspace::row_space(&m);
    assert_eq!(s.basis(), &Gf5Matrix::from_rows(&[[1, 0, 0, 0], [0, 0, 1, 0]]));
    assert_eq!(s.pivots(), &[0, 2]);
}

#[test]
fn fixed_space_of_identity_is_everything() {
    let one = Gf5Matrix::identity(111);
    assert_eq!(Subspace::fixed_space(&[&one]).unwrap().dim(), 111);
}

#[test]
fn span_closure_of_whole_space() {
    let v = Subspace::full(5);
    let x = Gf5Matrix::from_fn(5, 5, |i, j| (i + 2 * j) as i64);
    assert_eq!(v.span_closure(&[&x]).unwrap(), v);
}

#[test]
fn orth_complement_of_whole_space_is_zero() {
    let f = Gf5Matrix::diag(&[1, 2, 3, 4]);
    assert_eq!(Subspace::full(4).orth_complement(&f).unwrap().dim(), 0);
}

#[test]
fn text_round_trip() {
    let m = Gf5Matrix::from_fn(7, 11, |i, j| (i * j + 3) as i64);
    let text = format_matrix(&m);
    assert!(text.starts_with("7 11\n"));
    assert_eq!(parse_matrix(&text).unwrap(), m);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.mat");
    write_matrix(&m, &path).unwrap();
    assert_eq!(read_matrix(&path).unwrap(), m);
}

fn parse_error_line(text: &str) -> usize {
    match parse_matrix(text) {
        Err(MatrixFormatError::Parse { line, .. }) => line,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn text_errors_report_lines() {
    assert_eq!(parse_error_line("2 3\n012\n015\n"), 3);
    assert_eq!(parse_error_line("2 3\n0123\n012\n"), 2);
    assert_eq!(parse_error_line("2 3\n012\n"), 3);
    assert_eq!(parse_error_line("2\n"), 1);
    assert_eq!(parse_error_line("x 3\n"), 1);
    assert_eq!(parse_error_line("1 1\n0\n4\n"), 3);
}

proptest! {
    #[test]
    fn product_matches_naive(a in matrix(4, 6), b in matrix(6, 3)) {
        prop_assert_eq!(&a * &b, naive_mul(&a, &b));
    }

    #[test]
    fn product_is_associative(a in matrix(5, 5), b in matrix(5, 5), c in matrix(5, 5)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn det_is_multiplicative(a in matrix(4, 4), b in matrix(4, 4)) {
        let prod = a.det().unwrap() * b.det().unwrap();
        prop_assert_eq!((&a * &b).det().unwrap(), prod);
    }

    #[test]
    fn det_matches_laplace(a in matrix(4, 4)) {
        prop_assert_eq!(a.det().unwrap().value() as i64, laplace_det(&a));
    }

    #[test]
    fn inverse_is_two_sided(a in matrix(5, 5)) {
        match a.inverse() {
            Ok(inv) => {
                prop_assert!((&a * &inv).is_identity());
                prop_assert!((&inv * &a).is_identity());
            }
            Err(_) => prop_assert_eq!(a.det().unwrap().value(), 0),
        }
    }

    #[test]
    fn transpose_reverses_products(a in matrix(3, 4), b in matrix(4, 2)) {
        prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
    }

    #[test]
    fn exp_log_inverse(u in strict_upper(5)) {
        let x = u.exp5().unwrap();
        prop_assert_eq!(x.log5().unwrap(), u.clone());
        prop_assert_eq!(x.log5().unwrap().exp5().unwrap(), x);
    }

    #[test]
    fn exp_is_a_homomorphism_on_commuting_nilpotents(u in strict_upper(5), a in 0i64..5, b in 0i64..5) {
        let (x, y) = (u.scale(Gf5Scalar::new(a)), u.scale(Gf5Scalar::new(b)));
        prop_assert_eq!(&x.exp5().unwrap() * &y.exp5().unwrap(), (&x + &y).exp5().unwrap());
    }

    #[test]
    fn rref_pivot_invariants(m in matrix(5, 8)) {
        let s = Subspace::row_space(&m);
        let b = s.basis();
        let piv = s.pivots();
        prop_assert_eq!(b.rows(), piv.len());
        prop_assert!(piv.windows(2).all(|w| w[0] < w[1]));
        for (r, &p) in piv.iter().enumerate() {
            prop_assert!((0..p).all(|c| b.get(r, c) == 0));
            for r2 in 0..b.rows() {
                prop_assert_eq!(b.get(r2, p), u8::from(r2 == r));
            }
        }
        prop_assert_eq!(Subspace::row_space(b), s.clone());
        for i in 0..m.rows() {
            prop_assert!(s.contains_vector(m.row(i)));
        }
    }

    #[test]
    fn span_closure_is_invariant_and_idempotent(seed in matrix(1, 6), x in matrix(6, 6), y in matrix(6, 6)) {
        let s = Subspace::row_space(&seed);
        let c = s.span_closure(&[&x, &y]).unwrap();
        prop_assert!(c.contains(&s));
        prop_assert!(c.is_invariant(&x).unwrap());
        prop_assert!(c.is_invariant(&y).unwrap());
        prop_assert_eq!(c.span_closure(&[&x, &y]).unwrap(), c);
    }

    #[test]
    fn fixed_space_shrinks(x in matrix(5, 5), y in matrix(5, 5)) {
        let both = Subspace::fixed_space(&[&x, &y]).unwrap();
        prop_assert!(Subspace::fixed_space(&[&x]).unwrap().contains(&both));
        prop_assert!(Subspace::fixed_space(&[&y]).unwrap().contains(&both));
        for r in 0..both.dim() {
            let v = Gf5Matrix::from_vec(1, 5, both.basis().row(r).to_vec()).unwrap();
            prop_assert_eq!(&v * &x, v.clone());
        }
    }

    #[test]
    fn double_orth_complement(m in matrix(3, 6), d in proptest::collection::vec(1i64..5, 6)) {
        let f = Gf5Matrix::diag(&d);
        let u = Subspace::row_space(&m);
        let c = u.orth_complement(&f).unwrap();
        prop_assert_eq!(c.dim() + u.dim(), 6);
        prop_assert!(u.is_orthogonal_to(&c, &f).unwrap());
        prop_assert_eq!(c.orth_complement(&f).unwrap(), u);
    }

    #[test]
    fn text_round_trip_any(m in (1usize..6, 1usize..9).prop_flat_map(|(r, c)| matrix(r, c))) {
        prop_assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }
}
