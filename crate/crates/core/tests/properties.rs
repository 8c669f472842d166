mod common;

use std::collections::BTreeSet;

use common::{hopf_failures, Dense};
use hopfbrace::hopf::verify_hopf;
use hopfbrace::io::{self, Loaded};
use hopfbrace::linalg::{kernel, sparse_to_dense};
use hopfbrace::{zoo, Field, Scalar, SparseMatrix};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::prime(5).unwrap()),
        Just(Field::prime(7).unwrap()),
        Just(Field::prime(101).unwrap()),
    ]
}

fn matrix(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = SparseMatrix> {
    prop::collection::vec((0..rows, 0..cols, -9i64..10, 1i64..4), 0..(rows * cols + 1)).prop_map(move |t| {
        let triples = t.into_iter().filter_map(|(r, c, n, d)| Some((r, c, field.fraction(n, d)?)));
        SparseMatrix::from_triples(field, rows, cols, triples.collect::<Vec<_>>()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclic_group_algebras_are_hopf(n in 1usize..9, f in field()) {
        let h = zoo::cyclic_group_algebra(f, n).unwrap();
        prop_assert!(verify_hopf(&h).all_passed());
        prop_assert!(hopf_failures(&h).is_empty());
    }

    #[test]
    fn kernel_vectors_are_annihilated((_f, m) in field().prop_flat_map(|f| (Just(f), matrix(f, 4, 6)))) {
        let k = kernel(&m);
        prop_assert_eq!(k.dim() + m.rank(), 6);
        for v in k.basis() {
            let image = m.apply(&hopfbrace::linalg::dense_to_sparse(v));
            prop_assert!(image.is_empty());
        }
    }

    #[test]
    fn matrices_round_trip((f, m) in field().prop_flat_map(|f| (Just(f), matrix(f, 5, 7)))) {
        let obj = Loaded::Matrix(m);
        let text = io::to_string(&obj);
        let back = io::load_str(&text).unwrap();
        prop_assert_eq!(&back, &obj);
        prop_assert_eq!(io::to_string(&back), text);
        prop_assert_eq!(back.field(), f);
    }

    #[test]
    fn perturbed_h4_product_is_caught(col in 0usize..16, row in 0usize..4, c in 1i64..5, p5 in any::<bool>()) {
        let f = if p5 { Field::prime(5).unwrap() } else { Field::Rational };
        let h = zoo::sweedler_h4(f).unwrap();
        let bump = SparseMatrix::from_triples(f, 4, 16, [(row, col, f.int(c))]).unwrap();
        let bad = h.with_mult(h.mult().add(&bump).unwrap()).unwrap();
        let r = verify_hopf(&bad);
        prop_assert!(!r.all_passed());
        let lib: BTreeSet<&str> = r.failed_names().into_iter().collect();
        let oracle: BTreeSet<&str> = hopf_failures(&bad).into_iter().collect();
        prop_assert_eq!(lib, oracle);
    }

    #[test]
    fn antipode_is_anti_multiplicative(i in 0usize..6, j in 0usize..6) {
        let h = zoo::symmetric_group_algebra(Field::Rational, 3).unwrap();
        let d = Dense::new(&h);
        let lhs = d.s(&d.mul(&d.e(i), &d.e(j)));
        let rhs = d.mul(&d.s(&d.e(j)), &d.s(&d.e(i)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_arithmetic_is_exact(a in -50i64..50, b in 1i64..50, f in field()) {
        if let Some(x) = f.fraction(a, b) {
            let back: Scalar = &x * &f.int(b);
            prop_assert_eq!(back, f.int(a));
            prop_assert_eq!(f.parse(&x.to_canonical()).unwrap(), x);
        }
    }
}

#[test]
fn dense_vectors_match_sparse_columns() {
    let h = zoo::sweedler_h4(Field::Rational).unwrap();
    let col = h.antipode().column(2);
    let dense = sparse_to_dense(Field::Rational, 4, col);
    assert_eq!(dense[3], Field::Rational.int(-1));
}
