mod common;

use common::{dense_rank, int_matrix};
use proptest::prelude::*;
use snc_cohom::RationalMatrix;

fn arb_rows(small: bool) -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (0usize..7, 0usize..7).prop_flat_map(move |(r, c)| {
        let entry = if small {
            (-3i64..=3).boxed()
        } else {
            prop_oneof![-3i64..=3, Just(i64::MAX / 3), Just(i64::MIN / 5), any::<i64>()].boxed()
        };
        (prop::collection::vec(prop::collection::vec(entry, c), r), Just(c))
    })
}

proptest! {
    #[test]
    fn rank_matches_dense_oracle((rows, cols) in arb_rows(true)) {
        let m = int_matrix(&rows, cols);
        prop_assert_eq!(m.rank(), dense_rank(&rows));
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn rank_survives_overflow((rows, cols) in arb_rows(false)) {
        let m = int_matrix(&rows, cols);
        prop_assert_eq!(m.rank(), dense_rank(&rows));
    }

    #[test]
    fn kernel_is_annihilated_and_full((rows, cols) in arb_rows(true)) {
        let m = int_matrix(&rows, cols);
        let k = m.kernel_basis();
        prop_assert_eq!(k.rows(), cols);
        prop_assert_eq!(k.cols(), cols - m.rank());
        prop_assert!(m.mul(&k).unwrap().is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn product_rank_is_bounded((a, c) in arb_rows(true), seed in any::<u64>()) {
        let m = int_matrix(&a, c);
        let n = RationalMatrix::identity(c).scaled(&snc_cohom::linalg::rational((seed % 5) as i64 + 1));
        prop_assert_eq!(m.mul(&n).unwrap().rank(), m.rank());
        prop_assert_eq!(m.add(&m.neg()).unwrap().rank(), 0);
    }
}

#[test]
fn hilbert_matrix_is_invertible() {
    let n = 6;
    let entries = (0..n * n)
        .map(|k| snc_cohom::linalg::ratio(1, (k / n + k % n + 1) as i64))
        .collect();
    let h = RationalMatrix::from_entries(n, n, entries).unwrap();
    assert_eq!(h.rank(), n);
    assert_eq!(h.kernel_basis().cols(), 0);
}

#[test]
fn shape_errors() {
    let a = RationalMatrix::zeros(2, 3);
    assert!(a.mul(&RationalMatrix::zeros(2, 3)).is_err());
    assert!(a.add(&RationalMatrix::zeros(3, 2)).is_err());
    assert!(RationalMatrix::from_int_rows(&[vec![1, 2], vec![3]]).is_err());
}
