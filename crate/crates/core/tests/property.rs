//! Randomized invariants. Monoid inputs are built by padding random
//! nonnegative vectors with a slack coordinate that equalizes coordinate
//! sums, so every generated instance is homogeneous by construction.

use monoidalg::exactlin::{hnf, rank_of, smith_diagonal, IntMatrix};
use monoidalg::monoid::AffineMonoid;
use monoidalg::normalize::{
    holes_up_to, is_normal, normalization_slices, s2_verdict, S2Verdict,
};
use monoidalg::series::{check_sum_identity, h_polynomial, series_of_join};
use num_traits::Zero;
use proptest::prelude::*;

fn matrix_strategy() -> impl Strategy<Value = IntMatrix<i64>> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(rows, cols)| {
            proptest::collection::vec(proptest::collection::vec(-9i64..=9, cols), rows)
        })
        .prop_map(|rows| IntMatrix::from_rows(&rows).unwrap())
}

fn monoid_strategy() -> impl Strategy<Value = AffineMonoid> {
    (
        1usize..=3,
        proptest::collection::vec(proptest::collection::vec(0i64..=4, 3), 1..=5),
    )
        .prop_map(|(dim, raw)| {
            let gens: Vec<Vec<i64>> = raw
                .into_iter()
                .map(|g| {
                    let mut v: Vec<i64> = g[..dim].to_vec();
                    let sum: i64 = v.iter().sum();
                    v.push(4 * dim as i64 - sum);
                    v
                })
                .collect();
            AffineMonoid::new(&gens).expect("slack-padded generators always share a grading")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_idempotent(m in matrix_strategy()) {
        let b = m.to_bigint();
        let (h, rank) = hnf(&b);
        let (h2, rank2) = hnf(&h);
        prop_assert_eq!(&h2, &h);
        prop_assert_eq!(rank2, rank);
        prop_assert_eq!(rank, rank_of(&b));
        for i in rank..h.rows() {
            prop_assert!(h.row(i).iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn smith_factors_divide_in_order(m in matrix_strategy()) {
        let b = m.to_bigint();
        let d = smith_diagonal(&b);
        prop_assert_eq!(d.len(), rank_of(&b));
        for w in d.windows(2) {
            prop_assert!(!w[0].is_zero());
            prop_assert!((w[1].clone() % w[0].clone()).is_zero());
        }
    }

    #[test]
    fn slices_are_closed_under_addition(q in monoid_strategy()) {
        let slices = q.degree_slices(4).unwrap();
        let ones = slices.points(1).unwrap();
        for x in &ones {
            for y in &ones {
                let sum: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                prop_assert_eq!(slices.slice_contains(2, &sum), Some(true));
            }
        }
    }

    #[test]
    fn counting_identity_holds(q in monoid_strategy()) {
        let report = check_sum_identity(&q, 4).unwrap();
        prop_assert!(report.holds, "residuals {:?}", report.residuals);
    }

    #[test]
    fn monoid_sits_inside_its_normalization(q in monoid_strategy()) {
        let slices = q.degree_slices(4).unwrap();
        let norm = normalization_slices(&q, 4).unwrap();
        for n in 0..=4usize {
            for x in slices.points(n).unwrap() {
                prop_assert_eq!(norm.slice_contains(n, &x), Some(true));
            }
        }
        let holes = holes_up_to(&q, 4).unwrap();
        for (n, x) in holes.iter() {
            prop_assert_eq!(slices.slice_contains(n, x), Some(false));
            prop_assert_eq!(norm.slice_contains(n, x), Some(true));
        }
    }

    #[test]
    fn numerator_reconstructs_counts(q in monoid_strategy()) {
        let counts = q.degree_slices(8).unwrap().graded_count();
        if let Ok(h) = h_polynomial(&counts, q.dim()) {
            prop_assert_eq!(h.reconstruct_counts(8), counts.counts);
        }
    }

    #[test]
    fn codegree_is_bounded_by_dimension_plus_one(q in monoid_strategy()) {
        prop_assume!(q.dim() >= 2);
        let p = q.cross_section().unwrap();
        let c = p.codegree(p.dim() + 1).unwrap();
        prop_assert!(c.is_some());
        let c = c.unwrap();
        prop_assert!(c >= 1 && c <= p.dim() + 1);
    }

    #[test]
    fn normal_monoids_get_consistent_verdicts(q in monoid_strategy()) {
        if is_normal(&q).unwrap() {
            prop_assert_eq!(s2_verdict(&q, 6).unwrap(), S2Verdict::Consistent);
        }
    }

    #[test]
    fn join_counts_convolve(a in monoid_strategy(), b in monoid_strategy()) {
        let report = series_of_join(&a, &b, 3).unwrap();
        prop_assert!(report.holds());
    }
}
