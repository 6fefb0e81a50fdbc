//! Property tests for the structural invariants: symmetries, bounds, and
//! bit-level determinism of the samplers.

use arcsine_reset::laws::{last_zero, occupation};
use arcsine_reset::sampling::{simulate_trajectory, PathGrid};
use arcsine_reset::{CFQuery, ResetModel};
use proptest::prelude::*;

fn model(r: f64) -> ResetModel {
    ResetModel::new(r).unwrap()
}

proptest! {
    #[test]
    fn occupation_pdf_is_symmetric_about_half(
        r in 0.0f64..10.0,
        t in 0.01f64..0.5,
    ) {
        let left = occupation::pdf(t, model(r)).unwrap();
        let right = occupation::pdf(1.0 - t, model(r)).unwrap();
        prop_assert!((left - right).abs() <= 1e-9 * left.abs().max(1.0));
        prop_assert!(left > 0.0);
    }

    #[test]
    fn last_zero_pdf_is_positive(
        r in 0.0f64..10.0,
        t in 0.01f64..0.99,
    ) {
        prop_assert!(last_zero::pdf(t, model(r)).unwrap() > 0.0);
    }

    #[test]
    fn conditioned_cf_is_bounded_and_hermitian(
        omega in -40.0f64..40.0,
        k in 0u32..60,
    ) {
        let q = CFQuery::new(omega, k).unwrap();
        let v = occupation::cf_given_k(q).unwrap();
        prop_assert!(v.norm() <= 1.0 + 1e-12, "|cf| = {}", v.norm());
        let conj = occupation::cf_given_k(CFQuery::new(-omega, k).unwrap()).unwrap();
        prop_assert!((v.re - conj.re).abs() <= 1e-12 * v.re.abs().max(1.0));
        prop_assert!((v.im + conj.im).abs() <= 1e-12 * v.im.abs().max(1.0));
    }

    #[test]
    fn last_zero_mean_increases_with_rate(
        r in 0.0f64..30.0,
        bump in 0.01f64..5.0,
    ) {
        prop_assert!(last_zero::mean(model(r + bump)) > last_zero::mean(model(r)));
    }

    #[test]
    fn trajectory_functionals_stay_in_the_window(
        r in 0.0f64..20.0,
        seed in any::<u64>(),
        index in 0u64..1000,
    ) {
        let out = simulate_trajectory(model(r), PathGrid::new(1e-2).unwrap(), index, seed);
        prop_assert!((0.0..=1.0).contains(&out.t_occupation));
        prop_assert!((0.0..=1.0).contains(&out.t_last_zero));
        prop_assert!((0.0..=1.0).contains(&out.t_argmax));
    }

    #[test]
    fn trajectories_replay_bit_identically(
        r in 0.0f64..20.0,
        seed in any::<u64>(),
        index in 0u64..1000,
    ) {
        let g = PathGrid::new(1e-2).unwrap();
        let a = simulate_trajectory(model(r), g, index, seed);
        let b = simulate_trajectory(model(r), g, index, seed);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn empirical_moments_are_permutation_invariant(
        mut values in prop::collection::vec(0.0f64..1.0, 2..200),
    ) {
        let forward = arcsine_reset::analysis::empirical_central_moment(&values, 2).unwrap();
        values.reverse();
        let backward = arcsine_reset::analysis::empirical_central_moment(&values, 2).unwrap();
        prop_assert!((forward - backward).abs() <= 1e-12);
    }

    #[test]
    fn ks_statistic_is_a_distance_in_range(
        values in prop::collection::vec(0.0f64..1.0, 1..300),
    ) {
        let d = arcsine_reset::analysis::ks_statistic(&values, |t| t.clamp(0.0, 1.0)).unwrap();
        prop_assert!((0.0..=1.0).contains(&d));
    }
}
