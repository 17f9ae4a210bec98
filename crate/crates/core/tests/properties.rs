//! Property tests for the structural invariants.

use proptest::prelude::*;
use toeplitz_core::ensemble::{DistributionSpec, EnsembleConfig};
use toeplitz_core::statistics::{ks_statistic, SpacingModel, SpacingSample};

fn arb_dist() -> impl Strategy<Value = DistributionSpec> {
    prop_oneof![
        Just(DistributionSpec::Gaussian),
        Just(DistributionSpec::Rademacher),
        Just(DistributionSpec::UniformSym),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sampling_is_a_pure_function_of_config_and_trial(
        n in 2usize..40,
        dist in arb_dist(),
        seed in any::<u64>(),
        trial in 0u64..1000,
    ) {
        let cfg = EnsembleConfig::new(n, dist, seed).unwrap();
        let a: toeplitz_core::Sample = cfg.sample(trial);
        let b: toeplitz_core::Sample = cfg.sample(trial);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.n(), n);
        prop_assert_eq!(a.b0(), 0.0);
        prop_assert!(a.is_finite());
    }

    #[test]
    fn neighbouring_trials_differ(
        n in 8usize..40,
        seed in any::<u64>(),
        trial in 0u64..1000,
    ) {
        let cfg = EnsembleConfig::new(n, DistributionSpec::Gaussian, seed).unwrap();
        let a: toeplitz_core::Sample = cfg.sample(trial);
        let b: toeplitz_core::Sample = cfg.sample(trial + 1);
        prop_assert_ne!(a.offdiagonal(), b.offdiagonal());
    }

    #[test]
    fn ks_statistic_is_a_bounded_permutation_invariant(
        gaps in proptest::collection::vec(0.0f64..8.0, 1..200),
        rot in 0usize..200,
    ) {
        let s1 = SpacingSample { gaps: gaps.clone(), window: 0, matrices: 0 };
        let kp = ks_statistic(&s1, SpacingModel::Poisson);
        let kg = ks_statistic(&s1, SpacingModel::Goe);
        prop_assert!((0.0..=1.0).contains(&kp));
        prop_assert!((0.0..=1.0).contains(&kg));
        let mut permuted = gaps;
        let r = rot % permuted.len();
        permuted.rotate_left(r);
        permuted.reverse();
        let s2 = SpacingSample { gaps: permuted, window: 0, matrices: 0 };
        prop_assert_eq!(kp, ks_statistic(&s2, SpacingModel::Poisson));
    }
}
