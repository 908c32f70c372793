use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spingeo::cech::{brute_force_count, spin_structures, w2, Cochain, Nerve, SpinLifts};
use spingeo::clifford::Signature;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn coboundary_squares_to_trivial(seed in any::<u64>(), patches in 2usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nerve = Nerve::random(patches, &mut rng);
        for k in 0..=nerve.dim() {
            let s = Cochain::random(&nerve, k, &mut rng);
            let dd = s.coboundary(&nerve).unwrap().coboundary(&nerve).unwrap();
            prop_assert!(dd.is_trivial());
        }
    }

    #[test]
    fn twisting_lifts_changes_epsilon_by_coboundary(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nerve = Nerve::torus();
        let base = SpinLifts::trivial(&nerve, Signature::euclidean(2).unwrap());
        let kappa = Cochain::random(&nerve, 1, &mut rng);
        let e0 = w2(&nerve, &base).unwrap().epsilon;
        let e1 = w2(&nerve, &base.twisted(&kappa)).unwrap().epsilon;
        prop_assert_eq!(e1, e0.mul(&kappa.coboundary(&nerve).unwrap()));
    }

    #[test]
    fn torsor_count_matches_brute_force(seed in any::<u64>(), patches in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nerve = Nerve::random(patches, &mut rng);
        prop_assume!(nerve.count(1) <= 10);
        let lifts = SpinLifts::trivial(&nerve, Signature::euclidean(2).unwrap());
        let s = spin_structures(&nerve, &lifts).unwrap();
        prop_assert_eq!(s.count(), 1 << nerve.cohomology_dim(1));
        prop_assert!(s.certificate.unwrap().holds());
        prop_assert_eq!(brute_force_count(&nerve, &lifts).unwrap(), s.count());
    }
}

#[test]
fn w2_class_survives_lift_changes() {
    let nerve = Nerve::torus();
    let lifts = spingeo::cech::torus_anticommuting_lifts(&nerve).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let kappa = Cochain::random(&nerve, 1, &mut rng);
        assert!(!w2(&nerve, &lifts.twisted(&kappa)).unwrap().vanishes());
    }
}
