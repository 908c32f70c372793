use proptest::prelude::*;
use spingeo::clifford::{blade_mul, volume_element, Blade, ExactMultivector, Multivector, Signature};
use spingeo::scalar::{rat, GaussRat};

fn signature(max: usize) -> impl Strategy<Value = Signature> {
    (0..=max).prop_flat_map(move |n| (0..=n).prop_map(move |p| Signature::new(p, n - p).unwrap()))
}

fn coeff() -> impl Strategy<Value = GaussRat> {
    (-4i128..=4, 1i128..=3, -2i128..=2).prop_map(|(a, d, b)| GaussRat::new(rat(a, d), rat(b, 1)))
}

fn element(sig: Signature) -> impl Strategy<Value = ExactMultivector> {
    let blades = 1u64 << sig.dim();
    prop::collection::vec((0..blades, coeff()), 0..6)
        .prop_map(move |ts| Multivector::from_terms(sig, ts.into_iter().map(|(b, c)| (Blade(b), c))))
}

fn sig_and(k: usize) -> impl Strategy<Value = (Signature, Vec<ExactMultivector>)> {
    signature(5).prop_flat_map(move |s| (Just(s), prop::collection::vec(element(s), k)))
}

proptest! {
    #[test]
    fn clifford_relation(sig in signature(8), i in 0usize..8, j in 0usize..8) {
        prop_assume!(i < sig.dim() && j < sig.dim());
        let ei: ExactMultivector = Multivector::generator(sig, i);
        let ej = Multivector::generator(sig, j);
        let anti = &(&ei * &ej) + &(&ej * &ei);
        let eta = if i != j { 0 } else { sig.metric(i) as i128 };
        prop_assert_eq!(anti, Multivector::scalar(sig, GaussRat::int(-2 * eta)));
    }

    #[test]
    fn ring_axioms((sig, xs) in sig_and(3)) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(&(a * &Multivector::one(sig)), a);
    }

    #[test]
    fn involutions((_sig, xs) in sig_and(2)) {
        let (a, b) = (&xs[0], &xs[1]);
        prop_assert_eq!((a * b).grade_involution(), &a.grade_involution() * &b.grade_involution());
        prop_assert_eq!((a * b).transpose(), &b.transpose() * &a.transpose());
        prop_assert_eq!(a.transpose().transpose(), a.clone());
    }

    #[test]
    fn basis_closed_under_product(sig in signature(6), a in 0u64..64, b in 0u64..64) {
        let mask = (1u64 << sig.dim()) - 1;
        let (sign, r) = blade_mul(Blade(a & mask), Blade(b & mask), sig).unwrap();
        prop_assert!(sign == 1 || sign == -1);
        prop_assert_eq!(r.0 & !mask, 0);
    }

    #[test]
    fn text_round_trip((sig, xs) in sig_and(1)) {
        let text = xs[0].to_string();
        prop_assert_eq!(Multivector::parse(sig, &text).unwrap(), xs[0].clone());
    }

    #[test]
    fn volume_element_supercentral(n in 1usize..=8, a in 0u64..256, c in coeff()) {
        let sig = Signature::euclidean(n).unwrap();
        let w: ExactMultivector = volume_element(sig, true).unwrap();
        let x = Multivector::term(sig, Blade(a & ((1 << n) - 1)), c);
        if n % 2 == 0 {
            // ω is even, so it commutes with even elements and anticommutes with odd ones
            prop_assert_eq!(&w * &x, &x.grade_involution() * &w);
            prop_assert!(w.supercommutator(&x.even_part()).is_zero());
        } else {
            prop_assert!(w.commutator(&x).is_zero());
        }
    }

    #[test]
    fn norm_multiplicative_on_vectors(n in 1usize..=5, v in prop::collection::vec(-3i128..=3, 5), w in prop::collection::vec(-3i128..=3, 5)) {
        let sig = Signature::euclidean(n).unwrap();
        let to = |xs: &[i128]| Multivector::vector(sig, &xs[..n].iter().map(|&x| GaussRat::int(x)).collect::<Vec<_>>());
        let (a, b): (ExactMultivector, ExactMultivector) = (to(&v), to(&w));
        prop_assert_eq!((&a * &b).norm(), &a.norm() * &b.norm());
    }
}
