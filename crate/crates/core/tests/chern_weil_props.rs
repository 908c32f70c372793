use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spingeo::chern_weil::oracle::{ahat_taylor, l_taylor};
use spingeo::chern_weil::sampling::{
    adjoint, cayley_orthogonal, random_antisymmetric, random_general, random_rational_antisymmetric,
    random_special_orthogonal, random_unitary,
};
use spingeo::chern_weil::{genus_eval, genus_expand, invariance_check, p1_trace_form, FormMatrix, Genus};
use spingeo::linalg::Square;
use spingeo::scalar::{rat, GaussRat, PiLaurent};

fn exact(k: &Square<spingeo::scalar::Rational>) -> Square<PiLaurent> {
    k.iter().map(|r| r.iter().map(|&q| PiLaurent::constant(GaussRat::real(q))).collect()).collect()
}

#[test]
fn ahat_and_l_leading_terms_from_taylor_oracle() {
    assert_eq!(ahat_taylor(2)[2], rat(-1, 24));
    assert_eq!(l_taylor(2)[2], rat(1, 3));
    assert_eq!(genus_expand(Genus::AHat).unwrap().p1, ahat_taylor(2)[2]);
}

#[test]
fn first_pontryagin_form_is_trace_of_square() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let f: FormMatrix<PiLaurent> = random_antisymmetric(4, 4, 5, &mut rng);
        let p = genus_eval(Genus::Pontryagin, &f).unwrap();
        assert_eq!(p.degree_part(4), p1_trace_form(&f));
    }
}

#[test]
fn exact_conjugation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let f: FormMatrix<PiLaurent> = random_antisymmetric(4, 4, 3, &mut rng);
    let g = cayley_orthogonal(&random_rational_antisymmetric(4, &mut rng));
    let gt: Square<_> = (0..4).map(|i| (0..4).map(|j| g[j][i]).collect()).collect();
    for genus in [Genus::AHat, Genus::L, Genus::Pontryagin, Genus::Euler, Genus::ChernCharacter, Genus::Chern] {
        assert_eq!(invariance_check(genus, &f, &exact(&g), &exact(&gt)).unwrap(), 0.0, "{genus}");
    }
}

#[test]
fn float_conjugation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..5 {
        let f: FormMatrix<Complex64> = random_antisymmetric(4, 4, 3, &mut rng);
        let g = random_special_orthogonal(4, &mut rng);
        let r = invariance_check(Genus::AHat, &f, &g, &adjoint(&g)).unwrap();
        assert!(r <= 1e-10, "SO(4) Â residual {r}");
        let f: FormMatrix<Complex64> = random_general(2, 4, 3, &mut rng);
        let u = random_unitary(2, &mut rng);
        for genus in [Genus::ChernCharacter, Genus::Chern, Genus::Todd] {
            let r = invariance_check(genus, &f, &u, &adjoint(&u)).unwrap();
            assert!(r <= 1e-10, "U(2) {genus} residual {r}");
        }
    }
}

#[test]
fn identity_conjugation_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let f: FormMatrix<PiLaurent> = random_antisymmetric(4, 6, 2, &mut rng);
    let id = spingeo::linalg::identity(4);
    assert_eq!(invariance_check(Genus::L, &f, &id, &id).unwrap(), 0.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn det_sqrt_squares_to_det(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a: FormMatrix<GaussRat> = random_antisymmetric(n, 4, 4, &mut rng);
        let m = FormMatrix::identity(n).add(&a.mul(&a));
        let s = m.det_sqrt().unwrap();
        prop_assert_eq!(s.clone() * s, m.det());
    }

    #[test]
    fn pfaffian_squares_to_det(seed in any::<u64>(), half in 1usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a: FormMatrix<GaussRat> = random_antisymmetric(2 * half, 6, 3, &mut rng);
        let pf = a.pfaffian().unwrap();
        prop_assert_eq!(pf.clone() * pf, a.det());
    }

    #[test]
    fn genera_multiplicative_on_block_sums(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x: FormMatrix<PiLaurent> = random_antisymmetric(2, 2, 3, &mut rng);
        let y: FormMatrix<PiLaurent> = random_antisymmetric(2, 4, 3, &mut rng);
        let xy = x.direct_sum(&y, 2);
        for genus in [Genus::AHat, Genus::L, Genus::Pontryagin, Genus::Chern, Genus::Todd, Genus::Euler] {
            let lhs = genus_eval(genus, &xy).unwrap();
            let y_shifted = FormMatrix::zeros(0).direct_sum(&y, 2);
            let rhs = genus_eval(genus, &x).unwrap() * genus_eval(genus, &y_shifted).unwrap();
            prop_assert_eq!(lhs, rhs, "{}", genus);
        }
        let ch = genus_eval(Genus::ChernCharacter, &xy).unwrap();
        let y_shifted = FormMatrix::zeros(0).direct_sum(&y, 2);
        prop_assert_eq!(ch, genus_eval(Genus::ChernCharacter, &x).unwrap() + genus_eval(Genus::ChernCharacter, &y_shifted).unwrap());
    }

    #[test]
    fn forms_commute(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a: FormMatrix<GaussRat> = random_general(2, 5, 3, &mut rng);
        let (p, q) = (a.get(0, 1).clone(), a.get(1, 0).clone() * a.get(1, 1).clone());
        prop_assert_eq!(p.clone() * q.clone(), q * p);
    }
}
