//! Clifford group action on vectors, Pin/Spin elements and the Lie algebra
//! isomorphism `spin_n ≅ so_n`.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::clifford::{metric, Blade, Multivector, Signature};
use crate::error::CliffordError;
use crate::linalg::Square;
use crate::scalar::{rat, Coefficient, GaussRat, Rational};

/// Twisted adjoint action `ρ̃(x)w = ε(x) w x⁻¹`.
pub fn twisted_adjoint<C: Coefficient>(
    x: &Multivector<C>,
    w: &Multivector<C>,
) -> Result<Multivector<C>, CliffordError> {
    let inv = x.inverse()?;
    Ok(&(&x.grade_involution() * w) * &inv)
}

/// Reflection of `w` in the hyperplane orthogonal to `v`:
/// `w − 2 g(v,w)/g(v,v) · v`.
pub fn reflection_formula<C: Coefficient>(sig: Signature, v: &[C], w: &[C]) -> Result<Vec<C>, CliffordError> {
    let gvv = metric(sig, v, v);
    let r = gvv.recip().ok_or(CliffordError::NullVector)?;
    let f = C::from_int(2) * metric(sig, v, w) * r;
    Ok(w.iter().zip(v).map(|(wi, vi)| wi.clone() - f.clone() * vi.clone()).collect())
}

/// Matrix of `ρ̃(x)` on the degree-one subspace (column `j` is the image of
/// `e_j`). Fails if `x` does not preserve vectors; in float mode components
/// of other grades up to a relative `1e−10` are treated as rounding.
pub fn adjoint_matrix<C: Coefficient>(x: &Multivector<C>) -> Result<Square<C>, CliffordError> {
    let sig = x.signature();
    let n = sig.dim();
    let inv = x.inverse()?;
    let ex = x.grade_involution();
    let mut m = vec![vec![C::zero(); n]; n];
    for j in 0..n {
        let mut img = &(&ex * &Multivector::generator(sig, j)) * &inv;
        if !C::EXACT {
            // rounding leaves tiny components of other grades
            let stray = img.terms().filter(|(b, _)| b.grade() != 1).map(|(_, c)| c.magnitude()).fold(0.0, f64::max);
            if stray <= 1e-10 * img.max_abs().max(1.0) {
                img = img.grade_part(1);
            }
        }
        let coords = img.vector_coords().ok_or_else(|| {
            CliffordError::NotInCliffordGroup(format!("image of e{} is not a vector", j + 1))
        })?;
        for (i, c) in coords.into_iter().enumerate() {
            m[i][j] = c;
        }
    }
    Ok(m)
}

/// An element of `Spin(p,q)` together with the unit vectors whose product
/// it is.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinElement<C> {
    element: Multivector<C>,
    factors: Vec<Vec<C>>,
}

impl<C: Coefficient> SpinElement<C> {
    /// Product `v_1 v_2 ⋯ v_{2m}` of an even number of vectors with
    /// `g(v,v) = ±1`. In float mode the unit condition is checked to `1e−10`.
    pub fn from_unit_vectors(sig: Signature, factors: Vec<Vec<C>>) -> Result<Self, CliffordError> {
        if factors.len() % 2 == 1 {
            return Err(CliffordError::Unsupported("an even number of factors".into()));
        }
        let mut element = Multivector::one(sig);
        for v in &factors {
            let n = metric(sig, v, v);
            let unit = if C::EXACT {
                n.is_one() || (-n.clone()).is_one()
            } else {
                (n.magnitude() - 1.0).abs() < 1e-10
            };
            if !unit {
                return Err(CliffordError::NotInCliffordGroup(format!("g(v,v) = {n:?} is not ±1")));
            }
            element = &element * &Multivector::vector(sig, v);
        }
        Ok(SpinElement { element, factors })
    }

    pub fn element(&self) -> &Multivector<C> {
        &self.element
    }

    pub fn factors(&self) -> &[Vec<C>] {
        &self.factors
    }
}

/// `cos t + sin t · e_i e_j`, which acts as rotation by `2t` in the
/// `(i, j)` plane (zero-based indices).
pub fn spin_rotation(sig: Signature, i: usize, j: usize, t: f64) -> Result<Multivector<Complex64>, CliffordError> {
    if i == j || i >= sig.dim() || j >= sig.dim() {
        return Err(CliffordError::Unsupported(format!("distinct generator indices, got {i} and {j}")));
    }
    let (sign, b) = crate::clifford::blade_mul(Blade::generator(i), Blade::generator(j), sig)?;
    Ok(Multivector::from_terms(
        sig,
        [
            (Blade::SCALAR, Complex64::new(t.cos(), 0.0)),
            (b, Complex64::new(sign as f64 * t.sin(), 0.0)),
        ],
    ))
}

/// Same element with exact `cos t`, `sin t` supplied by the caller.
pub fn spin_rotation_exact<C: Coefficient>(
    sig: Signature,
    i: usize,
    j: usize,
    cos: C,
    sin: C,
) -> Result<Multivector<C>, CliffordError> {
    if i == j || i >= sig.dim() || j >= sig.dim() {
        return Err(CliffordError::Unsupported(format!("distinct generator indices, got {i} and {j}")));
    }
    let a = Multivector::generator(sig, i);
    let b = Multivector::generator(sig, j);
    Ok(&Multivector::scalar(sig, cos) + &(&a * &b).scale(&sin))
}

/// `ρ_*(e_i e_j) = 2(E_ji − E_ij)`, the derivative of `ρ̃` at `1` in direction
/// `e_i e_j`, for `Cl_{n,0}`.
pub fn lie_iso(n: usize, i: usize, j: usize) -> Result<Square<Rational>, CliffordError> {
    if i == j || i >= n || j >= n {
        return Err(CliffordError::Unsupported(format!("distinct indices below {n}")));
    }
    let mut m = vec![vec![rat(0, 1); n]; n];
    m[j][i] = rat(2, 1);
    m[i][j] = rat(-2, 1);
    Ok(m)
}

/// Matrix of `ρ_*(B)` for an arbitrary bivector `B`, computed from the
/// commutator `x ↦ [B, x]` on basis vectors.
pub fn lie_action_matrix<C: Coefficient>(b: &Multivector<C>) -> Result<Square<C>, CliffordError> {
    let sig = b.signature();
    let n = sig.dim();
    let mut m = vec![vec![C::zero(); n]; n];
    for j in 0..n {
        let img = b.commutator(&Multivector::generator(sig, j));
        let coords = img
            .vector_coords()
            .ok_or_else(|| CliffordError::Unsupported("a bivector argument".into()))?;
        for (i, c) in coords.into_iter().enumerate() {
            m[i][j] = c;
        }
    }
    Ok(m)
}

/// Inverse isomorphism on decomposable bivectors: `v ∧ w ↦ ¼[v, w]`, where
/// `e_i ∧ e_j` denotes the endomorphism `E_ji − E_ij`.
pub fn lie_iso_inv<C: Coefficient>(sig: Signature, v: &[C], w: &[C]) -> Multivector<C> {
    let a = Multivector::vector(sig, v);
    let b = Multivector::vector(sig, w);
    a.commutator(&b).scale(&C::from_rational(rat(1, 4)))
}

/// Endomorphism `e_i ∧ e_j = E_ji − E_ij` extended bilinearly:
/// `(v ∧ w)(x) = g(v,x) w − g(w,x) v` in Euclidean signature.
pub fn wedge_matrix<C: Coefficient>(v: &[C], w: &[C]) -> Square<C> {
    let n = v.len();
    (0..n)
        .map(|r| (0..n).map(|c| w[r].clone() * v[c].clone() - v[r].clone() * w[c].clone()).collect())
        .collect()
}

/// Random unit vector of `R^n` with rational coordinates, from the inverse
/// stereographic image of an integer point with entries in `[−2, 2]`.
pub fn random_rational_unit<R: Rng>(n: usize, rng: &mut R) -> Vec<GaussRat> {
    assert!(n >= 1);
    if n == 1 {
        return vec![GaussRat::int(if rng.gen_bool(0.5) { 1 } else { -1 })];
    }
    let t: Vec<i128> = (0..n - 1).map(|_| rng.gen_range(-2..=2)).collect();
    let s: i128 = t.iter().map(|x| x * x).sum();
    let mut v: Vec<GaussRat> = t.iter().map(|&x| GaussRat::real(rat(2 * x, s + 1))).collect();
    v.push(GaussRat::real(rat(s - 1, s + 1)));
    v.shuffle(rng);
    v
}

/// Random unit vector from normalized Gaussian samples.
pub fn random_float_unit<R: Rng>(n: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return v.into_iter().map(|x| Complex64::new(x / norm, 0.0)).collect();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::ExactMultivector;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(sig: Signature, i: usize) -> ExactMultivector {
        Multivector::generator(sig, i)
    }

    #[test]
    fn reflections_of_basis_vectors() {
        let s = Signature::euclidean(3).unwrap();
        assert_eq!(twisted_adjoint(&e(s, 0), &e(s, 0)).unwrap(), -e(s, 0));
        assert_eq!(twisted_adjoint(&e(s, 0), &e(s, 1)).unwrap(), e(s, 1));
    }

    #[test]
    fn rotation_by_pi_and_2pi() {
        let s = Signature::euclidean(3).unwrap();
        let x = spin_rotation_exact(s, 0, 1, GaussRat::int(0), GaussRat::int(1)).unwrap();
        let m = adjoint_matrix(&x).unwrap();
        let expect = vec![
            vec![GaussRat::int(-1), GaussRat::int(0), GaussRat::int(0)],
            vec![GaussRat::int(0), GaussRat::int(-1), GaussRat::int(0)],
            vec![GaussRat::int(0), GaussRat::int(0), GaussRat::int(1)],
        ];
        assert_eq!(m, expect);
        let minus_one = spin_rotation_exact(s, 0, 1, GaussRat::int(-1), GaussRat::int(0)).unwrap();
        assert_eq!(adjoint_matrix(&minus_one).unwrap(), crate::linalg::identity(3));
        let f = spin_rotation(s, 0, 2, std::f64::consts::PI).unwrap();
        assert!((f.scalar_part() + 1.0).norm() < 1e-15);
    }

    #[test]
    fn float_rotation_angle() {
        let s = Signature::euclidean(2).unwrap();
        let t = 0.3;
        let m = adjoint_matrix(&spin_rotation(s, 0, 1, t).unwrap()).unwrap();
        // image of e1 is cos 2t e1 ± sin 2t e2
        assert!((m[0][0].re - (2.0 * t).cos()).abs() < 1e-14);
        assert!((m[1][0].re.abs() - (2.0 * t).sin()).abs() < 1e-14);
    }

    #[test]
    fn lie_round_trip() {
        for n in 2..=6 {
            let s = Signature::euclidean(n).unwrap();
            for i in 0..n {
                for j in i + 1..n {
                    let mut v = vec![GaussRat::int(0); n];
                    let mut w = v.clone();
                    v[i] = GaussRat::int(1);
                    w[j] = GaussRat::int(1);
                    let b = lie_iso_inv(s, &v, &w);
                    assert_eq!(b, (&e(s, i) * &e(s, j)).scale(&GaussRat::real(rat(1, 2))));
                    assert_eq!(lie_action_matrix(&b).unwrap(), wedge_matrix(&v, &w));
                    let direct: Square<GaussRat> = lie_iso(n, i, j)
                        .unwrap()
                        .into_iter()
                        .map(|r| r.into_iter().map(GaussRat::real).collect())
                        .collect();
                    assert_eq!(lie_action_matrix(&(&e(s, i) * &e(s, j))).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn spin3_brackets() {
        let s = Signature::euclidean(3).unwrap();
        let u = &e(s, 0) * &e(s, 1);
        let v = &e(s, 1) * &e(s, 2);
        let w = &e(s, 0) * &e(s, 2);
        let two = GaussRat::int(2);
        assert_eq!(u.commutator(&w), v.scale(&two));
        assert_eq!(u.commutator(&v), w.scale(&-two.clone()));
        assert_eq!(v.commutator(&w), u.scale(&-two.clone()));
        let i = GaussRat::i();
        let half = GaussRat::real(rat(1, 2));
        let h = u.scale(&i);
        let ee = (&v.scale(&i) + &w).scale(&half);
        let f = (&v.scale(&i) - &w).scale(&half);
        assert_eq!(ee.commutator(&f), h);
        assert_eq!(h.commutator(&ee), ee.scale(&two));
        assert_eq!(h.commutator(&f), f.scale(&-two));
    }

    #[test]
    fn rational_units_are_unit() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s = Signature::euclidean(4).unwrap();
        for _ in 0..50 {
            let v = random_rational_unit(4, &mut rng);
            assert_eq!(metric(s, &v, &v), GaussRat::int(1));
        }
    }
}
