use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::blade::blade_mul_unchecked;
use super::{Blade, Signature};
use crate::error::CliffordError;
use crate::scalar::{Coefficient, GaussRat};

/// Z₂ degree of a multivector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    /// Parity of a product of homogeneous factors; `None` if either is mixed.
    pub fn product(self, other: Parity) -> Option<Parity> {
        match (self, other) {
            (Parity::Mixed, _) | (_, Parity::Mixed) => None,
            (a, b) if a == b => Some(Parity::Even),
            _ => Some(Parity::Odd),
        }
    }
}

/// Element of `Cl_{p,q} ⊗ C` with coefficients in `C`.
///
/// Terms with zero coefficient are never stored, so equality is structural.
#[derive(Clone, PartialEq, Debug)]
pub struct Multivector<C> {
    sig: Signature,
    terms: BTreeMap<Blade, C>,
}

pub type ExactMultivector = Multivector<GaussRat>;
pub type FloatMultivector = Multivector<Complex64>;

impl<C: Coefficient> Multivector<C> {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: BTreeMap::new() }
    }

    pub fn scalar(sig: Signature, c: C) -> Self {
        Self::term(sig, Blade::SCALAR, c)
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, C::one())
    }

    pub fn term(sig: Signature, blade: Blade, c: C) -> Self {
        assert!(blade.span() <= sig.dim(), "blade {blade} outside {sig}");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(blade, c);
        }
        Multivector { sig, terms }
    }

    /// The generator `e_{i+1}` (zero-based `i`).
    pub fn generator(sig: Signature, i: usize) -> Self {
        Self::term(sig, Blade::generator(i), C::one())
    }

    /// Degree-one element `Σ v_i e_i`.
    pub fn vector(sig: Signature, coords: &[C]) -> Self {
        assert!(coords.len() <= sig.dim());
        let terms = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Blade::generator(i), c.clone()))
            .collect();
        Multivector { sig, terms }
    }

    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, C)>) -> Self {
        let mut out = Self::zero(sig);
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &C)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, blade: Blade) -> C {
        self.terms.get(&blade).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scalar_part(&self) -> C {
        self.coeff(Blade::SCALAR)
    }

    /// The scalar value if no other blade is present.
    pub fn as_scalar(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Blade::SCALAR).cloned(),
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, blade: Blade, c: C) {
        if c.is_zero() {
            return;
        }
        assert!(blade.span() <= self.sig.dim(), "blade {blade} outside {}", self.sig);
        match self.terms.get_mut(&blade) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&blade);
                }
            }
            None => {
                self.terms.insert(blade, c);
            }
        }
    }

    fn check_sig(&self, other: &Self) -> Result<(), CliffordError> {
        if self.sig != other.sig {
            return Err(CliffordError::SignatureMismatch(
                self.sig.p(),
                self.sig.q(),
                other.sig.p(),
                other.sig.q(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_sig(other)?;
        let mut out = Self::zero(self.sig);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (sign, blade) = blade_mul_unchecked(*a, *b, self.sig);
                let c = ca.clone() * cb.clone();
                out.add_term(blade, if sign < 0 { -c } else { c });
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(b, v)| (*b, v.clone() * c.clone()))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Multivector { sig: self.sig, terms }
    }

    fn map_signed(&self, sign: impl Fn(Blade) -> bool) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| (*b, if sign(*b) { -c.clone() } else { c.clone() }))
            .collect();
        Multivector { sig: self.sig, terms }
    }

    /// `ε`: negates odd blades.
    pub fn grade_involution(&self) -> Self {
        self.map_signed(|b| !b.is_even())
    }

    /// Reversal of factor order on each blade (an anti-automorphism).
    pub fn transpose(&self) -> Self {
        self.map_signed(|b| b.reversal_sign() < 0)
    }

    /// Complex conjugation of the coefficients.
    pub fn conj(&self) -> Self {
        let terms = self.terms.iter().map(|(b, c)| (*b, c.conj())).collect();
        Multivector { sig: self.sig, terms }
    }

    /// `N(φ) = φ · ε(φᵀ)`.
    pub fn norm(&self) -> Self {
        self * &self.transpose().grade_involution()
    }

    pub fn grade_part(&self, k: u32) -> Self {
        self.filter(|b| b.grade() == k)
    }

    pub fn even_part(&self) -> Self {
        self.filter(|b| b.is_even())
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|b| !b.is_even())
    }

    fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(b, _)| keep(**b))
            .map(|(b, c)| (*b, c.clone()))
            .collect();
        Multivector { sig: self.sig, terms }
    }

    /// Parity of the element; zero counts as even.
    pub fn parity(&self) -> Parity {
        let has_even = self.terms.keys().any(|b| b.is_even());
        let has_odd = self.terms.keys().any(|b| !b.is_even());
        match (has_even, has_odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// Coordinates if the element is purely degree one.
    pub fn vector_coords(&self) -> Option<Vec<C>> {
        if self.terms.keys().any(|b| b.grade() != 1) {
            return None;
        }
        Some((0..self.sig.dim()).map(|i| self.coeff(Blade::generator(i))).collect())
    }

    /// Inverse of a Clifford-group element: `x⁻¹ = ε(xᵀ)/N(x)` where the
    /// norm is a nonzero scalar (up to a relative `1e−10` in float mode). The
    /// result is verified two-sided for exact coefficients.
    pub fn inverse(&self) -> Result<Self, CliffordError> {
        let mut n = self.norm();
        if !C::EXACT {
            // rounding leaves tiny non-scalar components in the norm
            let stray = n.terms().filter(|(b, _)| *b != Blade::SCALAR).map(|(_, c)| c.magnitude()).fold(0.0, f64::max);
            if stray <= 1e-10 * n.max_abs().max(1.0) {
                n = Self::scalar(self.sig, n.scalar_part());
            }
        }
        let nv = n.as_scalar().ok_or_else(|| {
            CliffordError::NotInCliffordGroup("norm is not a scalar".to_string())
        })?;
        let r = nv.recip().ok_or(CliffordError::NotInvertible)?;
        let inv = self.transpose().grade_involution().scale(&r);
        let one = Self::one(self.sig);
        if C::EXACT && (&inv * self != one || self * &inv != one) {
            return Err(CliffordError::NotInCliffordGroup(
                "ε(xᵀ)/N(x) is not a two-sided inverse".to_string(),
            ));
        }
        Ok(inv)
    }

    /// `[a, b]_s = ab − (−1)^{|a||b|} ba`, extended bilinearly over the
    /// homogeneous parts of mixed inputs.
    pub fn supercommutator(&self, other: &Self) -> Self {
        let parts = |x: &Self| [(x.even_part(), 0u8), (x.odd_part(), 1u8)];
        let mut out = Self::zero(self.sig);
        for (a, da) in parts(self) {
            for (b, db) in parts(other) {
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let ab = &a * &b;
                let ba = &b * &a;
                out = if da & db == 1 { &(&out + &ab) + &ba } else { &(&out + &ab) - &ba };
            }
        }
        out
    }

    /// Ordinary commutator `ab − ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Multivector<D> {
        let mut out = Multivector::zero(self.sig);
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }

    pub fn to_float(&self) -> FloatMultivector {
        self.map_coeffs(|c| c.to_complex())
    }

    /// Largest coefficient magnitude; zero for the zero element.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }
}

/// Symmetric bilinear form `g(v, w) = Σ η_i v_i w_i` on coordinate vectors.
pub fn metric<C: Coefficient>(sig: Signature, v: &[C], w: &[C]) -> C {
    v.iter()
        .zip(w)
        .enumerate()
        .fold(C::zero(), |acc, (i, (a, b))| {
            let t = a.clone() * b.clone();
            if sig.metric(i) > 0 {
                acc + t
            } else {
                acc - t
            }
        })
}

/// Complex volume element `ω = i^{⌊(n+1)/2⌋} e_1 ⋯ e_n`, or the real
/// `e_1 ⋯ e_n` when `complex` is false.
pub fn volume_element<C: Coefficient>(sig: Signature, complex: bool) -> Result<Multivector<C>, CliffordError> {
    let n = sig.dim();
    if n == 0 {
        return Err(CliffordError::ZeroDimensional);
    }
    // e_1⋯e_n as an ordered product is already the sorted blade
    let mut c = C::one();
    if complex {
        for _ in 0..(n + 1) / 2 {
            c = c * C::imag_unit();
        }
    }
    Ok(Multivector::term(sig, Blade::top(n), c))
}

impl<'a, C: Coefficient> Add for &'a Multivector<C> {
    type Output = Multivector<C>;
    fn add(self, o: Self) -> Multivector<C> {
        self.try_add(o).expect("signature mismatch")
    }
}

impl<'a, C: Coefficient> Sub for &'a Multivector<C> {
    type Output = Multivector<C>;
    fn sub(self, o: Self) -> Multivector<C> {
        self.try_add(&-o).expect("signature mismatch")
    }
}

impl<'a, C: Coefficient> Mul for &'a Multivector<C> {
    type Output = Multivector<C>;
    fn mul(self, o: Self) -> Multivector<C> {
        self.try_mul(o).expect("signature mismatch")
    }
}

impl<'a, C: Coefficient> Neg for &'a Multivector<C> {
    type Output = Multivector<C>;
    fn neg(self) -> Multivector<C> {
        self.map_signed(|_| true)
    }
}

impl<C: Coefficient> Add for Multivector<C> {
    type Output = Multivector<C>;
    fn add(self, o: Self) -> Multivector<C> {
        &self + &o
    }
}

impl<C: Coefficient> Sub for Multivector<C> {
    type Output = Multivector<C>;
    fn sub(self, o: Self) -> Multivector<C> {
        &self - &o
    }
}

impl<C: Coefficient> Mul for Multivector<C> {
    type Output = Multivector<C>;
    fn mul(self, o: Self) -> Multivector<C> {
        &self * &o
    }
}

impl<C: Coefficient> Neg for Multivector<C> {
    type Output = Multivector<C>;
    fn neg(self) -> Multivector<C> {
        -&self
    }
}

impl<C: Coefficient> Multivector<C> {
    pub fn is_one(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn g(s: Signature, i: usize) -> ExactMultivector {
        Multivector::generator(s, i)
    }

    fn int(s: Signature, n: i128) -> ExactMultivector {
        Multivector::scalar(s, GaussRat::int(n))
    }

    #[test]
    fn one_plus_e1_times_one_minus_e1() {
        let s = sig(1, 0);
        let a = &int(s, 1) + &g(s, 0);
        let b = &int(s, 1) - &g(s, 0);
        assert_eq!(&a * &b, int(s, 2));
    }

    #[test]
    fn split_idempotents_in_cl01() {
        let s = sig(0, 1);
        let half = Multivector::scalar(s, GaussRat::real(rat(1, 2)));
        let v = g(s, 0);
        let p = &half + &half.try_mul(&v).unwrap();
        let m = &half - &half.try_mul(&v).unwrap();
        assert_eq!(&p * &p, p);
        assert_eq!(&m * &m, m);
        assert!((&p * &m).is_zero());
        assert_eq!(&p + &m, int(s, 1));
    }

    #[test]
    fn involutions_and_norm() {
        let s = sig(3, 0);
        assert_eq!(g(s, 0).grade_involution(), -g(s, 0));
        let e12 = &g(s, 0) * &g(s, 1);
        assert_eq!(e12.transpose(), &g(s, 1) * &g(s, 0));
        assert_eq!(e12.transpose(), -e12.clone());
        assert_eq!(g(s, 0).norm(), int(s, 1));
    }

    #[test]
    fn volume_element_squares_to_one() {
        for n in 1..=8 {
            let s = sig(n, 0);
            let w: ExactMultivector = volume_element(s, true).unwrap();
            assert!((&w * &w).is_one(), "n={n}");
            for i in 0..n {
                let v = g(s, i);
                let lhs = &v * &w;
                let rhs = &w * &v;
                if n % 2 == 1 {
                    assert_eq!(lhs, rhs);
                } else {
                    assert_eq!(lhs, -rhs);
                }
            }
        }
        assert!(volume_element::<GaussRat>(sig(0, 0), true).is_err());
        let w1: ExactMultivector = volume_element(sig(1, 0), true).unwrap();
        assert_eq!(w1, Multivector::term(sig(1, 0), Blade::generator(0), GaussRat::i()));
    }

    #[test]
    fn supercommutator_examples() {
        let s = sig(2, 0);
        assert!(g(s, 0).supercommutator(&g(s, 1)).is_zero());
        let s1 = sig(1, 0);
        assert_eq!(g(s1, 0).supercommutator(&g(s1, 0)), int(s1, -2));
    }

    #[test]
    fn inverse_of_vector() {
        let s = sig(2, 1);
        let v = Multivector::vector(s, &[GaussRat::int(1), GaussRat::int(2), GaussRat::int(1)]);
        let inv = v.inverse().unwrap();
        assert!((&v * &inv).is_one());
        let null = Multivector::vector(s, &[GaussRat::int(1), GaussRat::int(0), GaussRat::int(1)]);
        assert_eq!(null.inverse(), Err(CliffordError::NotInvertible));
    }

    #[test]
    fn mismatched_signatures() {
        assert!(g(sig(2, 0), 0).try_mul(&g(sig(1, 1), 0)).is_err());
    }

    #[test]
    fn parity() {
        let s = sig(2, 0);
        assert_eq!(int(s, 1).parity(), Parity::Even);
        assert_eq!(g(s, 1).parity(), Parity::Odd);
        assert_eq!((&int(s, 1) + &g(s, 1)).parity(), Parity::Mixed);
        assert_eq!(Parity::Odd.product(Parity::Odd), Some(Parity::Even));
    }
}
