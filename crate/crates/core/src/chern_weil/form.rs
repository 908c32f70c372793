//! Even exterior forms with constant coefficients, and matrices of them.
//!
//! A [`FormPoly`] lives in `Λ^even(R^m)^*` with coefficients in `C`.
//! Monomials are bitmasks over the cotangent generators `e¹ … e^m`, so the
//! truncation at degree `m` is automatic: overlapping monomials multiply to
//! zero. Even forms commute, which is what the determinant code relies on.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::FormError;
use crate::linalg::{self, Square};
use crate::scalar::{Coefficient, Rational};

/// Sign of `e^A ∧ e^B` relative to `e^{A∪B}` for disjoint bitmasks.
fn wedge_sign(a: u64, b: u64) -> bool {
    let mut swaps = 0;
    let mut m = b;
    while m != 0 {
        let i = m.trailing_zeros();
        m &= m - 1;
        swaps += (a >> i >> 1).count_ones();
    }
    swaps % 2 == 1
}

#[derive(Clone, PartialEq, Debug, Default)]
pub struct FormPoly<C> {
    terms: BTreeMap<u64, C>,
}

impl<C: Coefficient> FormPoly<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(0, c).expect("degree 0 is even")
    }

    /// `c · e^{i1} ∧ ⋯ ∧ e^{ik}` for the increasing indices encoded in `mask`.
    pub fn monomial(mask: u64, c: C) -> Result<Self, FormError> {
        if mask.count_ones() % 2 == 1 {
            return Err(FormError::Dimension(format!("odd-degree monomial {mask:#b}")));
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mask, c);
        }
        Ok(FormPoly { terms })
    }

    /// `c · e^{a+1} ∧ e^{b+1}` for zero-based `a, b` in either order.
    pub fn two_form(a: usize, b: usize, c: C) -> Self {
        if a == b {
            return Self::zero();
        }
        let (lo, hi, c) = if a < b { (a, b, c) } else { (b, a, -c) };
        Self::monomial(1 << lo | 1 << hi, c).expect("degree two")
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &C)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: u64) -> C {
        self.terms.get(&mask).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(0)
    }

    /// Coefficient of `e¹ ∧ ⋯ ∧ e^m`.
    pub fn top_coeff(&self, m: usize) -> C {
        self.coeff(crate::clifford::Blade::top(m).0)
    }

    /// Homogeneous component of form degree `k`.
    pub fn degree_part(&self, k: u32) -> Self {
        FormPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.constant_term().is_zero()
    }

    pub fn scale(&self, s: &C) -> Self {
        FormPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * s.clone()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> FormPoly<D> {
        FormPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    /// `Σ a_k x^k` for nilpotent `x`; the sum stops once `x^k = 0`.
    pub fn apply_series(&self, coeff: impl Fn(usize) -> C) -> Result<Self, FormError> {
        if !self.is_nilpotent() {
            return Err(FormError::NotUnipotent(format!("{:?}", self.constant_term())));
        }
        let mut out = Self::zero();
        let mut pow = Self::one();
        let mut k = 0;
        while !pow.is_zero() {
            out += pow.scale(&coeff(k));
            pow = pow * self.clone();
            k += 1;
        }
        Ok(out)
    }

    /// The unique square root with constant term 1, via the binomial series
    /// of `(1 + N)^{1/2}` on the nilpotent part `N`.
    pub fn sqrt_unipotent(&self) -> Result<Self, FormError> {
        if !self.constant_term().is_one() {
            return Err(FormError::NotUnipotent(format!("{:?}", self.constant_term())));
        }
        let n = self.clone() - Self::one();
        n.apply_series(|k| C::from_rational(crate::series::binomial(crate::scalar::rat(1, 2), k)))
    }

    fn add_term(&mut self, m: u64, c: C) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(C::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }
}

impl<C: Coefficient> Zero for FormPoly<C> {
    fn zero() -> Self {
        FormPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for FormPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coefficient> Add for FormPoly<C> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self += o;
        self
    }
}

impl<C: Coefficient> Sub for FormPoly<C> {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        self -= o;
        self
    }
}

impl<C: Coefficient> Neg for FormPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        FormPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<C: Coefficient> Mul for FormPoly<C> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                if a & b != 0 {
                    continue;
                }
                let c = ca.clone() * cb.clone();
                out.add_term(a | b, if wedge_sign(*a, *b) { -c } else { c });
            }
        }
        out
    }
}

impl<C: Coefficient> AddAssign for FormPoly<C> {
    fn add_assign(&mut self, o: Self) {
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
    }
}

impl<C: Coefficient> SubAssign for FormPoly<C> {
    fn sub_assign(&mut self, o: Self) {
        for (m, c) in o.terms {
            self.add_term(m, -c);
        }
    }
}

impl<C: Coefficient> MulAssign for FormPoly<C> {
    fn mul_assign(&mut self, o: Self) {
        *self = std::mem::replace(self, Self::zero()) * o;
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for FormPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == 0 {
                    format!("({c})")
                } else {
                    let idx: Vec<String> =
                        (0..64).filter(|i| m >> i & 1 == 1).map(|i| format!("e{}", i + 1)).collect();
                    format!("({c})*{}", idx.join("^"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Square matrix with [`FormPoly`] entries.
#[derive(Clone, PartialEq, Debug)]
pub struct FormMatrix<C> {
    entries: Square<FormPoly<C>>,
}

impl<C: Coefficient> FormMatrix<C> {
    pub fn new(entries: Square<FormPoly<C>>) -> Result<Self, FormError> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(FormError::Dimension("rows of unequal length".into()));
        }
        Ok(FormMatrix { entries })
    }

    pub fn zeros(n: usize) -> Self {
        FormMatrix { entries: vec![vec![FormPoly::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        FormMatrix { entries: linalg::identity(n) }
    }

    pub fn from_scalars(m: &Square<C>) -> Self {
        FormMatrix {
            entries: m.iter().map(|r| r.iter().map(|c| FormPoly::constant(c.clone())).collect()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &FormPoly<C> {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FormPoly<C>) {
        self.entries[i][j] = v;
    }

    pub fn entries(&self) -> &Square<FormPoly<C>> {
        &self.entries
    }

    /// Exact test for exact coefficients; in float mode up to a relative
    /// `1e-12`, so that numerically conjugated curvatures still qualify.
    pub fn is_antisymmetric(&self) -> bool {
        if C::EXACT {
            return linalg::is_antisymmetric(&self.entries);
        }
        let n = self.size();
        let tol = 1e-12 * self.max_abs().max(1.0);
        (0..n).all(|i| (i..n).all(|j| (self.entries[i][j].clone() + self.entries[j][i].clone()).max_abs() <= tol))
    }

    /// True when every entry has zero constant term.
    pub fn is_nilpotent(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_nilpotent())
    }

    pub fn scale(&self, s: &C) -> Self {
        FormMatrix { entries: self.entries.iter().map(|r| r.iter().map(|e| e.scale(s)).collect()).collect() }
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D + Copy) -> FormMatrix<D> {
        FormMatrix { entries: self.entries.iter().map(|r| r.iter().map(|e| e.map(f)).collect()).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        FormMatrix {
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect())
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        FormMatrix { entries: linalg::mat_mul(&self.entries, &o.entries) }
    }

    pub fn tr(&self) -> FormPoly<C> {
        (0..self.size()).fold(FormPoly::zero(), |acc, i| acc + self.entries[i][i].clone())
    }

    pub fn det(&self) -> FormPoly<C> {
        linalg::det(&self.entries)
    }

    pub fn det_sqrt(&self) -> Result<FormPoly<C>, FormError> {
        self.det().sqrt_unipotent()
    }

    pub fn pfaffian(&self) -> Result<FormPoly<C>, FormError> {
        if self.size() % 2 == 1 {
            return Err(FormError::Dimension(format!("Pfaffian of odd size {}", self.size())));
        }
        if !self.is_antisymmetric() {
            return Err(FormError::Dimension("Pfaffian of a non-antisymmetric matrix".into()));
        }
        Ok(linalg::pfaffian(&self.entries))
    }

    /// `Σ a_k X^k` for nilpotent `X`, stopping once `X^k = 0`.
    pub fn apply_series(&self, coeff: impl Fn(usize) -> C) -> Result<Self, FormError> {
        if !self.is_nilpotent() {
            return Err(FormError::NotUnipotent("matrix series needs nilpotent entries".into()));
        }
        let n = self.size();
        let mut out = Self::zeros(n);
        let mut pow = Self::identity(n);
        let mut k = 0;
        while pow.entries.iter().flatten().any(|e| !e.is_zero()) {
            out = out.add(&pow.scale(&coeff(k)));
            pow = pow.mul(self);
            k += 1;
        }
        Ok(out)
    }

    pub fn exp(&self) -> Result<Self, FormError> {
        self.apply_series(|k| C::from_rational(Rational::one() / crate::series::factorial(k)))
    }

    /// `G X G⁻¹` for a scalar matrix `G` with supplied inverse.
    pub fn conjugate(&self, g: &Square<C>, g_inv: &Square<C>) -> Self {
        let gm = Self::from_scalars(g);
        let gi = Self::from_scalars(g_inv);
        gm.mul(self).mul(&gi)
    }

    /// Block-diagonal sum; the second block's form generators are shifted by
    /// `shift` so the factors live on distinct cotangent directions.
    pub fn direct_sum(&self, other: &Self, shift: usize) -> Self {
        let (a, b) = (self.size(), other.size());
        let mut out = Self::zeros(a + b);
        for i in 0..a {
            for j in 0..a {
                out.entries[i][j] = self.entries[i][j].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                out.entries[a + i][a + j] = FormPoly {
                    terms: other.entries[i][j].terms.iter().map(|(m, c)| (m << shift, c.clone())).collect(),
                };
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().flatten().map(|e| e.max_abs()).fold(0.0, f64::max)
    }

    /// Number of cotangent generators the entries actually use.
    pub fn form_dim(&self) -> usize {
        let mask = self.entries.iter().flatten().flat_map(|e| e.terms.keys()).fold(0u64, |a, m| a | m);
        64 - mask.leading_zeros() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, GaussRat};

    fn q(n: i128, d: i128) -> GaussRat {
        GaussRat::real(rat(n, d))
    }

    #[test]
    fn wedge_signs() {
        let e12 = FormPoly::two_form(0, 1, q(1, 1));
        let e34 = FormPoly::two_form(2, 3, q(1, 1));
        let e13 = FormPoly::two_form(0, 2, q(1, 1));
        let e24 = FormPoly::two_form(1, 3, q(1, 1));
        assert_eq!((e12.clone() * e34.clone()).top_coeff(4), q(1, 1));
        assert_eq!((e13 * e24).top_coeff(4), q(-1, 1));
        assert_eq!(e12.clone() * e34.clone(), e34 * e12.clone());
        assert!((e12.clone() * e12).is_zero());
    }

    #[test]
    fn det_of_identity_and_sqrt() {
        let i3: FormMatrix<GaussRat> = FormMatrix::identity(3);
        assert!(i3.det().is_one());
        let x = FormPoly::two_form(0, 1, q(3, 1));
        let d = FormPoly::one() + x.clone();
        assert_eq!(d.sqrt_unipotent().unwrap(), FormPoly::one() + x.scale(&q(1, 2)));
        assert!(FormPoly::constant(q(2, 1)).sqrt_unipotent().is_err());
    }

    #[test]
    fn trace_of_antisymmetric_vanishes() {
        let mut f: FormMatrix<GaussRat> = FormMatrix::zeros(3);
        f.set(0, 1, FormPoly::two_form(0, 1, q(1, 1)));
        f.set(1, 0, FormPoly::two_form(0, 1, q(-1, 1)));
        assert!(f.is_antisymmetric());
        assert!(f.tr().is_zero());
    }

    #[test]
    fn pfaffian_properties() {
        let mut a: FormMatrix<GaussRat> = FormMatrix::zeros(4);
        let entries = [(0, 1, 0, 1), (0, 2, 0, 2), (0, 3, 1, 2), (1, 2, 0, 3), (1, 3, 2, 3), (2, 3, 1, 3)];
        for (k, (i, j, a1, a2)) in entries.into_iter().enumerate() {
            let v = FormPoly::two_form(a1, a2, q(k as i128 + 1, 2)) + FormPoly::constant(q(k as i128 - 2, 1));
            a.set(i, j, v.clone());
            a.set(j, i, -v);
        }
        let pf = a.pfaffian().unwrap();
        assert_eq!(pf.clone() * pf.clone(), a.det());
        let lam = q(3, 1);
        assert_eq!(a.scale(&lam).pfaffian().unwrap(), pf.scale(&(lam.clone() * lam)));
        assert!(FormMatrix::<GaussRat>::zeros(3).pfaffian().is_err());
    }
}
