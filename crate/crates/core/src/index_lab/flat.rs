//! Flat-space identities for the spinor Dirac operator `D = Σ c(eᵢ) ∂ᵢ`:
//! `D² = −Σ ∂ᵢ²` as a matrix-coefficient polynomial identity, and
//! invertibility of the principal symbol `i c(ξ)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::error::CliffordError;
use crate::linalg::{identity, inverse, mat_mul, Square};
use crate::scalar::{rat, Coefficient, GaussRat};
use crate::spin::SpinorSpace;

/// Polynomial in commuting symbols `∂₁ … ∂ₙ` with matrix coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffPoly {
    n: usize,
    dim: usize,
    terms: BTreeMap<Vec<u32>, Square<GaussRat>>,
}

impl DiffPoly {
    pub fn zero(n: usize, dim: usize) -> Self {
        DiffPoly { n, dim, terms: BTreeMap::new() }
    }

    /// `M ∂^α`.
    pub fn term(n: usize, exponents: Vec<u32>, m: Square<GaussRat>) -> Self {
        let mut p = Self::zero(n, m.len());
        p.add_term(exponents, m);
        p
    }

    fn add_term(&mut self, e: Vec<u32>, m: Square<GaussRat>) {
        let zero = vec![vec![GaussRat::int(0); self.dim]; self.dim];
        let entry = self.terms.entry(e.clone()).or_insert_with(|| zero.clone());
        for (r, row) in entry.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x += m[r][c].clone();
            }
        }
        if *entry == zero {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, m) in &o.terms {
            out.add_term(e.clone(), m.clone());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.n, self.dim);
        for (ea, ma) in &self.terms {
            for (eb, mb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, mat_mul(ma, mb));
            }
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Square<GaussRat>> {
        &self.terms
    }
}

fn unit_exponent(n: usize, i: usize, power: u32) -> Vec<u32> {
    (0..n).map(|j| if j == i { power } else { 0 }).collect()
}

/// `(D², −Σ ∂ᵢ² ⊗ I)` for the exact spinor representation of `Cl_{n,0}`.
pub fn flat_dirac_square(n: usize) -> Result<(DiffPoly, DiffPoly), CliffordError> {
    let s: SpinorSpace<GaussRat> = SpinorSpace::new(n)?;
    let dim = s.dim();
    let d = (0..n).fold(DiffPoly::zero(n, dim), |acc, i| {
        acc.add(&DiffPoly::term(n, unit_exponent(n, i, 1), s.generator(i).clone()))
    });
    let minus_id: Square<GaussRat> = crate::spin::scale(&identity(dim), &GaussRat::int(-1));
    let laplacian = (0..n).fold(DiffPoly::zero(n, dim), |acc, i| {
        acc.add(&DiffPoly::term(n, unit_exponent(n, i, 2), minus_id.clone()))
    });
    Ok((d.mul(&d), laplacian))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolCheck {
    pub n: usize,
    pub samples: usize,
    /// `(i c(ξ))² = |ξ|² I` for every sample.
    pub squares_to_norm: bool,
    /// An exact inverse exists and equals `i c(ξ)/|ξ|²`.
    pub invertible: bool,
}

/// Principal symbol `σ(ξ) = i c(ξ)` at random nonzero rational covectors.
pub fn symbol_check<R: Rng>(n: usize, samples: usize, rng: &mut R) -> Result<SymbolCheck, CliffordError> {
    let s: SpinorSpace<GaussRat> = SpinorSpace::new(n)?;
    let dim = s.dim();
    let (mut squares_to_norm, mut invertible) = (true, true);
    for _ in 0..samples {
        let xi: Vec<GaussRat> = loop {
            let v: Vec<GaussRat> =
                (0..n).map(|_| GaussRat::real(rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)))).collect();
            if v.iter().any(|x| !x.is_zero()) {
                break v;
            }
        };
        let norm = xi.iter().fold(GaussRat::int(0), |acc, x| acc + x.clone() * x.clone());
        let sigma = crate::spin::scale(&s.clifford(&xi), &GaussRat::i());
        squares_to_norm &= mat_mul(&sigma, &sigma) == crate::spin::scale(&identity(dim), &norm);
        let expected = crate::spin::scale(&sigma, &norm.recip().expect("ξ ≠ 0"));
        invertible &= inverse(&sigma).is_some_and(|inv| inv == expected);
    }
    Ok(SymbolCheck { n, samples, squares_to_norm, invertible })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn dirac_squares_to_laplacian() {
        for n in [2, 4, 6] {
            let (sq, lap) = flat_dirac_square(n).unwrap();
            assert_eq!(sq, lap, "n={n}");
        }
    }

    #[test]
    fn symbol_is_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [2, 4] {
            let c = symbol_check(n, 10, &mut rng).unwrap();
            assert!(c.squares_to_norm && c.invertible);
        }
    }
}
