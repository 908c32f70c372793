//! The complex spinor module `Δ_n = Λ V^{1,0}` for even `n = 2k`.
//!
//! Basis vectors are subsets of `{ε_1, …, ε_k}` (bitmasks). With
//! `e_{2j−1} = (ε_j + ε̄_j)/√2` and `e_{2j} = i(ε_j − ε̄_j)/√2`, Clifford
//! multiplication becomes
//! `c(e_{2j−1}) = ε_j∧ − ι_{ε̄_j}` and `c(e_{2j}) = i(ε_j∧ + ι_{ε̄_j})`,
//! so every matrix entry lies in `{0, ±1, ±i}`.

use crate::clifford::{Blade, Multivector, Signature};
use crate::error::CliffordError;
use crate::linalg::{identity, mat_mul, Square};
use crate::scalar::{Coefficient, GaussRat};

/// Matrix of `ε_j ∧` on subsets of `k` elements.
pub(crate) fn wedge_op<C: Coefficient>(k: usize, j: usize) -> Square<C> {
    let dim = 1usize << k;
    let mut m = vec![vec![C::zero(); dim]; dim];
    for s in 0..dim {
        if s >> j & 1 == 0 {
            let sign = if (s & ((1 << j) - 1)).count_ones() % 2 == 0 { C::one() } else { -C::one() };
            m[s | 1 << j][s] = sign;
        }
    }
    m
}

/// Matrix of the contraction removing `ε_j`, the adjoint of [`wedge_op`].
pub(crate) fn contract_op<C: Coefficient>(k: usize, j: usize) -> Square<C> {
    let w: Square<C> = wedge_op(k, j);
    transpose(&w)
}

pub(crate) fn transpose<C: Clone>(m: &Square<C>) -> Square<C> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect()
}

pub(crate) fn add<C: Coefficient>(a: &Square<C>, b: &Square<C>, sb: C) -> Square<C> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.clone() + sb.clone() * y.clone()).collect())
        .collect()
}

pub(crate) fn scale<C: Coefficient>(a: &Square<C>, s: &C) -> Square<C> {
    a.iter().map(|r| r.iter().map(|x| x.clone() * s.clone()).collect()).collect()
}

pub(crate) fn max_abs_diff<C: Coefficient>(a: &Square<C>, b: &Square<C>) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| (x.clone() - y.clone()).magnitude()))
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug)]
pub struct SpinorSpace<C> {
    n: usize,
    gens: Vec<Square<C>>,
}

/// Chirality decomposition: basis indices spanning `S⁺` and `S⁻`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiralitySplit<C> {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    pub proj_plus: Square<C>,
    pub proj_minus: Square<C>,
}

impl<C: Coefficient> SpinorSpace<C> {
    pub fn new(n: usize) -> Result<Self, CliffordError> {
        if n == 0 || n % 2 == 1 {
            return Err(CliffordError::Unsupported(format!("even n ≥ 2, got {n}")));
        }
        let k = n / 2;
        let mut gens = Vec::with_capacity(n);
        for j in 0..k {
            let w: Square<C> = wedge_op(k, j);
            let c: Square<C> = contract_op(k, j);
            gens.push(add(&w, &c, -C::one()));
            gens.push(scale(&add(&w, &c, C::one()), &C::imag_unit()));
        }
        Ok(SpinorSpace { n, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << (self.n / 2)
    }

    pub fn signature(&self) -> Signature {
        Signature::euclidean(self.n).expect("n ≤ 64")
    }

    /// `c(e_{i+1})`.
    pub fn generator(&self, i: usize) -> &Square<C> {
        &self.gens[i]
    }

    pub fn generators(&self) -> &[Square<C>] {
        &self.gens
    }

    /// `c(v) = Σ v_i c(e_i)`.
    pub fn clifford(&self, v: &[C]) -> Square<C> {
        let d = self.dim();
        v.iter()
            .zip(&self.gens)
            .fold(vec![vec![C::zero(); d]; d], |acc, (vi, g)| add(&acc, g, vi.clone()))
    }

    /// Matrix of a blade `e_{i1} ⋯ e_{ik}`.
    pub fn blade(&self, b: Blade) -> Square<C> {
        b.indices().fold(identity(self.dim()), |acc, i| mat_mul(&acc, &self.gens[i]))
    }

    /// Image of a multivector under the algebra map `Cl_n ⊗ C → End(Δ_n)`.
    pub fn represent(&self, x: &Multivector<C>) -> Square<C> {
        let d = self.dim();
        x.terms()
            .fold(vec![vec![C::zero(); d]; d], |acc, (b, c)| add(&acc, &self.blade(b), c.clone()))
    }

    /// `c(ω)` with `ω = i^k e_1 ⋯ e_n`.
    pub fn omega(&self) -> Square<C> {
        let w = crate::clifford::volume_element::<C>(self.signature(), true).expect("n ≥ 2");
        self.represent(&w)
    }

    /// Largest deviation from `c(e_i)c(e_j) + c(e_j)c(e_i) = −2δ_ij`.
    pub fn relation_residual(&self) -> f64 {
        let d = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                let anti = add(&mat_mul(&self.gens[i], &self.gens[j]), &mat_mul(&self.gens[j], &self.gens[i]), C::one());
                let target = if i == j { scale(&identity(d), &C::from_int(-2)) } else { vec![vec![C::zero(); d]; d] };
                worst = worst.max(max_abs_diff(&anti, &target));
            }
        }
        worst
    }

    /// Exact check of the Clifford relations (exact coefficients only).
    pub fn relations_hold(&self) -> bool {
        self.relation_residual() == 0.0
    }

    /// Projectors `(1 ± c(ω))/2` and the `±1` eigenbasis of `c(ω)`, which is
    /// diagonal in the exterior basis.
    pub fn chirality_split(&self) -> Result<ChiralitySplit<C>, CliffordError> {
        let w = self.omega();
        let d = self.dim();
        if max_abs_diff(&mat_mul(&w, &w), &identity(d)) > 1e-12 {
            return Err(CliffordError::Unsupported("an involutive c(ω)".into()));
        }
        let half = C::from_rational(crate::scalar::rat(1, 2));
        let id: Square<C> = identity(d);
        let proj_plus = scale(&add(&id, &w, C::one()), &half);
        let proj_minus = scale(&add(&id, &w, -C::one()), &half);
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for s in 0..d {
            let diag = w[s][s].to_complex();
            if (diag.re - 1.0).abs() < 1e-12 {
                plus.push(s);
            } else if (diag.re + 1.0).abs() < 1e-12 {
                minus.push(s);
            } else {
                return Err(CliffordError::Unsupported("c(ω) diagonal in the exterior basis".into()));
            }
        }
        Ok(ChiralitySplit { plus, minus, proj_plus, proj_minus })
    }

    /// `2^{−n/2} tr(γ c(ω) F)` with the chirality grading `γ = c(ω)`, so the
    /// identity has relative supertrace `1`.
    pub fn relative_supertrace(&self, f: &Square<C>) -> C {
        let w = self.omega();
        let g = mat_mul(&w, &w);
        let d = self.dim();
        let tr = (0..d)
            .flat_map(|i| (0..d).map(move |k| (i, k)))
            .fold(C::zero(), |acc, (i, k)| acc + g[i][k].clone() * f[k][i].clone());
        tr * C::from_rational(crate::scalar::rat(1, 1i128 << (self.n / 2)))
    }
}

impl SpinorSpace<GaussRat> {
    /// Dimension of the span of all `2^n` monomial matrices; equals `4^k`
    /// exactly when the representation is onto `End(Δ_n)`.
    pub fn monomial_span_rank(&self) -> usize {
        let rows: Vec<Vec<GaussRat>> = (0..1u64 << self.n)
            .map(|b| self.blade(Blade(b)).into_iter().flatten().collect())
            .collect();
        crate::linalg::exact_rank(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_exact() {
        for n in [2, 4, 6] {
            let s: SpinorSpace<GaussRat> = SpinorSpace::new(n).unwrap();
            assert!(s.relations_hold(), "n={n}");
            assert_eq!(s.dim(), 1 << (n / 2));
        }
        assert!(SpinorSpace::<GaussRat>::new(3).is_err());
    }

    #[test]
    fn e1_on_vacuum() {
        let s: SpinorSpace<GaussRat> = SpinorSpace::new(2).unwrap();
        // column 0 is the image of 1; row 1 is ε₁
        assert_eq!(s.generator(0)[1][0], GaussRat::int(1));
        assert_eq!(s.generator(0)[0][0], GaussRat::int(0));
    }

    #[test]
    fn chirality() {
        let s: SpinorSpace<GaussRat> = SpinorSpace::new(4).unwrap();
        let split = s.chirality_split().unwrap();
        assert_eq!(split.plus, vec![0, 3]);
        assert_eq!(split.minus, vec![1, 2]);
        let p = &split.proj_plus;
        assert_eq!(mat_mul(p, p), *p);
        assert_eq!(mat_mul(p, &split.proj_minus), vec![vec![GaussRat::int(0); 4]; 4]);
    }

    #[test]
    fn full_matrix_algebra() {
        for n in [2, 4, 6] {
            let s: SpinorSpace<GaussRat> = SpinorSpace::new(n).unwrap();
            assert_eq!(s.monomial_span_rank(), 1 << n);
        }
    }

    #[test]
    fn relative_supertrace_of_identity() {
        for n in [2, 4] {
            let s: SpinorSpace<GaussRat> = SpinorSpace::new(n).unwrap();
            assert_eq!(s.relative_supertrace(&identity(s.dim())), GaussRat::int(1));
        }
    }
}
