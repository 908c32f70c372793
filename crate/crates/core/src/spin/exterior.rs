//! The exterior algebra `Λ(R^n) ⊗ C` as a Clifford module under
//! `c(θ) = θ∧ − ι_θ`, together with the commuting action
//! `c̃(θ) = θ∧ + ι_θ`, the relative supertrace, and the Berezin/Pfaffian
//! identity for `exp(½ A_ij c̃^i c̃^j)`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::spinor::{add, contract_op, scale, wedge_op};
use crate::error::CliffordError;
use crate::linalg::{identity, mat_mul, pfaffian, Square};
use crate::scalar::{Coefficient, GaussRat};
use crate::series::ahat_even_coefficients_f64;

#[derive(Clone, Debug)]
pub struct ExteriorModule<C> {
    n: usize,
    c: Vec<Square<C>>,
    c_tilde: Vec<Square<C>>,
}

impl<C: Coefficient> ExteriorModule<C> {
    pub fn new(n: usize) -> Result<Self, CliffordError> {
        if n == 0 || n > 12 {
            return Err(CliffordError::Unsupported(format!("1 ≤ n ≤ 12, got {n}")));
        }
        let mut c = Vec::with_capacity(n);
        let mut c_tilde = Vec::with_capacity(n);
        for i in 0..n {
            let w: Square<C> = wedge_op(n, i);
            let iota: Square<C> = contract_op(n, i);
            c.push(add(&w, &iota, -C::one()));
            c_tilde.push(add(&w, &iota, C::one()));
        }
        Ok(ExteriorModule { n, c, c_tilde })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn c(&self, i: usize) -> &Square<C> {
        &self.c[i]
    }

    pub fn c_tilde(&self, i: usize) -> &Square<C> {
        &self.c_tilde[i]
    }

    /// Parity operator `(−1)^deg`.
    pub fn grading(&self) -> Square<C> {
        let d = self.dim();
        (0..d)
            .map(|r| {
                (0..d)
                    .map(|s| {
                        if r != s {
                            C::zero()
                        } else if (r as u32).count_ones() % 2 == 0 {
                            C::one()
                        } else {
                            -C::one()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    fn phase(&self) -> C {
        (0..(self.n + 1) / 2).fold(C::one(), |acc, _| acc * C::imag_unit())
    }

    /// `c(ω_C) = i^{⌊(n+1)/2⌋} c(e¹) ⋯ c(eⁿ)`.
    pub fn c_omega(&self) -> Square<C> {
        let prod = self.c.iter().fold(identity(self.dim()), |acc, m| mat_mul(&acc, m));
        scale(&prod, &self.phase())
    }

    /// `c̃(ω_C) = i^{⌊(n+1)/2⌋} c̃(e¹) ⋯ c̃(eⁿ)`.
    pub fn c_tilde_omega(&self) -> Square<C> {
        let prod = self.c_tilde.iter().fold(identity(self.dim()), |acc, m| mat_mul(&acc, m));
        scale(&prod, &self.phase())
    }

    /// `c̃(e^I) = c̃(e^{i1}) ⋯ c̃(e^{ik})` for a bitmask `I`.
    pub fn c_tilde_monomial(&self, mask: u64) -> Square<C> {
        (0..self.n)
            .filter(|i| mask >> i & 1 == 1)
            .fold(identity(self.dim()), |acc, i| mat_mul(&acc, &self.c_tilde[i]))
    }

    /// `str^{E/S} F = 2^{−n/2} tr(γ c(ω_C) F)`.
    pub fn relative_supertrace(&self, f: &Square<C>) -> Result<C, CliffordError> {
        if self.n % 2 == 1 {
            return Err(CliffordError::Unsupported("even n for the relative supertrace".into()));
        }
        let g = mat_mul(&self.grading(), &self.c_omega());
        let tr = (0..self.dim())
            .flat_map(|i| (0..self.dim()).map(move |k| (i, k)))
            .fold(C::zero(), |acc, (i, k)| acc + g[i][k].clone() * f[k][i].clone());
        let norm = C::from_rational(crate::scalar::rat(1, 1i128 << (self.n / 2)));
        Ok(tr * norm)
    }
}

impl ExteriorModule<GaussRat> {
    /// Largest deviation, over all `i, j`, from
    /// `{c^i, c^j} = −2δ`, `{c̃^i, c̃^j} = 2δ`, `{c^i, c̃^j} = 0`.
    pub fn relations_hold(&self) -> bool {
        let d = self.dim();
        let zero = vec![vec![GaussRat::int(0); d]; d];
        let anti = |a: &Square<GaussRat>, b: &Square<GaussRat>| add(&mat_mul(a, b), &mat_mul(b, a), GaussRat::int(1));
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let delta = if i == j { scale(&identity(d), &GaussRat::int(2)) } else { zero.clone() };
                anti(&self.c[i], &self.c[j]) == scale(&delta, &GaussRat::int(-1))
                    && anti(&self.c_tilde[i], &self.c_tilde[j]) == delta
                    && anti(&self.c[i], &self.c_tilde[j]) == zero
            })
        })
    }
}

/// Both sides of `str^{E/S} exp(½ A_ij c̃^i c̃^j) = Pf(−2iA) / det^{1/2} Â(−2A)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BerezinComparison {
    pub lhs: Complex64,
    pub rhs: Complex64,
}

impl BerezinComparison {
    pub fn residual(&self) -> f64 {
        (self.lhs - self.rhs).norm()
    }
}

/// Evaluates the left side by dense matrix exponential on the `2ⁿ`-dimensional
/// exterior module and the right side by Pfaffian and a power-series
/// determinant. The series for `Â(−2A)` needs the eigenvalues `±iλ` of `A`
/// to satisfy `|λ| < π`.
pub fn berezin_supertrace_exp(a: &[Vec<f64>]) -> Result<BerezinComparison, CliffordError> {
    let n = a.len();
    if n == 0 || n % 2 == 1 || a.iter().any(|r| r.len() != n) {
        return Err(CliffordError::Unsupported("a square matrix of even size".into()));
    }
    let scale_a = a.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
    for i in 0..n {
        for j in 0..n {
            if (a[i][j] + a[j][i]).abs() > 1e-12 * scale_a {
                return Err(CliffordError::Unsupported("an antisymmetric matrix".into()));
            }
        }
    }
    let module: ExteriorModule<Complex64> = ExteriorModule::new(n)?;
    let d = module.dim();
    let to_real = |m: &Square<Complex64>| DMatrix::from_fn(d, d, |i, j| m[i][j].re);
    let ct: Vec<DMatrix<f64>> = (0..n).map(|i| to_real(module.c_tilde(i))).collect();
    let mut gen = DMatrix::<f64>::zeros(d, d);
    for i in 0..n {
        for j in 0..n {
            if a[i][j] != 0.0 {
                gen += &ct[i] * &ct[j] * (0.5 * a[i][j]);
            }
        }
    }
    let e = gen.exp();
    // γ c(ω_C) = i^{n/2} · (real matrix)
    let g = module.grading();
    let gw = mat_mul(&g, &module.c_omega());
    let phase = (0..n / 2).fold(Complex64::new(1.0, 0.0), |acc, _| acc * Complex64::i());
    let gw_real = DMatrix::from_fn(d, d, |i, j| (gw[i][j] / phase).re);
    let tr = (gw_real * e).trace();
    let lhs = phase * tr / 2f64.powi((n / 2) as i32);

    let pf = pfaffian(&a.to_vec());
    let rhs_num = (0..n / 2).fold(Complex64::new(pf, 0.0), |acc, _| acc * Complex64::new(0.0, -2.0));
    let am = DMatrix::from_fn(n, n, |i, j| a[i][j]);
    let m = &am * &am * 4.0;
    let coeffs = ahat_even_coefficients_f64(80);
    let mut h = DMatrix::<f64>::zeros(n, n);
    let mut pow = DMatrix::<f64>::identity(n, n);
    for c in coeffs {
        h += &pow * c;
        pow = &pow * &m;
    }
    let det = h.determinant();
    if det <= 0.0 {
        return Err(CliffordError::Unsupported("eigenvalues of A inside (−π, π)".into()));
    }
    Ok(BerezinComparison { lhs, rhs: rhs_num / det.sqrt() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        for n in 1..=6 {
            let m: ExteriorModule<GaussRat> = ExteriorModule::new(n).unwrap();
            assert!(m.relations_hold(), "n={n}");
        }
    }

    #[test]
    fn grading_times_c_omega_is_c_tilde_omega() {
        for n in [2, 4, 6] {
            let m: ExteriorModule<GaussRat> = ExteriorModule::new(n).unwrap();
            assert_eq!(mat_mul(&m.grading(), &m.c_omega()), m.c_tilde_omega(), "n={n}");
        }
    }

    #[test]
    fn supertraces_of_monomials() {
        for n in [2, 4, 6] {
            let m: ExteriorModule<GaussRat> = ExteriorModule::new(n).unwrap();
            let top = (1u64 << n) - 1;
            for mask in 0..=top {
                let s = m.relative_supertrace(&m.c_tilde_monomial(mask)).unwrap();
                if mask == top {
                    let expect = (0..n / 2).fold(GaussRat::int(1), |acc, _| acc * GaussRat::new(0.into(), (-2).into()));
                    assert_eq!(s, expect, "n={n}");
                } else {
                    assert_eq!(s, GaussRat::int(0), "n={n} mask={mask}");
                }
            }
        }
    }

    #[test]
    fn berezin_two_by_two() {
        for k in 1..=20 {
            let l = 0.1 * k as f64;
            let r = berezin_supertrace_exp(&[vec![0.0, l], vec![-l, 0.0]]).unwrap();
            let expect = Complex64::new(0.0, -2.0 * l.sin());
            assert!((r.lhs - expect).norm() < 1e-12, "λ={l}: {:?}", r.lhs);
            assert!(r.residual() < 1e-10, "λ={l}: {:?}", r);
        }
        let zero = berezin_supertrace_exp(&[vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap();
        assert!(zero.lhs.norm() < 1e-15 && zero.rhs.norm() < 1e-15);
    }
}
