//! Random inputs for invariance checks: generic curvature matrices and
//! orthogonal or unitary conjugators, in float and exact flavours.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;
use rand::Rng;
use rand_distr::StandardNormal;

use super::form::{FormMatrix, FormPoly};
use crate::linalg::{identity, inverse, mat_mul, Square};
use crate::scalar::{rat, Coefficient, Rational};

/// Antisymmetric `n×n` matrix of 2-forms on `m` generators with small
/// integer coefficients in `[−range, range]`.
pub fn random_antisymmetric<C: Coefficient, R: Rng>(n: usize, m: usize, range: i64, rng: &mut R) -> FormMatrix<C> {
    let mut f = FormMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut e = FormPoly::<C>::zero();
            for a in 0..m {
                for b in a + 1..m {
                    e = e + FormPoly::two_form(a, b, C::from_int(rng.gen_range(-range..=range)));
                }
            }
            f.set(j, i, -e.clone());
            f.set(i, j, e);
        }
    }
    f
}

/// General (not antisymmetric) matrix of 2-forms, for unitary-family genera.
pub fn random_general<C: Coefficient, R: Rng>(n: usize, m: usize, range: i64, rng: &mut R) -> FormMatrix<C> {
    let mut f = FormMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut e = FormPoly::<C>::zero();
            for a in 0..m {
                for b in a + 1..m {
                    let c = C::from_int(rng.gen_range(-range..=range))
                        + C::imag_unit() * C::from_int(rng.gen_range(-range..=range));
                    e = e + FormPoly::two_form(a, b, c);
                }
            }
            f.set(i, j, e);
        }
    }
    f
}

fn from_dmatrix(q: &DMatrix<Complex64>) -> Square<Complex64> {
    (0..q.nrows()).map(|i| (0..q.ncols()).map(|j| q[(i, j)]).collect()).collect()
}

/// Haar-ish random element of `SO(n)` from the QR factorisation of a
/// Gaussian matrix, with column signs fixed and orientation corrected.
pub fn random_special_orthogonal<R: Rng>(n: usize, rng: &mut R) -> Square<Complex64> {
    let a = DMatrix::<f64>::from_fn(n, n, |_, _| rng.sample(StandardNormal));
    let qr = a.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    if q.determinant() < 0.0 {
        q.column_mut(0).neg_mut();
    }
    from_dmatrix(&q.map(|x| Complex64::new(x, 0.0)))
}

/// Random element of `U(n)` from the QR factorisation of a complex Gaussian matrix.
pub fn random_unitary<R: Rng>(n: usize, rng: &mut R) -> Square<Complex64> {
    let a = DMatrix::<Complex64>::from_fn(n, n, |_, _| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
    let qr = a.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        let d = r[(j, j)];
        if d.norm() > 0.0 {
            let phase = d / d.norm();
            for i in 0..n {
                q[(i, j)] *= phase;
            }
        }
    }
    from_dmatrix(&q)
}

/// Conjugate transpose.
pub fn adjoint<C: Coefficient>(g: &Square<C>) -> Square<C> {
    let n = g.len();
    (0..n).map(|i| (0..n).map(|j| g[j][i].conj()).collect()).collect()
}

/// Rational rotation `(I − K)(I + K)⁻¹` from an antisymmetric rational `K`.
/// Always in `SO(n)`; the inverse is the transpose.
pub fn cayley_orthogonal(k: &Square<Rational>) -> Square<Rational> {
    let n = k.len();
    let id: Square<Rational> = identity(n);
    let minus: Square<Rational> = (0..n).map(|i| (0..n).map(|j| id[i][j] - k[i][j]).collect()).collect();
    let plus: Square<crate::scalar::GaussRat> =
        (0..n).map(|i| (0..n).map(|j| crate::scalar::GaussRat::real(id[i][j] + k[i][j])).collect()).collect();
    // I + K is invertible for antisymmetric K: its eigenvalues are 1 ± iλ
    let inv = inverse(&plus).expect("I + K is invertible");
    let inv: Square<Rational> = inv.iter().map(|r| r.iter().map(|x| x.re).collect()).collect();
    mat_mul(&minus, &inv)
}

/// Random antisymmetric rational matrix with entries `a/b`, `|a| ≤ 3`, `1 ≤ b ≤ 3`.
pub fn random_rational_antisymmetric<R: Rng>(n: usize, rng: &mut R) -> Square<Rational> {
    let mut k = vec![vec![rat(0, 1); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let q = rat(rng.gen_range(-3..=3), rng.gen_range(1..=3));
            k[i][j] = q;
            k[j][i] = -q;
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cayley_is_special_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let g = cayley_orthogonal(&random_rational_antisymmetric(4, &mut rng));
            let gt: Square<Rational> = (0..4).map(|i| (0..4).map(|j| g[j][i]).collect()).collect();
            assert_eq!(mat_mul(&g, &gt), identity(4));
            assert_eq!(crate::linalg::det(&g), rat(1, 1));
        }
    }

    #[test]
    fn float_groups() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let o = random_special_orthogonal(4, &mut rng);
        let u = random_unitary(3, &mut rng);
        for g in [o, u] {
            let prod = mat_mul(&g, &adjoint(&g));
            let n = g.len();
            for i in 0..n {
                for j in 0..n {
                    let e = if i == j { 1.0 } else { 0.0 };
                    assert!((prod[i][j] - e).norm() < 1e-12);
                }
            }
        }
        let o = random_special_orthogonal(4, &mut rng);
        assert!((crate::linalg::det(&o) - 1.0).norm() < 1e-12);
    }
}
