//! Scalar power series with rational coefficients: Bernoulli numbers and
//! the generating functions of the standard genera.

use num_traits::{One, Zero};

use crate::scalar::{rat, Rational};

/// Bernoulli numbers `B_0 … B_k` with `B_1 = −1/2`, from the recurrence
/// `Σ_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_table(k: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=k {
        let mut s = Rational::zero();
        let mut binom = Rational::one(); // C(m+1, j)
        for (j, bj) in b.iter().enumerate() {
            s += binom * bj;
            binom = binom * rat((m + 1 - j) as i128, (j + 1) as i128);
        }
        // binom is now C(m+1, m)
        b.push(-s / binom);
    }
    b
}

pub fn bernoulli(k: usize) -> Rational {
    bernoulli_table(k)[k]
}

pub fn factorial(k: usize) -> Rational {
    (1..=k).fold(Rational::one(), |acc, j| acc * rat(j as i128, 1))
}

/// Generalized binomial coefficient `C(a, k)` for rational `a`.
pub fn binomial(a: Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, j| acc * (a - rat(j as i128, 1)) / rat(j as i128 + 1, 1))
}

/// Coefficients `a_0 … a_k` of `x / (1 − e^{−x}) = Σ (−1)^j B_j x^j / j!`.
pub fn todd_coefficients(k: usize) -> Vec<Rational> {
    let b = bernoulli_table(k);
    (0..=k)
        .map(|j| {
            let s = if j % 2 == 0 { 1 } else { -1 };
            rat(s, 1) * b[j] / factorial(j)
        })
        .collect()
}

/// Coefficients in `x` (odd ones zero) of `x / tanh x = Σ 2^{2j} B_{2j} x^{2j} / (2j)!`.
pub fn l_coefficients(k: usize) -> Vec<Rational> {
    let b = bernoulli_table(k);
    (0..=k)
        .map(|j| {
            if j % 2 == 1 {
                Rational::zero()
            } else {
                rat(1i128 << j, 1) * b[j] / factorial(j)
            }
        })
        .collect()
}

/// Coefficients in `x` of `(x/2) / sinh(x/2)`:
/// `a_{2j} = −(2^{2j−1} − 1) B_{2j} / (2^{2j−1} (2j)!)` for `j ≥ 1`.
pub fn ahat_coefficients(k: usize) -> Vec<Rational> {
    let b = bernoulli_table(k);
    (0..=k)
        .map(|j| {
            if j == 0 {
                Rational::one()
            } else if j % 2 == 1 {
                Rational::zero()
            } else {
                let p = rat(1i128 << (j - 1), 1);
                -(p - Rational::one()) * b[j] / (p * factorial(j))
            }
        })
        .collect()
}

/// Coefficients of `e^x`.
pub fn exp_coefficients(k: usize) -> Vec<Rational> {
    (0..=k).map(|j| Rational::one() / factorial(j)).collect()
}

/// Coefficients of `(1 + x)^{1/2}`.
pub fn sqrt_one_plus_coefficients(k: usize) -> Vec<Rational> {
    (0..=k).map(|j| binomial(rat(1, 2), j)).collect()
}

/// Reciprocal of a power series with `a_0 ≠ 0`, in floating point.
pub fn reciprocal_f64(a: &[f64]) -> Vec<f64> {
    let mut b = vec![0.0; a.len()];
    b[0] = 1.0 / a[0];
    for k in 1..a.len() {
        let s: f64 = (1..=k).map(|j| a[j] * b[k - j]).sum();
        b[k] = -s / a[0];
    }
    b
}

/// Coefficients `c_j` with `(x/2)/sinh(x/2) = Σ c_j x^{2j}`, `j < terms`, in
/// floating point. Obtained by inverting `sinh(x/2)/(x/2) = Σ x^{2j} / (4^j (2j+1)!)`,
/// so it stays accurate far beyond where exact factorials overflow.
pub fn ahat_even_coefficients_f64(terms: usize) -> Vec<f64> {
    let mut s = Vec::with_capacity(terms);
    let mut c = 1.0;
    for j in 0..terms {
        s.push(c);
        c /= 4.0 * ((2 * j + 2) * (2 * j + 3)) as f64;
    }
    reciprocal_f64(&s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), rat(0, 1));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert!((3..40).step_by(2).all(|k| bernoulli(k) == rat(0, 1)));
    }

    #[test]
    fn genus_coefficients() {
        assert_eq!(todd_coefficients(2), vec![rat(1, 1), rat(1, 2), rat(1, 12)]);
        assert_eq!(l_coefficients(4), vec![rat(1, 1), rat(0, 1), rat(1, 3), rat(0, 1), rat(-1, 45)]);
        assert_eq!(ahat_coefficients(4), vec![rat(1, 1), rat(0, 1), rat(-1, 24), rat(0, 1), rat(7, 5760)]);
        assert_eq!(sqrt_one_plus_coefficients(3), vec![rat(1, 1), rat(1, 2), rat(-1, 8), rat(1, 16)]);
    }

    #[test]
    fn float_ahat_matches_exact() {
        let exact = ahat_coefficients(16);
        let float = ahat_even_coefficients_f64(9);
        for j in 0..=8 {
            let e = crate::scalar::ratio_to_f64(&exact[2 * j]);
            assert!((e - float[j]).abs() <= 1e-13 * e.abs(), "j={j}");
        }
    }
}
