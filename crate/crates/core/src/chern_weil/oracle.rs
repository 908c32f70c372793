//! Taylor coefficients of the genus generating functions by exact power-series
//! long division of the defining hyperbolic series. Shares nothing with the
//! Bernoulli-number formulas in [`crate::series`], so the two can be compared.

use crate::scalar::{rat, Rational};

fn factorial(k: usize) -> Rational {
    (1..=k as i128).fold(rat(1, 1), |acc, j| acc * rat(j, 1))
}

/// `a / b` as power series to order `k`; `b₀` must be nonzero.
pub fn divide(a: &[Rational], b: &[Rational], k: usize) -> Vec<Rational> {
    let at = |s: &[Rational], j: usize| s.get(j).copied().unwrap_or_else(|| rat(0, 1));
    let mut q = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let acc = (1..=j).fold(at(a, j), |acc, i| acc - at(b, i) * q[j - i]);
        q.push(acc / b[0]);
    }
    q
}

/// `sinh(cx)/(cx)` to order `k`.
fn sinhc(c: Rational, k: usize) -> Vec<Rational> {
    (0..=k)
        .map(|j| if j % 2 == 0 { c.pow(j as i32) / factorial(j + 1) } else { rat(0, 1) })
        .collect()
}

fn cosh(k: usize) -> Vec<Rational> {
    (0..=k).map(|j| if j % 2 == 0 { rat(1, 1) / factorial(j) } else { rat(0, 1) }).collect()
}

/// `(x/2) / sinh(x/2)`.
pub fn ahat_taylor(k: usize) -> Vec<Rational> {
    divide(&[rat(1, 1)], &sinhc(rat(1, 2), k), k)
}

/// `x / tanh x = cosh x / (sinh x / x)`.
pub fn l_taylor(k: usize) -> Vec<Rational> {
    divide(&cosh(k), &sinhc(rat(1, 1), k), k)
}

/// `x / (1 − e^{−x})`, with `(1 − e^{−x})/x = Σ (−1)^j x^j/(j+1)!`.
pub fn todd_taylor(k: usize) -> Vec<Rational> {
    let den: Vec<Rational> = (0..=k).map(|j| rat(if j % 2 == 0 { 1 } else { -1 }, 1) / factorial(j + 1)).collect();
    divide(&[rat(1, 1)], &den, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series;

    #[test]
    fn leading_coefficients() {
        let a = ahat_taylor(4);
        assert_eq!((a[0], a[2], a[4]), (rat(1, 1), rat(-1, 24), rat(7, 5760)));
        let l = l_taylor(4);
        assert_eq!((l[2], l[4]), (rat(1, 3), rat(-1, 45)));
        assert_eq!(todd_taylor(2), vec![rat(1, 1), rat(1, 2), rat(1, 12)]);
    }

    #[test]
    fn agrees_with_bernoulli_formulas() {
        assert_eq!(ahat_taylor(16), series::ahat_coefficients(16));
        assert_eq!(l_taylor(16), series::l_coefficients(16));
        assert_eq!(todd_taylor(16), series::todd_coefficients(16));
    }
}
