//! Heat kernels on the line: the free kernel, Mehler's kernel for the
//! harmonic oscillator, its Hermite-function expansion, and quadrature
//! checks of the semigroup law and the delta-function limit.

use std::f64::consts::PI;
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use serde::Serialize;

use crate::error::IndexError;

fn check_t(t: f64) -> Result<(), IndexError> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(IndexError::Parameter(format!("heat time must be positive, got {t}")))
    }
}

/// `(4πt)^{−1/2} exp(−(x−y)²/4t)`, the kernel of `e^{t d²/dx²}`.
pub fn line_heat_kernel(t: f64, x: f64, y: f64) -> Result<f64, IndexError> {
    check_t(t)?;
    Ok((4.0 * PI * t).powf(-0.5) * (-(x - y).powi(2) / (4.0 * t)).exp())
}

/// Kernel of `e^{−tH}` for `H = −d²/dx² + a²x²`:
/// `(4πt)^{−1/2} (2at/sinh 2at)^{1/2} exp(−(1/4t)(2at/sinh 2at)(cosh(2at)(x²+y²) − 2xy))`.
pub fn mehler_kernel(t: f64, x: f64, y: f64, a: f64) -> Result<f64, IndexError> {
    check_t(t)?;
    if !(a > 0.0) {
        return Err(IndexError::Parameter(format!("oscillator frequency must be positive, got {a}")));
    }
    let s = 2.0 * a * t;
    let ratio = if s < 1e-8 { 1.0 - s * s / 6.0 } else { s / s.sinh() };
    let quad = s.cosh() * (x * x + y * y) - 2.0 * x * y;
    Ok((4.0 * PI * t).powf(-0.5) * ratio.sqrt() * (-ratio * quad / (4.0 * t)).exp())
}

/// Normalised Hermite functions `ψ_0 … ψ_{n−1}` at `u` by the three-term
/// recurrence `ψ_{k+1} = √(2/(k+1)) u ψ_k − √(k/(k+1)) ψ_{k−1}`.
pub fn hermite_functions(n: usize, u: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n);
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25) * (-u * u / 2.0).exp();
    for k in 0..n {
        out.push(cur);
        let next = (2.0 / (k as f64 + 1.0)).sqrt() * u * cur - (k as f64 / (k as f64 + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    out
}

/// `Σ_{k<terms} e^{−tμ_k} φ_k(x) φ_k(y)` with `μ_k = a(2k+1)` and
/// `φ_k(x) = a^{1/4} ψ_k(√a x)`, the eigenfunctions of `−d²/dx² + a²x²`.
pub fn hermite_expansion(t: f64, x: f64, y: f64, a: f64, terms: usize) -> Result<f64, IndexError> {
    check_t(t)?;
    let (hx, hy) = (hermite_functions(terms, a.sqrt() * x), hermite_functions(terms, a.sqrt() * y));
    Ok((0..terms).map(|k| (-t * a * (2 * k + 1) as f64).exp() * a.sqrt() * hx[k] * hy[k]).sum())
}

/// Composite Gauss–Legendre rule with a fixed number of equal panels.
#[derive(Clone, Debug)]
pub struct Quadrature {
    rule: GaussLegendre,
    panels: usize,
}

impl Quadrature {
    pub fn new(degree: usize, panels: usize) -> Result<Self, IndexError> {
        let deg = NonZeroUsize::new(degree.max(2)).expect("positive");
        if panels == 0 {
            return Err(IndexError::Parameter("at least one quadrature panel".into()));
        }
        Ok(Quadrature { rule: GaussLegendre::new(deg), panels })
    }

    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let h = (b - a) / self.panels as f64;
        (0..self.panels)
            .map(|i| {
                let lo = a + i as f64 * h;
                self.rule.integrate(lo, lo + h, &mut f)
            })
            .sum()
    }
}

impl Default for Quadrature {
    /// 80 panels of 20 nodes.
    fn default() -> Self {
        Quadrature::new(20, 80).expect("valid")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SemigroupReport {
    pub t1: f64,
    pub t2: f64,
    /// Integration window `[−L, L]` with `L = max(8√(t1+t2), 8)`.
    pub half_width: f64,
    pub grid: Vec<f64>,
    pub residual: f64,
}

/// `max_{x,y ∈ grid} |∫ k(t1,x,z) k(t2,z,y) dz − k(t1+t2,x,y)|`.
pub fn semigroup_residual(
    kernel: impl Fn(f64, f64, f64) -> Result<f64, IndexError>,
    t1: f64,
    t2: f64,
    grid: &[f64],
    quad: &Quadrature,
) -> Result<SemigroupReport, IndexError> {
    check_t(t1)?;
    check_t(t2)?;
    let l = (8.0 * (t1 + t2).sqrt()).max(8.0);
    let mut residual: f64 = 0.0;
    for &x in grid {
        for &y in grid {
            let mut err = None;
            let conv = quad.integrate(-l, l, |z| match (kernel(t1, x, z), kernel(t2, z, y)) {
                (Ok(a), Ok(b)) => a * b,
                (Err(e), _) | (_, Err(e)) => {
                    err = Some(e);
                    0.0
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
            residual = residual.max((conv - kernel(t1 + t2, x, y)?).abs());
        }
    }
    Ok(SemigroupReport { t1, t2, half_width: l, grid: grid.to_vec(), residual })
}

/// Smooth bump supported in `(−1, 1)`.
pub fn bump(x: f64) -> f64 {
    if x.abs() >= 1.0 {
        0.0
    } else {
        (-1.0 / (1.0 - x * x)).exp()
    }
}

/// `max_x |∫ k(t,x,y) f(y) dy − f(x)|` for the line kernel, integrating over
/// a window of 12 standard deviations around `x`.
pub fn delta_limit_error(t: f64, f: impl Fn(f64) -> f64, xs: &[f64], quad: &Quadrature) -> Result<f64, IndexError> {
    check_t(t)?;
    let w = 12.0 * (2.0 * t).sqrt();
    let mut worst: f64 = 0.0;
    for &x in xs {
        let v = quad.integrate(x - w, x + w, |y| line_heat_kernel(t, x, y).unwrap_or(0.0) * f(y));
        worst = worst.max((v - f(x)).abs());
    }
    Ok(worst)
}

/// Evenly spaced points `lo, …, hi`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_functions_are_orthonormal() {
        let q = Quadrature::default();
        let gram = |j: usize, k: usize| q.integrate(-12.0, 12.0, |u| {
            let h = hermite_functions(k.max(j) + 1, u);
            h[j] * h[k]
        });
        for (j, k) in [(0, 0), (3, 3), (10, 10), (0, 2), (5, 7)] {
            let expect = if j == k { 1.0 } else { 0.0 };
            assert!((gram(j, k) - expect).abs() < 1e-12, "({j},{k})");
        }
    }

    #[test]
    fn mehler_matches_oracle_pointwise() {
        let m = mehler_kernel(0.3, 0.7, -0.2, 1.0).unwrap();
        let h = hermite_expansion(0.3, 0.7, -0.2, 1.0, 60).unwrap();
        assert!((m - h).abs() < 1e-8, "{m} vs {h}");
    }

    #[test]
    fn small_frequency_limit() {
        for (x, y) in [(0.0, 0.0), (0.5, -0.3), (1.2, 2.0)] {
            let d = mehler_kernel(0.4, x, y, 1e-6).unwrap() - line_heat_kernel(0.4, x, y).unwrap();
            assert!(d.abs() < 1e-8);
        }
    }

    #[test]
    fn rejects_nonpositive_time() {
        assert!(line_heat_kernel(0.0, 0.0, 0.0).is_err());
        assert!(mehler_kernel(-1.0, 0.0, 0.0, 1.0).is_err());
    }
}
