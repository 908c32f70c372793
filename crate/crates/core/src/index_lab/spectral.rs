//! Closed-form spectra of the squared Dirac-type operators of the desk-scale
//! models, graded heat traces, and the McKean–Singer check.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::IndexError;

/// Eigenvalues of `D²` below this count as zero modes.
pub const ZERO_TOL: f64 = 1e-9;

/// Rounding allowance added to every tail bound when comparing sums of
/// order-one terms in double precision.
pub const ROUNDING_TOL: f64 = 1e-12;

/// One eigenvalue of `D²` with the multiplicities on the even (`D⁻D⁺`) and
/// odd (`D⁺D⁻`) halves.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Level {
    pub eigenvalue: f64,
    pub plus: u64,
    pub minus: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TailBound {
    /// Levels cancel pairwise beyond the cutoff, so truncation is exact.
    Cancelling,
    /// `4(l_max+1)² e^{−t l_max(l_max+1)}`, valid for `t ≥ 0.1`.
    SphereHarmonics { l_max: usize },
}

impl TailBound {
    pub fn at(&self, t: f64) -> f64 {
        match *self {
            TailBound::Cancelling => 0.0,
            TailBound::SphereHarmonics { l_max } => {
                let l = l_max as f64;
                4.0 * (l + 1.0).powi(2) * (-t * l * (l + 1.0)).exp()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralModel {
    pub name: String,
    pub params: BTreeMap<String, f64>,
    pub cutoff: usize,
    pub tail: TailBound,
    levels: Vec<Level>,
}

impl SpectralModel {
    /// Sorts the levels and checks `spec(D⁻D⁺)∖{0} = spec(D⁺D⁻)∖{0}` with
    /// multiplicity.
    pub fn new(
        name: impl Into<String>,
        params: BTreeMap<String, f64>,
        cutoff: usize,
        tail: TailBound,
        mut levels: Vec<Level>,
    ) -> Result<Self, IndexError> {
        levels.retain(|l| l.plus + l.minus > 0);
        levels.sort_by(|a, b| a.eigenvalue.total_cmp(&b.eigenvalue));
        if let Some(l) = levels.iter().find(|l| l.eigenvalue < -ZERO_TOL) {
            return Err(IndexError::Parameter(format!("negative eigenvalue {} of D²", l.eigenvalue)));
        }
        if let Some(l) = levels.iter().find(|l| l.eigenvalue > ZERO_TOL && l.plus != l.minus) {
            return Err(IndexError::Parameter(format!(
                "nonzero eigenvalue {} has multiplicities {} ≠ {}",
                l.eigenvalue, l.plus, l.minus
            )));
        }
        Ok(SpectralModel { name: name.into(), params, cutoff, tail, levels })
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// `(dim ker D⁺, dim ker D⁻)`.
    pub fn kernel(&self) -> (u64, u64) {
        self.levels
            .iter()
            .filter(|l| l.eigenvalue <= ZERO_TOL)
            .fold((0, 0), |(p, m), l| (p + l.plus, m + l.minus))
    }

    pub fn index(&self) -> i64 {
        let (p, m) = self.kernel();
        p as i64 - m as i64
    }

    /// `(tr e^{−tD⁻D⁺}, tr e^{−tD⁺D⁻})`, summed in eigenvalue order.
    pub fn heat_traces(&self, t: f64) -> (f64, f64) {
        self.levels.iter().fold((0.0, 0.0), |(p, m), l| {
            let w = (-t * l.eigenvalue).exp();
            (p + l.plus as f64 * w, m + l.minus as f64 * w)
        })
    }

    /// `str e^{−tD²}`, computed as the difference of the two traces.
    pub fn supertrace(&self, t: f64) -> f64 {
        let (p, m) = self.heat_traces(t);
        p - m
    }
}

fn params(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Hodge–de Rham operator `d + d*` on the unit round 2-sphere, graded by
/// form degree: functions and 2-forms at `l(l+1)` with multiplicity `2l+1`
/// each, 1-forms at `l(l+1)` with multiplicity `2(2l+1)` for `l ≥ 1`.
pub fn sphere2_hodge(l_max: usize) -> Result<SpectralModel, IndexError> {
    if l_max == 0 {
        return Err(IndexError::Parameter("l_max ≥ 1".into()));
    }
    let levels = (0..=l_max as u64)
        .map(|l| Level {
            eigenvalue: (l * (l + 1)) as f64,
            plus: 2 * (2 * l + 1),
            minus: if l == 0 { 0 } else { 2 * (2 * l + 1) },
        })
        .collect();
    SpectralModel::new("sphere2", params(&[("l_max", l_max as f64)]), l_max, TailBound::SphereHarmonics { l_max }, levels)
}

/// Hodge–de Rham operator on the flat unit torus `R²/Z²`: at each lattice
/// vector `k`, eigenvalue `4π²|k|²` on 1 function, 2 one-forms, 1 two-form.
pub fn torus2_hodge(cutoff: usize) -> Result<SpectralModel, IndexError> {
    torus_levels("torus2", cutoff, (0.0, 0.0), (2, 2))
}

/// Spin Dirac operator on the flat unit torus for the spin structure with
/// periodicity shifts `δ ∈ {0, ½}²`: modes `k = (n+δ₁, m+δ₂)`, one spinor of
/// each chirality per mode.
pub fn torus_dirac(delta: (f64, f64), cutoff: usize) -> Result<SpectralModel, IndexError> {
    let ok = |d: f64| d == 0.0 || d == 0.5;
    if !ok(delta.0) || !ok(delta.1) {
        return Err(IndexError::Parameter(format!("spin structure shifts must lie in {{0, 1/2}}, got {delta:?}")));
    }
    torus_levels("torus_dirac", cutoff, delta, (1, 1))
}

fn torus_levels(
    name: &str,
    cutoff: usize,
    delta: (f64, f64),
    (plus, minus): (u64, u64),
) -> Result<SpectralModel, IndexError> {
    if cutoff == 0 {
        return Err(IndexError::Parameter("cutoff ≥ 1".into()));
    }
    let c = cutoff as i64;
    // group by 4|k|², an integer for δ ∈ {0, ½}²
    let mut by_norm: BTreeMap<i64, (u64, u64)> = BTreeMap::new();
    for n in -c..=c {
        for m in -c..=c {
            let (kx, ky) = (n as f64 + delta.0, m as f64 + delta.1);
            let key = ((2.0 * kx).powi(2) + (2.0 * ky).powi(2)).round() as i64;
            let e = by_norm.entry(key).or_default();
            e.0 += plus;
            e.1 += minus;
        }
    }
    let levels = by_norm
        .into_iter()
        .map(|(key, (p, m))| Level { eigenvalue: PI * PI * key as f64, plus: p, minus: m })
        .collect();
    SpectralModel::new(
        name,
        params(&[("cutoff", cutoff as f64), ("delta1", delta.0), ("delta2", delta.1)]),
        cutoff,
        TailBound::Cancelling,
        levels,
    )
}

/// `D_λ = d/dx − 2πiλ` on `R/Z`: on the mode `e^{2πinx}` it acts by
/// `2πi(n − λ)`, and its adjoint `−d/dx + 2πiλ` by `−2πi(n − λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DlambdaIndex {
    pub kernel_dim: u64,
    pub cokernel_dim: u64,
    pub index: i64,
}

fn check_dlambda(lambda: f64, cutoff: usize) -> Result<(), IndexError> {
    if !lambda.is_finite() || (cutoff as f64) < lambda.abs() + 1.0 {
        return Err(IndexError::Parameter(format!("cutoff {cutoff} must be at least |λ| + 1 for λ = {lambda}")));
    }
    Ok(())
}

pub fn dlambda_index(lambda: f64, cutoff: usize) -> Result<DlambdaIndex, IndexError> {
    check_dlambda(lambda, cutoff)?;
    let c = cutoff as i64;
    let modes = || (-c..=c).map(|n| n as f64 - lambda);
    let kernel_dim = modes().filter(|d| (2.0 * PI * d).abs() < ZERO_TOL).count() as u64;
    let cokernel_dim = modes().filter(|d| (-2.0 * PI * d).abs() < ZERO_TOL).count() as u64;
    Ok(DlambdaIndex { kernel_dim, cokernel_dim, index: kernel_dim as i64 - cokernel_dim as i64 })
}

/// `D_λ*D_λ` on the even half and `D_λD_λ*` on the odd half; both have
/// eigenvalue `4π²(n−λ)²` on mode `n`.
pub fn dlambda_model(lambda: f64, cutoff: usize) -> Result<SpectralModel, IndexError> {
    check_dlambda(lambda, cutoff)?;
    let c = cutoff as i64;
    let levels = (-c..=c)
        .map(|n| {
            let d = 2.0 * PI * (n as f64 - lambda);
            Level { eigenvalue: if d.abs() < ZERO_TOL { 0.0 } else { d * d }, plus: 1, minus: 1 }
        })
        .collect();
    SpectralModel::new(
        "dlambda",
        params(&[("lambda", lambda), ("cutoff", cutoff as f64)]),
        cutoff,
        TailBound::Cancelling,
        levels,
    )
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McKeanSinger {
    pub model: String,
    pub samples: Vec<SupertraceSample>,
    pub inferred_index: i64,
    pub max_deviation: f64,
    /// Largest `tail_bound(t) + rounding` over the grid.
    pub tolerance: f64,
    /// Index read off the kernel of the truncated model.
    pub kernel_index: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SupertraceSample {
    pub t: f64,
    pub even_trace: f64,
    pub odd_trace: f64,
    pub supertrace: f64,
    pub tail_bound: f64,
}

impl McKeanSinger {
    pub fn holds(&self) -> bool {
        self.max_deviation <= self.tolerance && self.inferred_index == self.kernel_index
    }
}

/// Graded heat traces over a grid of times (evaluated in parallel, each
/// sum sequential so results do not depend on the thread count).
pub fn mckean_singer_check(model: &SpectralModel, t_grid: &[f64]) -> Result<McKeanSinger, IndexError> {
    if t_grid.is_empty() {
        return Err(IndexError::Parameter("empty time grid".into()));
    }
    if let Some(t) = t_grid.iter().find(|t| !(**t > 0.0)) {
        return Err(IndexError::Parameter(format!("heat time must be positive, got {t}")));
    }
    let samples: Vec<SupertraceSample> = t_grid
        .par_iter()
        .map(|&t| {
            let (even_trace, odd_trace) = model.heat_traces(t);
            SupertraceSample { t, even_trace, odd_trace, supertrace: even_trace - odd_trace, tail_bound: model.tail.at(t) }
        })
        .collect();
    let mean = samples.iter().map(|s| s.supertrace).sum::<f64>() / samples.len() as f64;
    let inferred_index = mean.round() as i64;
    let max_deviation = samples.iter().map(|s| (s.supertrace - inferred_index as f64).abs()).fold(0.0, f64::max);
    let tolerance = samples.iter().map(|s| s.tail_bound).fold(0.0, f64::max) + ROUNDING_TOL;
    Ok(McKeanSinger {
        model: model.name.clone(),
        samples,
        inferred_index,
        max_deviation,
        tolerance,
        kernel_index: model.index(),
    })
}

/// Built-in spectral model by name: `sphere2`, `torus2`, `torus_dirac`
/// (with `delta`), `dlambda` (with `lambda`).
pub fn spectral_model(name: &str, cutoff: usize, lambda: f64, delta: (f64, f64)) -> Result<SpectralModel, IndexError> {
    match name {
        "sphere2" => sphere2_hodge(cutoff),
        "torus2" => torus2_hodge(cutoff),
        "torus_dirac" => torus_dirac(delta, cutoff),
        "dlambda" => dlambda_model(lambda, cutoff),
        _ => Err(IndexError::UnknownModel(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dlambda_kernel_jumps_at_integers() {
        assert_eq!(dlambda_index(3.0, 10).unwrap(), DlambdaIndex { kernel_dim: 1, cokernel_dim: 1, index: 0 });
        assert_eq!(dlambda_index(0.5, 10).unwrap().kernel_dim, 0);
        assert!(dlambda_index(5.0, 3).is_err());
    }

    #[test]
    fn torus_dirac_kernels() {
        for (delta, k) in [((0.0, 0.0), (1, 1)), ((0.5, 0.0), (0, 0)), ((0.0, 0.5), (0, 0)), ((0.5, 0.5), (0, 0))] {
            assert_eq!(torus_dirac(delta, 5).unwrap().kernel(), k);
        }
        let m = torus_dirac((0.5, 0.5), 5).unwrap();
        assert!((m.levels()[0].eigenvalue - 2.0 * PI * PI).abs() < 1e-12);
        assert!(torus_dirac((0.25, 0.0), 5).is_err());
    }

    #[test]
    fn sphere_index_is_euler_characteristic() {
        let m = sphere2_hodge(30).unwrap();
        assert!((m.supertrace(1.0) - 2.0).abs() < 1e-10);
        assert_eq!(m.index(), 2);
        let r = mckean_singer_check(&m, &[0.1, 0.5, 2.0]).unwrap();
        assert!(r.holds() && r.inferred_index == 2);
    }

    #[test]
    fn asymmetric_spectrum_is_rejected() {
        let levels = vec![Level { eigenvalue: 1.0, plus: 1, minus: 2 }];
        assert!(SpectralModel::new("bad", BTreeMap::new(), 1, TailBound::Cancelling, levels).is_err());
    }

    #[test]
    fn empty_grid_is_an_error() {
        assert!(mckean_singer_check(&torus2_hodge(2).unwrap(), &[]).is_err());
    }
}
