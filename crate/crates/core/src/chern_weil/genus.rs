//! The standard genera evaluated on curvature matrices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::form::{FormMatrix, FormPoly};
use crate::error::FormError;
use crate::linalg::Square;
use crate::scalar::{rat, FormScalar, Rational};
use crate::series;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Genus {
    /// `det(I + X)`
    Chern,
    /// `det(X / (1 − e^{−X}))`
    Todd,
    /// `tr exp X`
    ChernCharacter,
    /// `det^{1/2}(I + X²)`
    Pontryagin,
    /// `det^{1/2}(X / tanh X)`
    L,
    /// `det^{1/2}((X/2) / sinh(X/2))`
    AHat,
    /// `Pf(F / 2π)`
    Euler,
}

impl Genus {
    pub const ALL: [Genus; 7] =
        [Genus::Chern, Genus::Todd, Genus::ChernCharacter, Genus::Pontryagin, Genus::L, Genus::AHat, Genus::Euler];

    pub fn name(self) -> &'static str {
        match self {
            Genus::Chern => "chern",
            Genus::Todd => "todd",
            Genus::ChernCharacter => "ch",
            Genus::Pontryagin => "pontryagin",
            Genus::L => "l",
            Genus::AHat => "ahat",
            Genus::Euler => "euler",
        }
    }

    /// Genera defined through `det^{1/2}` or the Pfaffian need an
    /// antisymmetric (orthogonal-type) curvature.
    pub fn needs_antisymmetric(self) -> bool {
        matches!(self, Genus::Pontryagin | Genus::L | Genus::AHat | Genus::Euler)
    }

    /// Taylor coefficients `a_0 … a_k` of the generating function in `x`,
    /// where one exists.
    pub fn coefficients(self, k: usize) -> Option<Vec<Rational>> {
        match self {
            Genus::Chern => Some((0..=k).map(|j| rat((j <= 1) as i128, 1)).collect()),
            Genus::Todd => Some(series::todd_coefficients(k)),
            Genus::ChernCharacter => Some(series::exp_coefficients(k)),
            Genus::Pontryagin => Some((0..=k).map(|j| rat((j == 0 || j == 2) as i128, 1)).collect()),
            Genus::L => Some(series::l_coefficients(k)),
            Genus::AHat => Some(series::ahat_coefficients(k)),
            Genus::Euler => None,
        }
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Genus {
    type Err = FormError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "chern" | "c" => Ok(Genus::Chern),
            "todd" | "td" => Ok(Genus::Todd),
            "ch" | "chern_character" | "chern-character" => Ok(Genus::ChernCharacter),
            "pontryagin" | "p" => Ok(Genus::Pontryagin),
            "l" => Ok(Genus::L),
            "ahat" | "a-hat" | "a_hat" => Ok(Genus::AHat),
            "euler" | "e" => Ok(Genus::Euler),
            _ => Err(FormError::UnknownGenus(s.to_string())),
        }
    }
}

/// Highest power of `X` the series are expanded to; exact coefficients stay
/// well inside `i128` at this order.
const MAX_ORDER: usize = 16;

/// `(i/2π) F`.
pub fn chern_weil_argument<C: FormScalar>(f: &FormMatrix<C>) -> FormMatrix<C> {
    let s = C::imag_unit() * C::pi_pow(-1) * C::from_rational(rat(1, 2));
    f.scale(&s)
}

/// Whether a series genus is evaluated as `det f(X)` or `det^{1/2} f(X)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Unitary,
    Orthogonal,
}

/// A multiplicative genus given by its power series `a₀ + a₁x + ⋯` with `a₀ = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusSeries {
    name: String,
    coeffs: Vec<Rational>,
    family: Family,
}

impl GenusSeries {
    pub fn new(name: impl Into<String>, coeffs: Vec<Rational>, family: Family) -> Result<Self, FormError> {
        let name = name.into();
        if coeffs.first() != Some(&rat(1, 1)) {
            return Err(FormError::UnknownGenus(format!("{name}: leading coefficient must be 1")));
        }
        Ok(GenusSeries { name, coeffs, family })
    }

    /// The named series genera; `None` for the Chern character and Euler class.
    pub fn named(genus: Genus) -> Option<Self> {
        let family = match genus {
            Genus::Chern | Genus::Todd => Family::Unitary,
            Genus::Pontryagin | Genus::L | Genus::AHat => Family::Orthogonal,
            Genus::ChernCharacter | Genus::Euler => return None,
        };
        let coeffs = genus.coefficients(MAX_ORDER)?;
        Some(GenusSeries { name: genus.name().into(), coeffs, family })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `det f(X)` or `det^{1/2} f(X)` with `X = (i/2π) F`.
    pub fn eval<C: FormScalar>(&self, f: &FormMatrix<C>) -> Result<FormPoly<C>, FormError> {
        if self.family == Family::Orthogonal && !f.is_antisymmetric() {
            return Err(FormError::Dimension(format!("{} needs an antisymmetric curvature", self.name)));
        }
        check_curvature(f)?;
        let x = chern_weil_argument(f);
        // entries have degree ≥ 2, so X^k = 0 once 2k exceeds the number of generators
        if self.coeffs.len() <= f.form_dim() / 2 {
            return Err(FormError::Dimension(format!("{}: series too short for {} generators", self.name, f.form_dim())));
        }
        let coef = |j: usize| self.coeffs.get(j).map_or_else(C::zero, |&q| C::from_rational(q));
        let fx = x.apply_series(coef)?;
        match self.family {
            Family::Unitary => Ok(fx.det()),
            Family::Orthogonal => fx.det_sqrt(),
        }
    }
}

fn check_curvature<C: FormScalar>(f: &FormMatrix<C>) -> Result<(), FormError> {
    if !f.is_nilpotent() {
        return Err(FormError::Dimension("curvature entries must be forms of positive degree".into()));
    }
    let m = f.form_dim();
    if m > 2 * MAX_ORDER {
        return Err(FormError::Dimension(format!("{m} form generators exceed the supported {}", 2 * MAX_ORDER)));
    }
    Ok(())
}

/// Evaluates a genus on the curvature `F`; the conventional factor
/// `X = (i/2π) F` is applied here, not by callers.
pub fn genus_eval<C: FormScalar>(genus: Genus, f: &FormMatrix<C>) -> Result<FormPoly<C>, FormError> {
    if genus.needs_antisymmetric() && !f.is_antisymmetric() {
        return Err(FormError::Dimension(format!("{genus} needs an antisymmetric curvature")));
    }
    check_curvature(f)?;
    match genus {
        Genus::Euler => {
            let s = C::pi_pow(-1) * C::from_rational(rat(1, 2));
            f.scale(&s).pfaffian()
        }
        Genus::ChernCharacter => Ok(chern_weil_argument(f).exp()?.tr()),
        _ => GenusSeries::named(genus).expect("series genus").eval(f),
    }
}

/// `max |genus(G F G⁻¹) − genus(F)|` over the coefficients.
pub fn invariance_check<C: FormScalar>(
    genus: Genus,
    f: &FormMatrix<C>,
    g: &Square<C>,
    g_inv: &Square<C>,
) -> Result<f64, FormError> {
    let base = genus_eval(genus, f)?;
    let conj = genus_eval(genus, &f.conjugate(g, g_inv))?;
    Ok((conj - base).max_abs())
}

/// `−(1/8π²) tr(F ∧ F)`, the trace expression for the first Pontryagin form.
pub fn p1_trace_form<C: FormScalar>(f: &FormMatrix<C>) -> FormPoly<C> {
    let s = -C::from_rational(rat(1, 8)) * C::pi_pow(-2);
    f.mul(f).tr().scale(&s)
}

/// Leading terms of an even genus `1 + a x² + b x⁴` and the same expressed
/// through Pontryagin classes: `1 + a p₁ + (b p₁² + (a² − 2b) p₂)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusExpansion {
    pub x2: Rational,
    pub x4: Rational,
    pub p1: Rational,
    pub p1_squared: Rational,
    pub p2: Rational,
}

pub fn genus_expand(genus: Genus) -> Result<GenusExpansion, FormError> {
    let c = genus
        .coefficients(4)
        .filter(|c| c[1] == rat(0, 1) && c[3] == rat(0, 1))
        .ok_or_else(|| FormError::UnknownGenus(format!("{genus} is not an even power series")))?;
    let (a, b) = (c[2], c[4]);
    Ok(GenusExpansion { x2: a, x4: b, p1: a, p1_squared: b, p2: a * a - rat(2, 1) * b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Coefficient, GaussRat, PiLaurent};
    use num_traits::{One, Zero};

    #[test]
    fn expansions() {
        let a = genus_expand(Genus::AHat).unwrap();
        assert_eq!((a.x2, a.x4), (rat(-1, 24), rat(7, 5760)));
        assert_eq!((a.p1_squared, a.p2), (rat(7, 5760), rat(-4, 5760)));
        let l = genus_expand(Genus::L).unwrap();
        assert_eq!((l.p1, l.p1_squared, l.p2), (rat(1, 3), rat(-1, 45), rat(7, 45)));
        assert_eq!(Genus::Todd.coefficients(1).unwrap()[1], rat(1, 2));
        assert!(genus_expand(Genus::Todd).is_err());
    }

    #[test]
    fn zero_curvature() {
        let f: FormMatrix<PiLaurent> = FormMatrix::zeros(4);
        for g in [Genus::AHat, Genus::L, Genus::Todd, Genus::Chern, Genus::Pontryagin] {
            assert!(genus_eval(g, &f).unwrap().is_one(), "{g}");
        }
        assert_eq!(genus_eval(Genus::ChernCharacter, &f).unwrap(), FormPoly::constant(PiLaurent::from_int(4)));
        assert!(genus_eval(Genus::Euler, &f).unwrap().is_zero());
    }

    #[test]
    fn first_chern_class_is_trace() {
        let mut f: FormMatrix<PiLaurent> = FormMatrix::zeros(2);
        let c = |n| PiLaurent::constant(GaussRat::int(n));
        f.set(0, 0, FormPoly::two_form(0, 1, c(3)));
        f.set(1, 1, FormPoly::two_form(2, 3, c(-1)));
        f.set(0, 1, FormPoly::two_form(0, 2, c(2)));
        let total = genus_eval(Genus::Chern, &f).unwrap();
        assert_eq!(total.degree_part(2), chern_weil_argument(&f).tr());
    }

    #[test]
    fn names_round_trip() {
        for g in Genus::ALL {
            assert_eq!(g.name().parse::<Genus>().unwrap(), g);
        }
        assert!("bogus".parse::<Genus>().is_err());
    }
}
