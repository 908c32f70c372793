//! Coefficient rings.
//!
//! Exact work is done over the Gaussian rationals `Q(i)`; numeric work over
//! `Complex64`. Characteristic forms additionally need powers of `π`, which
//! [`PiLaurent`] carries symbolically so that characteristic numbers such as
//! `χ(S²) = 2` come out as exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

pub use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// Exact rational numbers. `i128` keeps products of a few dozen small
/// denominators well clear of overflow; overflow panics in checked builds.
pub type Rational = Ratio<i128>;

pub fn rat(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

/// Commutative ring with unit, as needed by determinant and Pfaffian code.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Send
        + Sync
        + 'static
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + AddAssign
        + SubAssign
        + MulAssign
{
}

/// Coefficient field usable in multivectors, matrices and forms.
pub trait Coefficient: Ring {
    /// True when arithmetic in this ring is exact.
    const EXACT: bool;

    fn from_rational(q: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n as i128))
    }

    fn imag_unit() -> Self;

    fn conj(&self) -> Self;

    /// Multiplicative inverse, `None` for zero or non-units.
    fn recip(&self) -> Option<Self>;

    fn to_complex(&self) -> Complex64;

    fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }

    fn scale_rational(&self, q: Rational) -> Self {
        self.clone() * Self::from_rational(q)
    }
}

/// Coefficient rings that can also represent integer powers of `π`.
pub trait FormScalar: Coefficient {
    fn pi_pow(k: i32) -> Self;
}

// ---------------------------------------------------------------------------
// Gaussian rationals

/// An element `re + im·i` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussRat {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRat { re, im: Rational::zero() }
    }

    pub fn int(n: i128) -> Self {
        Self::real(Rational::from_integer(n))
    }

    pub fn i() -> Self {
        GaussRat { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> Rational {
        self.re * self.re + self.im * self.im
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::int(1),
            1 => Self::i(),
            2 => Self::int(-1),
            _ => -Self::i(),
        }
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        Self::int(1)
    }
}

impl Add for GaussRat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussRat { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussRat {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussRat { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for GaussRat {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussRat {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl Div for GaussRat {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.recip().expect("division by zero in Q(i)")
    }
}

impl Neg for GaussRat {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRat { re: -self.re, im: -self.im }
    }
}

impl AddAssign for GaussRat {
    fn add_assign(&mut self, o: Self) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl SubAssign for GaussRat {
    fn sub_assign(&mut self, o: Self) {
        self.re -= o.re;
        self.im -= o.im;
    }
}

impl MulAssign for GaussRat {
    fn mul_assign(&mut self, o: Self) {
        *self = self.clone() * o;
    }
}

impl Coefficient for GaussRat {
    const EXACT: bool = true;

    fn from_rational(q: Rational) -> Self {
        GaussRat::real(q)
    }

    fn imag_unit() -> Self {
        GaussRat::i()
    }

    fn conj(&self) -> Self {
        GaussRat { re: self.re, im: -self.im }
    }

    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat { re: self.re / n, im: -self.im / n })
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }
}

pub fn ratio_to_f64(q: &Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Printed forms: `3/2`, `-i`, `5/3i`, `(1/2-3i)`.
impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_str = |q: &Rational| -> String {
            if q.is_one() {
                "i".to_string()
            } else if *q == -Rational::one() {
                "-i".to_string()
            } else {
                format!("{}i", fmt_rational(q))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}", im_str(&self.im)),
            (false, false) => {
                let im = im_str(&self.im.abs());
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "({}{}{})", fmt_rational(&self.re), sign, im)
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::Coefficient(s.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.trim().parse().map_err(|_| bad())?;
            let d: i128 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parses a purely real or purely imaginary literal such as `-3/2`, `i`, `2/5i`.
fn parse_simple(s: &str) -> Result<GaussRat, ParseError> {
    let s = s.trim();
    if let Some(body) = s.strip_suffix('i') {
        let body = body.trim();
        let q = match body {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            _ => parse_rational(body)?,
        };
        Ok(GaussRat::new(Rational::zero(), q))
    } else {
        Ok(GaussRat::real(parse_rational(s)?))
    }
}

impl FromStr for GaussRat {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            // split at the last sign that is not the leading one
            let bytes = inner.as_bytes();
            let split = (1..bytes.len()).rev().find(|&k| bytes[k] == b'+' || bytes[k] == b'-');
            return match split {
                Some(k) => Ok(parse_simple(&inner[..k])? + parse_simple(&inner[k..])?),
                None => parse_simple(inner),
            };
        }
        parse_simple(s)
    }
}

// ---------------------------------------------------------------------------
// Complex floats

impl Coefficient for Complex64 {
    const EXACT: bool = false;

    fn from_rational(q: Rational) -> Self {
        Complex64::new(ratio_to_f64(&q), 0.0)
    }

    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn recip(&self) -> Option<Self> {
        if *self == Complex64::new(0.0, 0.0) {
            None
        } else {
            Some(self.inv())
        }
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }
}

impl FormScalar for Complex64 {
    fn pi_pow(k: i32) -> Self {
        Complex64::new(std::f64::consts::PI.powi(k), 0.0)
    }
}

// ---------------------------------------------------------------------------
// Laurent polynomials in π over Q(i)

/// A finite sum `Σ c_k π^k` with `c_k ∈ Q(i)` and `k ∈ Z`.
///
/// `π` is transcendental, so distinct exponents never cancel and equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PiLaurent {
    terms: BTreeMap<i32, GaussRat>,
}

impl PiLaurent {
    pub fn monomial(c: GaussRat, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        PiLaurent { terms }
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussRat)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// The value when no power of `π` survives.
    pub fn as_constant(&self) -> Option<GaussRat> {
        match self.terms.len() {
            0 => Some(GaussRat::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_constant().filter(|c| c.is_real()).map(|c| c.re)
    }

    fn add_term(&mut self, k: i32, c: GaussRat) {
        let entry = self.terms.entry(k).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }
}

impl Zero for PiLaurent {
    fn zero() -> Self {
        PiLaurent::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PiLaurent {
    fn one() -> Self {
        Self::constant(GaussRat::one())
    }
}

impl Add for PiLaurent {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self += o;
        self
    }
}

impl Sub for PiLaurent {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        self -= o;
        self
    }
}

impl Mul for PiLaurent {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = PiLaurent::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                out.add_term(k1 + k2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl Neg for PiLaurent {
    type Output = Self;
    fn neg(self) -> Self {
        PiLaurent { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl AddAssign for PiLaurent {
    fn add_assign(&mut self, o: Self) {
        for (k, c) in o.terms {
            self.add_term(k, c);
        }
    }
}

impl SubAssign for PiLaurent {
    fn sub_assign(&mut self, o: Self) {
        for (k, c) in o.terms {
            self.add_term(k, -c);
        }
    }
}

impl MulAssign for PiLaurent {
    fn mul_assign(&mut self, o: Self) {
        *self = std::mem::take(self) * o;
    }
}

impl Coefficient for PiLaurent {
    const EXACT: bool = true;

    fn from_rational(q: Rational) -> Self {
        Self::constant(GaussRat::real(q))
    }

    fn imag_unit() -> Self {
        Self::constant(GaussRat::i())
    }

    fn conj(&self) -> Self {
        PiLaurent { terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect() }
    }

    fn recip(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.recip()?, -k))
    }

    fn to_complex(&self) -> Complex64 {
        self.terms
            .iter()
            .map(|(k, c)| c.to_complex() * std::f64::consts::PI.powi(*k))
            .sum()
    }
}

impl FormScalar for PiLaurent {
    fn pi_pow(k: i32) -> Self {
        Self::monomial(GaussRat::one(), k)
    }
}

impl fmt::Display for PiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*pi"),
                _ => format!("{c}*pi^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_display_and_parse() {
        let cases = [
            GaussRat::new(rat(3, 2), rat(0, 1)),
            GaussRat::new(rat(0, 1), rat(-1, 1)),
            GaussRat::new(rat(0, 1), rat(5, 3)),
            GaussRat::new(rat(1, 2), rat(-3, 1)),
            GaussRat::new(rat(-7, 1), rat(1, 1)),
        ];
        for c in cases {
            let s = c.to_string();
            assert_eq!(s.parse::<GaussRat>().unwrap(), c, "{s}");
        }
        assert_eq!(GaussRat::new(rat(1, 2), rat(-3, 1)).to_string(), "(1/2-3i)");
    }

    #[test]
    fn gauss_inverse() {
        let z = GaussRat::new(rat(3, 1), rat(4, 1));
        assert_eq!(z.clone() * z.recip().unwrap(), GaussRat::one());
        assert!(GaussRat::zero().recip().is_none());
    }

    #[test]
    fn i_powers() {
        assert_eq!(GaussRat::i_pow(2), GaussRat::int(-1));
        assert_eq!(GaussRat::i_pow(-1), -GaussRat::i());
        assert_eq!(GaussRat::i_pow(4), GaussRat::one());
    }

    #[test]
    fn pi_laurent_cancels_powers() {
        let a = PiLaurent::monomial(GaussRat::real(rat(1, 2)), -1);
        let b = PiLaurent::monomial(GaussRat::int(4), 1);
        assert_eq!((a * b).as_rational(), Some(rat(2, 1)));
        let s = PiLaurent::pi_pow(2) + PiLaurent::one();
        assert!(s.as_constant().is_none());
        assert!((s.to_complex().re - (std::f64::consts::PI.powi(2) + 1.0)).abs() < 1e-12);
    }
}
