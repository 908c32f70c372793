//! Text form of multivectors: `3/2*e1e3 - i*e2 + (1/2+i)`.
//!
//! Generators are one-based (`e1` is the first). A term is a coefficient, a
//! blade word, or `coefficient*word`; words need not be sorted (`e2e1` is
//! read as the product, i.e. `-e1e2`).

use std::fmt;

use num_traits::One;

use super::blade::blade_mul_unchecked;
use super::{Blade, Multivector, Signature};
use crate::error::ParseError;
use crate::scalar::{Coefficient, GaussRat};

fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && k > start && !s[start..k].trim().is_empty() => {
                out.push(&s[start..k]);
                start = k;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_word(word: &str, sig: Signature) -> Result<(i64, Blade), ParseError> {
    let bad = || ParseError::Term(word.to_string());
    let mut sign = 1;
    let mut blade = Blade::SCALAR;
    for part in word.split('e').skip(1) {
        let idx: usize = part.trim().parse().map_err(|_| bad())?;
        if idx == 0 || idx > sig.dim() {
            return Err(ParseError::GeneratorOutOfRange { index: idx, dim: sig.dim() });
        }
        let (s, b) = blade_mul_unchecked(blade, Blade::generator(idx - 1), sig);
        sign *= s;
        blade = b;
    }
    if !word.trim_start().starts_with('e') {
        return Err(bad());
    }
    Ok((sign, blade))
}

fn parse_term(term: &str, sig: Signature) -> Result<(Blade, GaussRat), ParseError> {
    let t = term.trim();
    let (neg, body) = match t.as_bytes().first() {
        Some(b'-') => (true, t[1..].trim()),
        Some(b'+') => (false, t[1..].trim()),
        _ => (false, t),
    };
    if body.is_empty() {
        return Err(ParseError::Term(term.to_string()));
    }
    let (coef, word) = match body.split_once('*') {
        Some((c, w)) => (c.trim().parse::<GaussRat>()?, Some(w.trim())),
        None if body.starts_with('e') => (GaussRat::one(), Some(body)),
        None => (body.parse::<GaussRat>()?, None),
    };
    let (sign, blade) = match word {
        Some(w) => parse_word(w, sig)?,
        None => (1, Blade::SCALAR),
    };
    let c = if neg != (sign < 0) { -coef } else { coef };
    Ok((blade, c))
}

impl Multivector<GaussRat> {
    pub fn parse(sig: Signature, text: &str) -> Result<Self, ParseError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut out = Multivector::zero(sig);
        for term in split_terms(text) {
            let (b, c) = parse_term(term, sig)?;
            out.add_term(b, c);
        }
        Ok(out)
    }
}

fn needs_parens(s: &str) -> bool {
    !s.starts_with('(') && s.trim_start_matches('-').contains(['+', '-'])
}

impl<C: Coefficient + fmt::Display> fmt::Display for Multivector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (blade, c)) in self.terms().enumerate() {
            let mut cs = c.to_string();
            if needs_parens(&cs) {
                cs = format!("({cs})");
            }
            let term = if blade == Blade::SCALAR {
                cs
            } else if c.is_one() {
                blade.to_string()
            } else if (-c.clone()).is_one() {
                format!("-{blade}")
            } else {
                format!("{cs}*{blade}")
            };
            match (k, term.strip_prefix('-')) {
                (0, _) => write!(f, "{term}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn parses_reference_string() {
        let s = Signature::new(3, 0).unwrap();
        let m = Multivector::parse(s, "3/2*e1e3 - i*e2").unwrap();
        assert_eq!(m.coeff(Blade::from_indices([0, 2])), GaussRat::real(rat(3, 2)));
        assert_eq!(m.coeff(Blade::generator(1)), -GaussRat::i());
        assert_eq!(m.to_string(), "-i*e2 + 3/2*e1e3");
    }

    #[test]
    fn unsorted_words_multiply() {
        let s = Signature::new(2, 0).unwrap();
        assert_eq!(Multivector::parse(s, "e2e1").unwrap(), Multivector::parse(s, "-e1e2").unwrap());
        assert_eq!(Multivector::parse(s, "e1e1").unwrap().to_string(), "-1");
    }

    #[test]
    fn complex_coefficients_and_zero() {
        let s = Signature::new(1, 1).unwrap();
        let m = Multivector::parse(s, "(1/2-3i)*e1e2 + 2/5i + 0*e1").unwrap();
        assert_eq!(Multivector::parse(s, &m.to_string()).unwrap(), m);
        assert_eq!(Multivector::<GaussRat>::zero(s).to_string(), "0");
        assert_eq!(Multivector::parse(s, "0").unwrap(), Multivector::zero(s));
    }

    #[test]
    fn errors() {
        let s = Signature::new(2, 0).unwrap();
        assert!(matches!(
            Multivector::parse(s, "e3"),
            Err(ParseError::GeneratorOutOfRange { index: 3, dim: 2 })
        ));
        assert!(Multivector::parse(s, "").is_err());
        assert!(Multivector::parse(s, "2*x1").is_err());
        assert!(Multivector::parse(s, "1/0").is_err());
    }
}
