use std::fmt;

use super::Signature;
use crate::error::CliffordError;

/// A basis monomial `e_{i1} e_{i2} ⋯ e_{ik}` with `i1 < i2 < ⋯ < ik`,
/// stored as a bitmask over zero-based generator indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Blade(pub u64);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn generator(i: usize) -> Blade {
        Blade(1u64 << i)
    }

    /// Blade spanned by the given zero-based indices. Repeats cancel in the
    /// bitmask, so callers wanting signs should multiply with [`blade_mul`].
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Blade {
        Blade(indices.into_iter().fold(0, |m, i| m ^ (1u64 << i)))
    }

    /// The blade `e_1 ⋯ e_n`.
    pub fn top(n: usize) -> Blade {
        if n >= 64 {
            Blade(u64::MAX)
        } else {
            Blade((1u64 << n) - 1)
        }
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_even(self) -> bool {
        self.grade() % 2 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    /// Zero-based indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        })
    }

    /// Highest generator index plus one, i.e. the smallest dimension the
    /// blade fits in.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Sign picked up by reversing the factor order: `(−1)^{k(k−1)/2}`.
    pub fn reversal_sign(self) -> i64 {
        let k = self.grade() as i64;
        if (k * (k - 1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Number of transpositions needed to sort the concatenated word `a b`.
fn swap_count(a: u64, b: u64) -> u32 {
    let mut count = 0;
    let mut m = b;
    while m != 0 {
        let i = m.trailing_zeros();
        m &= m - 1;
        count += (a >> i >> 1).count_ones();
    }
    count
}

/// Product of two basis blades: `a·b = sign · (a △ b)`.
pub fn blade_mul(a: Blade, b: Blade, sig: Signature) -> Result<(i64, Blade), CliffordError> {
    let n = sig.dim();
    if a.span() > n || b.span() > n {
        return Err(CliffordError::Unsupported(format!(
            "blade indices within {} generators",
            n
        )));
    }
    Ok(blade_mul_unchecked(a, b, sig))
}

pub(crate) fn blade_mul_unchecked(a: Blade, b: Blade, sig: Signature) -> (i64, Blade) {
    let mut sign = if swap_count(a.0, b.0) % 2 == 0 { 1 } else { -1 };
    let mut common = a.0 & b.0;
    // only the q generators beyond index p square to +1
    while common != 0 {
        let i = common.trailing_zeros() as usize;
        common &= common - 1;
        sign *= sig.square(i);
    }
    (sign, Blade(a.0 ^ b.0))
}

/// Prints as `e1e3`, one-based; the scalar blade prints as `1`.
impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        for i in self.indices() {
            write!(f, "e{}", i + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Sorts the word by adjacent swaps, contracting equal neighbours.
    fn bubble_oracle(word: &[usize], sig: Signature) -> (i64, Blade) {
        let mut w = word.to_vec();
        let mut sign = 1;
        loop {
            let mut changed = false;
            let mut k = 0;
            while k + 1 < w.len() {
                if w[k] > w[k + 1] {
                    w.swap(k, k + 1);
                    sign = -sign;
                    changed = true;
                } else if w[k] == w[k + 1] {
                    sign *= sig.square(w[k]);
                    w.drain(k..k + 2);
                    changed = true;
                    continue;
                }
                k += 1;
            }
            if !changed {
                break;
            }
        }
        (sign, Blade::from_indices(w))
    }

    #[test]
    fn examples() {
        let s10 = Signature::new(1, 0).unwrap();
        let s20 = Signature::new(2, 0).unwrap();
        let e1 = Blade::generator(0);
        let e12 = Blade::from_indices([0, 1]);
        assert_eq!(blade_mul(e1, e1, s10).unwrap(), (-1, Blade::SCALAR));
        assert_eq!(blade_mul(e1, Blade::generator(1), s20).unwrap(), (1, e12));
        assert_eq!(blade_mul(e12, e12, s20).unwrap(), (-1, Blade::SCALAR));
        assert_eq!(bubble_oracle(&[0, 1, 0, 1], s20), (-1, Blade::SCALAR));
    }

    #[test]
    fn out_of_range() {
        let s = Signature::new(1, 1).unwrap();
        assert!(blade_mul(Blade::generator(2), Blade::SCALAR, s).is_err());
    }

    #[test]
    fn matches_bubble_sort_exhaustively() {
        for (p, q) in [(2, 2), (3, 1), (0, 4), (4, 0)] {
            let sig = Signature::new(p, q).unwrap();
            for a in 0..16u64 {
                for b in 0..16u64 {
                    let word: Vec<usize> = Blade(a).indices().chain(Blade(b).indices()).collect();
                    assert_eq!(
                        blade_mul(Blade(a), Blade(b), sig).unwrap(),
                        bubble_oracle(&word, sig),
                        "{a} {b} in ({p},{q})"
                    );
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(Blade::from_indices([0, 2]).to_string(), "e1e3");
        assert_eq!(Blade::SCALAR.to_string(), "1");
    }
}
