//! Isomorphism types of real and complex Clifford algebras as matrix algebras
//! over `R`, `C` or `H`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CliffordError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Base {
    R,
    C,
    H,
}

impl Base {
    pub fn real_dim(self) -> u128 {
        match self {
            Base::R => 1,
            Base::C => 2,
            Base::H => 4,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Base::R => "R",
            Base::C => "C",
            Base::H => "H",
        };
        write!(f, "{s}")
    }
}

/// `M_size(base)`, or `M_size(base) ⊕ M_size(base)` when `doubled`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AlgebraType {
    pub base: Base,
    pub size: u64,
    pub doubled: bool,
}

impl AlgebraType {
    pub fn new(base: Base, size: u64, doubled: bool) -> Self {
        AlgebraType { base, size, doubled }
    }

    pub fn real_dim(&self) -> u128 {
        let s = self.size as u128;
        self.base.real_dim() * s * s * if self.doubled { 2 } else { 1 }
    }

    /// Type of `A ⊗_R C`.
    pub fn complexify(&self) -> AlgebraType {
        match self.base {
            Base::R => AlgebraType::new(Base::C, self.size, self.doubled),
            Base::H => AlgebraType::new(Base::C, 2 * self.size, self.doubled),
            Base::C => {
                assert!(!self.doubled, "C ⊗ (C ⊕ C) is not a Clifford type");
                AlgebraType::new(Base::C, self.size, true)
            }
        }
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = if self.size == 1 {
            self.base.to_string()
        } else {
            format!("M_{}({})", self.size, self.base)
        };
        if self.doubled {
            write!(f, "{one} ⊕ {one}")
        } else {
            write!(f, "{one}")
        }
    }
}

/// Tensor product of `M_size(R)`, `c` copies of `C`, `h` copies of `H` and
/// `copies` summands, reduced to normal form.
#[derive(Default)]
struct Factors {
    size: u64,
    c: u32,
    h: u32,
    copies: u32,
}

impl Factors {
    fn simplify(mut self) -> AlgebraType {
        // H ⊗ H = M_4(R)
        while self.h >= 2 {
            self.h -= 2;
            self.size *= 4;
        }
        // C ⊗ H = M_2(C)
        while self.c >= 1 && self.h >= 1 {
            self.h -= 1;
            self.size *= 2;
        }
        // C ⊗ C = C ⊕ C
        while self.c >= 2 {
            self.c -= 1;
            self.copies *= 2;
        }
        let base = if self.c >= 1 {
            Base::C
        } else if self.h >= 1 {
            Base::H
        } else {
            Base::R
        };
        assert!(self.copies <= 2, "a real Clifford algebra has at most two simple summands");
        AlgebraType::new(base, self.size, self.copies == 2)
    }
}

/// Isomorphism type of `Cl_{p,q}` (generators: `p` squaring to −1, `q` to +1).
///
/// Peels `Cl_{p+1,q+1} ≅ Cl_{p,q} ⊗ M_2(R)`, then alternates
/// `Cl_{n,0} ≅ Cl_{0,n−2} ⊗ H` and `Cl_{0,n} ≅ Cl_{n−2,0} ⊗ M_2(R)` down to
/// one of `R, C, H, R ⊕ R, M_2(R)`.
pub fn classify_real(p: usize, q: usize) -> AlgebraType {
    let mut fs = Factors { size: 1, copies: 1, ..Default::default() };
    let k = p.min(q);
    fs.size <<= k;
    let (mut p, mut q) = (p - k, q - k);
    loop {
        match (p, q) {
            (0, 0) => break,
            (1, 0) => {
                fs.c += 1;
                break;
            }
            (2, 0) => {
                fs.h += 1;
                break;
            }
            (0, 1) => {
                fs.copies *= 2;
                break;
            }
            (0, 2) => {
                fs.size *= 2;
                break;
            }
            (n, 0) => {
                fs.h += 1;
                (p, q) = (0, n - 2);
            }
            (0, n) => {
                fs.size *= 2;
                (p, q) = (n - 2, 0);
            }
            _ => unreachable!("(1,1) pairs were peeled"),
        }
    }
    fs.simplify()
}

/// Type of `Cl_n ⊗ C`: `M_{2^k}(C)` for `n = 2k`, doubled for `n = 2k+1`.
pub fn classify_complex(n: usize) -> AlgebraType {
    AlgebraType::new(Base::C, 1u64 << (n / 2), n % 2 == 1)
}

/// Type of the even subalgebra `Cl⁰_{p,q}`, using `Cl⁰_{p+1,q} ≅ Cl_{p,q}`
/// and, when there is no generator squaring to −1, `Cl⁰_{0,q+1} ≅ Cl_{q,0}`.
pub fn even_subalgebra_type(p: usize, q: usize) -> Result<AlgebraType, CliffordError> {
    match (p, q) {
        (0, 0) => Err(CliffordError::ZeroDimensional),
        (0, q) => Ok(classify_real(q - 1, 0)),
        (p, q) => Ok(classify_real(p - 1, q)),
    }
}

/// Even part of `Cl_n ⊗ C` and how it sits in the whole algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComplexEvenPart {
    pub even: AlgebraType,
    pub ambient: AlgebraType,
    /// For odd `n` the even part embeds diagonally in `M ⊕ M`.
    pub diagonal: bool,
}

pub fn even_subalgebra_complex(n: usize) -> Result<ComplexEvenPart, CliffordError> {
    if n == 0 {
        return Err(CliffordError::ZeroDimensional);
    }
    Ok(ComplexEvenPart {
        even: classify_complex(n - 1),
        ambient: classify_complex(n),
        diagonal: n % 2 == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Base::*;

    fn t(base: Base, size: u64, doubled: bool) -> AlgebraType {
        AlgebraType::new(base, size, doubled)
    }

    #[test]
    fn small_cases() {
        assert_eq!(classify_real(3, 0), t(H, 1, true));
        assert_eq!(classify_real(0, 2), t(R, 2, false));
        assert_eq!(classify_real(1, 3), t(R, 4, false));
        assert_eq!(classify_real(3, 1), t(H, 2, false));
        assert_eq!(classify_real(0, 0), t(R, 1, false));
    }

    #[test]
    fn complex_cases() {
        assert_eq!(classify_complex(1), t(C, 1, true));
        assert_eq!(classify_complex(2), t(C, 2, false));
        assert_eq!(classify_complex(5), t(C, 4, true));
    }

    #[test]
    fn complexification_agrees() {
        for p in 0..=8 {
            for q in 0..=8 {
                assert_eq!(classify_real(p, q).complexify(), classify_complex(p + q), "({p},{q})");
            }
        }
    }

    #[test]
    fn even_parts() {
        assert_eq!(even_subalgebra_type(2, 0).unwrap(), t(C, 1, false));
        assert_eq!(even_subalgebra_type(1, 0).unwrap(), t(R, 1, false));
        assert_eq!(even_subalgebra_type(0, 1).unwrap(), t(R, 1, false));
        // Cl⁰_{0,2} is spanned by 1 and e1e2 with (e1e2)² = −1
        assert_eq!(even_subalgebra_type(0, 2).unwrap(), t(C, 1, false));
        assert!(even_subalgebra_type(0, 0).is_err());
        let e = even_subalgebra_complex(3).unwrap();
        assert_eq!(e.even, t(C, 2, false));
        assert!(e.ambient.doubled && e.diagonal);
        for n in 1..=10 {
            for p in 0..=n {
                let ev = even_subalgebra_type(p, n - p).unwrap();
                assert_eq!(2 * ev.real_dim(), classify_real(p, n - p).real_dim());
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(t(H, 2, false).to_string(), "M_2(H)");
        assert_eq!(t(H, 1, true).to_string(), "H ⊕ H");
        assert_eq!(serde_json::to_string(&t(R, 16, false)).unwrap(), r#"{"base":"R","size":16,"doubled":false}"#);
    }
}
