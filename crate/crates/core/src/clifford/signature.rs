use serde::{Deserialize, Serialize};

use crate::error::CliffordError;

/// Signature `(p, q)` of the standard algebra `Cl_{p,q}`.
///
/// Sign convention: `v·v = −g(v,v)`. The first `p` generators have
/// `g(e_i,e_i) = +1` and therefore square to `−1`; the last `q` have
/// `g(e_i,e_i) = −1` and square to `+1`. Under this convention
/// `Cl_{1,0} ≅ C` and `Cl_{0,1} ≅ R ⊕ R`. Many texts use the opposite sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub const MAX_DIM: usize = 64;

    pub fn new(p: usize, q: usize) -> Result<Self, CliffordError> {
        if p + q > Self::MAX_DIM {
            return Err(CliffordError::TooManyGenerators { p, q });
        }
        Ok(Signature { p, q })
    }

    /// `Cl_{n,0}`, the algebra of Euclidean `R^n` with generators squaring to −1.
    pub fn euclidean(n: usize) -> Result<Self, CliffordError> {
        Self::new(n, 0)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    /// `g(e_i, e_i)` for the zero-based generator index `i`.
    pub fn metric(&self, i: usize) -> i64 {
        if i < self.p {
            1
        } else {
            -1
        }
    }

    /// `e_i²`, which is `−g(e_i, e_i)`.
    pub fn square(&self, i: usize) -> i64 {
        -self.metric(i)
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}
