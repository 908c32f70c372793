//! Nerves of finite good covers as abstract simplicial complexes, and
//! `Z₂`-valued Čech cochains on them.

use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::gf2::{kernel, BitVec, Echelon};
use crate::error::CechError;

/// Patches are `0..patches`; every patch is a vertex. Higher simplices are
/// sorted tuples of patches with nonempty common intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nerve {
    patches: usize,
    /// `simplices[k]` lists the `k`-simplices in lexicographic order.
    simplices: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

#[derive(Serialize, Deserialize)]
struct NerveFile {
    patches: usize,
    simplices: Vec<Vec<usize>>,
}

impl Nerve {
    /// Validates that the listed simplices form a downward-closed complex.
    pub fn new(patches: usize, simplices: impl IntoIterator<Item = Vec<usize>>) -> Result<Self, CechError> {
        let mut set: BTreeSet<Vec<usize>> = (0..patches).map(|a| vec![a]).collect();
        for mut s in simplices {
            let len = s.len();
            s.sort_unstable();
            s.dedup();
            if s.len() != len || s.is_empty() {
                return Err(CechError::Nerve(format!("simplex {s:?} has repeated patches or is empty")));
            }
            if let Some(&bad) = s.iter().find(|&&a| a >= patches) {
                return Err(CechError::Nerve(format!("patch {bad} out of range 0..{patches}")));
            }
            set.insert(s);
        }
        for s in &set {
            for face in faces(s) {
                if !face.is_empty() && !set.contains(&face) {
                    return Err(CechError::Nerve(format!("{s:?} present but its face {face:?} is missing")));
                }
            }
        }
        Ok(Self::from_closed(patches, set))
    }

    /// Downward closure of the given simplices.
    pub fn closure(patches: usize, simplices: impl IntoIterator<Item = Vec<usize>>) -> Result<Self, CechError> {
        let mut set = BTreeSet::new();
        let mut stack: Vec<Vec<usize>> = simplices.into_iter().collect();
        while let Some(mut s) = stack.pop() {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() || !set.insert(s.clone()) {
                continue;
            }
            if s.len() > 1 {
                stack.extend(faces(&s));
            }
        }
        Self::new(patches, set)
    }

    fn from_closed(patches: usize, set: BTreeSet<Vec<usize>>) -> Self {
        let top = set.iter().map(Vec::len).max().unwrap_or(1);
        let mut simplices = vec![Vec::new(); top];
        for s in set {
            simplices[s.len() - 1].push(s);
        }
        let index = simplices
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Nerve { patches, simplices, index }
    }

    pub fn from_json(text: &str) -> Result<Self, CechError> {
        let raw: NerveFile = serde_json::from_str(text).map_err(|e| CechError::Nerve(e.to_string()))?;
        Self::new(raw.patches, raw.simplices)
    }

    pub fn to_json(&self) -> String {
        let simplices = self.simplices.iter().skip(1).flatten().cloned().collect();
        serde_json::to_string(&NerveFile { patches: self.patches, simplices }).expect("serializable")
    }

    pub fn patches(&self) -> usize {
        self.patches
    }

    /// Highest simplex dimension present.
    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn simplices(&self, k: usize) -> &[Vec<usize>] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn position(&self, simplex: &[usize]) -> Option<usize> {
        self.index.get(simplex.len().checked_sub(1)?)?.get(simplex).copied()
    }

    /// Three arcs covering the circle; pairwise overlaps, no triple overlap.
    pub fn circle() -> Self {
        Self::new(3, [vec![0, 1], vec![1, 2], vec![0, 2]]).expect("valid")
    }

    /// Open stars of the vertices of a hollow tetrahedron: a good cover of S².
    pub fn sphere() -> Self {
        Self::closure(4, [vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).expect("valid")
    }

    /// Open stars of the vertices of the 9-vertex triangulated torus on a
    /// 3×3 grid; patch `(i, j)` is `3i + j`.
    pub fn torus() -> Self {
        Self::closure(9, torus_triangles()).expect("valid")
    }

    pub fn builtin(name: &str) -> Result<Self, CechError> {
        match name {
            "circle" => Ok(Self::circle()),
            "sphere" | "s2" => Ok(Self::sphere()),
            "torus" | "t2" => Ok(Self::torus()),
            _ => Err(CechError::Nerve(format!("unknown built-in nerve `{name}`"))),
        }
    }

    /// Random downward-closed complex on `patches` vertices, built from
    /// random simplices of dimension ≤ 3.
    pub fn random<R: Rng>(patches: usize, rng: &mut R) -> Self {
        let gens: Vec<Vec<usize>> = (0..rng.gen_range(1..=2 * patches))
            .map(|_| {
                let k = rng.gen_range(2..=4.min(patches.max(2)));
                let mut s: Vec<usize> = (0..k).map(|_| rng.gen_range(0..patches)).collect();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        Self::closure(patches, gens).expect("closure is valid")
    }

    /// Matrix of `δ: Cᵏ → Cᵏ⁺¹` as the images of the basis cochains.
    pub fn coboundary_columns(&self, k: usize) -> Vec<BitVec> {
        let target = self.count(k + 1);
        let mut cols = vec![BitVec::zeros(target); self.count(k)];
        for (t, s) in self.simplices(k + 1).iter().enumerate() {
            for face in faces(s) {
                cols[self.position(&face).expect("closed")].flip(t);
            }
        }
        cols
    }

    /// `dim Hᵏ(N; Z₂) = dim ker δₖ − rank δₖ₋₁`.
    pub fn cohomology_dim(&self, k: usize) -> usize {
        let ker = kernel(&self.coboundary_columns(k), self.count(k + 1)).len();
        let im = if k == 0 { 0 } else { Echelon::spanned_by(self.count(k), &self.coboundary_columns(k - 1)).rank() };
        ker - im
    }

    /// Cocycles representing a basis of `Hᵏ`.
    pub fn cohomology_basis(&self, k: usize) -> Vec<Cochain> {
        let mut span = if k == 0 {
            Echelon::new(self.count(0))
        } else {
            Echelon::spanned_by(self.count(k), &self.coboundary_columns(k - 1))
        };
        kernel(&self.coboundary_columns(k), self.count(k + 1))
            .into_iter()
            .filter(|z| span.insert(z.clone()))
            .map(|bits| Cochain { degree: k, bits })
            .collect()
    }
}

fn torus_triangles() -> Vec<Vec<usize>> {
    let v = |i: usize, j: usize| 3 * (i % 3) + j % 3;
    (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .flat_map(|(i, j)| [vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)], vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]])
        .collect()
}

/// Codimension-one faces, in the order of the omitted vertex.
pub(crate) fn faces(s: &[usize]) -> Vec<Vec<usize>> {
    (0..s.len()).map(|i| [&s[..i], &s[i + 1..]].concat()).collect()
}

/// A `Z₂`-valued Čech cochain, stored additively: bit set ⇔ value `−1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    bits: BitVec,
}

impl Cochain {
    /// The constant `+1` cochain.
    pub fn trivial(nerve: &Nerve, degree: usize) -> Self {
        Cochain { degree, bits: BitVec::zeros(nerve.count(degree)) }
    }

    pub fn from_bits(nerve: &Nerve, degree: usize, bits: BitVec) -> Result<Self, CechError> {
        if bits.len() != nerve.count(degree) {
            return Err(CechError::Cochain(format!(
                "{}-cochain needs {} values, got {}",
                degree,
                nerve.count(degree),
                bits.len()
            )));
        }
        Ok(Cochain { degree, bits })
    }

    /// From `(simplex, sign)` pairs; unlisted simplices get `+1`.
    pub fn from_signs(
        nerve: &Nerve,
        degree: usize,
        signs: impl IntoIterator<Item = (Vec<usize>, i8)>,
    ) -> Result<Self, CechError> {
        let mut c = Self::trivial(nerve, degree);
        for (mut s, sign) in signs {
            s.sort_unstable();
            if s.len() != degree + 1 {
                return Err(CechError::Cochain(format!("{s:?} is not a {degree}-simplex")));
            }
            let pos = nerve.position(&s).ok_or_else(|| CechError::Cochain(format!("{s:?} is not in the nerve")))?;
            match sign {
                1 => c.bits.set(pos, false),
                -1 => c.bits.set(pos, true),
                _ => return Err(CechError::Cochain(format!("sign must be ±1, got {sign}"))),
            }
        }
        Ok(c)
    }

    pub fn random<R: Rng>(nerve: &Nerve, degree: usize, rng: &mut R) -> Self {
        let bits: Vec<bool> = (0..nerve.count(degree)).map(|_| rng.gen()).collect();
        Cochain { degree, bits: BitVec::from_bools(&bits) }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    /// Multiplicative value `±1` on the simplex at position `i`.
    pub fn sign(&self, i: usize) -> i8 {
        if self.bits.get(i) {
            -1
        } else {
            1
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.bits.len()).map(|i| self.sign(i)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.bits.is_zero()
    }

    /// Pointwise product.
    pub fn mul(&self, o: &Cochain) -> Cochain {
        assert_eq!(self.degree, o.degree, "degree mismatch");
        Cochain { degree: self.degree, bits: self.bits.xor(&o.bits) }
    }

    /// `(δσ)(α₀…α_{k+1}) = ∏ᵢ σ(α₀…α̂ᵢ…α_{k+1})^{(−1)^i}`; in `Z₂` the
    /// exponents do not matter.
    pub fn coboundary(&self, nerve: &Nerve) -> Result<Cochain, CechError> {
        if self.bits.len() != nerve.count(self.degree) {
            return Err(CechError::Cochain("cochain does not match the nerve".into()));
        }
        let k = self.degree;
        let mut out = BitVec::zeros(nerve.count(k + 1));
        for (t, s) in nerve.simplices(k + 1).iter().enumerate() {
            let parity = faces(s).iter().filter(|f| self.bits.get(nerve.position(f).expect("closed"))).count();
            out.set(t, parity % 2 == 1);
        }
        Ok(Cochain { degree: k + 1, bits: out })
    }

    /// Some `s` with `δs = self`, when one exists.
    pub fn primitive(&self, nerve: &Nerve) -> Option<Cochain> {
        if self.degree == 0 {
            return self.is_trivial().then(|| Cochain { degree: 0, bits: BitVec::zeros(0) });
        }
        let cols = nerve.coboundary_columns(self.degree - 1);
        let bits = Echelon::spanned_by(nerve.count(self.degree), &cols).solve(&self.bits)?;
        Some(Cochain { degree: self.degree - 1, bits })
    }

    /// Whether `self · other` is a coboundary.
    pub fn cohomologous(&self, other: &Cochain, nerve: &Nerve) -> bool {
        self.mul(other).primitive(nerve).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_sizes() {
        let t = Nerve::torus();
        assert_eq!((t.count(0), t.count(1), t.count(2), t.count(3)), (9, 27, 18, 0));
        let s = Nerve::sphere();
        assert_eq!((s.count(1), s.count(2), s.count(3)), (6, 4, 0));
    }

    #[test]
    fn cohomology_of_builtins() {
        let dims = |n: &Nerve| (0..3).map(|k| n.cohomology_dim(k)).collect::<Vec<_>>();
        assert_eq!(dims(&Nerve::circle()), vec![1, 1, 0]);
        assert_eq!(dims(&Nerve::sphere()), vec![1, 0, 1]);
        assert_eq!(dims(&Nerve::torus()), vec![1, 2, 1]);
    }

    #[test]
    fn rejects_open_complex() {
        assert!(Nerve::new(3, [vec![0, 1, 2]]).is_err());
        assert!(Nerve::new(2, [vec![0, 2]]).is_err());
        assert!(Nerve::new(2, [vec![0, 0]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = Nerve::torus();
        assert_eq!(Nerve::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn circle_coboundary_is_empty() {
        let n = Nerve::circle();
        let s = Cochain::from_signs(&n, 1, [(vec![0, 1], -1)]).unwrap();
        let d = s.coboundary(&n).unwrap();
        assert_eq!(d.bits().len(), 0);
    }
}
