//! Bit vectors over GF(2) and an incremental echelon basis that remembers
//! how each basis vector was formed, so membership queries also solve.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        if b {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.set(i, !self.get(i));
    }

    pub fn xor_assign(&mut self, o: &BitVec) {
        assert_eq!(self.len, o.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, o: &BitVec) -> BitVec {
        let mut v = self.clone();
        v.xor_assign(o);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    fn leading(&self) -> Option<usize> {
        self.ones().next()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "[{s}]")
    }
}

/// Reduced row echelon basis of a subspace of `GF(2)^len`. Each row carries
/// the combination of inserted generators that produced it.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    generators: usize,
    rows: Vec<(usize, BitVec, BitVec)>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon { len, generators: 0, rows: Vec::new() }
    }

    /// Span of the given vectors, tracked as generators `0..k`.
    pub fn spanned_by(len: usize, vectors: &[BitVec]) -> Self {
        let mut e = Echelon { len, generators: vectors.len(), rows: Vec::new() };
        for (i, v) in vectors.iter().enumerate() {
            e.insert_tracked(v.clone(), BitVec::unit(vectors.len(), i));
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_tracked(&self, mut v: BitVec, mut combo: BitVec) -> (BitVec, BitVec) {
        for (pivot, row, c) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        (v, combo)
    }

    fn insert_tracked(&mut self, v: BitVec, combo: BitVec) -> bool {
        let (v, combo) = self.reduce_tracked(v, combo);
        let Some(pivot) = v.leading() else { return false };
        for (_, row, c) in &mut self.rows {
            if row.get(pivot) {
                row.xor_assign(&v);
                c.xor_assign(&combo);
            }
        }
        self.rows.push((pivot, v, combo));
        true
    }

    /// Adds `v` (as an untracked generator); returns whether the rank grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let combo = BitVec::zeros(self.generators);
        self.insert_tracked(v, combo)
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.len, "length mismatch");
        self.reduce_tracked(v.clone(), BitVec::zeros(self.generators)).0.is_zero()
    }

    /// Coefficients `x` with `Σ xᵢ generatorᵢ = v`, when `v` is in the span.
    pub fn solve(&self, v: &BitVec) -> Option<BitVec> {
        let (r, combo) = self.reduce_tracked(v.clone(), BitVec::zeros(self.generators));
        r.is_zero().then_some(combo)
    }
}

/// Basis of the null space of the linear map sending `unitᵢ ↦ columns[i]`.
pub fn kernel(columns: &[BitVec], target_len: usize) -> Vec<BitVec> {
    let n = columns.len();
    let mut e = Echelon { len: target_len, generators: n, rows: Vec::new() };
    let mut out = Vec::new();
    for (i, c) in columns.iter().enumerate() {
        let (r, combo) = e.reduce_tracked(c.clone(), BitVec::unit(n, i));
        if r.is_zero() {
            out.push(combo);
        } else {
            e.insert_tracked(r, combo);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_rank_and_solve() {
        let v = |s: &str| BitVec::from_bools(&s.chars().map(|c| c == '1').collect::<Vec<_>>());
        let gens = [v("1100"), v("0110"), v("1010")];
        let e = Echelon::spanned_by(4, &gens);
        assert_eq!(e.rank(), 2);
        let x = e.solve(&v("1010")).unwrap();
        let mut acc = BitVec::zeros(4);
        for i in x.ones() {
            acc.xor_assign(&gens[i]);
        }
        assert_eq!(acc, v("1010"));
        assert!(e.solve(&v("0001")).is_none());
        let k = kernel(&gens, 4);
        assert_eq!(k, vec![v("111")]);
    }
}
