//! The first two Stiefel–Whitney classes from transition data on a nerve,
//! and the enumeration of spin structures as an `H¹`-torsor.

use serde::Deserialize;

use super::gf2::BitVec;
use super::nerve::{Cochain, Nerve};
use crate::clifford::{ExactMultivector, Parity, Signature};
use crate::error::CechError;
use crate::scalar::GaussRat;

/// `w₁` of a bundle described by the signs `det g_αβ` on pair overlaps.
#[derive(Clone, Debug, PartialEq)]
pub struct W1Class {
    pub cocycle: Cochain,
    /// `s` with `δs = w₁` when the class vanishes (the bundle is orientable).
    pub primitive: Option<Cochain>,
}

impl W1Class {
    pub fn vanishes(&self) -> bool {
        self.primitive.is_some()
    }
}

pub fn w1(nerve: &Nerve, signs: &Cochain) -> Result<W1Class, CechError> {
    if signs.degree() != 1 {
        return Err(CechError::Cochain("w1 needs a 1-cochain of determinant signs".into()));
    }
    if !signs.coboundary(nerve)?.is_trivial() {
        return Err(CechError::Cochain("determinant signs do not form a cocycle".into()));
    }
    Ok(W1Class { cocycle: signs.clone(), primitive: signs.primitive(nerve) })
}

/// Parses `{"signs": [[a, b, -1], …]}`; unlisted pairs carry `+1`.
pub fn signs_from_json(nerve: &Nerve, text: &str) -> Result<Cochain, CechError> {
    #[derive(Deserialize)]
    struct File {
        signs: Vec<(usize, usize, i8)>,
    }
    let f: File = serde_json::from_str(text).map_err(|e| CechError::Cochain(e.to_string()))?;
    Cochain::from_signs(nerve, 1, f.signs.into_iter().map(|(a, b, s)| (vec![a, b], s)))
}

/// Chosen lifts `g̃_αβ ∈ Spin` of the transition functions, one per pair
/// overlap `α < β`; `g̃_βα = g̃_αβ⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinLifts {
    sig: Signature,
    lifts: Vec<ExactMultivector>,
}

impl SpinLifts {
    /// Every lift equal to `1`.
    pub fn trivial(nerve: &Nerve, sig: Signature) -> Self {
        SpinLifts { sig, lifts: vec![ExactMultivector::one(sig); nerve.count(1)] }
    }

    /// Sets `g̃_ab` (and so `g̃_ba`); rejects odd or non-invertible elements.
    pub fn set(&mut self, nerve: &Nerve, a: usize, b: usize, g: ExactMultivector) -> Result<(), CechError> {
        if g.signature() != self.sig {
            return Err(CechError::Cochain(format!("lift on ({a},{b}) lives in {} not {}", g.signature(), self.sig)));
        }
        if !matches!(g.parity(), Parity::Even) {
            return Err(CechError::Cochain(format!("lift on ({a},{b}) is not even")));
        }
        let inv = g.inverse()?;
        let (lo, hi, g) = if a < b { (a, b, g) } else { (b, a, inv) };
        let pos = nerve
            .position(&[lo, hi])
            .ok_or_else(|| CechError::Cochain(format!("({a},{b}) is not an overlap of the nerve")))?;
        self.lifts[pos] = g;
        Ok(())
    }

    /// Parses `{"signature": [p, q], "lifts": [[a, b, "e1e2"], …]}`; unlisted
    /// pairs carry the lift `1`.
    pub fn from_json(nerve: &Nerve, text: &str) -> Result<Self, CechError> {
        #[derive(Deserialize)]
        struct File {
            signature: (usize, usize),
            #[serde(default)]
            lifts: Vec<(usize, usize, String)>,
        }
        let f: File = serde_json::from_str(text).map_err(|e| CechError::Cochain(e.to_string()))?;
        let sig = Signature::new(f.signature.0, f.signature.1)?;
        let mut out = Self::trivial(nerve, sig);
        for (a, b, text) in f.lifts {
            let g = ExactMultivector::parse(sig, &text).map_err(crate::error::CliffordError::from)?;
            out.set(nerve, a, b, g)?;
        }
        Ok(out)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// `g̃_ab` for any ordered pair of overlapping patches.
    pub fn get(&self, nerve: &Nerve, a: usize, b: usize) -> Result<ExactMultivector, CechError> {
        let pos = nerve
            .position(&[a.min(b), a.max(b)])
            .ok_or_else(|| CechError::Cochain(format!("({a},{b}) is not an overlap of the nerve")))?;
        let g = &self.lifts[pos];
        if a < b {
            Ok(g.clone())
        } else {
            Ok(g.inverse()?)
        }
    }

    /// Multiplies each lift by the sign of `kappa` on its overlap.
    pub fn twisted(&self, kappa: &Cochain) -> Self {
        let minus = GaussRat::int(-1);
        let lifts = self
            .lifts
            .iter()
            .enumerate()
            .map(|(i, g)| if kappa.sign(i) < 0 { g.scale(&minus) } else { g.clone() })
            .collect();
        SpinLifts { sig: self.sig, lifts }
    }
}

/// The `Z₂` 2-cocycle `ε` measuring the failure of the lifts to satisfy the
/// cocycle condition, and its class.
#[derive(Clone, Debug, PartialEq)]
pub struct W2Class {
    pub epsilon: Cochain,
    /// `κ` with `δκ = ε` when `w₂` vanishes.
    pub primitive: Option<Cochain>,
}

impl W2Class {
    pub fn vanishes(&self) -> bool {
        self.primitive.is_some()
    }
}

/// `ε_{γβα} = g̃_γα g̃_βγ g̃_αβ` on each triple overlap `α < β < γ`.
pub fn w2(nerve: &Nerve, lifts: &SpinLifts) -> Result<W2Class, CechError> {
    let mut bits = BitVec::zeros(nerve.count(2));
    for (t, s) in nerve.simplices(2).iter().enumerate() {
        let (a, b, c) = (s[0], s[1], s[2]);
        let prod = &(&lifts.get(nerve, c, a)? * &lifts.get(nerve, b, c)?) * &lifts.get(nerve, a, b)?;
        match prod.as_scalar() {
            Some(x) if x == GaussRat::int(1) => {}
            Some(x) if x == GaussRat::int(-1) => bits.set(t, true),
            _ => return Err(CechError::CocycleNotSign(a, b, c, prod.to_string())),
        }
    }
    let epsilon = Cochain::from_bits(nerve, 2, bits)?;
    if !epsilon.coboundary(nerve)?.is_trivial() {
        return Err(CechError::Cochain("ε is not a Čech cocycle".into()));
    }
    Ok(W2Class { primitive: epsilon.primitive(nerve), epsilon })
}

/// Spin structures up to isomorphism: sign corrections `s` with `δs = ε`,
/// one per class modulo coboundaries of `0`-cochains.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinStructures {
    pub w2: W2Class,
    pub h1_basis: Vec<Cochain>,
    pub representatives: Vec<Cochain>,
    pub certificate: Option<OrbitCertificate>,
}

impl SpinStructures {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Brute-force verification that `H¹` acts freely and transitively.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitCertificate {
    pub group_order: usize,
    pub free: bool,
    pub transitive: bool,
    /// Every representative really corrects the lifts to a cocycle.
    pub all_cocycles: bool,
}

impl OrbitCertificate {
    pub fn holds(&self) -> bool {
        self.free && self.transitive && self.all_cocycles
    }
}

/// Largest `dim H¹` for which the group is enumerated element by element.
const MAX_ENUMERATED_H1: usize = 12;

fn group_elements(nerve: &Nerve, basis: &[Cochain]) -> Vec<Cochain> {
    (0u64..1 << basis.len())
        .map(|mask| {
            basis
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(Cochain::trivial(nerve, 1), |acc, (_, h)| acc.mul(h))
        })
        .collect()
}

pub fn spin_structures(nerve: &Nerve, lifts: &SpinLifts) -> Result<SpinStructures, CechError> {
    let class = w2(nerve, lifts)?;
    let h1_basis = nerve.cohomology_basis(1);
    let Some(base) = class.primitive.clone() else {
        return Ok(SpinStructures { w2: class, h1_basis, representatives: Vec::new(), certificate: None });
    };
    if h1_basis.len() > MAX_ENUMERATED_H1 {
        return Err(CechError::Nerve(format!("H¹ of dimension {} is too large to enumerate", h1_basis.len())));
    }
    let group = group_elements(nerve, &h1_basis);
    let representatives: Vec<Cochain> = group.iter().map(|h| base.mul(h)).collect();
    let certificate = certify(nerve, &class.epsilon, &representatives, &group)?;
    Ok(SpinStructures { w2: class, h1_basis, representatives, certificate: Some(certificate) })
}

fn certify(
    nerve: &Nerve,
    epsilon: &Cochain,
    reps: &[Cochain],
    group: &[Cochain],
) -> Result<OrbitCertificate, CechError> {
    let mut all_cocycles = true;
    for x in reps {
        all_cocycles &= x.coboundary(nerve)? == *epsilon;
    }
    // free: h · x ≅ x forces h ≅ 1
    let free = reps.iter().all(|x| {
        group.iter().filter(|h| !h.is_trivial()).all(|h| !x.mul(h).cohomologous(x, nerve))
    });
    // transitive: any two structures differ by a group element
    let transitive = reps
        .iter()
        .all(|x| reps.iter().all(|y| group.iter().any(|h| x.mul(h).cohomologous(y, nerve))));
    Ok(OrbitCertificate { group_order: group.len(), free, transitive, all_cocycles })
}

/// Counts isomorphism classes of spin structures by running over every
/// `1`-cochain; only for nerves with at most 20 overlaps.
pub fn brute_force_count(nerve: &Nerve, lifts: &SpinLifts) -> Result<usize, CechError> {
    let n1 = nerve.count(1);
    if n1 > 20 {
        return Err(CechError::Nerve(format!("{n1} overlaps are too many to enumerate")));
    }
    let epsilon = w2(nerve, lifts)?.epsilon;
    let mut classes: Vec<Cochain> = Vec::new();
    for mask in 0u64..1 << n1 {
        let bits: Vec<bool> = (0..n1).map(|i| mask >> i & 1 == 1).collect();
        let s = Cochain::from_bits(nerve, 1, BitVec::from_bools(&bits))?;
        if s.coboundary(nerve)? == epsilon && !classes.iter().any(|c| c.cohomologous(&s, nerve)) {
            classes.push(s);
        }
    }
    Ok(classes.len())
}

/// Lifts on the torus nerve for the flat `SO(3)` bundle whose holonomies
/// around the two cycles are rotations by `π` about perpendicular axes.
/// The rotations commute but their lifts `e1e2`, `e2e3` anticommute, so `w₂ ≠ 0`.
pub fn torus_anticommuting_lifts(nerve: &Nerve) -> Result<SpinLifts, CechError> {
    let sig = Signature::euclidean(3)?;
    let a = ExactMultivector::parse(sig, "e1e2").map_err(crate::error::CliffordError::from)?;
    let b = ExactMultivector::parse(sig, "e2e3").map_err(crate::error::CliffordError::from)?;
    let mut lifts = SpinLifts::trivial(nerve, sig);
    for s in nerve.simplices(1) {
        let (u, v) = (s[0], s[1]);
        let (ui, uj, vi, vj) = (u / 3, u % 3, v / 3, v % 3);
        // step from u to v on the grid, with wrap-around flags
        let wrap_x = (ui == 2 && vi == 0) || (ui == 0 && vi == 2);
        let wrap_y = (uj == 2 && vj == 0) || (uj == 0 && vj == 2);
        let forward_x = (ui + 1) % 3 == vi;
        let forward_y = (uj + 1) % 3 == vj;
        let mut g = ExactMultivector::one(sig);
        if wrap_x {
            g = if forward_x { &g * &a } else { &g * &a.inverse()? };
        }
        if wrap_y {
            g = if forward_y { &g * &b } else { &g * &b.inverse()? };
        }
        lifts.set(nerve, u, v, g)?;
    }
    Ok(lifts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_is_non_orientable() {
        let n = Nerve::circle();
        let c = Cochain::from_signs(&n, 1, [(vec![0, 2], -1)]).unwrap();
        assert!(!w1(&n, &c).unwrap().vanishes());
        assert!(w1(&n, &Cochain::trivial(&n, 1)).unwrap().vanishes());
    }

    #[test]
    fn coboundary_signs_are_orientable() {
        let n = Nerve::torus();
        let s = Cochain::from_signs(&n, 0, [(vec![4], -1), (vec![7], -1)]).unwrap();
        let c = s.coboundary(&n).unwrap();
        let class = w1(&n, &c).unwrap();
        assert_eq!(class.primitive.unwrap().coboundary(&n).unwrap(), c);
    }

    #[test]
    fn spin_structure_counts() {
        let cases = [(Nerve::circle(), 1, 2), (Nerve::sphere(), 2, 1), (Nerve::torus(), 2, 4)];
        for (n, d, expect) in cases {
            let s = spin_structures(&n, &SpinLifts::trivial(&n, Signature::euclidean(d).unwrap())).unwrap();
            assert_eq!(s.count(), expect);
            assert!(s.certificate.unwrap().holds());
        }
    }

    #[test]
    fn brute_force_agrees_on_small_nerves() {
        for (n, d) in [(Nerve::circle(), 1), (Nerve::sphere(), 2)] {
            let lifts = SpinLifts::trivial(&n, Signature::euclidean(d).unwrap());
            assert_eq!(brute_force_count(&n, &lifts).unwrap(), spin_structures(&n, &lifts).unwrap().count());
        }
    }

    #[test]
    fn anticommuting_holonomy_obstructs_spin() {
        let n = Nerve::torus();
        let lifts = torus_anticommuting_lifts(&n).unwrap();
        let s = spin_structures(&n, &lifts).unwrap();
        assert!(!s.w2.vanishes());
        assert_eq!(s.count(), 0);
    }

    #[test]
    fn lift_json() {
        let n = Nerve::circle();
        let l = SpinLifts::from_json(&n, r#"{"signature": [2, 0], "lifts": [[2, 0, "-1"]]}"#).unwrap();
        assert_eq!(l.get(&n, 0, 2).unwrap().as_scalar(), Some(GaussRat::int(-1)));
        assert!(SpinLifts::from_json(&n, r#"{"signature": [2, 0], "lifts": [[0, 1, "e1"]]}"#).is_err());
    }

    #[test]
    fn non_sign_triple_is_reported() {
        let n = Nerve::sphere();
        let sig = Signature::euclidean(2).unwrap();
        let mut l = SpinLifts::trivial(&n, sig);
        l.set(&n, 0, 1, ExactMultivector::parse(sig, "e1e2").unwrap()).unwrap();
        assert!(matches!(w2(&n, &l), Err(CechError::CocycleNotSign(..))));
    }
}
