//! Homogeneous curvature models with constant coefficients in a global
//! orthonormal coframe, and integration of top-degree forms over them.

use serde::{Deserialize, Serialize};

use super::form::{FormMatrix, FormPoly};
use crate::error::FormError;
use crate::scalar::{rat, FormScalar, Rational};

/// One curvature entry `R_ij ∋ coeff · e^a ∧ e^b` (zero-based indices).
#[derive(Clone, Debug, PartialEq)]
struct Entry {
    i: usize,
    j: usize,
    a: usize,
    b: usize,
    coeff: Rational,
}

/// Total volume `coeff · π^pi_power`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Volume {
    #[serde(with = "rational_text")]
    pub coeff: Rational,
    pub pi_power: i32,
}

impl Volume {
    pub fn value<C: FormScalar>(&self) -> C {
        C::from_rational(self.coeff) * C::pi_pow(self.pi_power)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureModel {
    name: String,
    /// Fiber dimension (size of the curvature matrix).
    n: usize,
    /// Number of cotangent generators (manifold dimension).
    m: usize,
    entries: Vec<Entry>,
    volume: Volume,
}

impl CurvatureModel {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn fiber_dim(&self) -> usize {
        self.n
    }

    pub fn form_dim(&self) -> usize {
        self.m
    }

    pub fn volume(&self) -> Volume {
        self.volume
    }

    /// Round 2-sphere of radius `r`: `R_12 = r⁻² e¹∧e²`, area `4πr²`.
    pub fn sphere2(r: Rational) -> Result<Self, FormError> {
        Self::round_sphere(2, r)
    }

    /// Round 4-sphere of radius `r`: `R_ab = r⁻² e^a∧e^b`, volume `(8/3)π²r⁴`.
    pub fn sphere4(r: Rational) -> Result<Self, FormError> {
        Self::round_sphere(4, r)
    }

    fn round_sphere(n: usize, r: Rational) -> Result<Self, FormError> {
        if r <= rat(0, 1) {
            return Err(FormError::Model(format!("radius must be positive, got {r}")));
        }
        let k = Rational::from_integer(1) / (r * r);
        let mut entries = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                entries.push(Entry { i: a, j: b, a, b, coeff: k });
            }
        }
        let (coeff, pi_power) = match n {
            2 => (rat(4, 1) * r * r, 1),
            4 => (rat(8, 3) * r * r * r * r, 2),
            _ => unreachable!(),
        };
        Ok(CurvatureModel { name: format!("sphere{n}"), n, m: n, entries, volume: Volume { coeff, pi_power } })
    }

    /// Flat torus of unit area.
    pub fn torus2() -> Self {
        CurvatureModel {
            name: "torus2".into(),
            n: 2,
            m: 2,
            entries: Vec::new(),
            volume: Volume { coeff: rat(1, 1), pi_power: 0 },
        }
    }

    /// Riemannian product: block-diagonal curvature, product volume.
    pub fn product(a: &Self, b: &Self) -> Self {
        let mut entries = a.entries.clone();
        entries.extend(b.entries.iter().map(|e| Entry {
            i: e.i + a.n,
            j: e.j + a.n,
            a: e.a + a.m,
            b: e.b + a.m,
            coeff: e.coeff,
        }));
        CurvatureModel {
            name: format!("{}x{}", a.name, b.name),
            n: a.n + b.n,
            m: a.m + b.m,
            entries,
            volume: Volume {
                coeff: a.volume.coeff * b.volume.coeff,
                pi_power: a.volume.pi_power + b.volume.pi_power,
            },
        }
    }

    /// Built-in models by name: `sphere2`, `sphere4`, `torus2`,
    /// `sphere2xsphere2`, `sphere2xtorus2`, `torus2xtorus2`.
    pub fn builtin(name: &str, r: Rational) -> Result<Self, FormError> {
        if let Some((a, b)) = name.split_once('x') {
            return Ok(Self::product(&Self::builtin(a, r)?, &Self::builtin(b, r)?));
        }
        match name {
            "sphere2" => Self::sphere2(r),
            "sphere4" => Self::sphere4(r),
            "torus2" => Ok(Self::torus2()),
            _ => Err(FormError::Model(format!("unknown model `{name}`"))),
        }
    }

    /// Curvature matrix, antisymmetric by construction.
    pub fn curvature<C: FormScalar>(&self) -> FormMatrix<C> {
        let mut f = FormMatrix::zeros(self.n);
        for e in &self.entries {
            let v = FormPoly::two_form(e.a, e.b, C::from_rational(e.coeff));
            let cur = f.get(e.i, e.j).clone() + v.clone();
            f.set(e.i, e.j, cur);
            let cur = f.get(e.j, e.i).clone() - v;
            f.set(e.j, e.i, cur);
        }
        f
    }

    /// `∫_M φ`: top coefficient times total volume (the integrand is constant).
    pub fn integrate_top<C: FormScalar>(&self, phi: &FormPoly<C>) -> Result<C, FormError> {
        let stray = phi.terms().any(|(m, _)| m >> self.m != 0);
        if stray {
            return Err(FormError::Model(format!("form uses more than {} generators", self.m)));
        }
        Ok(phi.top_coeff(self.m) * self.volume.value())
    }

    pub fn from_json(text: &str) -> Result<Self, FormError> {
        let raw: ModelFile = serde_json::from_str(text).map_err(|e| FormError::Model(e.to_string()))?;
        raw.try_into()
    }
}

/// JSON layout, one-based indices:
/// `{"n": 2, "dim": 2, "entries": [[1, 2, [[[1, 2], "1"]]]], "volume": {"coeff": "4", "pi_power": 1}}`.
#[derive(Deserialize, Serialize)]
struct ModelFile {
    #[serde(default)]
    name: Option<String>,
    n: usize,
    #[serde(default)]
    dim: Option<usize>,
    entries: Vec<(usize, usize, Vec<(Vec<usize>, RationalText)>)>,
    volume: Volume,
}

#[derive(Deserialize, Serialize)]
#[serde(untagged)]
enum RationalText {
    Int(i64),
    Text(String),
}

impl RationalText {
    fn value(&self) -> Result<Rational, FormError> {
        match self {
            RationalText::Int(k) => Ok(Rational::from_integer(*k as i128)),
            RationalText::Text(s) => rational_text::parse(s).map_err(FormError::Model),
        }
    }
}

impl TryFrom<ModelFile> for CurvatureModel {
    type Error = FormError;

    fn try_from(raw: ModelFile) -> Result<Self, FormError> {
        let m = raw.dim.unwrap_or(raw.n);
        let bad = |s: String| Err(FormError::Model(s));
        if raw.n == 0 || m == 0 || m > 32 {
            return bad(format!("need 1 ≤ n and 1 ≤ dim ≤ 32, got n={} dim={m}", raw.n));
        }
        let mut entries = Vec::new();
        for (i, j, terms) in raw.entries {
            if i == 0 || j == 0 || i > raw.n || j > raw.n || i == j {
                return bad(format!("entry ({i},{j}) outside the strict upper or lower triangle"));
            }
            for (mono, c) in terms {
                if mono.len() != 2 || mono.iter().any(|&a| a == 0 || a > m) || mono[0] == mono[1] {
                    return bad(format!("monomial {mono:?} is not a 2-form on {m} generators"));
                }
                let (mut a, mut b, mut coeff) = (mono[0] - 1, mono[1] - 1, c.value()?);
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                    coeff = -coeff;
                }
                // entries are filled antisymmetrically from the (i,j) given
                let (i, j, coeff) = if i < j { (i - 1, j - 1, coeff) } else { (j - 1, i - 1, -coeff) };
                entries.push(Entry { i, j, a, b, coeff });
            }
        }
        Ok(CurvatureModel {
            name: raw.name.unwrap_or_else(|| "custom".into()),
            n: raw.n,
            m,
            entries,
            volume: raw.volume,
        })
    }
}

mod rational_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::scalar::Rational;

    pub fn parse(s: &str) -> Result<Rational, String> {
        let s = s.trim();
        let bad = || format!("invalid rational `{s}`");
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i128 = n.trim().parse().map_err(|_| bad())?;
                let d: i128 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(n, d))
            }
            None => match s.split_once('.') {
                // terminating decimals such as "0.25" are exact rationals
                Some((int, frac)) if frac.len() <= 30 && frac.chars().all(|c| c.is_ascii_digit()) => {
                    let neg = int.starts_with('-');
                    let whole: i128 = match int.trim_start_matches(['-', '+']) {
                        "" => 0,
                        w => w.parse().map_err(|_| bad())?,
                    };
                    let num: i128 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
                    let q = Rational::from_integer(whole) + Rational::new(num, 10i128.pow(frac.len() as u32));
                    Ok(if neg { -q } else { q })
                }
                Some(_) => Err(bad()),
                None => s.parse::<i128>().map(Rational::from_integer).map_err(|_| bad()),
            },
        }
    }

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(k) => Ok(Rational::from_integer(k as i128)),
            Raw::Text(t) => parse(&t).map_err(serde::de::Error::custom),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, FormError> {
    rational_text::parse(s).map_err(FormError::Model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern_weil::genus::{genus_eval, Genus};
    use crate::scalar::PiLaurent;

    fn euler(model: &CurvatureModel) -> PiLaurent {
        let e = genus_eval(Genus::Euler, &model.curvature::<PiLaurent>()).unwrap();
        model.integrate_top(&e).unwrap()
    }

    #[test]
    fn gauss_bonnet() {
        for r in [rat(1, 2), rat(1, 1), rat(3, 1)] {
            assert_eq!(euler(&CurvatureModel::sphere2(r).unwrap()).as_rational(), Some(rat(2, 1)));
            assert_eq!(euler(&CurvatureModel::sphere4(r).unwrap()).as_rational(), Some(rat(2, 1)));
        }
        assert_eq!(euler(&CurvatureModel::torus2()).as_rational(), Some(rat(0, 1)));
        let s = CurvatureModel::sphere2(rat(1, 1)).unwrap();
        assert_eq!(euler(&CurvatureModel::product(&s, &s)).as_rational(), Some(rat(4, 1)));
    }

    #[test]
    fn euler_density_of_unit_sphere() {
        let s = CurvatureModel::sphere2(rat(1, 1)).unwrap();
        let e = genus_eval(Genus::Euler, &s.curvature::<PiLaurent>()).unwrap();
        assert_eq!(e.top_coeff(2), PiLaurent::monomial(crate::scalar::GaussRat::real(rat(1, 2)), -1));
    }

    #[test]
    fn json_model_matches_builtin() {
        let text = r#"{"n": 2, "entries": [[1, 2, [[[1, 2], "1/4"]]]], "volume": {"coeff": "16", "pi_power": 1}}"#;
        let m = CurvatureModel::from_json(text).unwrap();
        assert_eq!(m.curvature::<PiLaurent>(), CurvatureModel::sphere2(rat(2, 1)).unwrap().curvature());
        assert_eq!(euler(&m).as_rational(), Some(rat(2, 1)));
        assert!(CurvatureModel::from_json(r#"{"n": 2, "entries": [[1, 1, []]], "volume": {"coeff": 1, "pi_power": 0}}"#).is_err());
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("1.0").unwrap(), rat(1, 1));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn builtin_names() {
        assert_eq!(CurvatureModel::builtin("sphere2xsphere2", rat(1, 1)).unwrap().form_dim(), 4);
        assert!(CurvatureModel::builtin("klein", rat(1, 1)).is_err());
    }
}
