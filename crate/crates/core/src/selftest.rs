//! The acceptance suite: eleven end-to-end criteria with pinned tolerances
//! and runtime budgets, runnable from tests and from the command line.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cech::{spin_structures, Cochain, Nerve, SpinLifts};
use crate::chern_weil::oracle::{ahat_taylor, l_taylor};
use crate::chern_weil::sampling::random_antisymmetric;
use crate::chern_weil::{genus_eval, genus_expand, p1_trace_form, CurvatureModel, FormMatrix, Genus};
use crate::classification::{classify_complex, classify_real, AlgebraType, Base};
use crate::clifford::{Blade, ExactMultivector, Multivector, Signature};
use crate::index_lab::{
    delta_limit_error, dlambda_index, dlambda_model, flat_dirac_square, hermite_expansion, line_heat_kernel,
    linspace, mckean_singer_check, mehler_kernel, semigroup_residual, sphere2_hodge, symbol_check, torus2_hodge,
    torus_dirac, Quadrature, ROUNDING_TOL,
};
use crate::linalg::{det, identity, mat_mul, Square};
use crate::scalar::{rat, GaussRat, PiLaurent};
use crate::spin::{
    adjoint_matrix, berezin_supertrace_exp, random_float_unit, random_rational_unit, reflection_formula,
    twisted_adjoint, SpinorSpace,
};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_c11f;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_s: f64,
    pub budget_s: f64,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2} {}: {} ({:.3}s of {}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed_s,
            self.budget_s
        )
    }
}

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Duration,
    run: fn(&mut ChaCha8Rng) -> (bool, String),
}

const CRITERIA: [Criterion; 11] = [
    Criterion { id: 1, name: "classification golden table", budget: Duration::from_secs(1), run: golden_table },
    Criterion { id: 2, name: "mod-8 periodicity", budget: Duration::from_secs(1), run: periodicity },
    Criterion { id: 3, name: "Clifford relation property suite", budget: Duration::from_secs(10), run: relations },
    Criterion { id: 4, name: "spinor representation", budget: Duration::from_secs(30), run: spinors },
    Criterion { id: 5, name: "twisted adjoint", budget: Duration::from_secs(10), run: twisted },
    Criterion { id: 6, name: "Berezin/Pfaffian identity", budget: Duration::from_secs(60), run: berezin },
    Criterion { id: 7, name: "genus expansions", budget: Duration::from_secs(5), run: genera },
    Criterion { id: 8, name: "Chern-Gauss-Bonnet", budget: Duration::from_secs(1), run: gauss_bonnet },
    Criterion { id: 9, name: "Cech suite", budget: Duration::from_secs(10), run: cech },
    Criterion { id: 10, name: "index lab", budget: Duration::from_secs(60), run: index_lab },
    Criterion { id: 11, name: "substitute property suites", budget: Duration::from_secs(60), run: substitutes },
];

pub fn criterion_count() -> usize {
    CRITERIA.len()
}

/// Runs one criterion; each gets its own generator derived from `seed`.
pub fn run_one(id: u8, seed: u64) -> Option<CriterionResult> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(id as u64));
    let start = Instant::now();
    let (ok, detail) = (c.run)(&mut rng);
    let elapsed = start.elapsed();
    let within = elapsed <= c.budget;
    let detail = if within { detail } else { format!("{detail}; over the runtime budget") };
    Some(CriterionResult {
        id: c.id,
        name: c.name,
        passed: ok && within,
        detail,
        elapsed_s: elapsed.as_secs_f64(),
        budget_s: c.budget.as_secs_f64(),
    })
}

pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    CRITERIA.iter().filter_map(|c| run_one(c.id, seed)).collect()
}

fn golden_table(_: &mut ChaCha8Rng) -> (bool, String) {
    use Base::{C, H, R};
    let t = AlgebraType::new;
    let positive = [
        t(C, 1, false),
        t(H, 1, false),
        t(H, 1, true),
        t(H, 2, false),
        t(C, 4, false),
        t(R, 8, false),
        t(R, 8, true),
        t(R, 16, false),
    ];
    let negative = [
        t(R, 1, true),
        t(R, 2, false),
        t(C, 2, false),
        t(H, 2, false),
        t(H, 2, true),
        t(H, 4, false),
        t(C, 8, false),
        t(R, 16, false),
    ];
    let mut mismatches = Vec::new();
    for n in 1..=8 {
        if classify_real(n, 0) != positive[n - 1] {
            mismatches.push(format!("Cl({n},0) = {}", classify_real(n, 0)));
        }
        if classify_real(0, n) != negative[n - 1] {
            mismatches.push(format!("Cl(0,{n}) = {}", classify_real(0, n)));
        }
    }
    let ok = mismatches.is_empty();
    (ok, if ok { "16/16 entries match".into() } else { mismatches.join(", ") })
}

fn periodicity(_: &mut ChaCha8Rng) -> (bool, String) {
    let mut bad = Vec::new();
    for n in 0..=16 {
        for (a, b) in [((n + 8, 0), (n, 0)), ((0, n + 8), (0, n))] {
            let (x, y) = (classify_real(a.0, a.1), classify_real(b.0, b.1));
            if x != AlgebraType::new(y.base, 16 * y.size, y.doubled) {
                bad.push(format!("Cl{a:?} = {x} vs Cl{b:?} = {y}"));
            }
        }
        let (x, y) = (classify_complex(n + 2), classify_complex(n));
        if x != AlgebraType::new(y.base, 2 * y.size, y.doubled) {
            bad.push(format!("Cl_{} ⊗ C = {x}", n + 2));
        }
    }
    let ok = bad.is_empty();
    (ok, if ok { "n ≤ 16, real period 8 (×16) and complex period 2 (×2)".into() } else { bad.join(", ") })
}

fn random_multivector(sig: Signature, rng: &mut ChaCha8Rng) -> ExactMultivector {
    let blades = 1u64 << sig.dim();
    Multivector::from_terms(
        sig,
        (0..rng.gen_range(1..=8)).map(|_| {
            let c = GaussRat::new(rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)), rat(rng.gen_range(-2..=2), 1));
            (Blade(rng.gen_range(0..blades)), c)
        }),
    )
}

fn relations(rng: &mut ChaCha8Rng) -> (bool, String) {
    let mut failures = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=16);
        let p = rng.gen_range(0..=n);
        let sig = Signature::new(p, n - p).expect("n ≤ 16");
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (ei, ej): (ExactMultivector, ExactMultivector) = (Multivector::generator(sig, i), Multivector::generator(sig, j));
        let eta = if i != j { 0 } else if i < p { 1 } else { -1 };
        if &(&ei * &ej) + &(&ej * &ei) != Multivector::scalar(sig, GaussRat::int(-2 * eta)) {
            failures += 1;
        }
    }
    let mut assoc_failures = 0;
    for _ in 0..1_000 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0..=n);
        let sig = Signature::new(p, n - p).expect("n ≤ 6");
        let (a, b, c) = (random_multivector(sig, rng), random_multivector(sig, rng), random_multivector(sig, rng));
        if &(&a * &b) * &c != &a * &(&b * &c) {
            assoc_failures += 1;
        }
    }
    (
        failures == 0 && assoc_failures == 0,
        format!("{failures}/10000 relation and {assoc_failures}/1000 associativity failures"),
    )
}

fn spinors(_: &mut ChaCha8Rng) -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in [2, 4, 6] {
        let exact: SpinorSpace<GaussRat> = SpinorSpace::new(n).expect("even n");
        let float: SpinorSpace<Complex64> = SpinorSpace::new(n).expect("even n");
        let rank = exact.monomial_span_rank();
        let split = exact.chirality_split().expect("involutive ω");
        let (pp, pm) = (&split.proj_plus, &split.proj_minus);
        let d = exact.dim();
        let id: Square<GaussRat> = identity(d);
        let zero = vec![vec![GaussRat::int(0); d]; d];
        let sum: Square<GaussRat> =
            pp.iter().zip(pm).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()).collect();
        let projectors = mat_mul(pp, pp) == *pp && mat_mul(pm, pm) == *pm && sum == id && mat_mul(pp, pm) == zero;
        let residual = float.relation_residual();
        let good = exact.relations_hold() && residual <= 1e-12 && rank == 1 << n && projectors;
        ok &= good;
        notes.push(format!("n={n}: span {rank}/{}, float residual {residual:.1e}", 1 << n));
    }
    (ok, notes.join("; "))
}

fn twisted(rng: &mut ChaCha8Rng) -> (bool, String) {
    let mut worst: f64 = 0.0;
    let mut det_ok = true;
    for _ in 0..1_000 {
        let n = rng.gen_range(2..=5);
        let k = rng.gen_range(1..=4);
        let sig = Signature::euclidean(n).expect("n ≤ 5");
        let x = (0..k).fold(Multivector::<Complex64>::one(sig), |acc, _| {
            &acc * &Multivector::vector(sig, &random_float_unit(n, rng))
        });
        let o = match adjoint_matrix(&x) {
            Ok(o) => o,
            Err(e) => return (false, e.to_string()),
        };
        let ot: Square<Complex64> = (0..n).map(|i| (0..n).map(|j| o[j][i]).collect()).collect();
        let oot = mat_mul(&o, &ot);
        let err = (0..n)
            .map(|i| (0..n).map(|j| (oot[i][j] - if i == j { 1.0 } else { 0.0 }).norm()).sum::<f64>())
            .fold(0.0, f64::max);
        worst = worst.max(err);
        if k % 2 == 0 {
            det_ok &= (det(&o) - 1.0).norm() <= 1e-12;
        }
    }
    let mut reflections_exact = true;
    for _ in 0..200 {
        let n = rng.gen_range(2..=5);
        let sig = Signature::euclidean(n).expect("n ≤ 5");
        let v = random_rational_unit(n, rng);
        let w: Vec<GaussRat> = (0..n).map(|_| GaussRat::int(rng.gen_range(-3..=3))).collect();
        let direct = twisted_adjoint(&Multivector::vector(sig, &v), &Multivector::vector(sig, &w));
        let formula = reflection_formula(sig, &v, &w).map(|r| Multivector::vector(sig, &r));
        reflections_exact &= matches!((direct, formula), (Ok(a), Ok(b)) if a == b);
    }
    (
        worst <= 1e-12 && det_ok && reflections_exact,
        format!("max ‖OOᵀ−I‖∞ = {worst:.1e}, even det +1: {det_ok}, reflections exact: {reflections_exact}"),
    )
}

fn berezin(rng: &mut ChaCha8Rng) -> (bool, String) {
    let mut worst: f64 = 0.0;
    for k in 1..=20 {
        let l = 0.1 * k as f64;
        match berezin_supertrace_exp(&[vec![0.0, l], vec![-l, 0.0]]) {
            Ok(r) => worst = worst.max(r.residual()),
            Err(e) => return (false, format!("λ={l}: {e}")),
        }
    }
    for _ in 0..20 {
        let mut a = vec![vec![0.0; 4]; 4];
        for i in 0..4 {
            for j in i + 1..4 {
                let x: f64 = rng.gen_range(-0.5..0.5);
                a[i][j] = x;
                a[j][i] = -x;
            }
        }
        match berezin_supertrace_exp(&a) {
            Ok(r) => worst = worst.max(r.residual()),
            Err(e) => return (false, e.to_string()),
        }
    }
    (worst <= 1e-10, format!("max |str exp − Pf/det^½Â| = {worst:.1e} over 40 matrices"))
}

fn genera(rng: &mut ChaCha8Rng) -> (bool, String) {
    let (a2, l2) = (ahat_taylor(2)[2], l_taylor(2)[2]);
    let expand_ok = genus_expand(Genus::AHat).is_ok_and(|e| e.p1 == a2) && genus_expand(Genus::L).is_ok_and(|e| e.p1 == l2);
    let mut p1_ok = true;
    for _ in 0..5 {
        let f: FormMatrix<PiLaurent> = random_antisymmetric(4, 4, 6, rng);
        p1_ok &= genus_eval(Genus::Pontryagin, &f).is_ok_and(|p| p.degree_part(4) == p1_trace_form(&f));
    }
    let ok = a2 == rat(-1, 24) && l2 == rat(1, 3) && expand_ok && p1_ok;
    (ok, format!("Â x² = {a2}, L x² = {l2}, p₁ = −tr(F∧F)/8π² on generic 4×4: {p1_ok}"))
}

fn euler_number(model: &CurvatureModel) -> Option<crate::scalar::Rational> {
    let e = genus_eval(Genus::Euler, &model.curvature::<PiLaurent>()).ok()?;
    model.integrate_top(&e).ok()?.as_rational()
}

fn gauss_bonnet(_: &mut ChaCha8Rng) -> (bool, String) {
    let mut values = Vec::new();
    let mut ok = true;
    for r in [rat(1, 2), rat(1, 1), rat(3, 1)] {
        let chi = CurvatureModel::sphere2(r).ok().and_then(|m| euler_number(&m));
        ok &= chi == Some(rat(2, 1));
        values.push(format!("S²(r={r}) → {}", chi.map_or("?".into(), |c: crate::scalar::Rational| c.to_string())));
    }
    let torus = euler_number(&CurvatureModel::torus2());
    let s = CurvatureModel::sphere2(rat(1, 1)).expect("r > 0");
    let product = euler_number(&CurvatureModel::product(&s, &s));
    ok &= torus == Some(rat(0, 1)) && product == Some(rat(4, 1));
    let show = |x: Option<crate::scalar::Rational>| x.map_or("?".into(), |c| c.to_string());
    values.push(format!("T² → {}, S²×S² → {}", show(torus), show(product)));
    (ok, values.join(", "))
}

fn cech(rng: &mut ChaCha8Rng) -> (bool, String) {
    let mut dd_ok = true;
    for _ in 0..1_000 {
        let nerve = Nerve::random(rng.gen_range(2..=6), rng);
        let k = rng.gen_range(0..=nerve.dim());
        let s = Cochain::random(&nerve, k, rng);
        dd_ok &= s.coboundary(&nerve).and_then(|d| d.coboundary(&nerve)).is_ok_and(|dd| dd.is_trivial());
    }
    let mut counts = Vec::new();
    let mut ok = dd_ok;
    for (name, nerve, dim, expect) in
        [("S¹", Nerve::circle(), 1, 2), ("S²", Nerve::sphere(), 2, 1), ("T²", Nerve::torus(), 2, 4)]
    {
        let lifts = SpinLifts::trivial(&nerve, Signature::euclidean(dim).expect("small"));
        match spin_structures(&nerve, &lifts) {
            Ok(s) => {
                let cert = s.certificate.is_some_and(|c| c.holds());
                ok &= s.count() == expect && cert;
                counts.push(format!("{name}: {} (torsor verified: {cert})", s.count()));
            }
            Err(e) => return (false, e.to_string()),
        }
    }
    (ok, format!("δ² trivial on 1000 random cochains: {dd_ok}; {}", counts.join(", ")))
}

fn index_lab(_: &mut ChaCha8Rng) -> (bool, String) {
    // (a) D_λ sweep
    let mut a = true;
    for k in 0..=20 {
        let lambda = 0.1 * k as f64;
        let integer = (lambda - lambda.round()).abs() < 1e-12;
        a &= dlambda_index(lambda, 10).is_ok_and(|r| r.index == 0 && r.kernel_dim == integer as u64);
    }
    // (b) Hodge supertrace on S² against the Euler number
    let chi = CurvatureModel::sphere2(rat(1, 1)).ok().and_then(|m| euler_number(&m));
    let sphere = sphere2_hodge(40).and_then(|m| mckean_singer_check(&m, &[0.1, 0.5, 1.0, 2.0]));
    let b = sphere.as_ref().is_ok_and(|r| {
        r.holds()
            && r.samples.iter().all(|s| (s.supertrace - 2.0).abs() <= s.tail_bound + ROUNDING_TOL)
            && chi == Some(rat(r.inferred_index as i128, 1))
    });
    // (c) torus Dirac for the four spin structures
    let mut torus_worst: f64 = 0.0;
    for delta in [(0.0, 0.0), (0.5, 0.0), (0.0, 0.5), (0.5, 0.5)] {
        match torus_dirac(delta, 20) {
            Ok(m) => torus_worst = [0.2, 1.0, 5.0].iter().map(|&t| m.supertrace(t).abs()).fold(torus_worst, f64::max),
            Err(e) => return (false, e.to_string()),
        }
    }
    let c = torus_worst <= 1e-12;
    // (d) Mehler against the Hermite oracle and the semigroup law
    let grid = linspace(-1.0, 1.0, 5);
    let mut mehler_worst: f64 = 0.0;
    for &x in &grid {
        for &y in &grid {
            match (mehler_kernel(0.3, x, y, 1.0), hermite_expansion(0.3, x, y, 1.0, 60)) {
                (Ok(m), Ok(h)) => mehler_worst = mehler_worst.max((m - h).abs()),
                _ => return (false, "kernel evaluation failed".into()),
            }
        }
    }
    let quad = Quadrature::default();
    let sg_grid = linspace(-2.0, 2.0, 5);
    let line = semigroup_residual(line_heat_kernel, 0.5, 0.5, &sg_grid, &quad).map(|r| r.residual);
    let osc = semigroup_residual(|t, x, y| mehler_kernel(t, x, y, 1.0), 0.2, 0.3, &sg_grid, &quad).map(|r| r.residual);
    let semigroup = match (line, osc) {
        (Ok(l), Ok(o)) => l.max(o),
        _ => f64::INFINITY,
    };
    let d = mehler_worst <= 1e-8 && semigroup <= 1e-6;
    (
        a && b && c && d,
        format!(
            "(a) {a}; (b) {b}, index {}; (c) max |str| = {torus_worst:.1e}; (d) Mehler−Hermite {mehler_worst:.1e}, semigroup {semigroup:.1e}",
            sphere.map_or("?".into(), |r| r.inferred_index.to_string())
        ),
    )
}

fn substitutes(rng: &mut ChaCha8Rng) -> (bool, String) {
    let flat = flat_dirac_square(4).is_ok_and(|(sq, lap)| sq == lap);
    let symbol = [2, 4].iter().all(|&n| symbol_check(n, 20, rng).is_ok_and(|c| c.squares_to_norm && c.invertible));
    let grid = [0.1, 0.3, 1.0, 3.0];
    let models = [
        sphere2_hodge(40),
        torus2_hodge(10),
        torus_dirac((0.0, 0.0), 10),
        torus_dirac((0.5, 0.5), 10),
        dlambda_model(0.0, 10),
        dlambda_model(0.5, 10),
    ];
    let mut ms = true;
    for m in &models {
        ms &= m.as_ref().is_ok_and(|m| mckean_singer_check(m, &grid).is_ok_and(|r| r.holds()));
    }
    let delta = delta_limit_error(1e-4, crate::index_lab::bump, &linspace(-0.9, 0.9, 7), &Quadrature::default())
        .unwrap_or(f64::INFINITY);
    let ok = flat && symbol && ms && delta <= 1e-3;
    (
        ok,
        format!(
            "flat D² = −Σ∂ᵢ² (n=4): {flat}; symbol invertible (n=2,4): {symbol}; McKean-Singer t-independent on {} models: {ms}; heat delta limit error {delta:.1e}",
            models.len()
        ),
    )
}
