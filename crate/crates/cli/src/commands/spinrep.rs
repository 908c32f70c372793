use anyhow::bail;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use spingeo::linalg::{identity, mat_mul, Square};
use spingeo::scalar::{Coefficient, Complex64, GaussRat};
use spingeo::spin::{berezin_supertrace_exp, SpinorSpace};

use crate::args::{Cli, SpinCheck, SpinrepArgs};
use crate::report::Report;

const RELATION_TOL: f64 = 1e-12;
const BEREZIN_TOL: f64 = 1e-10;
/// Largest n for the exact monomial-span rank (4^{n/2} columns).
const SPAN_MAX_N: usize = 8;

fn max_diff<C: Coefficient>(a: &Square<C>, b: &Square<C>) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x.clone() - y.clone()).magnitude())
        .fold(0.0, f64::max)
}

pub fn run(cli: &Cli, args: &SpinrepArgs) -> anyhow::Result<Report> {
    let n = args.n;
    if n == 0 || n % 2 == 1 || n > 12 {
        bail!("spinrep needs an even n between 2 and 12, got {n}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    match args.check {
        SpinCheck::Relations => relations(cli, n, &mut rng),
        SpinCheck::Chirality => chirality(n),
        SpinCheck::Berezin => berezin(cli, n, args.samples, &mut rng),
    }
}

fn relations(cli: &Cli, n: usize, rng: &mut ChaCha8Rng) -> anyhow::Result<Report> {
    let tol = cli.tolerance(RELATION_TOL)?;
    let exact: SpinorSpace<GaussRat> = SpinorSpace::new(n)?;
    let exact_ok = exact.relations_hold();
    let float: SpinorSpace<Complex64> = SpinorSpace::new(n)?;
    let float_residual = float.relation_residual();
    let mut square_residual: f64 = 0.0;
    for _ in 0..16 {
        let v: Vec<Complex64> = (0..n).map(|_| rng.gen_range(-1.0..1.0f64).into()).collect();
        let norm2: f64 = v.iter().map(|x| x.re * x.re).sum();
        let c = float.clifford(&v);
        let target: Square<Complex64> =
            identity::<Complex64>(float.dim()).into_iter().map(|r| r.into_iter().map(|x| x * -norm2).collect()).collect();
        square_residual = square_residual.max(max_diff(&mat_mul(&c, &c), &target));
    }
    let full = 1usize << n;
    let span = (n <= SPAN_MAX_N).then(|| exact.monomial_span_rank());
    let span_ok = span.map_or(true, |r| r == full);
    let passed = exact_ok && float_residual <= tol && square_residual <= tol * n as f64 && span_ok;
    let mut human = format!("spinor module Δ_{n}: dimension {}\n", exact.dim());
    human.push_str(&format!("exact relations e_ie_j + e_je_i = −2δ_ij: {}\n", if exact_ok { "hold" } else { "FAIL" }));
    human.push_str(&format!("float relation residual: {float_residual:e} (tol {tol:e})\n"));
    human.push_str(&format!("c(v)² + |v|² residual over 16 random v: {square_residual:e} (tol {:e})\n", tol * n as f64));
    match span {
        Some(r) => human.push_str(&format!("monomial span rank: {r} of {full}\n")),
        None => human.push_str(&format!("monomial span rank: skipped for n > {SPAN_MAX_N}\n")),
    }
    let mut r = Report::new("spinrep").prov("n", n).prov("check", "relations").prov("tolerance", tol);
    r.passed = passed;
    r.result = json!({
        "dim": exact.dim(),
        "exact_relations": exact_ok,
        "float_residual": float_residual,
        "square_residual": square_residual,
        "span_rank": span,
        "full_rank": full,
    });
    r.human = human;
    Ok(r)
}

fn chirality(n: usize) -> anyhow::Result<Report> {
    let s: SpinorSpace<GaussRat> = SpinorSpace::new(n)?;
    let split = s.chirality_split()?;
    let d = s.dim();
    let id: Square<GaussRat> = identity(d);
    let zero = vec![vec![GaussRat::int(0); d]; d];
    let (pp, pm) = (&split.proj_plus, &split.proj_minus);
    let idempotent = mat_mul(pp, pp) == *pp && mat_mul(pm, pm) == *pm;
    let orthogonal = mat_mul(pp, pm) == zero && mat_mul(pm, pp) == zero;
    let sum: Square<GaussRat> =
        pp.iter().zip(pm).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()).collect();
    let complete = sum == id;
    let w = s.omega();
    let involution = mat_mul(&w, &w) == id;
    let balanced = split.plus.len() == d / 2 && split.minus.len() == d / 2;
    let passed = idempotent && orthogonal && complete && involution && balanced;
    let yes = |b: bool| if b { "yes" } else { "NO" };
    let mut human = format!("spinor module Δ_{n}: dimension {d}\n");
    human.push_str(&format!("c(ω)² = 1: {}\n", yes(involution)));
    human.push_str(&format!("dim S⁺ = {}, dim S⁻ = {}\n", split.plus.len(), split.minus.len()));
    human.push_str(&format!("projectors idempotent: {}, orthogonal: {}, sum to 1: {}\n", yes(idempotent), yes(orthogonal), yes(complete)));
    let mut r = Report::new("spinrep").prov("n", n).prov("check", "chirality").prov("arithmetic", "exact");
    r.passed = passed;
    r.result = json!({
        "dim": d,
        "plus": split.plus,
        "minus": split.minus,
        "omega_squared_is_identity": involution,
        "idempotent": idempotent,
        "orthogonal": orthogonal,
        "complete": complete,
    });
    r.human = human;
    Ok(r)
}

fn berezin(cli: &Cli, n: usize, samples: usize, rng: &mut ChaCha8Rng) -> anyhow::Result<Report> {
    if n > 10 {
        bail!("the Berezin check runs on the 2^n-dimensional exterior module; n ≤ 10");
    }
    if samples == 0 {
        bail!("--samples must be positive");
    }
    let tol = cli.tolerance(BEREZIN_TOL)?;
    // keeps the spectral radius of A well below π for the Â series
    let amp = 1.0 / n as f64;
    let mut rows = Vec::with_capacity(samples);
    let mut worst: f64 = 0.0;
    let mut csv = String::from("sample,lhs_re,lhs_im,rhs_re,rhs_im,residual\n");
    for k in 0..samples {
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let x: f64 = rng.gen_range(-amp..amp);
                a[i][j] = x;
                a[j][i] = -x;
            }
        }
        let c = berezin_supertrace_exp(&a)?;
        let res = c.residual();
        worst = worst.max(res);
        csv.push_str(&format!("{k},{},{},{},{},{res:e}\n", c.lhs.re, c.lhs.im, c.rhs.re, c.rhs.im));
        rows.push(json!({"lhs": [c.lhs.re, c.lhs.im], "rhs": [c.rhs.re, c.rhs.im], "residual": res}));
    }
    let passed = worst <= tol;
    let human = format!(
        "str exp(½ A_ij c̃^i c̃^j) against Pf(−2iA)/det^½ Â(−2A) on {samples} random {n}×{n} matrices\nmax residual: {worst:e} (tol {tol:e})\n"
    );
    let mut r = Report::new("spinrep")
        .prov("n", n)
        .prov("check", "berezin")
        .prov("samples", samples)
        .prov("entry_bound", amp)
        .prov("tolerance", tol);
    r.passed = passed;
    r.result = json!({"max_residual": worst, "samples": rows});
    r.human = human;
    r.csv = Some(csv);
    Ok(r)
}
