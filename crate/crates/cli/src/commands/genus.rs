use anyhow::Context;
use serde_json::json;

use spingeo::chern_weil::{genus_eval, parse_rational, CurvatureModel, Genus};
use spingeo::scalar::{Coefficient, Complex64, PiLaurent};

use crate::args::{Cli, GenusArgs};
use crate::report::Report;

/// Agreement required between the exact value and the float evaluation.
const FLOAT_TOL: f64 = 1e-9;

pub fn run(cli: &Cli, args: &GenusArgs) -> anyhow::Result<Report> {
    let genus: Genus = args.name.parse()?;
    let (model, source) = match (&args.model, &args.model_file) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            (CurvatureModel::from_json(&text)?, path.display().to_string())
        }
        (Some(name), None) => {
            let r = parse_rational(&args.radius)?;
            (CurvatureModel::builtin(name, r)?, format!("builtin:{name}"))
        }
        (None, None) => anyhow::bail!("genus needs --model or --model-file"),
    };
    let tol = cli.tolerance(FLOAT_TOL)?;

    let form = genus_eval(genus, &model.curvature::<PiLaurent>())?;
    let value = model.integrate_top(&form)?;
    let float_form = genus_eval(genus, &model.curvature::<Complex64>())?;
    let float_value = model.integrate_top(&float_form)?;
    let deviation = (value.to_complex() - float_value).norm();

    let expected = args.expect.as_deref().map(parse_rational).transpose()?;
    let exact_rational = value.as_rational();
    let matches = expected.map(|e| exact_rational == Some(e));
    let passed = deviation <= tol && matches.unwrap_or(true);

    let vol = model.volume();
    let mut human = format!("{genus} on {} (dim {}, rank {})\n", model.name(), model.form_dim(), model.fiber_dim());
    human.push_str(&format!("form: {form}\n"));
    human.push_str(&format!("integral: {value}\n"));
    human.push_str(&format!("float route: {} (deviation {deviation:e}, tol {tol:e})\n", float_value.re));
    if let (Some(e), Some(m)) = (expected, matches) {
        human.push_str(&format!("expected {e}: {}\n", if m { "match" } else { "MISMATCH" }));
    }
    let mut r = Report::new("genus")
        .prov("model", model.name())
        .prov("source", source)
        .prov("radius", args.radius.clone())
        .prov("volume", format!("{}·π^{}", vol.coeff, vol.pi_power))
        .prov("tolerance", tol);
    r.passed = passed;
    r.result = json!({
        "genus": genus.name(),
        "form": form.to_string(),
        "value": value.to_string(),
        "rational": exact_rational.map(|q| q.to_string()),
        "float": [float_value.re, float_value.im],
        "deviation": deviation,
        "expected": expected.map(|q| q.to_string()),
        "matches": matches,
    });
    r.human = human;
    Ok(r)
}
