use serde_json::json;

use spingeo::index_lab::{dlambda_index, mckean_singer_check, spectral_model, ROUNDING_TOL};

use crate::args::{Cli, IndexArgs};
use crate::report::Report;

pub fn run(cli: &Cli, args: &IndexArgs) -> anyhow::Result<Report> {
    let delta = match args.delta[..] {
        [a, b] => (a, b),
        _ => anyhow::bail!("--delta takes two values a,b"),
    };
    let model = spectral_model(&args.model, args.lmax, args.lambda, delta)?;
    let ms = mckean_singer_check(&model, &args.t)?;
    // the tail bound is a proven error term; only the rounding allowance can be overridden
    let rounding = cli.tolerance(ROUNDING_TOL)?;
    let tolerance = ms.tolerance - ROUNDING_TOL + rounding;
    let (kernel_plus, kernel_minus) = model.kernel();
    let passed = ms.max_deviation <= tolerance && ms.inferred_index == ms.kernel_index;

    let mut human = format!("model {} (cutoff {})\n", model.name, model.cutoff);
    human.push_str(&format!("{:>10} {:>22} {:>22} {:>22} {:>10}\n", "t", "tr e^{-tD⁻D⁺}", "tr e^{-tD⁺D⁻}", "supertrace", "tail"));
    for s in &ms.samples {
        human.push_str(&format!(
            "{:>10} {:>22.15} {:>22.15} {:>22.15} {:>10.1e}\n",
            s.t, s.even_trace, s.odd_trace, s.supertrace, s.tail_bound
        ));
    }
    human.push_str(&format!(
        "kernel dims ({kernel_plus}, {kernel_minus}), index {}; supertrace index {}; max deviation {:e} (tol {tolerance:e})\n",
        ms.kernel_index, ms.inferred_index, ms.max_deviation
    ));
    let dl = if args.model == "dlambda" {
        let d = dlambda_index(args.lambda, args.lmax)?;
        human.push_str(&format!(
            "D_λ: dim ker {}, dim coker {}, index {}\n",
            d.kernel_dim, d.cokernel_dim, d.index
        ));
        Some(d)
    } else {
        None
    };

    let mut csv = String::from("t,even_trace,odd_trace,supertrace,tail_bound\n");
    for s in &ms.samples {
        csv.push_str(&format!("{},{},{},{},{}\n", s.t, s.even_trace, s.odd_trace, s.supertrace, s.tail_bound));
    }

    let mut r = Report::new("index")
        .prov("model", model.name.clone())
        .prov("cutoff", model.cutoff)
        .prov("params", json!(model.params))
        .prov("tolerance", tolerance)
        .prov("rounding_allowance", rounding);
    r.passed = passed;
    r.result = json!({
        "index": ms.kernel_index,
        "supertrace_index": ms.inferred_index,
        "kernel": [kernel_plus, kernel_minus],
        "max_deviation": ms.max_deviation,
        "samples": ms.samples,
        "dlambda": dl,
    });
    r.human = human;
    r.csv = Some(csv);
    Ok(r)
}
