use anyhow::bail;
use serde_json::json;

use spingeo::selftest::{criterion_count, run_all, run_one};

use crate::args::{Cli, SelftestArgs};
use crate::report::Report;

pub fn run(cli: &Cli, args: &SelftestArgs) -> anyhow::Result<Report> {
    let results = match args.only {
        Some(id) => match run_one(id, cli.seed) {
            Some(r) => vec![r],
            None => bail!("no criterion {id}; valid ids are 1..={}", criterion_count()),
        },
        None => run_all(cli.seed),
    };
    let mut human = String::new();
    let mut csv = String::from("id,name,passed,budget_s\n");
    let rows: Vec<_> = results
        .iter()
        .map(|c| {
            if args.timings {
                human.push_str(&format!("{c}\n"));
            } else {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                human.push_str(&format!("[{tag}] {:>2} {}: {}\n", c.id, c.name, c.detail));
            }
            csv.push_str(&format!("{},{},{},{}\n", c.id, c.name, c.passed, c.budget_s));
            let mut row = json!({"id": c.id, "name": c.name, "passed": c.passed, "detail": c.detail, "budget_s": c.budget_s});
            if args.timings {
                row["elapsed_s"] = json!(c.elapsed_s);
            }
            row
        })
        .collect();
    let failed = results.iter().filter(|c| !c.passed).count();
    human.push_str(&format!("{} of {} criteria passed\n", results.len() - failed, results.len()));
    let mut r = Report::new("selftest").prov("seed", cli.seed).prov("criteria", results.len());
    r.passed = failed == 0;
    r.result = json!({"criteria": rows, "failed": failed});
    r.human = human;
    r.csv = Some(csv);
    Ok(r)
}
