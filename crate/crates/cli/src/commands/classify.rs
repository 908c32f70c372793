use anyhow::bail;
use serde_json::{json, Value};

use spingeo::classification::{
    classify_complex, classify_real, even_subalgebra_complex, even_subalgebra_type, AlgebraType,
};

use crate::args::ClassifyArgs;
use crate::report::Report;

fn describe(a: &AlgebraType) -> Value {
    json!({
        "base": a.base,
        "size": a.size,
        "doubled": a.doubled,
        "name": a.to_string(),
        "real_dim": a.real_dim().to_string(),
    })
}

pub fn run(args: &ClassifyArgs) -> anyhow::Result<Report> {
    if let Some(n) = args.complex {
        let a = classify_complex(n);
        let mut human = format!("Cl_{n} ⊗ C ≅ {a}\n");
        let even = even_subalgebra_complex(n).ok().map(|e| {
            human.push_str(&format!("even part ≅ {}{}\n", e.even, if e.diagonal { " (diagonal)" } else { "" }));
            json!({"type": describe(&e.even), "diagonal": e.diagonal})
        });
        let mut r = Report::new("classify").prov("algebra", format!("Cl_{n} ⊗ C"));
        r.result = json!({"algebra": describe(&a), "even": even});
        r.human = human;
        return Ok(r);
    }
    if let Some(max) = args.table {
        if max > 63 {
            bail!("table size {max} exceeds 63");
        }
        let mut human = format!("{:>3}  {:<18} {:<18}\n", "n", "Cl_{n,0}", "Cl_{0,n}");
        let rows: Vec<Value> = (1..=max)
            .map(|n| {
                let (pos, neg) = (classify_real(n, 0), classify_real(0, n));
                human.push_str(&format!("{n:>3}  {:<18} {:<18}\n", pos.to_string(), neg.to_string()));
                json!({"n": n, "positive": describe(&pos), "negative": describe(&neg)})
            })
            .collect();
        let mut r = Report::new("classify").prov("table", max);
        r.result = json!({"rows": rows});
        r.human = human;
        r.csv = Some(
            std::iter::once("n,positive,negative\n".to_string())
                .chain((1..=max).map(|n| format!("{n},{},{}\n", classify_real(n, 0), classify_real(0, n))))
                .collect(),
        );
        return Ok(r);
    }
    let (Some(p), Some(q)) = (args.p, args.q) else {
        bail!("classify needs P Q, --complex N or --table N");
    };
    if p + q > 63 {
        bail!("p + q = {} exceeds 63", p + q);
    }
    let a = classify_real(p, q);
    let mut human = format!("Cl_{{{p},{q}}} ≅ {a}\n");
    let even = even_subalgebra_type(p, q).ok().map(|e| {
        human.push_str(&format!("Cl⁰_{{{p},{q}}} ≅ {e}\n"));
        describe(&e)
    });
    let mut r = Report::new("classify").prov("algebra", format!("Cl_{{{p},{q}}}"));
    r.result = json!({"p": p, "q": q, "algebra": describe(&a), "even": even, "complexified": describe(&a.complexify())});
    r.human = human;
    Ok(r)
}
