use std::path::Path;

use anyhow::Context;
use serde_json::json;

use spingeo::cech::{
    brute_force_count, signs_from_json, spin_structures, torus_anticommuting_lifts, w1, Cochain, Nerve, SpinLifts,
};
use spingeo::clifford::Signature;

use crate::args::CechArgs;
use crate::report::Report;

/// Overlap count up to which the spin-structure count is cross-checked by
/// enumerating every 1-cochain.
const BRUTE_FORCE_MAX: usize = 20;

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Simplices on which a cochain takes the value −1.
fn support(nerve: &Nerve, c: &Cochain) -> Vec<Vec<usize>> {
    let simplices = nerve.simplices(c.degree());
    c.bits().ones().map(|i| simplices[i].clone()).collect()
}

pub fn run(args: &CechArgs) -> anyhow::Result<Report> {
    let (nerve, source) = if Path::new(&args.nerve).is_file() {
        (Nerve::from_json(&read(Path::new(&args.nerve))?)?, args.nerve.clone())
    } else {
        (Nerve::builtin(&args.nerve)?, format!("builtin:{}", args.nerve))
    };
    let dims: Vec<usize> = (0..=nerve.dim()).map(|k| nerve.count(k)).collect();
    let betti: Vec<usize> = (0..=nerve.dim()).map(|k| nerve.cohomology_dim(k)).collect();
    let mut human = format!("nerve {source}: simplices per degree {dims:?}\n");
    human.push_str(&format!("dim H^k(Z₂): {betti:?}\n"));

    let w1_info = match &args.signs {
        Some(path) => {
            let signs = signs_from_json(&nerve, &read(path)?)?;
            let class = w1(&nerve, &signs)?;
            human.push_str(&format!("w1: {}\n", if class.vanishes() { "0 (orientable)" } else { "nonzero (non-orientable)" }));
            Some(json!({"vanishes": class.vanishes(), "cocycle": support(&nerve, &class.cocycle)}))
        }
        None => None,
    };

    let (lifts, lift_source) = match args.w2.as_deref() {
        Some("torus-anticommuting") => (torus_anticommuting_lifts(&nerve)?, "builtin:torus-anticommuting".to_string()),
        Some(path) => (SpinLifts::from_json(&nerve, &read(Path::new(path))?)?, path.to_string()),
        None => (SpinLifts::trivial(&nerve, Signature::euclidean(args.rank)?), format!("trivial, rank {}", args.rank)),
    };
    let spin = spin_structures(&nerve, &lifts)?;
    let count = spin.count();
    human.push_str(&format!("w2: {}\n", if spin.w2.vanishes() { "0" } else { "nonzero" }));
    human.push_str(&format!("spin structures: {count}\n"));

    let mut passed = true;
    let certificate = spin.certificate.as_ref().map(|c| {
        passed &= c.holds();
        human.push_str(&format!(
            "H¹ action on {} classes: free {}, transitive {}\n",
            c.group_order, c.free, c.transitive
        ));
        json!({"group_order": c.group_order, "free": c.free, "transitive": c.transitive, "all_cocycles": c.all_cocycles})
    });
    let brute = if nerve.count(1) <= BRUTE_FORCE_MAX {
        let b = brute_force_count(&nerve, &lifts)?;
        passed &= b == count;
        human.push_str(&format!("enumeration over all 1-cochains: {b}\n"));
        Some(b)
    } else {
        None
    };

    let mut r = Report::new("cech")
        .prov("nerve", source)
        .prov("lifts", lift_source)
        .prov("arithmetic", "exact GF(2)");
    r.passed = passed;
    r.result = json!({
        "patches": nerve.patches(),
        "simplices": dims,
        "cohomology_dims": betti,
        "w1": w1_info,
        "w2": {"vanishes": spin.w2.vanishes(), "epsilon": support(&nerve, &spin.w2.epsilon)},
        "spin_structures": count,
        "representatives": spin.representatives.iter().map(|c| support(&nerve, c)).collect::<Vec<_>>(),
        "certificate": certificate,
        "brute_force_count": brute,
    });
    r.human = human;
    Ok(r)
}
