use std::path::Path;

use serde_json::{json, Value};

use scrollar::funfield::{Analysis, CoverModel, IrreducibilityCheck, RamificationReport};
use scrollar::predict::CoverSummary;
use scrollar::resolvent::ProfileTable;
use scrollar::symrep::partitions_of;

use crate::curve::load_model;
use crate::{partition_json, profile_json, Result, SCHEMA};

pub fn ramification_json(rep: &RamificationReport) -> Value {
    let places: Vec<Value> = rep
        .places
        .iter()
        .map(|b| json!({ "place": b.place.to_string(), "splitting": partition_json(&b.splitting) }))
        .collect();
    json!({ "classification": rep.classification.label(), "places": places })
}

fn irreducibility_label(c: IrreducibilityCheck) -> String {
    match c {
        IrreducibilityCheck::Specialization(a) => format!("specialization at t = {a}"),
        IrreducibilityCheck::ReducedBasis => "reduced basis".to_string(),
        IrreducibilityCheck::Asserted => "asserted".to_string(),
    }
}

/// Every partition profile reachable by resolvent subtraction, with its
/// provenance; unreachable ones carry the reason.
pub fn profile_table_json(model: &CoverModel, seed: u64) -> Result<Value> {
    let mut t = ProfileTable::new(model, seed)?;
    let mut rows = Vec::new();
    for lam in partitions_of(model.d() as u32)? {
        if lam.len() == 1 {
            continue;
        }
        let row = match t.isolate(&lam) {
            Ok(p) => json!({
                "partition": partition_json(&lam),
                "profile": profile_json(&p),
                "provenance": p.provenance().label(),
            }),
            Err(e) => json!({ "partition": partition_json(&lam), "error": e.to_string() }),
        };
        rows.push(row);
    }
    let measurements: Vec<Value> = t
        .measurements()
        .values()
        .map(|m| json!({ "subgroup": m.label, "index": m.index, "genus": m.genus, "profile": profile_json(&m.profile) }))
        .collect();
    Ok(json!({ "entries": rows, "resolvents": measurements }))
}

pub fn analyze(path: &Path, emit_profile_table: bool, assert_irreducible: bool, seed: u64) -> Result<Value> {
    let model = load_model(path, assert_irreducible, seed)?;
    let a = Analysis::new(&model)?;
    let r = a.reduced_basis()?;
    let e = r.profile();
    let rep = a.ramification_report(seed)?;
    let summary = CoverSummary { d: model.d() as i64, g: r.genus, e: e.clone() };
    let mut out = json!({
        "schema": SCHEMA,
        "command": "analyze",
        "p": model.field().p(),
        "d": model.d(),
        "genus": r.genus,
        "scrollar": profile_json(&e),
        "sum_ok": summary.sum_ok(),
        "maroni_ok": summary.maroni_ok(),
        "irreducibility": irreducibility_label(model.irreducibility()),
        "ramification": ramification_json(&rep),
    });
    if emit_profile_table {
        out["profile_table"] = profile_table_json(&model, seed)?;
    }
    Ok(out)
}
