use serde_json::{json, Value};

use scrollar::exactalg::PrimeField;
use scrollar::funfield::{generate_hirzebruch_model, Analysis};

use crate::curve::CurveFile;
use crate::{profile_json, LabError, Result, SCHEMA};

#[derive(Clone, Debug)]
pub struct GenArgs {
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub p: u64,
    pub seed: u64,
    pub allow_good: bool,
}

/// A seeded curve on the Hirzebruch surface F_e, with a summary of what
/// was generated.
pub fn gen_curve(args: &GenArgs) -> Result<(CurveFile, Value)> {
    if args.d < 2 {
        return Err(LabError::Usage(format!("--d must be at least 2, got {}", args.d)));
    }
    if args.p <= args.d as u64 {
        return Err(LabError::Wild(format!("modulus {} must exceed the degree {}", args.p, args.d)));
    }
    let field = PrimeField::new(args.p)?;
    let (model, attempts) = generate_hirzebruch_model(field, args.c, args.d, args.e, args.seed, args.allow_good)
        .map_err(|e| LabError::Failed(format!("no admissible curve after retries: {e}")))?;
    let a = Analysis::new(&model)?;
    let r = a.reduced_basis()?;
    let rep = a.ramification_report(args.seed)?;
    let file = CurveFile::from_model(&model);
    let summary = json!({
        "schema": SCHEMA,
        "command": "gen-curve",
        "c": args.c,
        "d": args.d,
        "e": args.e,
        "p": args.p,
        "seed": args.seed,
        "attempts": attempts,
        "genus": r.genus,
        "scrollar": profile_json(&r.profile()),
        "branching": rep.classification.label(),
    });
    Ok((file, summary))
}
