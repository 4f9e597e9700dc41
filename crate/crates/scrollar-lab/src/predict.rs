use serde_json::{json, Value};

use scrollar::predict::{
    betti, generic_upper_bound, maroni_partition_bound, resolvent_genus, schreyer_interval, schreyer_sum, volume,
};
use scrollar::symrep::{partitions_of, CharacterTable, Partition, SubgroupSpec};

use crate::{affine_json, partition_json, rational_json, LabError, Result, SCHEMA};

#[derive(Clone, Debug, Default)]
pub struct PredictArgs {
    pub d: u32,
    pub g: Option<i64>,
    pub subgroup: Option<String>,
    pub partition: Option<String>,
    pub schreyer_interval: Option<i64>,
}

pub fn predict(args: &PredictArgs) -> Result<Value> {
    let d = args.d;
    if !(2..=10).contains(&d) {
        return Err(LabError::Usage(format!("--d must lie in 2..=10, got {d}")));
    }
    if let Some(g) = args.g {
        if g < 0 {
            return Err(LabError::Usage(format!("--g must be nonnegative, got {g}")));
        }
    }
    let chosen = [args.subgroup.is_some(), args.partition.is_some(), args.schreyer_interval.is_some()];
    if chosen.iter().filter(|&&x| x).count() > 1 {
        return Err(LabError::Usage(
            "--subgroup, --partition and --schreyer-interval are mutually exclusive".into(),
        ));
    }
    let mut out = if let Some(s) = &args.subgroup {
        subgroup(d, args.g, s)?
    } else if let Some(p) = &args.partition {
        partition(d, args.g, p)?
    } else if let Some(i) = args.schreyer_interval {
        interval(d, args.g, i)?
    } else {
        overview(d, args.g)?
    };
    out["schema"] = json!(SCHEMA);
    out["command"] = json!("predict");
    out["d"] = json!(d);
    if let Some(g) = args.g {
        out["g"] = json!(g);
    }
    Ok(out)
}

fn volume_json(lambda: &Partition, d: u32, g: Option<i64>) -> Result<Value> {
    affine_json(|g| Ok(volume(lambda, g, d as i64)), g)
}

fn subgroup(d: u32, g: Option<i64>, s: &str) -> Result<Value> {
    let spec = SubgroupSpec::parse(s)?;
    let h = spec.build(d as usize)?;
    let ct = CharacterTable::new(d)?;
    let mults = h.induced_trivial_multiplicities(&ct)?;
    let mut constituents = Vec::new();
    let mut p_total = 0u64;
    for (lam, m) in &mults {
        p_total += m * lam.p_value();
        constituents.push(json!({
            "partition": partition_json(lam),
            "multiplicity": m,
            "dimension": lam.specht_dim(),
            "p": lam.p_value(),
            "volume": volume_json(lam, d, g)?,
        }));
    }
    let p = h.p_value()?;
    let mut out = json!({
        "subgroup": spec.label(),
        "order": h.order(),
        "index": h.index(),
        "p": p,
        "p_from_constituents": p_total,
        "constituents": constituents,
    });
    if h.index() > 1 {
        let (_, pattern) = resolvent_genus(&h, 0)?;
        out["genus"] = affine_json(|g| Ok(resolvent_genus(&h, g)?.0), g)?;
        out["branching"] = partition_json(&pattern);
        out["profile_sum"] = affine_json(|g| Ok(p as i64 * (g + d as i64 - 1)), g)?;
    }
    Ok(out)
}

fn partition(d: u32, g: Option<i64>, s: &str) -> Result<Value> {
    let lam = Partition::parse(s)?;
    if lam.d() != d {
        return Err(LabError::Usage(format!("{lam} is not a partition of {d}")));
    }
    let mut out = json!({
        "partition": partition_json(&lam),
        "dual": partition_json(&lam.dual()),
        "dimension": lam.specht_dim(),
        "p": lam.p_value(),
        "depth": lam.depth(),
        "hook": lam.is_hook(),
        "volume": volume_json(&lam, d, g)?,
    });
    let step = (1..d.saturating_sub(2)).find(|&i| Partition::syzygy_shape(d, i).ok().as_ref() == Some(&lam));
    if let Some(i) = step {
        out["syzygy_step"] = json!(i);
        out["betti"] = json!(betti(d as i64, i as i64));
    }
    if let Some(g) = g {
        out["maroni_bound"] = rational_json(maroni_partition_bound(&lam, g));
        out["generic_upper_bound"] = rational_json(generic_upper_bound(&lam, g));
        if let Some(i) = step {
            let (lo, hi) = schreyer_interval(d as i64, i as i64, g)?;
            out["schreyer_interval"] = json!([rational_json(lo), rational_json(hi)]);
        }
    }
    Ok(out)
}

fn interval(d: u32, g: Option<i64>, i: i64) -> Result<Value> {
    let g = g.ok_or_else(|| LabError::Usage("--schreyer-interval needs --g".into()))?;
    let (lo, hi) = schreyer_interval(d as i64, i, g)?;
    Ok(json!({
        "step": i,
        "betti": betti(d as i64, i),
        "shape": partition_json(&Partition::syzygy_shape(d, i as u32)?),
        "sum": schreyer_sum(d as i64, i, g)?,
        "interval": [rational_json(lo), rational_json(hi)],
    }))
}

fn overview(d: u32, g: Option<i64>) -> Result<Value> {
    let mut parts = Vec::new();
    for lam in partitions_of(d)? {
        if lam.len() == 1 {
            continue;
        }
        parts.push(json!({
            "partition": partition_json(&lam),
            "dimension": lam.specht_dim(),
            "p": lam.p_value(),
            "volume": volume_json(&lam, d, g)?,
        }));
    }
    let betti_numbers: Vec<i64> = (1..=d as i64 - 3).map(|i| betti(d as i64, i)).collect();
    Ok(json!({
        "scrollar_sum": affine_json(|g| Ok(g + d as i64 - 1), g)?,
        "betti": betti_numbers,
        "partitions": parts,
    }))
}
