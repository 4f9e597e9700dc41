use std::path::Path;
use std::time::Instant;

use serde_json::{json, Map, Value};

use scrollar::bhargava::{
    graded_quadric_degrees, pencil_matches_cubic_resolvent, point_config, relative_resolution, PointConfigData,
    QuadricSet,
};
use scrollar::funfield::{Analysis, Classification, CoverModel, Place, RamificationReport};
use scrollar::predict::{
    dual_profile, hirzebruch_genus, hirzebruch_profile, resolvent_genus, resolvent_profile, volume, ScrollarProfile,
};
use scrollar::resolvent::{resolvent_scrollars, ProfileTable};
use scrollar::symrep::{gassmann_equivalent, gassmann_pair, partitions_of, CatalogTag, Partition, PermSubgroup, SubgroupSpec};

use crate::analyze::ramification_json;
use crate::curve::load_model;
use crate::{partition_json, profile_json, sorted, LabError, Result, SCHEMA};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    QuadricShifts,
    SyzygyShifts,
    ResolventProfile,
    ResolventGenus,
    FirstSyzygyUnion,
    Volume,
    Duality,
    QuarticDihedral,
    CayleySextic,
    HirzebruchPrediction,
    Gassmann,
}

/// Which branching the statement behind a check assumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Hypothesis {
    Simple,
    SimpleOrGood,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::QuadricShifts,
        Check::SyzygyShifts,
        Check::ResolventProfile,
        Check::ResolventGenus,
        Check::FirstSyzygyUnion,
        Check::Volume,
        Check::Duality,
        Check::QuarticDihedral,
        Check::CayleySextic,
        Check::HirzebruchPrediction,
        Check::Gassmann,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::QuadricShifts => "quadric-shifts",
            Check::SyzygyShifts => "syzygy-shifts",
            Check::ResolventProfile => "resolvent-profile",
            Check::ResolventGenus => "resolvent-genus",
            Check::FirstSyzygyUnion => "first-syzygy-union",
            Check::Volume => "volume",
            Check::Duality => "duality",
            Check::QuarticDihedral => "quartic-dihedral",
            Check::CayleySextic => "cayley-sextic",
            Check::HirzebruchPrediction => "hirzebruch-prediction",
            Check::Gassmann => "gassmann",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
            LabError::Usage(format!("unknown check `{s}`; expected one of {}", names.join(", ")))
        })
    }

    fn hypothesis(self) -> Hypothesis {
        match self {
            Check::Volume => Hypothesis::SimpleOrGood,
            _ => Hypothesis::Simple,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyArgs {
    pub subgroup: Option<String>,
    pub partition: Option<String>,
    /// (c, e) of the Hirzebruch surface the curve was drawn on.
    pub hirzebruch: Option<(i64, i64)>,
    pub assert_irreducible: bool,
    pub timing: bool,
    pub seed: u64,
}

/// A finished comparison. `matched` is exact multiset equality of the two
/// sides; `conclusive` says the curve meets the branching hypothesis. The
/// binary exits 5 on a conclusive mismatch.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: Value,
    pub matched: bool,
    pub conclusive: bool,
}

impl Outcome {
    pub fn failed(&self) -> bool {
        self.conclusive && !self.matched
    }
}

struct Ctx {
    model: CoverModel,
    seed: u64,
    genus: i64,
    d: usize,
    e: ScrollarProfile,
    report: RamificationReport,
    table: ProfileTable,
    cfg: Option<PointConfigData>,
    quadrics: Option<QuadricSet>,
}

impl Ctx {
    fn new(model: CoverModel, seed: u64) -> Result<Self> {
        let a = Analysis::new(&model)?;
        let r = a.reduced_basis()?;
        let report = a.ramification_report(seed)?;
        let table = ProfileTable::new(&model, seed)?;
        Ok(Ctx {
            d: model.d(),
            genus: r.genus,
            e: r.profile(),
            report,
            table,
            model,
            seed,
            cfg: None,
            quadrics: None,
        })
    }

    fn need_degree(&self, ok: bool, what: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(LabError::Usage(format!("this check needs {what}, the curve has degree {}", self.d)))
        }
    }

    fn quadrics(&mut self) -> Result<(&PointConfigData, &QuadricSet)> {
        if self.cfg.is_none() {
            let cfg = point_config(&self.model)?;
            self.quadrics = Some(graded_quadric_degrees(&cfg)?);
            self.cfg = Some(cfg);
        }
        Ok((self.cfg.as_ref().expect("set"), self.quadrics.as_ref().expect("set")))
    }

    /// The requested subgroup, or the pair-sum one (the alternating one in
    /// degree 3).
    fn spec(&self, s: Option<&str>) -> Result<SubgroupSpec> {
        Ok(match s {
            Some(s) => SubgroupSpec::parse(s)?,
            None if self.d >= 4 => SubgroupSpec::Tag(CatalogTag::PairSum),
            None => SubgroupSpec::Tag(CatalogTag::Alternating),
        })
    }

    /// Squarefree product of the finite branch points, and whether infinity
    /// branches.
    fn branch_locus(&self) -> (scrollar::exactalg::Poly, bool) {
        let mut locus = scrollar::exactalg::Poly::one(self.model.field());
        let mut inf = false;
        for b in &self.report.places {
            match &b.place {
                Place::Finite(p) => locus = locus.mul(p),
                Place::Infinity => inf = true,
            }
        }
        (locus.monic(), inf)
    }

    fn selected(&self, partition: Option<&str>) -> Result<Vec<Partition>> {
        match partition {
            Some(s) => {
                let lam = Partition::parse(s)?;
                if lam.d() as usize != self.d || lam.len() == 1 {
                    return Err(LabError::Usage(format!("{lam} is not a nontrivial partition of {}", self.d)));
                }
                Ok(vec![lam])
            }
            None => Ok(partitions_of(self.d as u32)?.into_iter().filter(|l| l.len() > 1).collect()),
        }
    }
}

fn nothing_measured(any: bool, unmeasured: &[Value]) -> Result<()> {
    if any {
        return Ok(());
    }
    let reasons: Vec<String> = unmeasured.iter().map(|u| u.to_string()).collect();
    Err(LabError::Failed(format!("no block could be measured: {}", reasons.join(", "))))
}

fn same(a: &[i64], b: &[i64]) -> bool {
    sorted(a.to_vec()) == sorted(b.to_vec())
}

struct Comparison {
    predicted: Value,
    measured: Value,
    matched: bool,
    details: Map<String, Value>,
}

impl Comparison {
    fn new(predicted: Value, measured: Value, matched: bool) -> Self {
        Comparison { predicted, measured, matched, details: Map::new() }
    }

    fn with(mut self, key: &str, v: Value) -> Self {
        self.details.insert(key.to_string(), v);
        self
    }
}

pub fn verify(path: &Path, check: Check, args: &VerifyArgs) -> Result<Outcome> {
    let model = load_model(path, args.assert_irreducible, args.seed)?;
    verify_model(model, check, args)
}

pub fn verify_model(model: CoverModel, check: Check, args: &VerifyArgs) -> Result<Outcome> {
    let start = Instant::now();
    let mut ctx = Ctx::new(model, args.seed)?;
    let cmp = match check {
        Check::QuadricShifts => quadric_shifts(&mut ctx)?,
        Check::SyzygyShifts => syzygy_shifts(&mut ctx)?,
        Check::ResolventProfile => resolvent_profile_check(&mut ctx, args)?,
        Check::ResolventGenus => resolvent_genus_check(&mut ctx, args)?,
        Check::FirstSyzygyUnion => first_syzygy_union(&mut ctx)?,
        Check::Volume => volume_check(&mut ctx, args)?,
        Check::Duality => duality_check(&mut ctx, args)?,
        Check::QuarticDihedral => quartic_dihedral(&mut ctx)?,
        Check::CayleySextic => cayley_sextic(&mut ctx)?,
        Check::HirzebruchPrediction => hirzebruch_check(&mut ctx, args)?,
        Check::Gassmann => gassmann_check(&mut ctx)?,
    };
    let branching = ctx.report.classification;
    let satisfied = match check.hypothesis() {
        Hypothesis::Simple => branching == Classification::Simple,
        Hypothesis::SimpleOrGood => branching != Classification::Other,
    };
    let needs = match check.hypothesis() {
        Hypothesis::Simple => "simple",
        Hypothesis::SimpleOrGood => "simple or good",
    };
    let mut out = json!({
        "schema": SCHEMA,
        "command": "verify",
        "check": check.name(),
        "d": ctx.d,
        "genus": ctx.genus,
        "scrollar": profile_json(&ctx.e),
        "hypotheses": {
            "branching": branching.label(),
            "required": needs,
            "satisfied": satisfied,
        },
        "ramification": ramification_json(&ctx.report),
        "predicted": cmp.predicted,
        "measured": cmp.measured,
        "match": cmp.matched,
        "conclusive": satisfied,
    });
    if !cmp.details.is_empty() {
        out["details"] = Value::Object(cmp.details);
    }
    if args.timing {
        out["runtime_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    Ok(Outcome { json: out, matched: cmp.matched, conclusive: satisfied })
}

fn two_row(d: usize) -> Partition {
    Partition::new(vec![d as u32 - 2, 2]).expect("d >= 4")
}

fn quadric_shifts(ctx: &mut Ctx) -> Result<Comparison> {
    ctx.need_degree(ctx.d >= 4, "d >= 4")?;
    let lam = two_row(ctx.d);
    let iso = ctx.table.isolate(&lam)?;
    let (_, q) = ctx.quadrics()?;
    let measured = q.degrees.clone();
    let (in_interval, respected) = (q.in_interval, q.degrees_respected());
    Ok(Comparison::new(profile_json(&iso), json!(measured), same(iso.values(), &measured))
        .with("partition", partition_json(&lam))
        .with("provenance", json!(iso.provenance().label()))
        .with("in_schreyer_interval", json!(in_interval))
        .with("degrees_respected", json!(respected)))
}

fn syzygy_shifts(ctx: &mut Ctx) -> Result<Comparison> {
    ctx.need_degree(ctx.d >= 4, "d >= 4")?;
    let d = ctx.d;
    let (cfg, q) = ctx.quadrics()?;
    let res = relative_resolution(cfg, q, d - 3)?;
    let mut predicted = Vec::new();
    let mut measured = Vec::new();
    let mut unmeasured = Vec::new();
    let mut matched = res.betti_ok() && res.duality_ok();
    let mut any = false;
    for (i, shifts) in res.shifts.iter().enumerate() {
        let lam = Partition::syzygy_shape(d as u32, i as u32 + 1)?;
        measured.push(json!({ "step": i + 1, "shifts": shifts }));
        match ctx.table.isolate(&lam) {
            Ok(p) => {
                any = true;
                matched &= same(p.values(), shifts);
                predicted.push(json!({ "step": i + 1, "partition": partition_json(&lam), "profile": profile_json(&p) }));
            }
            Err(e) => unmeasured.push(json!({ "step": i + 1, "partition": partition_json(&lam), "reason": e.to_string() })),
        }
    }
    nothing_measured(any, &unmeasured)?;
    Ok(Comparison::new(json!(predicted), json!(measured), matched)
        .with("betti_table", json!(res.betti_table()))
        .with("last_shift", json!(res.last))
        .with("betti_ok", json!(res.betti_ok()))
        .with("duality_ok", json!(res.duality_ok()))
        .with("unmeasured", json!(unmeasured)))
}

fn resolvent_profile_check(ctx: &mut Ctx, args: &VerifyArgs) -> Result<Comparison> {
    let spec = ctx.spec(args.subgroup.as_deref())?;
    let rep = resolvent_scrollars(&mut ctx.table, &spec)?;
    let predicted = json!({
        "genus": rep.genus_predicted,
        "profile": rep.profile_predicted.as_ref().map(profile_json),
    });
    let measured = json!({ "genus": rep.genus_measured, "profile": profile_json(&rep.profile_measured) });
    Ok(Comparison::new(predicted, measured, rep.is_match())
        .with("subgroup", json!(rep.label))
        .with("index", json!(rep.index)))
}

fn resolvent_genus_check(ctx: &mut Ctx, args: &VerifyArgs) -> Result<Comparison> {
    let spec = ctx.spec(args.subgroup.as_deref())?;
    let h = spec.build(ctx.d)?;
    let (genus, pattern) = resolvent_genus(&h, ctx.genus)?;
    let m = ctx.table.measure(&spec)?;
    let ramified = h.p_value()? > 0;
    let (locus, inf) = if ramified {
        ctx.branch_locus()
    } else {
        (scrollar::exactalg::Poly::one(ctx.model.field()), false)
    };
    let (m_locus, m_inf) = &m.branch_locus;
    let matched = genus == m.genus && locus == *m_locus && inf == *m_inf;
    let predicted = json!({
        "genus": genus,
        "branching": partition_json(&pattern),
        "branch_locus": locus.to_string(),
        "branched_at_infinity": inf,
    });
    let measured = json!({
        "genus": m.genus,
        "branch_locus": m_locus.to_string(),
        "branched_at_infinity": m_inf,
    });
    Ok(Comparison::new(predicted, measured, matched).with("subgroup", json!(m.label)).with("index", json!(m.index)))
}

fn first_syzygy_union(ctx: &mut Ctx) -> Result<Comparison> {
    ctx.need_degree(ctx.d >= 4, "d >= 4")?;
    let m = ctx.table.measure(&SubgroupSpec::Tag(CatalogTag::PairSum))?;
    let e = ctx.e.clone();
    let (_, q) = ctx.quadrics()?;
    let mut predicted = e.values().to_vec();
    predicted.extend_from_slice(&q.degrees);
    let predicted = sorted(predicted);
    let matched = same(&predicted, m.profile.values());
    Ok(Comparison::new(json!(predicted), profile_json(&m.profile), matched)
        .with("scrollar", profile_json(&e))
        .with("quadric_shifts", json!(q.degrees)))
}

fn volume_check(ctx: &mut Ctx, args: &VerifyArgs) -> Result<Comparison> {
    let (g, d) = (ctx.genus, ctx.d as i64);
    let simple = ctx.report.is_simple();
    let mut predicted = Map::new();
    let mut measured = Map::new();
    let mut unmeasured = Vec::new();
    let mut outside = Vec::new();
    let mut matched = true;
    let mut any = false;
    for lam in ctx.selected(args.partition.as_deref())? {
        let v = volume(&lam, g, d);
        predicted.insert(lam.to_string(), json!(v));
        let covered = simple || lam.parts() == [d as u32 - 1, 1] || (d >= 4 && lam == two_row(d as usize));
        match ctx.table.isolate(&lam) {
            Ok(p) => {
                if covered {
                    matched &= p.sum() == v;
                    any = true;
                } else {
                    outside.push(partition_json(&lam));
                }
                measured.insert(lam.to_string(), json!({ "sum": p.sum(), "profile": profile_json(&p) }));
            }
            Err(e) => unmeasured.push(json!({ "partition": partition_json(&lam), "reason": e.to_string() })),
        }
    }
    nothing_measured(any, &unmeasured)?;
    Ok(Comparison::new(Value::Object(predicted), Value::Object(measured), matched)
        .with("outside_hypotheses", json!(outside))
        .with("unmeasured", json!(unmeasured)))
}

fn duality_check(ctx: &mut Ctx, args: &VerifyArgs) -> Result<Comparison> {
    let (g, d) = (ctx.genus, ctx.d as i64);
    let mut pairs = Vec::new();
    for lam in ctx.selected(args.partition.as_deref())? {
        let dual = lam.dual();
        if dual.len() == 1 || lam.len() == d as usize {
            continue;
        }
        let key = if lam <= dual { (lam.clone(), dual) } else { (dual, lam.clone()) };
        if !pairs.contains(&key) {
            pairs.push(key);
        }
    }
    if pairs.is_empty() {
        return Err(LabError::Usage("no partition pair with both sides nontrivial".into()));
    }
    let mut predicted = Map::new();
    let mut measured = Map::new();
    let mut unmeasured = Vec::new();
    let mut matched = true;
    for (a, b) in pairs {
        let key = format!("{a}/{b}");
        let pa = ctx.table.isolate_measured(&a);
        let pb = ctx.table.isolate_measured(&b);
        match (pa, pb) {
            (Ok(pa), Ok(pb)) => {
                let expect = dual_profile(&pa, g, d)?;
                matched &= expect.same_values(&pb);
                predicted.insert(key.clone(), profile_json(&expect));
                measured.insert(key, json!({ a.to_string(): profile_json(&pa), b.to_string(): profile_json(&pb) }));
            }
            (ra, rb) => {
                let reason: Vec<String> = [ra.err(), rb.err()].into_iter().flatten().map(|e| e.to_string()).collect();
                unmeasured.push(json!({ "pair": key, "reason": reason.join("; ") }));
            }
        }
    }
    let any = !measured.is_empty();
    nothing_measured(any, &unmeasured)?;
    Ok(Comparison::new(Value::Object(predicted), Value::Object(measured), matched)
        .with("unmeasured", json!(unmeasured)))
}

fn quartic_dihedral(ctx: &mut Ctx) -> Result<Comparison> {
    ctx.need_degree(ctx.d == 4, "d = 4")?;
    let m = ctx.table.measure(&SubgroupSpec::Tag(CatalogTag::QuarticDihedral))?;
    let seed = ctx.seed;
    let g = ctx.genus;
    let (cfg, q) = ctx.quadrics()?;
    let pencil = pencil_matches_cubic_resolvent(cfg, q, 4, seed)?;
    let b1 = q.degrees.clone();
    let matched = m.genus == g + 1 && same(m.profile.values(), &b1);
    Ok(Comparison::new(
        json!({ "genus": g + 1, "profile": b1 }),
        json!({ "genus": m.genus, "profile": profile_json(&m.profile) }),
        matched,
    )
    .with("pencil_matches_cubic_resolvent", json!(pencil)))
}

fn cayley_sextic(ctx: &mut Ctx) -> Result<Comparison> {
    ctx.need_degree(ctx.d == 5, "d = 5")?;
    let m = ctx.table.measure(&SubgroupSpec::Tag(CatalogTag::CayleySextic))?;
    let g = ctx.genus;
    let (cfg, q) = ctx.quadrics()?;
    let res = relative_resolution(cfg, q, 2)?;
    let b2 = res.shifts[1].clone();
    let dual_of_b1 = sorted(res.shifts[0].iter().map(|b| g + 4 - b).collect());
    let duality = dual_of_b1 == sorted(b2.clone());
    let matched = m.genus == 3 * g + 7 && same(m.profile.values(), &b2) && duality;
    Ok(Comparison::new(
        json!({ "genus": 3 * g + 7, "profile": b2 }),
        json!({ "genus": m.genus, "profile": profile_json(&m.profile) }),
        matched,
    )
    .with("first_step", json!(res.shifts[0]))
    .with("duality_ok", json!(duality)))
}

fn hirzebruch_check(ctx: &mut Ctx, args: &VerifyArgs) -> Result<Comparison> {
    let (c, e) = args
        .hirzebruch
        .ok_or_else(|| LabError::Usage("this check needs --hirzebruch c,e".into()))?;
    let d = ctx.d as i64;
    let expected_genus = hirzebruch_genus(c, d, e)?;
    let expected_e: Vec<i64> = (1..d).map(|i| c + i * e).collect();
    if expected_genus != ctx.genus || !same(&expected_e, ctx.e.values()) {
        return Err(LabError::Usage(format!(
            "curve has genus {} and scrollar invariants {:?}, not those of a ({c},{d},{e}) curve",
            ctx.genus,
            ctx.e.values()
        )));
    }
    let mut predicted = Map::new();
    let mut measured = Map::new();
    let mut unmeasured = Vec::new();
    let mut counterexamples = Vec::new();
    let mut matched = true;
    for lam in ctx.selected(args.partition.as_deref())? {
        let pred = hirzebruch_profile(c, e, &lam);
        predicted.insert(lam.to_string(), profile_json(&pred));
        match ctx.table.isolate(&lam) {
            Ok(p) => {
                measured.insert(lam.to_string(), profile_json(&p));
                if !pred.same_values(&p) {
                    if lam.is_hook() {
                        matched = false;
                    } else {
                        counterexamples.push(partition_json(&lam));
                    }
                }
            }
            Err(err) => unmeasured.push(json!({ "partition": partition_json(&lam), "reason": err.to_string() })),
        }
    }
    let any = !measured.is_empty();
    nothing_measured(any, &unmeasured)?;
    Ok(Comparison::new(Value::Object(predicted), Value::Object(measured), matched)
        .with("counterexamples", json!(counterexamples))
        .with("unmeasured", json!(unmeasured)))
}

fn generator_spec(h: &PermSubgroup) -> SubgroupSpec {
    SubgroupSpec::Generators(h.generators().iter().map(|g| g.to_string()).collect())
}

fn gassmann_check(ctx: &mut Ctx) -> Result<Comparison> {
    ctx.need_degree(ctx.d == 6, "d = 6")?;
    let (a, b) = gassmann_pair();
    let chars = ctx.table.chars().clone();
    let mut known = ctx.table.predicted_table()?;
    let mut missing = Vec::new();
    for (lam, _) in a.induced_trivial_multiplicities(&chars)? {
        if lam.len() == 1 || known.contains_key(&lam) {
            continue;
        }
        match ctx.table.isolate(&lam) {
            Ok(p) => {
                known.insert(lam, p);
            }
            Err(e) => missing.push(json!({ "partition": partition_json(&lam), "reason": e.to_string() })),
        }
    }
    for (k, v) in ctx.table.entries() {
        known.entry(k.clone()).or_insert_with(|| v.clone());
    }
    let mut predicted = Vec::new();
    let mut measured = Vec::new();
    let mut sides = Vec::new();
    for h in [&a, &b] {
        let decomposition = h.induced_trivial_multiplicities(&chars)?;
        let (genus, _) = resolvent_genus(h, ctx.genus)?;
        let profile = resolvent_profile(h, &known, &chars).ok();
        let spec = generator_spec(h);
        predicted.push(json!({
            "subgroup": spec.label(),
            "genus": genus,
            "decomposition": decomposition.iter().map(|(l, m)| json!([l.to_string(), m])).collect::<Vec<_>>(),
            "profile": profile.as_ref().map(profile_json),
        }));
        measured.push(match ctx.table.measure(&spec) {
            Ok(m) => json!({ "subgroup": spec.label(), "genus": m.genus, "profile": profile_json(&m.profile) }),
            Err(e) => json!({ "subgroup": spec.label(), "unmeasured": e.to_string() }),
        });
        sides.push((decomposition, genus, profile));
    }
    let (x, y) = (&sides[0], &sides[1]);
    let profiles_equal = match (&x.2, &y.2) {
        (Some(p), Some(q)) => p.same_values(q),
        _ => true,
    };
    let measured_equal = match (&measured[0]["profile"], &measured[1]["profile"]) {
        (Value::Array(p), Value::Array(q)) => p == q && measured[0]["genus"] == measured[1]["genus"],
        _ => true,
    };
    let equivalent = gassmann_equivalent(&a, &b);
    let conjugate = a.is_conjugate_to(&b);
    let matched = equivalent && !conjugate && x.0 == y.0 && x.1 == y.1 && profiles_equal && measured_equal;
    Ok(Comparison::new(json!(predicted), json!(measured), matched)
        .with("gassmann_equivalent", json!(equivalent))
        .with("conjugate", json!(conjugate))
        .with("unisolated", json!(missing)))
}
