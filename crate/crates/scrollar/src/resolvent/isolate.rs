use std::collections::{BTreeMap, BTreeSet};

use crate::funfield::{Analysis, CoverModel};
use crate::predict::{dual_profile, hook_profile, resolvent_genus, resolvent_profile, Provenance, ScrollarProfile};
use crate::symrep::{young_subgroup, CatalogTag, CharacterTable, Partition, PermSubgroup, SubgroupSpec};

use super::{ResolventError, ResolventMeasurement, ResolventRequest, Result};

/// Per-partition profiles of one cover, filled in on demand from resolvent
/// measurements.
pub struct ProfileTable {
    model: CoverModel,
    d: usize,
    genus: i64,
    seed: u64,
    chars: CharacterTable,
    entries: BTreeMap<Partition, ScrollarProfile>,
    measurements: BTreeMap<String, ResolventMeasurement>,
}

fn hook(d: usize, i: usize) -> Partition {
    let mut v = vec![(d - i) as u32];
    v.extend(std::iter::repeat(1).take(i));
    Partition::new(v).expect("hook")
}

fn two_row(d: usize) -> Option<Partition> {
    (d >= 4).then(|| Partition::new(vec![d as u32 - 2, 2]).expect("valid"))
}

impl ProfileTable {
    pub fn new(model: &CoverModel, seed: u64) -> Result<Self> {
        let d = model.d();
        let a = Analysis::new(model)?;
        let e = a.reduced_basis()?.profile();
        let mut entries = BTreeMap::new();
        entries.insert(Partition::row(d as u32), ScrollarProfile::measured(Vec::new()));
        entries.insert(hook(d, 1), e);
        Ok(ProfileTable {
            model: model.clone(),
            d,
            genus: a.genus(),
            seed,
            chars: CharacterTable::new(d as u32)?,
            entries,
            measurements: BTreeMap::new(),
        })
    }

    pub fn model(&self) -> &CoverModel {
        &self.model
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn scrollar(&self) -> &ScrollarProfile {
        &self.entries[&hook(self.d, 1)]
    }

    pub fn entries(&self) -> &BTreeMap<Partition, ScrollarProfile> {
        &self.entries
    }

    pub fn chars(&self) -> &CharacterTable {
        &self.chars
    }

    /// Closed-form entries: all hooks, from e.
    pub fn predicted_table(&self) -> Result<BTreeMap<Partition, ScrollarProfile>> {
        let e = self.scrollar().clone();
        let mut t = BTreeMap::new();
        t.insert(Partition::row(self.d as u32), ScrollarProfile::predicted(Vec::new()));
        for i in 1..self.d {
            t.insert(hook(self.d, i), hook_profile(&e, i)?);
        }
        Ok(t)
    }

    /// Build and analyze the resolvent for `spec` (cached by label).
    pub fn measure(&mut self, spec: &SubgroupSpec) -> Result<ResolventMeasurement> {
        let key = spec.label();
        if let Some(m) = self.measurements.get(&key) {
            return Ok(m.clone());
        }
        let mut req = ResolventRequest::new(&self.model, spec.clone());
        req.seed = self.seed;
        let m = req.build()?.measure(self.seed)?;
        self.measurements.insert(key, m.clone());
        Ok(m)
    }

    pub fn measurements(&self) -> &BTreeMap<String, ResolventMeasurement> {
        &self.measurements
    }

    /// Profile of λ, using duality where convenient.
    pub fn isolate(&mut self, lambda: &Partition) -> Result<ScrollarProfile> {
        self.isolate_inner(lambda, true, &mut BTreeSet::new())
    }

    /// Profile of λ from resolvent measurements only (no duality step for λ
    /// itself).
    pub fn isolate_measured(&mut self, lambda: &Partition) -> Result<ScrollarProfile> {
        if let Some(p) = self.entries.get(lambda) {
            if p.provenance() != Provenance::Predicted {
                return Ok(p.clone());
            }
        }
        self.isolate_inner(lambda, false, &mut BTreeSet::new())
    }

    fn preferred(&self, lambda: &Partition) -> Option<SubgroupSpec> {
        let d = self.d;
        let tag = if *lambda == Partition::column(d as u32) {
            CatalogTag::Alternating
        } else if Some(lambda) == two_row(d).as_ref() {
            CatalogTag::PairSum
        } else if d == 5 && lambda.parts() == [2, 2, 1] {
            CatalogTag::CayleySextic
        } else if d == 6 && lambda.parts() == [2, 2, 2] {
            CatalogTag::ExoticSextic
        } else if d >= 3 && *lambda == hook(d, d - 2) {
            CatalogTag::AlternatingPointStabilizer
        } else {
            return None;
        };
        Some(SubgroupSpec::Tag(tag))
    }

    fn candidates(&self, lambda: &Partition) -> Result<Vec<SubgroupSpec>> {
        let mut out = Vec::new();
        if let Some(s) = self.preferred(lambda) {
            out.push(s);
        }
        let mut scored: Vec<(u64, SubgroupSpec)> = Vec::new();
        for tag in CatalogTag::ALL {
            if let Ok(h) = tag.subgroup(self.d) {
                if self.multiplicity(&h, lambda)? == 1 {
                    scored.push((h.index(), SubgroupSpec::Tag(tag)));
                }
            }
        }
        scored.sort_by_key(|(i, _)| *i);
        out.extend(scored.into_iter().map(|(_, s)| s));
        out.push(SubgroupSpec::Generators(young_generators(lambda)?));
        Ok(out)
    }

    fn multiplicity(&self, h: &PermSubgroup, lambda: &Partition) -> Result<u64> {
        Ok(h.induced_trivial_multiplicities(&self.chars)?
            .into_iter()
            .find(|(l, _)| l == lambda)
            .map_or(0, |(_, m)| m))
    }

    fn isolate_inner(
        &mut self,
        lambda: &Partition,
        allow_dual: bool,
        visiting: &mut BTreeSet<Partition>,
    ) -> Result<ScrollarProfile> {
        if let Some(p) = self.entries.get(lambda) {
            if allow_dual || p.provenance() != Provenance::Predicted {
                return Ok(p.clone());
            }
        }
        if lambda.d() as usize != self.d {
            return Err(ResolventError::NoRoute(lambda.to_string()));
        }
        if !visiting.insert(lambda.clone()) {
            return Err(ResolventError::NoRoute(lambda.to_string()));
        }
        let result = self.resolve(lambda, allow_dual, visiting);
        visiting.remove(lambda);
        let p = result?;
        self.entries.insert(lambda.clone(), p.clone());
        Ok(p)
    }

    fn resolve(
        &mut self,
        lambda: &Partition,
        allow_dual: bool,
        visiting: &mut BTreeSet<Partition>,
    ) -> Result<ScrollarProfile> {
        let dual = lambda.dual();
        if allow_dual && dual != *lambda && self.preferred(lambda).is_none() {
            if let Ok(p) = self.isolate_inner(&dual, true, visiting) {
                let q = dual_profile(&p, self.genus, self.d as i64)?;
                return Ok(q.with_provenance(Provenance::Predicted));
            }
        }
        let mut last = ResolventError::NoRoute(lambda.to_string());
        for spec in self.candidates(lambda)? {
            match self.subtract_route(lambda, &spec, visiting) {
                Ok(p) => return Ok(p),
                Err(e) => last = e,
            }
        }
        Err(last)
    }

    fn subtract_route(
        &mut self,
        lambda: &Partition,
        spec: &SubgroupSpec,
        visiting: &mut BTreeSet<Partition>,
    ) -> Result<ScrollarProfile> {
        let h = spec.build(self.d)?;
        let decomposition = h.induced_trivial_multiplicities(&self.chars)?;
        let mut known = ScrollarProfile::measured(Vec::new());
        let mut nontrivial = false;
        for (mu, mult) in &decomposition {
            if mu == lambda {
                if *mult != 1 {
                    return Err(ResolventError::NoRoute(lambda.to_string()));
                }
                continue;
            }
            let block = self.isolate_inner(mu, true, visiting)?;
            for _ in 0..*mult {
                known = known.union(&block);
            }
            nontrivial |= !block.is_empty();
        }
        let measured = self.measure(spec)?;
        let rest = measured
            .profile
            .minus(&known)
            .map_err(|e| ResolventError::Infeasible(format!("{} for {lambda}: {e}", spec.label())))?;
        Ok(if nontrivial { rest } else { rest.with_provenance(Provenance::Measured) })
    }
}

fn young_generators(lambda: &Partition) -> Result<Vec<String>> {
    let h = young_subgroup(lambda)?;
    let gens: Vec<String> = h.generators().iter().map(|g| g.to_string()).collect();
    Ok(if gens.is_empty() { vec!["()".to_string()] } else { gens })
}

/// Profile of λ for a cover, by resolvent subtraction.
pub fn isolate_partition_profile(model: &CoverModel, lambda: &Partition, seed: u64) -> Result<ScrollarProfile> {
    ProfileTable::new(model, seed)?.isolate(lambda)
}

/// Measured resolvent against the closed-form genus and, where every
/// constituent is known, the predicted profile.
#[derive(Clone, Debug)]
pub struct ResolventReport {
    pub label: String,
    pub index: usize,
    pub genus_predicted: i64,
    pub genus_measured: i64,
    pub profile_predicted: Option<ScrollarProfile>,
    pub profile_measured: ScrollarProfile,
}

impl ResolventReport {
    pub fn genus_match(&self) -> bool {
        self.genus_predicted == self.genus_measured
    }

    pub fn profile_match(&self) -> Option<bool> {
        self.profile_predicted.as_ref().map(|p| p.same_values(&self.profile_measured))
    }

    pub fn is_match(&self) -> bool {
        self.genus_match() && self.profile_match().unwrap_or(true)
    }
}

pub fn resolvent_scrollars(table: &mut ProfileTable, spec: &SubgroupSpec) -> Result<ResolventReport> {
    let h = spec.build(table.d())?;
    let m = table.measure(spec)?;
    let (genus_predicted, _) = resolvent_genus(&h, table.genus())?;
    let mut known = table.predicted_table()?;
    for (k, v) in table.entries() {
        known.entry(k.clone()).or_insert_with(|| v.clone());
    }
    let profile_predicted = resolvent_profile(&h, &known, table.chars()).ok();
    Ok(ResolventReport {
        label: m.label.clone(),
        index: m.index,
        genus_predicted,
        genus_measured: m.genus,
        profile_predicted,
        profile_measured: m.profile,
    })
}
