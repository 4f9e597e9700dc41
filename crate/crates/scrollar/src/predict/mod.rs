//! Closed-form predictions: volumes, duality, resolvent genera, bounds and
//! the tableau recipe for Hirzebruch curves.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::symrep::{binomial, standard_tableaux, CharacterTable, Partition, PermSubgroup, SymError};

pub type Rational = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PredictError {
    #[error("index {i} out of range for d = {d}")]
    IndexOutOfRange { d: i64, i: i64 },
    #[error("profile entry {entry} exceeds g+d-1 = {bound}")]
    EntryTooLarge { entry: i64, bound: i64 },
    #[error("no profile supplied for {0}")]
    MissingEntry(Partition),
    #[error("non-integral value {0}")]
    NonIntegral(String),
    #[error("block {block:?} is not contained in {whole:?}")]
    NotContained { block: Vec<i64>, whole: Vec<i64> },
    #[error(transparent)]
    Sym(#[from] SymError),
}

pub type Result<T> = std::result::Result<T, PredictError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Measured,
    Predicted,
    DerivedBySubtraction,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::Measured => "measured",
            Provenance::Predicted => "predicted",
            Provenance::DerivedBySubtraction => "derived-by-subtraction",
        }
    }
}

/// Sorted multiset of scrollar-type invariants.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScrollarProfile {
    values: Vec<i64>,
    provenance: Provenance,
}

impl ScrollarProfile {
    pub fn new(mut values: Vec<i64>, provenance: Provenance) -> Self {
        values.sort_unstable();
        ScrollarProfile { values, provenance }
    }

    pub fn predicted(values: Vec<i64>) -> Self {
        ScrollarProfile::new(values, Provenance::Predicted)
    }

    pub fn measured(values: Vec<i64>) -> Self {
        ScrollarProfile::new(values, Provenance::Measured)
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = p;
        self
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }

    pub fn max(&self) -> Option<i64> {
        self.values.last().copied()
    }

    /// Multiset equality, ignoring provenance.
    pub fn same_values(&self, other: &ScrollarProfile) -> bool {
        self.values == other.values
    }

    pub fn union(&self, other: &ScrollarProfile) -> ScrollarProfile {
        let mut v = self.values.clone();
        v.extend_from_slice(&other.values);
        ScrollarProfile::new(v, self.provenance)
    }

    /// Multiset difference `self − block`.
    pub fn minus(&self, block: &ScrollarProfile) -> Result<ScrollarProfile> {
        let mut rest = self.values.clone();
        for x in &block.values {
            match rest.iter().position(|y| y == x) {
                Some(k) => {
                    rest.remove(k);
                }
                None => {
                    return Err(PredictError::NotContained {
                        block: block.values.clone(),
                        whole: self.values.clone(),
                    })
                }
            }
        }
        Ok(ScrollarProfile::new(rest, Provenance::DerivedBySubtraction))
    }
}

impl fmt::Debug for ScrollarProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

/// Degree, genus and scrollar invariants of a cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSummary {
    pub d: i64,
    pub g: i64,
    pub e: ScrollarProfile,
}

impl CoverSummary {
    pub fn sum_ok(&self) -> bool {
        self.e.len() as i64 == self.d - 1 && self.e.sum() == self.g + self.d - 1
    }

    pub fn maroni_ok(&self) -> bool {
        self.e.max().map_or(true, |m| m * self.d <= 2 * self.g + 2 * self.d - 2)
    }
}

/// All i-element subset sums of `e`.
pub fn hook_profile(e: &ScrollarProfile, i: usize) -> Result<ScrollarProfile> {
    let n = e.len();
    if i > n {
        return Err(PredictError::IndexOutOfRange { d: n as i64 + 1, i: i as i64 });
    }
    let mut out = Vec::new();
    let vals = e.values();
    fn rec(vals: &[i64], start: usize, left: usize, acc: i64, out: &mut Vec<i64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for k in start..vals.len() {
            if vals.len() - k < left {
                break;
            }
            rec(vals, k + 1, left - 1, acc + vals[k], out);
        }
    }
    rec(vals, 0, i, 0, &mut out);
    Ok(ScrollarProfile::predicted(out))
}

pub fn volume(lambda: &Partition, g: i64, d: i64) -> i64 {
    lambda.p_value() as i64 * (g + d - 1)
}

pub fn dual_profile(p: &ScrollarProfile, g: i64, d: i64) -> Result<ScrollarProfile> {
    let top = g + d - 1;
    let mut out = Vec::with_capacity(p.len());
    for &x in p.values() {
        if x > top {
            return Err(PredictError::EntryTooLarge { entry: x, bound: top });
        }
        out.push(top - x);
    }
    Ok(ScrollarProfile::new(out, p.provenance()))
}

/// Genus of the resolvent and its branching pattern `(2^{p(H)}, 1^{[S_d:H]-2p(H)})`.
pub fn resolvent_genus(h: &PermSubgroup, g: i64) -> Result<(i64, Partition)> {
    let genus = h.resolvent_genus(g)?;
    let p = h.p_value()? as usize;
    let idx = h.index() as usize;
    let mut parts = vec![2u32; p];
    parts.extend(std::iter::repeat(1).take(idx - 2 * p));
    Ok((genus, Partition::new(parts)?))
}

/// Union of table entries weighted by multiplicity in the permutation character.
pub fn resolvent_profile(
    h: &PermSubgroup,
    table: &BTreeMap<Partition, ScrollarProfile>,
    chars: &CharacterTable,
) -> Result<ScrollarProfile> {
    let mut values = Vec::new();
    for (lam, mult) in h.induced_trivial_multiplicities(chars)? {
        if lam.len() == 1 {
            continue;
        }
        let block = table.get(&lam).ok_or_else(|| PredictError::MissingEntry(lam.clone()))?;
        for _ in 0..mult {
            values.extend_from_slice(block.values());
        }
    }
    Ok(ScrollarProfile::predicted(values))
}

/// β_i = d(d-2-i)C(d-2,i-1)/(i+1).
pub fn betti(d: i64, i: i64) -> i64 {
    d * (d - 2 - i) * binomial(d - 2, i - 1) / (i + 1)
}

pub fn schreyer_sum(d: i64, i: i64, g: i64) -> Result<i64> {
    if i < 1 || i > d - 3 {
        return Err(PredictError::IndexOutOfRange { d, i });
    }
    Ok((d - 2 - i) * binomial(d - 2, i - 1) * (g + d - 1))
}

pub fn maroni_partition_bound(lambda: &Partition, g: i64) -> Rational {
    let d = lambda.d() as i64;
    let sq: i64 = lambda.parts().iter().map(|&x| (x as i64) * (x as i64)).sum();
    Rational::new((d * d - sq) * (g + d - 1), d * (d - 1))
}

pub fn schreyer_interval(d: i64, i: i64, g: i64) -> Result<(Rational, Rational)> {
    if i < 1 || i > d - 3 {
        return Err(PredictError::IndexOutOfRange { d, i });
    }
    let den = d * (d - 1);
    let lo = Rational::new((i * (i + 1) + 2) * (g + d - 1), den);
    let hi = Rational::new(((i + 1) * (2 * d - i - 2) - 2) * (g + d - 1), den);
    Ok((lo, hi))
}

pub fn generic_upper_bound(lambda: &Partition, g: i64) -> Rational {
    let d = lambda.d() as i64;
    let i = lambda.depth() as i64;
    Rational::new(i * g, d - 1) + Rational::from_integer(2 * i)
}

/// Multiset of Σ_{i∈I(T)} (c + i·e) over standard tableaux T of shape λ.
pub fn hirzebruch_profile(c: i64, e: i64, lambda: &Partition) -> ScrollarProfile {
    let vals = standard_tableaux(lambda)
        .iter()
        .map(|t| t.descents().iter().map(|&i| c + i as i64 * e).sum())
        .collect();
    ScrollarProfile::predicted(vals)
}

/// (d-1)(c + de/2 - 1).
pub fn hirzebruch_genus(c: i64, d: i64, e: i64) -> Result<i64> {
    let twice = (d - 1) * (2 * c + d * e - 2);
    if twice % 2 != 0 {
        return Err(PredictError::NonIntegral(format!("({d}-1)(2c+de-2)/2 with c={c}, e={e}")));
    }
    Ok(twice / 2)
}
