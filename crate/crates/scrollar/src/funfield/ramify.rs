use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::factor::factorize;
use crate::exactalg::linalg::charpoly_fp;
use crate::exactalg::{ExtField, Poly};
use crate::symrep::Partition;

use super::order::OrderData;
use super::reduce::Analysis;
use super::{FunError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchPlace {
    pub place: Place,
    pub splitting: Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Simple,
    Good,
    Other,
}

impl Classification {
    pub fn label(self) -> &'static str {
        match self {
            Classification::Simple => "simple",
            Classification::Good => "good",
            Classification::Other => "other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    pub places: Vec<BranchPlace>,
    pub classification: Classification,
}

impl RamificationReport {
    pub fn is_simple(&self) -> bool {
        self.classification == Classification::Simple
    }
}

fn transposition_type(d: u32) -> Partition {
    let mut v = vec![2];
    v.extend(std::iter::repeat(1).take(d as usize - 2));
    Partition::new(v).expect("valid")
}

fn three_cycle_type(d: u32) -> Option<Partition> {
    (d >= 3).then(|| {
        let mut v = vec![3];
        v.extend(std::iter::repeat(1).take(d as usize - 3));
        Partition::new(v).expect("valid")
    })
}

/// Splitting type at π from the factorization of a random element's
/// characteristic polynomial on O/πO over F_p.
fn splitting_type(od: &OrderData, pi: &Poly, seed: u64) -> Result<Partition> {
    let d = od.d();
    let fld = pi.field();
    let k = pi.deg() as usize;
    let fq = ExtField::new(pi.clone());
    let rad = od.radical_mod(&fq).len();
    let target = k * (d - rad);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..48u64 {
        let x: Vec<Poly> = (0..d)
            .map(|_| Poly::from_coeffs(fld, (0..k).map(|_| rng.gen_range(0..fld.p())).collect()))
            .collect();
        let n = d * k;
        let mut big = vec![vec![0u64; n]; n];
        for i in 0..d {
            let row: Vec<Poly> = od.mul_coords(&x, i).iter().map(|c| fq.reduce(c)).collect();
            for s in 0..k {
                for (j, c) in row.iter().enumerate() {
                    let e = fq.reduce(&c.shift(s));
                    for r in 0..k {
                        big[i * k + s][j * k + r] = e.coeff(r);
                    }
                }
            }
        }
        let cp = Poly::from_coeffs(fld, charpoly_fp(&fld, &big));
        let fac = factorize(&cp, seed ^ attempt.wrapping_mul(0x9e37_79b9));
        let distinct: usize = fac.iter().map(|(h, _)| h.deg() as usize).sum();
        if distinct != target {
            continue;
        }
        let mut parts = Vec::new();
        for (h, m) in &fac {
            let hd = h.deg() as usize;
            if hd % k != 0 {
                return Err(FunError::Certificate("residue degree not a multiple of the place degree".into()));
            }
            parts.extend(std::iter::repeat(*m as u32).take(hd / k));
        }
        if parts.iter().any(|&e| e as u64 % fld.p() == 0) {
            return Err(FunError::Wild);
        }
        return Partition::from_unsorted(parts).map_err(|e| FunError::Certificate(e.to_string()));
    }
    Err(FunError::Certificate("no separating element found for the residue algebra".into()))
}

pub fn ramification_report(a: &Analysis, seed: u64) -> Result<RamificationReport> {
    let d = a.model().d() as u32;
    let mut places = Vec::new();
    let fin = a.finite().data()?;
    for (pi, _) in factorize(&a.finite().disc, seed ^ 0x2a) {
        let t = splitting_type(&fin, &pi, seed)?;
        if t.len() == d as usize {
            return Err(FunError::Certificate(format!("unramified prime {pi} divides the discriminant")));
        }
        places.push(BranchPlace { place: Place::Finite(pi), splitting: t });
    }
    if a.infinite().disc.valuation().unwrap_or(0) > 0 {
        let inf = a.infinite().data()?;
        let u = Poly::var(a.model().field());
        let t = splitting_type(&inf, &u, seed)?;
        places.push(BranchPlace { place: Place::Infinity, splitting: t });
    }
    let simple = transposition_type(d);
    let three = three_cycle_type(d);
    let classification = if places.iter().all(|b| b.splitting == simple) {
        Classification::Simple
    } else if places.iter().all(|b| b.splitting == simple || Some(&b.splitting) == three.as_ref()) {
        Classification::Good
    } else {
        Classification::Other
    };
    Ok(RamificationReport { places, classification })
}
