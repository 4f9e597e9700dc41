use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::bipoly::BiPoly;
use crate::exactalg::{Poly, PrimeField};

use super::model::CoverModel;
use super::ramify::Classification;
use super::reduce::Analysis;
use super::{FunError, Result};

/// Lattice points (i, j) of t^i x^j under the polygon of bidegree (c, d) on F_e.
pub fn hirzebruch_support(c: usize, d: usize, e: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for j in 0..=d {
        for i in 0..=c + e * (d - j) {
            v.push((i, j));
        }
    }
    v
}

/// Random polynomial supported on the polygon, with a_d of full degree c.
pub fn hirzebruch_curve(field: PrimeField, c: usize, d: usize, e: usize, seed: u64) -> BiPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.p();
    let coeffs = (0..=d)
        .map(|j| {
            let n = c + e * (d - j);
            let mut v: Vec<u64> = (0..=n).map(|_| rng.gen_range(0..p)).collect();
            if v[n] == 0 {
                v[n] = 1;
            }
            Poly::from_coeffs(field, v)
        })
        .collect();
    BiPoly::new(field, coeffs)
}

/// a_d^{d-1} f(t, x/a_d).
pub fn monicize(f: &BiPoly) -> BiPoly {
    let d = f.deg() as usize;
    let ad = f.coeff(d);
    let c = (0..=d)
        .map(|j| if j == d { Poly::one(f.field()) } else { f.coeff(j).mul(&ad.pow((d - 1 - j) as u64)) })
        .collect();
    BiPoly::new(f.field(), c)
}

/// A monic model of a random curve on F_e with simple branching (or good
/// branching when allowed), with the number of attempts used.
pub fn generate_hirzebruch_model(
    field: PrimeField,
    c: usize,
    d: usize,
    e: usize,
    seed: u64,
    allow_good: bool,
) -> Result<(CoverModel, usize)> {
    let mut last = FunError::Reducible;
    for attempt in 0..64u64 {
        let s = seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let f = monicize(&hirzebruch_curve(field, c, d, e, s));
        let model = match CoverModel::validate(f, false, s) {
            Ok(m) => m,
            Err(err) => {
                last = err;
                continue;
            }
        };
        let a = Analysis::new(&model)?;
        let rep = a.ramification_report(s)?;
        match rep.classification {
            Classification::Simple => return Ok((model, attempt as usize + 1)),
            Classification::Good if allow_good => return Ok((model, attempt as usize + 1)),
            _ => last = FunError::Certificate("branching is not simple".into()),
        }
    }
    Err(last)
}
