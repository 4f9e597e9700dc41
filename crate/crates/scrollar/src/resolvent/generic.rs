use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::bipoly::BiPoly;
use crate::exactalg::ext::roots_in_splitting_field;
use crate::exactalg::interp::{interpolate_vector, monic_root};
use crate::exactalg::linalg::charpoly_fp;
use crate::exactalg::{discriminant_x, AlgError, Field, Poly, PrimeField};
use crate::funfield::CoverModel;
use crate::symrep::{Perm, PermSubgroup};

use super::splitting::SplittingAlgebra;
use super::{Evaluator, ResolventError, Result};

const RETRIES: usize = 8;

/// Exponent vectors of the H-orbit of z^w.
pub fn orbit_monomials(h: &PermSubgroup, weights: &[u32]) -> Vec<Vec<u32>> {
    let d = h.d();
    let mut set = BTreeSet::new();
    for g in h.elements() {
        let mut e = vec![0u32; d];
        for (i, &w) in weights.iter().enumerate() {
            e[g.apply(i)] += w;
        }
        set.insert(e);
    }
    set.into_iter().collect()
}

fn act(sigma: &Perm, e: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; e.len()];
    for (j, &x) in e.iter().enumerate() {
        out[sigma.apply(j)] = x;
    }
    out
}

/// Order of the stabilizer in S_d of the orbit sum of z^w under H.
pub fn orbit_sum_stabilizer_order(h: &PermSubgroup, weights: &[u32]) -> usize {
    let orbit: BTreeSet<Vec<u32>> = orbit_monomials(h, weights).into_iter().collect();
    let sd = PermSubgroup::symmetric(h.d());
    sd.elements()
        .iter()
        .filter(|s| orbit.iter().all(|e| orbit.contains(&act(s, e))))
        .count()
}

fn separates(h: &PermSubgroup, w: &[u32]) -> bool {
    w.iter().any(|&x| x > 0) && orbit_sum_stabilizer_order(h, w) == h.order()
}

/// Weight vector of least total weight (then least in lex order) whose orbit
/// sum has stabilizer exactly H.
pub fn minimal_weights(h: &PermSubgroup) -> Vec<u32> {
    let d = h.d();
    let cap = (d * (d - 1) / 2) as u32;
    for total in 1..=cap {
        let mut found = None;
        compositions(d, total, (d - 1) as u32, &mut Vec::new(), &mut |w| {
            if found.is_none() && separates(h, w) {
                found = Some(w.to_vec());
            }
        });
        if let Some(w) = found {
            return w;
        }
    }
    (0..d as u32).collect()
}

fn compositions(len: usize, total: u32, max: u32, cur: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if cur.len() == len {
        if total == 0 {
            visit(cur);
        }
        return;
    }
    for x in (0..=max.min(total)).rev() {
        cur.push(x);
        compositions(len, total - x, max, cur, visit);
        cur.pop();
    }
}

fn coset_reps(h: &PermSubgroup) -> Vec<Perm> {
    let sd = PermSubgroup::symmetric(h.d());
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for s in sd.elements() {
        if seen.contains(s.images()) {
            continue;
        }
        for g in h.elements() {
            seen.insert(s.compose(g).images().to_vec());
        }
        reps.push(s.clone());
    }
    reps
}

/// R_a for one specialization via the characteristic polynomial of the
/// invariant on the splitting algebra.
fn eval_splitting(field: PrimeField, coeffs: &[u64], orbit: &[Vec<u32>], order: usize) -> Option<Vec<u64>> {
    let alg = SplittingAlgebra::new(field, coeffs);
    let mut theta = vec![0u64; alg.dim()];
    for e in orbit {
        theta = alg.add(&theta, &alg.monomial(e));
    }
    let cp = charpoly_fp(&field, &alg.mult_matrix(&theta));
    monic_root(field, &cp, order)
}

/// R_a for one specialization from the roots in a splitting field.
fn eval_roots(field: PrimeField, fa: &Poly, orbit: &[Vec<u32>], reps: &[Perm], seed: u64) -> Option<Vec<u64>> {
    let (ext, roots) = roots_in_splitting_field(field, fa, seed);
    if roots.len() != fa.deg() as usize {
        return None;
    }
    let maxp = orbit.iter().flatten().copied().max().unwrap_or(0) as usize;
    let powers: Vec<Vec<Poly>> = roots
        .iter()
        .map(|r| {
            let mut v = vec![ext.one()];
            for k in 1..=maxp {
                let next = ext.mul(&v[k - 1], r);
                v.push(next);
            }
            v
        })
        .collect();
    let mut prod: Vec<Poly> = vec![ext.one()];
    for s in reps {
        let mut val = ext.zero();
        for e in orbit {
            let mut term = ext.one();
            for (j, &x) in e.iter().enumerate() {
                if x > 0 {
                    term = ext.mul(&term, &powers[s.apply(j)][x as usize]);
                }
            }
            val = ext.add(&val, &term);
        }
        // prod *= (y - val)
        let mut next = vec![ext.zero(); prod.len() + 1];
        for (i, c) in prod.iter().enumerate() {
            next[i + 1] = ext.add(&next[i + 1], c);
            next[i] = ext.sub(&next[i], &ext.mul(c, &val));
        }
        prod = next;
    }
    prod.iter().map(|c| (c.deg() <= 0).then(|| c.coeff(0))).collect()
}

/// Monic resolvent polynomial for H with the given weights, interpolated
/// over specializations t = a.
pub fn resolvent_poly(
    model: &CoverModel,
    h: &PermSubgroup,
    weights: &[u32],
    evaluator: Evaluator,
    seed: u64,
    parallel: bool,
) -> Result<BiPoly> {
    let field = model.field();
    let d = model.d();
    let f = model.poly();
    let orbit = orbit_monomials(h, weights);
    let index = h.index() as usize;
    let total: u32 = weights.iter().sum();
    let bound = index * total as usize * model.infinity_exponent();
    let order = h.order();
    let reps = coset_reps(h);
    let disc = model.disc().clone();
    let evaluator = match evaluator {
        Evaluator::Auto if d <= 5 => Evaluator::SplittingAlgebra,
        Evaluator::Auto => Evaluator::SplittingField,
        e => e,
    };
    let vals = interpolate_vector(
        field,
        bound + 1,
        seed,
        |a| evaluator == Evaluator::SplittingAlgebra || disc.eval(a) != 0,
        |a| match evaluator {
            Evaluator::SplittingField => eval_roots(field, &f.eval_t(a), &orbit, &reps, seed ^ a),
            _ => eval_splitting(field, &f.eval_t_nominal(a, d), &orbit, order),
        },
        parallel,
    )
    .map_err(|e| match e {
        AlgError::SampleRejected(_) => ResolventError::RootExtraction,
        e => e.into(),
    })?;
    Ok(BiPoly::new(field, vals))
}

/// Resolvent for H, retrying with fresh weights while the result is
/// inseparable.
pub fn resolvent_generic(
    model: &CoverModel,
    h: &PermSubgroup,
    weights: Option<&[u32]>,
    evaluator: Evaluator,
    seed: u64,
) -> Result<(BiPoly, Vec<u32>)> {
    let d = model.d();
    if h.d() != d {
        return Err(ResolventError::DegreeMismatch { subgroup: h.d(), model: d });
    }
    if d > 6 {
        return Err(ResolventError::TooLarge(d));
    }
    let mut w = match weights {
        Some(w) => {
            if w.len() > d {
                return Err(ResolventError::BadWeights(w.to_vec()));
            }
            let mut v = w.to_vec();
            v.resize(d, 0);
            v
        }
        None => minimal_weights(h),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..=RETRIES {
        if separates(h, &w) {
            let r = resolvent_poly(model, h, &w, evaluator, seed.wrapping_add(attempt as u64), false)?;
            if !discriminant_x(&r)?.is_zero() {
                return Ok((r, w));
            }
        }
        w = (0..d).map(|_| rng.gen_range(0..d as u32)).collect();
    }
    Err(ResolventError::NotSeparating(RETRIES))
}
