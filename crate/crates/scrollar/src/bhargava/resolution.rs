use std::collections::HashMap;

use crate::exactalg::linalg::{kernel, rref};
use crate::exactalg::{Poly, PrimeField};
use crate::predict::{betti, schreyer_interval};

use super::config::PointConfigData;
use super::forms::{add_exps, Monomials};
use super::quadrics::QuadricSet;
use super::{BhargavaError, Result};

/// One generator of a syzygy module: a vector, indexed by the generators
/// of the previous step, of forms of degree `xdeg` with F_p[t] coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syzygy {
    pub shift: i64,
    pub xdeg: usize,
    /// entries[m][monomial] over the previous generators m.
    pub entries: Vec<Vec<Poly>>,
}

/// Shifts b^{(i)} of the relative resolution of the curve in its scroll.
#[derive(Clone, Debug)]
pub struct RelativeResolution {
    pub d: usize,
    pub genus: i64,
    /// shifts[i-1] = sorted b^{(i)}.
    pub shifts: Vec<Vec<i64>>,
    pub generators: Vec<Vec<Syzygy>>,
    /// Shift of the last generator, present when the resolution is complete.
    pub last: Option<i64>,
}

impl RelativeResolution {
    /// Ranks per step: 1, β_1, …, β_{d-3}, 1 (truncated to what was computed).
    pub fn betti_table(&self) -> Vec<usize> {
        let mut out = vec![1];
        out.extend(self.shifts.iter().map(|s| s.len()));
        if self.last.is_some() {
            out.push(1);
        }
        out
    }

    pub fn betti_ok(&self) -> bool {
        let d = self.d as i64;
        self.shifts.iter().enumerate().all(|(i, s)| s.len() as i64 == betti(d, i as i64 + 1))
    }

    /// b^{(i)} = {g+d-1 - b^{(d-2-i)}} for every pair of computed steps,
    /// and the last shift equals g+d-1.
    pub fn duality_ok(&self) -> bool {
        let c = self.genus + self.d as i64 - 1;
        let n = self.d - 3;
        for i in 1..=self.shifts.len() {
            let j = n + 1 - i;
            if j >= 1 && j <= self.shifts.len() {
                let mut dual: Vec<i64> = self.shifts[j - 1].iter().map(|b| c - b).collect();
                dual.sort_unstable();
                if dual != self.shifts[i - 1] {
                    return false;
                }
            }
        }
        self.last.map_or(true, |l| l == c)
    }
}

/// Graded linear system: unknowns t^s·x^a·ε_m with s ≤ w(m, a) - n.
pub(crate) struct GradedSystem {
    pub step: usize,
    pub field: PrimeField,
    /// (m, monomial, w) for every unknown slot.
    pub slots: Vec<(usize, usize, i64)>,
    pub window: (i64, i64),
    pub expected: usize,
}

type RowKey = (usize, usize, usize);

impl GradedSystem {
    /// Minimal generators with their shifts, as (shift, slot polynomials),
    /// sorted by shift.
    pub fn solve<I>(&self, image: I) -> Result<Vec<(i64, Vec<Poly>)>>
    where
        I: Fn(usize, usize) -> Vec<(RowKey, u64)>,
    {
        let fld = self.field;
        let (lo, hi) = self.window;
        let exhausted = BhargavaError::WindowExhausted { step: self.step, lo, hi };
        // columns sorted by level w - s ascending
        let mut cols: Vec<(usize, usize, i64)> = Vec::new();
        for (si, &(_, _, w)) in self.slots.iter().enumerate() {
            for s in 0..=(w - lo).max(-1) {
                cols.push((si, s as usize, w - s));
            }
        }
        cols.sort_by_key(|&(si, s, level)| (level, si, s));
        let col_index: HashMap<(usize, usize), usize> =
            cols.iter().enumerate().map(|(i, &(si, s, _))| ((si, s), i)).collect();
        let mut rows: HashMap<RowKey, usize> = HashMap::new();
        let mut entries: Vec<(usize, usize, u64)> = Vec::new();
        for (c, &(si, s, _)) in cols.iter().enumerate() {
            for (key, v) in image(si, s) {
                if v == 0 {
                    continue;
                }
                let n = rows.len();
                let r = *rows.entry(key).or_insert(n);
                entries.push((r, c, v));
            }
        }
        let mut mat = vec![vec![0u64; cols.len()]; rows.len()];
        for (r, c, v) in entries {
            mat[r][c] = fld.add(mat[r][c], v);
        }
        let mut ker = kernel(&fld, &mat, cols.len());
        rref(&fld, &mut ker);
        ker.retain(|v| v.iter().any(|&x| x != 0));
        let pivot_level = |v: &Vec<u64>| -> i64 {
            let p = v.iter().position(|&x| x != 0).expect("nonzero");
            cols[p].2
        };
        if ker.iter().any(|v| pivot_level(v) > hi) {
            return Err(exhausted);
        }
        let shift_t = |v: &[u64]| -> Option<Vec<u64>> {
            let mut out = vec![0u64; v.len()];
            for (c, &x) in v.iter().enumerate() {
                if x != 0 {
                    let (si, s, _) = cols[c];
                    out[*col_index.get(&(si, s + 1))?] = x;
                }
            }
            Some(out)
        };
        let mut span = Reducer::new(fld);
        let mut gens: Vec<(i64, Vec<u64>)> = Vec::new();
        let mut multiples: Vec<Vec<u64>> = Vec::new();
        for n in (lo..=hi).rev() {
            for m in multiples.iter_mut() {
                *m = shift_t(m).ok_or(exhausted.clone())?;
                if !span.insert(m.clone()) {
                    return Err(BhargavaError::BettiMismatch { step: self.step, got: 0, expected: self.expected });
                }
            }
            for v in ker.iter().filter(|v| pivot_level(v) == n) {
                if span.insert(v.clone()) {
                    gens.push((n, v.clone()));
                    multiples.push(v.clone());
                }
            }
        }
        if span.len() != ker.len() || gens.len() < self.expected {
            return Err(exhausted);
        }
        if gens.len() > self.expected {
            return Err(BhargavaError::BettiMismatch { step: self.step, got: gens.len(), expected: self.expected });
        }
        gens.sort_by_key(|g| g.0);
        Ok(gens
            .into_iter()
            .map(|(b, v)| {
                let mut polys = vec![vec![0u64; 0]; self.slots.len()];
                for (c, &x) in v.iter().enumerate() {
                    if x != 0 {
                        let (si, s, _) = cols[c];
                        if polys[si].len() <= s {
                            polys[si].resize(s + 1, 0);
                        }
                        polys[si][s] = x;
                    }
                }
                (b, polys.into_iter().map(|c| Poly::from_coeffs(fld, c)).collect())
            })
            .collect())
    }
}

/// Incremental span with reduction in insertion order.
struct Reducer {
    field: PrimeField,
    basis: Vec<(usize, Vec<u64>)>,
}

impl Reducer {
    fn new(field: PrimeField) -> Self {
        Reducer { field, basis: Vec::new() }
    }

    fn len(&self) -> usize {
        self.basis.len()
    }

    /// Adds v if independent; reports whether it was.
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let f = self.field;
        for (p, b) in &self.basis {
            let c = v[*p];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    if *y != 0 {
                        *x = f.sub(*x, f.mul(c, *y));
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        self.basis.push((p, v));
        true
    }
}

pub(crate) fn window(d: i64, i: i64, g: i64) -> Result<(i64, i64)> {
    if i == d - 2 {
        let c = g + d - 1;
        return Ok((c - 2, c + 2));
    }
    let (lo, hi) = schreyer_interval(d, i, g)?;
    Ok((lo.floor().to_integer() - 2, hi.ceil().to_integer() + 2))
}

/// Next step: syzygies Σ_m L_m G_m = 0 with L_m forms of degree `xdeg`.
fn next_step(cfg: &PointConfigData, prev: &[Syzygy], step: usize, xdeg: usize, expected: usize) -> Result<Vec<Syzygy>> {
    let fld = cfg.model.field();
    let n = cfg.nvars();
    let e = &cfg.scrollar;
    let mons = Monomials::new(n, xdeg);
    let prev_deg = prev[0].xdeg;
    let prev_mons = Monomials::new(n, prev_deg);
    let out_mons = Monomials::new(n, prev_deg + xdeg);
    let mut slots = Vec::new();
    for (m, g) in prev.iter().enumerate() {
        for a in 0..mons.len() {
            slots.push((m, a, mons.weight(a, e) + g.shift));
        }
    }
    let sys = GradedSystem {
        step,
        field: fld,
        slots: slots.clone(),
        window: window(cfg.d() as i64, step as i64, cfg.genus)?,
        expected,
    };
    let gens = sys.solve(|si, s| {
        let (m, a, _) = slots[si];
        let mut out = Vec::new();
        for (l, comp) in prev[m].entries.iter().enumerate() {
            for (bi, p) in comp.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let mono = out_mons.index_of(&add_exps(mons.get(a), prev_mons.get(bi)));
                for (r, &c) in p.coeffs().iter().enumerate() {
                    if c != 0 {
                        out.push(((l, mono, r + s), c));
                    }
                }
            }
        }
        out
    })?;
    Ok(gens
        .into_iter()
        .map(|(b, polys)| {
            let mut entries = vec![vec![Poly::zero(fld); mons.len()]; prev.len()];
            for (si, p) in polys.into_iter().enumerate() {
                let (m, a, _) = slots[si];
                entries[m][a] = p;
            }
            Syzygy { shift: b, xdeg, entries }
        })
        .collect())
}

/// Syzygy shifts up to step `depth` (≤ d-3); at depth d-3 the last
/// generator is computed too.
pub fn relative_resolution(cfg: &PointConfigData, quadrics: &QuadricSet, depth: usize) -> Result<RelativeResolution> {
    let d = cfg.d();
    if d < 4 {
        return Err(BhargavaError::Degree { d, need: "d >= 4" });
    }
    if depth > d - 3 || depth == 0 {
        return Err(BhargavaError::Depth { depth, max: d - 3 });
    }
    let first = quadrics.generators.clone();
    let mut shifts = vec![first.iter().map(|s| s.shift).collect::<Vec<_>>()];
    let mut generators = vec![first];
    for step in 2..=depth {
        let prev = generators.last().expect("step 1 present");
        let next = next_step(cfg, prev, step, 1, betti(d as i64, step as i64) as usize)?;
        shifts.push(next.iter().map(|s| s.shift).collect());
        generators.push(next);
    }
    let mut last = None;
    if depth == d - 3 {
        let prev = generators.last().expect("step present");
        let fin = next_step(cfg, prev, d - 2, 2, 1)?;
        last = Some(fin[0].shift);
    }
    Ok(RelativeResolution { d, genus: cfg.genus, shifts, generators, last })
}
