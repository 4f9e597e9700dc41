use crate::exactalg::ext::roots_in_splitting_field;
use crate::exactalg::interp::sample_stream;
use crate::exactalg::linalg::{det, inverse};
use crate::exactalg::{ExtField, Field, Poly, RatField, RatFunc};
use crate::funfield::{dual_basis, Analysis, CoverModel, FieldElem, FunctionField};

use super::{BhargavaError, Result};

/// A trace-zero reduced basis 1, α_1, …, α_{d-1}, its trace dual and the
/// products α*_j α*_k written in the basis.
#[derive(Clone, Debug)]
pub struct PointConfigData {
    pub model: CoverModel,
    pub ff: FunctionField,
    pub basis: Vec<FieldElem>,
    pub dual: Vec<FieldElem>,
    /// e_1 ≤ … ≤ e_{d-1}, the twists of α_1, …, α_{d-1}.
    pub scrollar: Vec<i64>,
    pub genus: i64,
    /// products[j][k][q]: coordinate at α_q of α*_{j+1} α*_{k+1}.
    pub products: Vec<Vec<Vec<RatFunc>>>,
}

impl PointConfigData {
    pub fn d(&self) -> usize {
        self.basis.len()
    }

    /// Number of projective coordinates, d - 1.
    pub fn nvars(&self) -> usize {
        self.basis.len() - 1
    }

    /// Tr(α_i α*_j) for all i, j.
    pub fn pairing(&self) -> Vec<Vec<RatFunc>> {
        self.basis
            .iter()
            .map(|a| self.dual.iter().map(|b| self.ff.trace(&self.ff.mul(a, b))).collect())
            .collect()
    }

    /// Polynomial vanishing at every pole of a basis or dual element and
    /// at every branch point of the model.
    pub fn bad_locus(&self) -> Poly {
        let mut l = self.model.disc().clone();
        for b in self.basis.iter().chain(&self.dual) {
            l = l.lcm(b.den());
        }
        l
    }
}

pub fn point_config(model: &CoverModel) -> Result<PointConfigData> {
    let d = model.d();
    if d < 3 {
        return Err(BhargavaError::Degree { d, need: "d >= 3" });
    }
    let analysis = Analysis::new(model)?;
    let ff = analysis.function_field();
    let red = analysis.reduced_basis()?.trace_zero(&ff);
    let dual = dual_basis(&ff, &red.basis)?;
    let rf = RatField::new(model.field());
    let power: Vec<Vec<RatFunc>> = red.basis.iter().map(|b| b.coords()).collect();
    let to_basis = inverse(&rf, &power).ok_or(BhargavaError::Fun(crate::funfield::FunError::Certificate(
        "reduced basis is singular".into(),
    )))?;
    let n = d - 1;
    let mut products = vec![vec![Vec::new(); n]; n];
    for j in 0..n {
        for k in j..n {
            let c = ff.mul(&dual[j + 1], &dual[k + 1]).coords();
            let q: Vec<RatFunc> = (0..d)
                .map(|col| {
                    let mut acc = RatFunc::zero(model.field());
                    for (r, cr) in c.iter().enumerate() {
                        if !cr.is_zero() && !to_basis[r][col].is_zero() {
                            acc = acc.add(&cr.mul(&to_basis[r][col]));
                        }
                    }
                    acc
                })
                .collect();
            products[k][j] = q.clone();
            products[j][k] = q;
        }
    }
    Ok(PointConfigData {
        model: model.clone(),
        ff,
        basis: red.basis,
        dual,
        scrollar: red.invariants[1..].to_vec(),
        genus: red.genus,
        products,
    })
}

/// The d points over a specialization t = t0, with coordinates in a
/// splitting field of f(t0, x).
#[derive(Clone, Debug)]
pub struct SpecializedPoints {
    pub t0: u64,
    pub ext: ExtField,
    pub roots: Vec<Poly>,
    /// d_matrix[j][i] = α_j evaluated at the i-th root (row 0 all ones).
    pub d_matrix: Vec<Vec<Poly>>,
    /// points[i][j] = α*_{j+1} at the i-th root, read off from the minors.
    pub points: Vec<Vec<Poly>>,
}

fn eval_elem(ext: &ExtField, e: &FieldElem, t0: u64, root: &Poly) -> Poly {
    let fld = ext.base();
    let den = e.den().eval(t0);
    let mut acc = ext.zero();
    for c in e.num().iter().rev() {
        acc = ext.add(&ext.mul(&acc, root), &ext.embed(c.eval(t0)));
    }
    acc.scale(fld.inv(den))
}

/// Specializations avoiding the bad locus, in seeded order; `trial`
/// selects which one.
pub fn specialized_points(cfg: &PointConfigData, seed: u64, trial: usize) -> Result<SpecializedPoints> {
    let field = cfg.model.field();
    let bad = cfg.bad_locus();
    let t0 = sample_stream(field, seed)
        .into_iter()
        .filter(|&a| bad.eval(a) != 0)
        .nth(trial)
        .ok_or(BhargavaError::NoSpecialization)?;
    let fa = cfg.model.poly().eval_t(t0);
    let (ext, roots) = roots_in_splitting_field(field, &fa, seed ^ t0);
    let d = cfg.d();
    let d_matrix: Vec<Vec<Poly>> = cfg
        .basis
        .iter()
        .map(|b| roots.iter().map(|r| eval_elem(&ext, b, t0, r)).collect())
        .collect();
    let det_d = det(&ext, &d_matrix);
    if ext.is_zero(&det_d) {
        return Err(BhargavaError::NoSpecialization);
    }
    let det_inv = ext.inv(&det_d);
    // α*_j at root i is the signed minor D_{j+1,i} over det D
    let points = (0..d)
        .map(|i| {
            (1..d)
                .map(|j| {
                    let minor = minor(&ext, &d_matrix, j, i);
                    let m = ext.mul(&minor, &det_inv);
                    if (i + j) % 2 == 1 {
                        ext.neg(&m)
                    } else {
                        m
                    }
                })
                .collect()
        })
        .collect();
    Ok(SpecializedPoints { t0, ext, roots, d_matrix, points })
}

fn minor(ext: &ExtField, m: &[Vec<Poly>], row: usize, col: usize) -> Poly {
    let sub: Vec<Vec<Poly>> = m
        .iter()
        .enumerate()
        .filter(|&(r, _)| r != row)
        .map(|(_, r)| r.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, x)| x.clone()).collect())
        .collect();
    if sub.is_empty() {
        return ext.one();
    }
    det(ext, &sub)
}
