use crate::exactalg::matrix::popov;
use crate::exactalg::{Poly, RatFunc};
use crate::predict::ScrollarProfile;

use super::elem::{trace_zero_basis, FieldElem, FunctionField};
use super::laurent::Laurent;
use super::model::CoverModel;
use super::order::{maximal_order, OrderBasis, Patch};
use super::ramify::{ramification_report, RamificationReport};
use super::{FunError, Result};

/// Both maximal orders of a model and its genus.
#[derive(Clone, Debug)]
pub struct Analysis {
    model: CoverModel,
    finite: OrderBasis,
    infinite: OrderBasis,
    genus: i64,
}

impl Analysis {
    pub fn new(model: &CoverModel) -> Result<Self> {
        let finite = maximal_order(model, Patch::Finite)?;
        let infinite = maximal_order(model, Patch::Infinite)?;
        let total = finite.disc.deg() + infinite.disc.valuation().unwrap_or(0) as i64;
        if total % 2 != 0 {
            return Err(FunError::Parity);
        }
        let genus = total / 2 - model.d() as i64 + 1;
        Ok(Analysis { model: model.clone(), finite, infinite, genus })
    }

    pub fn model(&self) -> &CoverModel {
        &self.model
    }

    pub fn finite(&self) -> &OrderBasis {
        &self.finite
    }

    pub fn infinite(&self) -> &OrderBasis {
        &self.infinite
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn function_field(&self) -> FunctionField {
        FunctionField::new(&self.model)
    }

    pub fn reduced_basis(&self) -> Result<ReducedBasisResult> {
        reduced_basis(self)
    }

    pub fn change_of_basis(&self) -> Result<Vec<Vec<Laurent>>> {
        change_of_basis(self)
    }

    pub fn ramification_report(&self, seed: u64) -> Result<RamificationReport> {
        ramification_report(self, seed)
    }
}

/// A reduced basis 1 = b_0, b_1, …, b_{d-1} of the finite maximal order with
/// t^{-e_i} b_i a basis at infinity.
#[derive(Clone, Debug)]
pub struct ReducedBasisResult {
    pub basis: Vec<FieldElem>,
    /// e_0 = 0 ≤ e_1 ≤ … ≤ e_{d-1}.
    pub invariants: Vec<i64>,
    pub genus: i64,
}

impl ReducedBasisResult {
    pub fn profile(&self) -> ScrollarProfile {
        ScrollarProfile::measured(self.invariants[1..].to_vec())
    }

    pub fn trace_zero(&self, ff: &FunctionField) -> ReducedBasisResult {
        ReducedBasisResult {
            basis: trace_zero_basis(ff, &self.basis),
            invariants: self.invariants.clone(),
            genus: self.genus,
        }
    }

    /// t^{-r} b integral at infinity, checked on power traces:
    /// deg Tr(b^j) ≤ r·j for j = 1..d.
    pub fn certify(&self, ff: &FunctionField) -> Result<()> {
        let d = ff.d();
        let sum: i64 = self.invariants[1..].iter().sum();
        if sum != self.genus + d as i64 - 1 {
            return Err(FunError::Certificate(format!("sum {sum} != g+d-1 = {}", self.genus + d as i64 - 1)));
        }
        for (b, &r) in self.basis.iter().zip(&self.invariants) {
            for (j, tr) in ff.power_traces(b, d).iter().enumerate() {
                if !tr.is_zero() && tr.degree() > r * (j as i64 + 1) {
                    return Err(FunError::Certificate(format!("element with twist {r} not integral at infinity")));
                }
            }
        }
        Ok(())
    }
}

fn inf_basis_laurent(a: &Analysis) -> Result<Vec<Vec<Laurent>>> {
    let inf = &a.infinite;
    let d = inf.d();
    let m = a.model.infinity_exponent() as i64;
    let k = match inf.den.valuation() {
        Some(k) if k as i64 == inf.den.deg() => k as i64,
        _ => return Err(FunError::Certificate("denominator at infinity is not a power of u".into())),
    };
    Ok((0..d)
        .map(|r| {
            (0..d)
                .map(|j| {
                    let l = Laurent::from_u_poly(&inf.numer[r][j]);
                    l.mul(&Laurent::new(Poly::one(inf.field()), k - m * j as i64))
                })
                .collect()
        })
        .collect())
}

/// den·B·V^{-1}: row i holds the coordinates of den·w_i (w the finite
/// basis) in the infinite basis, as Laurent polynomials in t.
pub fn change_of_basis(a: &Analysis) -> Result<Vec<Vec<Laurent>>> {
    let fin = &a.finite;
    let d = fin.d();
    let fld = fin.field();
    let v = inf_basis_laurent(a)?;
    let not_exact = || FunError::Certificate("change of basis is not Laurent".into());
    let mut c: Vec<Vec<Laurent>> = Vec::with_capacity(d);
    for row in &fin.numer {
        let b: Vec<Laurent> = row.iter().map(|x| Laurent::from_poly(x.clone())).collect();
        let mut out = vec![Laurent::zero(fld); d];
        for j in (0..d).rev() {
            let mut acc = b[j].clone();
            for k in j + 1..d {
                acc = acc.sub(&out[k].mul(&v[k][j]));
            }
            out[j] = acc.div(&v[j][j]).ok_or_else(not_exact)?;
        }
        c.push(out);
    }
    Ok(c)
}

pub fn reduced_basis(a: &Analysis) -> Result<ReducedBasisResult> {
    let fin = &a.finite;
    let d = fin.d();
    let fld = fin.field();
    let c = change_of_basis(a)?;
    let shift = c.iter().flatten().filter_map(|x| x.valuation()).min().unwrap_or(0).min(0).abs();
    let p: Vec<Vec<Poly>> = c.iter().map(|r| r.iter().map(|x| x.to_poly_shifted(shift).expect("shifted")).collect()).collect();
    let red = popov(&p)?;
    let invariants: Vec<i64> = red.row_degrees.iter().map(|r| r - shift - fin.den.deg()).collect();
    let zeros = invariants.iter().filter(|&&r| r == 0).count();
    if zeros != 1 || invariants[0] != 0 {
        return Err(FunError::NotGeometricallyIrreducible(zeros));
    }
    let mut basis = Vec::with_capacity(d);
    for u in &red.transform {
        let mut num = vec![Poly::zero(fld); d];
        for (k, uk) in u.iter().enumerate() {
            if uk.is_zero() {
                continue;
            }
            for j in 0..d {
                if !fin.numer[k][j].is_zero() {
                    num[j] = num[j].add(&uk.mul(&fin.numer[k][j]));
                }
            }
        }
        basis.push(FieldElem::new(num, fin.den.clone()));
    }
    // b_0 is a nonzero constant; scale it to 1
    let b0 = &basis[0];
    if b0.num()[1..].iter().any(|x| !x.is_zero()) || !b0.den().is_one() || b0.num()[0].deg() != 0 {
        return Err(FunError::Certificate("degree-zero element is not constant".into()));
    }
    let ff = a.function_field();
    let c0 = RatFunc::constant(fld, fld.inv(b0.num()[0].lc()));
    basis[0] = ff.scale(&basis[0], &c0);
    let res = ReducedBasisResult { basis, invariants, genus: a.genus };
    res.certify(&ff)?;
    Ok(res)
}
