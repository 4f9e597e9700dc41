use crate::exactalg::{Field, Poly, RatField, RatFunc};
use crate::funfield::{CoverModel, FieldElem};
use crate::resolvent::SplittingAlgebra;

use super::config::{point_config, specialized_points, PointConfigData};
use super::quadrics::binary_cubic_disc;
use super::{BhargavaError, Result};

/// C(a_1, a_2) = c0 a_1^3 + c1 a_1^2 a_2 + c2 a_1 a_2^2 + c3 a_2^3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCubic {
    pub coeffs: [Poly; 4],
}

impl BinaryCubic {
    pub fn disc(&self) -> Poly {
        binary_cubic_disc(&self.coeffs)
    }

    pub fn eval(&self, a1: u64, a2: u64) -> Poly {
        let fld = self.coeffs[0].field();
        let mut acc = Poly::zero(fld);
        for (i, c) in self.coeffs.iter().enumerate() {
            let m = fld.mul(fld.pow(a1, 3 - i as u64), fld.pow(a2, i as u64));
            acc = acc.add(&c.scale(m));
        }
        acc
    }
}

fn conjugate(alg: &SplittingAlgebra<RatField>, e: &FieldElem, i: usize) -> Vec<RatFunc> {
    let rf = alg.field();
    let z = alg.var(i);
    let mut acc = vec![rf.zero(); alg.dim()];
    for c in e.coords().iter().rev() {
        acc = alg.mul(&acc, &z);
        acc = alg.add(&acc, &alg.scale(&alg.one(), c));
    }
    acc
}

fn ratio(alg: &SplittingAlgebra<RatField>, num: &[RatFunc], den: &[RatFunc]) -> Option<RatFunc> {
    let idx = den.iter().position(|x| !x.is_zero())?;
    let r = num[idx].div(&den[idx]);
    (alg.scale(den, &r) == num).then_some(r)
}

/// The cubic form of a degree-3 cover: ψ(a_1 α_1 + a_2 α_2) divided by the
/// determinant of conjugates of (1, α_1, α_2), computed in the splitting
/// algebra over F_p(t).
pub fn cubic_form_d3(model: &CoverModel) -> Result<(PointConfigData, BinaryCubic)> {
    let d = model.d();
    if d != 3 {
        return Err(BhargavaError::Degree { d, need: "d = 3" });
    }
    let cfg = point_config(model)?;
    let fld = model.field();
    let rf = RatField::new(fld);
    let coeffs: Vec<RatFunc> = model.poly().coeffs().iter().map(|c| RatFunc::from_poly(c.clone())).collect();
    let alg = SplittingAlgebra::new(rf, &coeffs);
    let conj: Vec<Vec<Vec<RatFunc>>> =
        cfg.basis.iter().map(|b| (0..3).map(|i| conjugate(&alg, b, i)).collect()).collect();
    // det of [[1,1,1],[α_1^(i)],[α_2^(i)]]
    let m = |r: usize, c: usize| &conj[r][c];
    let det = {
        let t = |a: usize, b: usize| alg.sub(&alg.mul(m(1, a), m(2, b)), &alg.mul(m(1, b), m(2, a)));
        alg.add(&alg.sub(&t(1, 2), &t(0, 2)), &t(0, 1))
    };
    let psi = |a1: u64, a2: u64| -> Vec<RatFunc> {
        let c1 = RatFunc::constant(fld, a1);
        let c2 = RatFunc::constant(fld, a2);
        let x: Vec<Vec<RatFunc>> =
            (0..3).map(|i| alg.add(&alg.scale(m(1, i), &c1), &alg.scale(m(2, i), &c2))).collect();
        let d01 = alg.sub(&x[0], &x[1]);
        let d02 = alg.sub(&x[0], &x[2]);
        let d12 = alg.sub(&x[1], &x[2]);
        alg.mul(&alg.mul(&d01, &d02), &d12)
    };
    let value = |a1: u64, a2: u64| -> Result<Poly> {
        let r = ratio(&alg, &psi(a1, a2), &det).ok_or(BhargavaError::Degree { d, need: "a sign-isotypic ψ" })?;
        if !r.is_poly() {
            return Err(BhargavaError::Degree { d, need: "an integral cubic form" });
        }
        Ok(r.num().clone())
    };
    let c0 = value(1, 0)?;
    let c3 = value(0, 1)?;
    let plus = value(1, 1)?;
    let minus = value(1, fld.neg(1))?;
    let half = fld.inv(2);
    let even = plus.add(&minus).scale(half).sub(&c0);
    let odd = plus.sub(&minus).scale(half).sub(&c3);
    Ok((cfg, BinaryCubic { coeffs: [c0, odd, even, c3] }))
}

/// C vanishes at the three points over `trials` specializations.
pub fn cubic_form_vanishes(cfg: &PointConfigData, cubic: &BinaryCubic, trials: usize, seed: u64) -> Result<bool> {
    for trial in 0..trials {
        let sp = specialized_points(cfg, seed, trial)?;
        let ext = &sp.ext;
        let c: Vec<Poly> = cubic.coeffs.iter().map(|p| ext.embed(p.eval(sp.t0))).collect();
        for pt in &sp.points {
            let (x, y) = (&pt[0], &pt[1]);
            let mut acc = ext.zero();
            for (i, ci) in c.iter().enumerate() {
                let mut term = ci.clone();
                for _ in 0..3 - i {
                    term = ext.mul(&term, x);
                }
                for _ in 0..i {
                    term = ext.mul(&term, y);
                }
                acc = ext.add(&acc, &term);
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
