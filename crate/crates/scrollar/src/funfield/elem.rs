use std::fmt;

use crate::exactalg::bipoly::BiPoly;
use crate::exactalg::linalg::inverse;
use crate::exactalg::{Poly, PrimeField, RatField, RatFunc};

use super::model::CoverModel;
use super::order::{mul_mod, power_sums};
use super::{FunError, Result};

/// Element of K = F_p(t)[x]/(f): Σ num_j x^j / den, den monic and coprime
/// to the content of num.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    num: Vec<Poly>,
    den: Poly,
}

impl FieldElem {
    pub fn new(mut num: Vec<Poly>, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let f = den.field();
        let lc = f.inv(den.lc());
        let mut den = den.scale(lc);
        for x in num.iter_mut() {
            *x = x.scale(lc);
        }
        let mut g = den.clone();
        for x in &num {
            if !x.is_zero() {
                g = g.gcd(x);
                if g.is_one() {
                    break;
                }
            }
        }
        if num.iter().all(|x| x.is_zero()) {
            g = den.clone();
        }
        if !g.is_one() {
            den = den.div(&g);
            for x in num.iter_mut() {
                *x = x.div(&g);
            }
        }
        FieldElem { num, den }
    }

    pub fn num(&self) -> &[Poly] {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|x| x.is_zero())
    }

    /// Coordinates in the power basis 1, x, …, x^{d-1}.
    pub fn coords(&self) -> Vec<RatFunc> {
        self.num.iter().map(|x| RatFunc::new(x.clone(), self.den.clone())).collect()
    }

    pub fn from_coords(coords: &[RatFunc]) -> Self {
        let f = coords[0].field();
        let mut l = Poly::one(f);
        for c in coords {
            l = l.lcm(c.den());
        }
        let num = coords.iter().map(|c| c.num().mul(&l.div(c.den()))).collect();
        FieldElem::new(num, l)
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

/// Arithmetic in the function field of a model.
#[derive(Clone, Debug)]
pub struct FunctionField {
    f: BiPoly,
    sums: Vec<Poly>,
}

impl FunctionField {
    pub fn new(model: &CoverModel) -> Self {
        FunctionField::from_poly(model.poly().clone())
    }

    pub fn from_poly(f: BiPoly) -> Self {
        let d = f.deg() as usize;
        let sums = power_sums(&f, 2 * d);
        FunctionField { f, sums }
    }

    pub fn field(&self) -> PrimeField {
        self.f.field()
    }

    pub fn d(&self) -> usize {
        self.f.deg() as usize
    }

    pub fn poly(&self) -> &BiPoly {
        &self.f
    }

    pub fn zero(&self) -> FieldElem {
        let fld = self.field();
        FieldElem::new(vec![Poly::zero(fld); self.d()], Poly::one(fld))
    }

    pub fn one(&self) -> FieldElem {
        self.constant(&RatFunc::one(self.field()))
    }

    pub fn constant(&self, c: &RatFunc) -> FieldElem {
        let fld = self.field();
        let mut num = vec![Poly::zero(fld); self.d()];
        num[0] = c.num().clone();
        FieldElem::new(num, c.den().clone())
    }

    /// x^k.
    pub fn gen_power(&self, k: usize) -> FieldElem {
        let fld = self.field();
        let mut num = vec![Poly::zero(fld); self.d()];
        if k < self.d() {
            num[k] = Poly::one(fld);
            FieldElem::new(num, Poly::one(fld))
        } else {
            let x = self.gen_power(1);
            self.pow(&x, k as u64)
        }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let l = a.den.lcm(&b.den);
        let ca = l.div(&a.den);
        let cb = l.div(&b.den);
        let num = a.num.iter().zip(&b.num).map(|(x, y)| x.mul(&ca).add(&y.mul(&cb))).collect();
        FieldElem::new(num, l)
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem { num: a.num.iter().map(|x| x.neg()).collect(), den: a.den.clone() }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem::new(mul_mod(&self.f, &a.num, &b.num), a.den.mul(&b.den))
    }

    pub fn scale(&self, a: &FieldElem, c: &RatFunc) -> FieldElem {
        FieldElem::new(a.num.iter().map(|x| x.mul(c.num())).collect(), a.den.mul(c.den()))
    }

    pub fn pow(&self, a: &FieldElem, mut e: u64) -> FieldElem {
        let mut r = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    pub fn trace(&self, a: &FieldElem) -> RatFunc {
        let mut s = Poly::zero(self.field());
        for (j, x) in a.num.iter().enumerate() {
            if !x.is_zero() {
                s = s.add(&x.mul(&self.sums[j]));
            }
        }
        RatFunc::new(s, a.den.clone())
    }

    /// Tr(a^j) for j = 1..=n.
    pub fn power_traces(&self, a: &FieldElem, n: usize) -> Vec<RatFunc> {
        let mut out = Vec::with_capacity(n);
        let mut p = a.clone();
        for j in 1..=n {
            if j > 1 {
                p = self.mul(&p, a);
            }
            out.push(self.trace(&p));
        }
        out
    }

    /// Coefficients c_0..c_{d-1}, c_d = 1 of the characteristic polynomial
    /// of multiplication by `a`, from power sums (needs p > d).
    pub fn charpoly(&self, a: &FieldElem) -> Vec<RatFunc> {
        let d = self.d();
        let fld = self.field();
        let s = self.power_traces(a, d);
        // e_k via Newton: k e_k = Σ_{i=1}^k (-1)^{i-1} e_{k-i} s_i
        let mut e = vec![RatFunc::one(fld)];
        for k in 1..=d {
            let mut acc = RatFunc::zero(fld);
            for i in 1..=k {
                let term = e[k - i].mul(&s[i - 1]);
                acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
            }
            e.push(acc.scale(fld.inv(k as u64 % fld.p())));
        }
        // charpoly = Σ (-1)^k e_k y^{d-k}
        let mut c = vec![RatFunc::zero(fld); d + 1];
        for (k, ek) in e.into_iter().enumerate() {
            c[d - k] = if k % 2 == 0 { ek } else { ek.neg() };
        }
        c
    }

    /// Coordinates of `a` in the basis `basis`, solving over F_p(t).
    pub fn coords_in(&self, basis: &[FieldElem], a: &FieldElem) -> Option<Vec<RatFunc>> {
        let rf = RatField::new(self.field());
        let m: Vec<Vec<RatFunc>> = basis.iter().map(|b| b.coords()).collect();
        crate::exactalg::linalg::solve_left(&rf, &m, &a.coords())
    }
}

/// Dual basis for the trace pairing: Tr(α_i α*_j) = δ_ij.
pub fn dual_basis(ff: &FunctionField, basis: &[FieldElem]) -> Result<Vec<FieldElem>> {
    let rf = RatField::new(ff.field());
    let n = basis.len();
    let mut gram = vec![vec![RatFunc::zero(ff.field()); n]; n];
    for i in 0..n {
        for j in i..n {
            let t = ff.trace(&ff.mul(&basis[i], &basis[j]));
            gram[i][j] = t.clone();
            gram[j][i] = t;
        }
    }
    let inv = inverse(&rf, &gram).ok_or_else(|| FunError::Certificate("singular trace form".into()))?;
    Ok((0..n)
        .map(|j| {
            let mut acc = ff.zero();
            for (k, b) in basis.iter().enumerate() {
                if !inv[j][k].is_zero() {
                    acc = ff.add(&acc, &ff.scale(b, &inv[j][k]));
                }
            }
            acc
        })
        .collect())
}

/// α_i − Tr(α_i)/d for every element after the first.
pub fn trace_zero_basis(ff: &FunctionField, basis: &[FieldElem]) -> Vec<FieldElem> {
    let fld = ff.field();
    let dinv = fld.inv(ff.d() as u64 % fld.p());
    basis
        .iter()
        .enumerate()
        .map(|(i, b)| {
            if i == 0 {
                return b.clone();
            }
            let tr = ff.trace(b).scale(dinv);
            ff.sub(b, &ff.constant(&tr))
        })
        .collect()
}
