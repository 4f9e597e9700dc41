use crate::exactalg::bipoly::BiPoly;
use crate::exactalg::factor::factorize;
use crate::exactalg::linalg::{kernel, left_kernel};
use crate::exactalg::matrix::hermite_lower;
use crate::exactalg::{discriminant_x, ExtField, Poly, PrimeField};

use super::model::CoverModel;
use super::{FunError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Patch {
    /// Integral closure of F_p[t].
    Finite,
    /// Integral closure of F_p[u], u = 1/t, in the coordinate x' = x/t^m.
    Infinite,
}

/// One prime's enlargement record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enlargement {
    pub prime: Poly,
    pub steps: usize,
    /// v_prime of the index of the starting order in the final one.
    pub index_exponent: usize,
}

/// A rank-d order given by a lower-triangular numerator matrix over the
/// patch ring and a common denominator: element i is Σ_j numer[i][j] x^j / den.
#[derive(Clone, Debug)]
pub struct OrderBasis {
    pub patch: Patch,
    pub poly: BiPoly,
    pub numer: Vec<Vec<Poly>>,
    pub den: Poly,
    pub disc: Poly,
    pub transcript: Vec<Enlargement>,
}

impl OrderBasis {
    pub fn d(&self) -> usize {
        self.numer.len()
    }

    pub fn field(&self) -> PrimeField {
        self.poly.field()
    }
}

/// Product of two x-polynomials (length-d coefficient vectors) reduced
/// modulo the monic polynomial `f`.
pub(crate) fn mul_mod(f: &BiPoly, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let d = f.deg() as usize;
    let fld = f.field();
    let mut r = vec![Poly::zero(fld); 2 * d - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[i + j] = r[i + j].add(&ai.mul(bj));
            }
        }
    }
    for k in (d..2 * d - 1).rev() {
        let c = std::mem::replace(&mut r[k], Poly::zero(fld));
        if c.is_zero() {
            continue;
        }
        for j in 0..d {
            let fj = f.coeff(j);
            if !fj.is_zero() {
                r[k - d + j] = r[k - d + j].sub(&c.mul(&fj));
            }
        }
    }
    r.truncate(d);
    r
}

/// Tr(x^j) for j = 0..n via Newton's identities.
pub(crate) fn power_sums(f: &BiPoly, n: usize) -> Vec<Poly> {
    let d = f.deg() as usize;
    let fld = f.field();
    let mut s: Vec<Poly> = vec![Poly::constant(fld, d as u64 % fld.p())];
    for k in 1..=n {
        let mut acc = Poly::zero(fld);
        for i in 1..=k.min(d) {
            let a = f.coeff(d - i);
            if a.is_zero() {
                continue;
            }
            if i == k {
                acc = acc.add(&a.scale(k as u64 % fld.p()));
            } else {
                acc = acc.add(&a.mul(&s[k - i]));
            }
        }
        s.push(acc.neg());
    }
    s
}

/// Solve Σ_k c_k rows[k][j] = v_j / vden for c, rows lower triangular.
pub(crate) fn solve_lower(rows: &[Vec<Poly>], v: &[Poly], vden: &Poly) -> Option<Vec<Poly>> {
    let d = rows.len();
    let fld = vden.field();
    let mut c = vec![Poly::zero(fld); d];
    for j in (0..d).rev() {
        let mut acc = Poly::zero(fld);
        for k in j + 1..d {
            if !c[k].is_zero() && !rows[k][j].is_zero() {
                acc = acc.add(&c[k].mul(&rows[k][j]));
            }
        }
        let num = v[j].sub(&vden.mul(&acc));
        let den = vden.mul(&rows[j][j]);
        c[j] = num.div_exact(&den)?;
    }
    Some(c)
}

/// Working state of an order during enlargement.
pub(crate) struct OrderData {
    pub f: BiPoly,
    pub numer: Vec<Vec<Poly>>,
    pub den: Poly,
    pub sums: Vec<Poly>,
    /// table[a][b] = coordinates of w_a w_b.
    pub table: Vec<Vec<Vec<Poly>>>,
    /// Tr(w_a).
    pub traces: Vec<Poly>,
}

impl OrderData {
    pub fn new(f: BiPoly, numer: Vec<Vec<Poly>>, den: Poly) -> Result<Self> {
        let d = f.deg() as usize;
        let sums = power_sums(&f, 2 * d);
        let mut od = OrderData { f, numer, den, sums, table: Vec::new(), traces: Vec::new() };
        od.rebuild()?;
        Ok(od)
    }

    pub fn d(&self) -> usize {
        self.numer.len()
    }

    fn rebuild(&mut self) -> Result<()> {
        let d = self.d();
        let fld = self.f.field();
        let mut traces = Vec::with_capacity(d);
        for row in &self.numer {
            let mut s = Poly::zero(fld);
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    s = s.add(&c.mul(&self.sums[j]));
                }
            }
            traces.push(s.div_exact(&self.den).ok_or_else(|| cert("trace not integral"))?);
        }
        let mut table = vec![vec![Vec::new(); d]; d];
        for a in 0..d {
            for b in a..d {
                let v = mul_mod(&self.f, &self.numer[a], &self.numer[b]);
                let c = solve_lower(&self.numer, &v, &self.den).ok_or_else(|| cert("order not closed under products"))?;
                table[a][b] = c.clone();
                table[b][a] = c;
            }
        }
        self.traces = traces;
        self.table = table;
        Ok(())
    }

    /// Coordinates of (Σ x_a w_a)(w_b).
    pub fn mul_coords(&self, x: &[Poly], b: usize) -> Vec<Poly> {
        let d = self.d();
        let fld = self.f.field();
        let mut out = vec![Poly::zero(fld); d];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                let t = &self.table[a][b][k];
                if !t.is_zero() {
                    *o = o.add(&xa.mul(t));
                }
            }
        }
        out
    }

    /// Gram matrix of the trace form reduced into F_q = R/π.
    pub fn trace_form_mod(&self, fq: &ExtField) -> Vec<Vec<Poly>> {
        let d = self.d();
        let fld = self.f.field();
        let mut m = vec![vec![Poly::zero(fld); d]; d];
        for a in 0..d {
            for b in a..d {
                let mut s = Poly::zero(fld);
                for k in 0..d {
                    let t = &self.table[a][b][k];
                    if !t.is_zero() {
                        s = s.add(&t.mul(&self.traces[k]));
                    }
                }
                let s = fq.reduce(&s);
                m[a][b] = s.clone();
                m[b][a] = s;
            }
        }
        m
    }

    /// Kernel of the trace form mod π: the radical of O/πO when p > d.
    pub fn radical_mod(&self, fq: &ExtField) -> Vec<Vec<Poly>> {
        let g = self.trace_form_mod(fq);
        kernel(fq, &g, self.d())
    }

    /// One ring-of-multipliers step at π. Returns false when O is π-maximal.
    fn enlarge_at(&mut self, pi: &Poly) -> Result<bool> {
        let d = self.d();
        let fld = self.f.field();
        let fq = ExtField::new(pi.clone());
        let rad = self.radical_mod(&fq);
        if rad.is_empty() {
            return Ok(false);
        }
        let mut gens: Vec<Vec<Poly>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { pi.clone() } else { Poly::zero(fld) }).collect())
            .collect();
        gens.extend(rad);
        let ideal = hermite_lower(gens, d)?;
        let one = Poly::one(fld);
        // phi[a] = matrix of multiplication by w_a on I/πI
        let mut phi: Vec<Vec<Poly>> = Vec::with_capacity(d);
        for a in 0..d {
            let mut unit = vec![Poly::zero(fld); d];
            unit[a] = one.clone();
            let mut row = Vec::with_capacity(d * d);
            for z in &ideal {
                let mut y = vec![Poly::zero(fld); d];
                for (i, zi) in z.iter().enumerate() {
                    if zi.is_zero() {
                        continue;
                    }
                    let col = &self.table[a][i];
                    for k in 0..d {
                        if !col[k].is_zero() {
                            y[k] = y[k].add(&zi.mul(&col[k]));
                        }
                    }
                }
                let c = solve_lower(&ideal, &y, &one).ok_or_else(|| cert("radical is not an ideal"))?;
                row.extend(c.iter().map(|x| fq.reduce(x)));
            }
            phi.push(row);
        }
        let ker = left_kernel(&fq, &phi);
        if ker.is_empty() {
            return Ok(false);
        }
        let mut gens: Vec<Vec<Poly>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { pi.clone() } else { Poly::zero(fld) }).collect())
            .collect();
        gens.extend(ker);
        let z = hermite_lower(gens, d)?;
        // new numerators Z·B over π·δ
        let mut numer = vec![vec![Poly::zero(fld); d]; d];
        for i in 0..d {
            for k in 0..=i {
                if z[i][k].is_zero() {
                    continue;
                }
                for j in 0..=k {
                    numer[i][j] = numer[i][j].add(&z[i][k].mul(&self.numer[k][j]));
                }
            }
        }
        let mut den = self.den.mul(pi);
        let mut g = den.clone();
        for row in &numer {
            for e in row {
                if !e.is_zero() {
                    g = g.gcd(e);
                }
            }
        }
        if !g.is_one() {
            den = den.div(&g);
            for row in numer.iter_mut() {
                for e in row.iter_mut() {
                    *e = e.div(&g);
                }
            }
        }
        let numer = hermite_lower(numer, d)?;
        self.numer = numer;
        self.den = den.monic();
        self.rebuild()?;
        Ok(true)
    }

    /// v_π(det numer) - d·v_π(den), i.e. minus v_π of the index.
    pub fn det_exponent(&self, pi: &Poly) -> i64 {
        let mut v: i64 = 0;
        for (i, row) in self.numer.iter().enumerate() {
            v += row[i].valuation_at(pi).unwrap_or(0) as i64;
        }
        v - self.d() as i64 * self.den.valuation_at(pi).unwrap_or(0) as i64
    }

    /// det(numer)/den^d as (numerator, denominator) polynomials.
    pub fn det_ratio(&self) -> (Poly, Poly) {
        let fld = self.f.field();
        let mut n = Poly::one(fld);
        for (i, row) in self.numer.iter().enumerate() {
            n = n.mul(&row[i]);
        }
        (n, self.den.pow(self.d() as u64))
    }
}

fn cert(msg: &str) -> FunError {
    FunError::Certificate(msg.to_string())
}

fn enlarge_all(od: &mut OrderData, primes: &[Poly], disc: &Poly) -> Result<Vec<Enlargement>> {
    let mut transcript = Vec::new();
    for pi in primes {
        let before = od.det_exponent(pi);
        let mut steps = 0;
        while od.enlarge_at(pi)? {
            steps += 1;
        }
        let gained = (before - od.det_exponent(pi)) as usize;
        let vdisc = disc.valuation_at(pi).unwrap_or(0);
        if 2 * gained > vdisc {
            return Err(cert("index exceeds discriminant"));
        }
        transcript.push(Enlargement { prime: pi.clone(), steps, index_exponent: gained });
    }
    Ok(transcript)
}

/// Discriminant of the order: disc(f)·(det numer / den^d)².
fn order_disc(od: &OrderData, disc_f: &Poly) -> Result<Poly> {
    let (n, dd) = od.det_ratio();
    disc_f.mul(&n.square()).div_exact(&dd.square()).ok_or_else(|| cert("index does not divide discriminant"))
}

/// π-maximal enlargement of the equation order at every π with π² | disc.
pub fn maximal_order(model: &CoverModel, patch: Patch) -> Result<OrderBasis> {
    let fld = model.field();
    let d = model.d();
    let (poly, disc_f, primes) = match patch {
        Patch::Finite => {
            let disc = model.disc().clone();
            let primes: Vec<Poly> = factorize(&disc, 0xfac7)
                .into_iter()
                .filter(|(_, m)| *m >= 2)
                .map(|(p, _)| p)
                .collect();
            (model.poly().clone(), disc, primes)
        }
        Patch::Infinite => {
            let g = model.infinite_model();
            let disc = discriminant_x(&g)?;
            let u = Poly::var(fld);
            let primes = if disc.valuation().unwrap_or(0) >= 2 { vec![u] } else { Vec::new() };
            (g, disc, primes)
        }
    };
    let numer: Vec<Vec<Poly>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { Poly::one(fld) } else { Poly::zero(fld) }).collect())
        .collect();
    let mut od = OrderData::new(poly.clone(), numer, Poly::one(fld))?;
    let transcript = enlarge_all(&mut od, &primes, &disc_f)?;
    let disc = order_disc(&od, &disc_f)?;
    Ok(OrderBasis { patch, poly, numer: od.numer, den: od.den, disc, transcript })
}

impl OrderBasis {
    pub(crate) fn data(&self) -> Result<OrderData> {
        OrderData::new(self.poly.clone(), self.numer.clone(), self.den.clone())
    }
}

