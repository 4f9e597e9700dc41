use crate::exactalg::interp::sample_stream;
use crate::exactalg::linalg::{det, kernel};
use crate::exactalg::{discriminant_x, factorize, ExtField, Field, Poly, RatField, RatFunc};
use crate::predict::{betti, Rational, schreyer_interval, schreyer_sum};
use crate::resolvent::cubic_resolvent;

use super::config::{specialized_points, PointConfigData};
use super::forms::Monomials;
use super::resolution::{window, GradedSystem, Syzygy};
use super::{BhargavaError, Result};

/// Quadrics through the d points, as symmetric (d-1)×(d-1) matrices
/// Q[j][k] with Q(x) = Σ Q[j][k] x_j x_k.
#[derive(Clone, Debug)]
pub struct QuadricSet {
    pub quadrics: Vec<Vec<Vec<Poly>>>,
    /// Scrollar invariants used as the grading.
    pub weights: Vec<i64>,
    /// Sorted shifts b_ℓ, empty for an ungraded set.
    pub degrees: Vec<i64>,
    /// Same quadrics as first-step syzygies, for graded sets.
    pub generators: Vec<Syzygy>,
    /// Every shift lies in the predicted interval.
    pub in_interval: bool,
}

impl QuadricSet {
    pub fn len(&self) -> usize {
        self.quadrics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quadrics.is_empty()
    }

    /// Entry (j,k) of quadric ℓ has degree ≤ e_j + e_k - b_ℓ.
    pub fn degrees_respected(&self) -> bool {
        self.degrees.iter().zip(&self.quadrics).all(|(&b, q)| {
            q.iter().enumerate().all(|(j, row)| {
                row.iter()
                    .enumerate()
                    .all(|(k, p)| p.is_zero() || p.deg() <= self.weights[j] + self.weights[k] - b)
            })
        })
    }
}

/// Monomial coefficient vector c (x_j x_k, j ≤ k) to a symmetric matrix.
fn to_matrix(mons: &Monomials, c: &[Poly]) -> Vec<Vec<Poly>> {
    let n = mons.nvars();
    let fld = c[0].field();
    let half = fld.inv(2);
    let mut q = vec![vec![Poly::zero(fld); n]; n];
    for j in 0..n {
        for k in j..n {
            let v = &c[mons.pair(j, k)];
            if j == k {
                q[j][j] = v.clone();
            } else {
                let h = v.scale(half);
                q[j][k] = h.clone();
                q[k][j] = h;
            }
        }
    }
    q
}

/// Full solution space of Σ c_jk α*_j α*_k = 0 over F_p(t), echelonized and
/// cleared to primitive polynomial vectors.
pub fn quadric_space(cfg: &PointConfigData) -> Result<QuadricSet> {
    let d = cfg.d();
    if d < 4 {
        return Ok(QuadricSet {
            quadrics: Vec::new(),
            weights: cfg.scrollar.clone(),
            degrees: Vec::new(),
            generators: Vec::new(),
            in_interval: true,
        });
    }
    let fld = cfg.model.field();
    let rf = RatField::new(fld);
    let n = cfg.nvars();
    let mons = Monomials::new(n, 2);
    let mut m = vec![vec![RatFunc::zero(fld); mons.len()]; d];
    for j in 0..n {
        for k in j..n {
            let col = mons.pair(j, k);
            for (q, row) in m.iter_mut().enumerate() {
                row[col] = cfg.products[j][k][q].clone();
            }
        }
    }
    let ker = kernel(&rf, &m, mons.len());
    let expected = d * (d - 3) / 2;
    if ker.len() != expected {
        return Err(BhargavaError::QuadricDimension { got: ker.len(), expected });
    }
    let quadrics = ker
        .iter()
        .map(|v| {
            let mut l = Poly::one(fld);
            for x in v {
                l = l.lcm(x.den());
            }
            let mut c: Vec<Poly> = v.iter().map(|x| x.num().mul(&l.div(x.den()))).collect();
            let mut g = Poly::zero(fld);
            for x in &c {
                g = g.gcd(x);
            }
            if !g.is_zero() && !g.is_one() {
                c = c.iter().map(|x| x.div(&g)).collect();
            }
            to_matrix(&mons, &c)
        })
        .collect();
    Ok(QuadricSet { quadrics, weights: cfg.scrollar.clone(), degrees: Vec::new(), generators: Vec::new(), in_interval: true })
}

/// Graded minimal generators of the quadrics through the points; b_ℓ is
/// the shift making every entry of degree ≤ e_j + e_k - b_ℓ.
pub fn graded_quadric_degrees(cfg: &PointConfigData) -> Result<QuadricSet> {
    let d = cfg.d();
    if d < 4 {
        return Err(BhargavaError::Degree { d, need: "d >= 4" });
    }
    let fld = cfg.model.field();
    let n = cfg.nvars();
    let g = cfg.genus;
    let mons = Monomials::new(n, 2);
    // common denominator of the product table
    let mut l = Poly::one(fld);
    for row in &cfg.products {
        for c in row {
            for x in c {
                l = l.lcm(x.den());
            }
        }
    }
    let mut table = vec![Vec::new(); mons.len()];
    for j in 0..n {
        for k in j..n {
            table[mons.pair(j, k)] = cfg.products[j][k].iter().map(|x| x.num().mul(&l.div(x.den()))).collect::<Vec<_>>();
        }
    }
    let slots: Vec<(usize, usize, i64)> = (0..mons.len()).map(|a| (0, a, mons.weight(a, &cfg.scrollar))).collect();
    let expected = betti(d as i64, 1) as usize;
    let sys = GradedSystem { step: 1, field: fld, slots, window: window(d as i64, 1, g)?, expected };
    let gens = sys.solve(|a, s| {
        let mut out = Vec::new();
        for (q, p) in table[a].iter().enumerate() {
            for (r, &c) in p.coeffs().iter().enumerate() {
                if c != 0 {
                    out.push(((q, 0, r + s), c));
                }
            }
        }
        out
    })?;
    let degrees: Vec<i64> = gens.iter().map(|x| x.0).collect();
    let sum: i64 = degrees.iter().sum();
    let want = schreyer_sum(d as i64, 1, g)?;
    if sum != want {
        return Err(BhargavaError::SumMismatch { step: 1, got: sum, expected: want });
    }
    let (lo, hi) = schreyer_interval(d as i64, 1, g)?;
    let in_interval = degrees.iter().all(|&b| lo <= Rational::from_integer(b) && hi >= Rational::from_integer(b));
    let quadrics = gens.iter().map(|(_, c)| to_matrix(&mons, c)).collect();
    let generators = gens.into_iter().map(|(b, c)| Syzygy { shift: b, xdeg: 2, entries: vec![c] }).collect();
    Ok(QuadricSet { quadrics, weights: cfg.scrollar.clone(), degrees, generators, in_interval })
}

fn eval_quadric(ext: &ExtField, q: &[Vec<Poly>], t0: u64, pt: &[Poly]) -> Poly {
    let mut acc = ext.zero();
    for (j, row) in q.iter().enumerate() {
        for (k, p) in row.iter().enumerate() {
            let c = p.eval(t0);
            if c != 0 {
                acc = ext.add(&acc, &ext.mul(&ext.mul(&pt[j], &pt[k]), &ext.embed(c)));
            }
        }
    }
    acc
}

/// Every quadric vanishes at every point over `trials` specializations.
pub fn verify_point_vanishing(cfg: &PointConfigData, quadrics: &QuadricSet, trials: usize, seed: u64) -> Result<bool> {
    for trial in 0..trials {
        let sp = specialized_points(cfg, seed, trial)?;
        for q in &quadrics.quadrics {
            for pt in &sp.points {
                if !eval_quadric(&sp.ext, q, sp.t0, pt).is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The same set with the (0,0) entry of the first quadric bumped by one.
pub fn perturbed(quadrics: &QuadricSet) -> QuadricSet {
    let mut out = quadrics.clone();
    if let Some(q) = out.quadrics.first_mut() {
        let one = Poly::one(q[0][0].field());
        q[0][0] = q[0][0].add(&one);
    }
    out
}

fn det3(m: &[Vec<Poly>]) -> Poly {
    let minor = |a: usize, b: usize, c: usize, e: usize| m[1][a].mul(&m[2][b]).sub(&m[1][c].mul(&m[2][e]));
    m[0][0]
        .mul(&minor(1, 2, 2, 1))
        .sub(&m[0][1].mul(&minor(0, 2, 2, 0)))
        .add(&m[0][2].mul(&minor(0, 1, 1, 0)))
}

/// det(x·A_1 + y·A_2) for a pencil of ternary quadrics, coefficients of
/// x^3, x^2 y, x y^2, y^3.
pub fn pencil_cubic(quadrics: &QuadricSet) -> Result<[Poly; 4]> {
    if quadrics.len() != 2 || quadrics.quadrics[0].len() != 3 {
        return Err(BhargavaError::Degree { d: quadrics.quadrics.first().map_or(0, |q| q.len() + 1), need: "d = 4" });
    }
    let (a, b) = (&quadrics.quadrics[0], &quadrics.quadrics[1]);
    let fld = a[0][0].field();
    let comb = |x: u64, y: u64| -> Poly {
        let m: Vec<Vec<Poly>> =
            (0..3).map(|j| (0..3).map(|k| a[j][k].scale(x).add(&b[j][k].scale(y))).collect()).collect();
        det3(&m)
    };
    let c0 = comb(1, 0);
    let c3 = comb(0, 1);
    let plus = comb(1, 1);
    let minus = comb(1, fld.neg(1));
    let half = fld.inv(2);
    // plus = c0+c1+c2+c3, minus = c0-c1+c2-c3
    let even = plus.add(&minus).scale(half).sub(&c0);
    let odd = plus.sub(&minus).scale(half).sub(&c3);
    Ok([c0, odd, even, c3])
}

pub(crate) fn binary_cubic_disc(c: &[Poly; 4]) -> Poly {
    let [a, b, cc, d] = c;
    let fld = a.field();
    let k = |n: i64| fld.reduce_i64(n);
    b.square()
        .mul(&cc.square())
        .sub(&a.mul(&cc.pow(3)).scale(k(4)))
        .sub(&b.pow(3).mul(d).scale(k(4)))
        .sub(&a.square().mul(&d.square()).scale(k(27)))
        .add(&a.mul(b).mul(cc).mul(d).scale(k(18)))
}

/// Factorization degrees of a binary cubic at t0, as a polynomial in x/y.
fn cubic_pattern(c: &[Poly; 4], t0: u64, seed: u64) -> Option<Vec<usize>> {
    let fld = c[0].field();
    let coeffs: Vec<u64> = (0..4).rev().map(|i| c[i].eval(t0)).collect();
    let p = Poly::from_coeffs(fld, coeffs);
    if p.deg() != 3 {
        return None;
    }
    let mut v: Vec<usize> = factorize(&p, seed).iter().flat_map(|(g, e)| vec![g.deg() as usize; *e]).collect();
    v.sort_unstable();
    Some(v)
}

/// For d = 4: the pencil determinant and the cubic resolvent agree.
/// Discriminant of the pencil cubic is a unit times the discriminant of
/// the maximal order, and both cubics factor alike at `trials`
/// specializations.
pub fn pencil_matches_cubic_resolvent(cfg: &PointConfigData, quadrics: &QuadricSet, trials: usize, seed: u64) -> Result<bool> {
    let cubic = pencil_cubic(quadrics)?;
    let fld = cfg.model.field();
    let rf = RatField::new(fld);
    let gram: Vec<Vec<RatFunc>> = cfg
        .basis
        .iter()
        .map(|a| cfg.basis.iter().map(|b| cfg.ff.trace(&cfg.ff.mul(a, b))).collect())
        .collect();
    let disc_o = det(&rf, &gram);
    let dp = binary_cubic_disc(&cubic);
    if dp.is_zero() || !disc_o.is_poly() {
        return Ok(false);
    }
    let ratio = RatFunc::from_poly(dp).div(&disc_o);
    if !(ratio.is_poly() && ratio.num().deg() == 0) {
        return Ok(false);
    }
    let res = cubic_resolvent(&cfg.model)?;
    let dr = discriminant_x(&res)?;
    let bad = cfg.bad_locus().mul(&dr);
    let mut checked = 0;
    for a in sample_stream(fld, seed) {
        if checked == trials {
            break;
        }
        if bad.eval(a) == 0 {
            continue;
        }
        let rc: Vec<Poly> = (0..=3).rev().map(|j| Poly::constant(fld, res.coeff(j).eval(a))).collect();
        let ra = [rc[0].clone(), rc[1].clone(), rc[2].clone(), rc[3].clone()];
        let (Some(x), Some(y)) = (cubic_pattern(&cubic, a, seed), cubic_pattern(&ra, 0, seed)) else {
            continue;
        };
        if x != y {
            return Ok(false);
        }
        checked += 1;
    }
    Ok(checked == trials)
}
