//! Polynomials in a main variable (x or y) with coefficients in F_p[t],
//! and Sylvester resultants.

use super::field::PrimeField;
use super::interp::interpolate_vector;
use super::linalg::det;
use super::poly::Poly;
use super::text::MPoly;
use super::AlgError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPoly {
    field: PrimeField,
    /// c[j] is the coefficient of x^j
    c: Vec<Poly>,
}

impl BiPoly {
    pub fn new(field: PrimeField, mut c: Vec<Poly>) -> Self {
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        BiPoly { field, c }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.c
    }

    pub fn coeff(&self, j: usize) -> Poly {
        self.c.get(j).cloned().unwrap_or_else(|| Poly::zero(self.field))
    }

    /// Degree in the main variable (-1 for zero).
    pub fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(|p| p.is_one())
    }

    /// Largest t-degree among the coefficients.
    pub fn max_deg_t(&self) -> i64 {
        self.c.iter().map(|p| p.deg()).max().unwrap_or(-1)
    }

    /// Specialize t = a.
    pub fn eval_t(&self, a: u64) -> Poly {
        Poly::from_coeffs(self.field, self.c.iter().map(|p| p.eval(a)).collect())
    }

    /// Coefficient vector at t = a of nominal length n+1.
    pub fn eval_t_nominal(&self, a: u64, n: usize) -> Vec<u64> {
        (0..=n).map(|j| self.coeff(j).eval(a)).collect()
    }

    pub fn derivative(&self) -> BiPoly {
        let f = self.field;
        BiPoly::new(
            f,
            (1..self.c.len()).map(|j| self.c[j].scale(j as u64 % f.p())).collect(),
        )
    }

    /// Substitute t -> t + a.
    pub fn shift_t(&self, a: u64) -> BiPoly {
        let g = Poly::from_coeffs(self.field, vec![a, 1]);
        BiPoly::new(self.field, self.c.iter().map(|p| p.compose(&g)).collect())
    }

    /// Substitute x -> x + q(t).
    pub fn shift_x(&self, q: &Poly) -> BiPoly {
        let f = self.field;
        let mut r: Vec<Poly> = vec![Poly::zero(f)];
        for cj in self.c.iter().rev() {
            // r = r*(x+q) + cj
            let mut next = vec![Poly::zero(f); r.len() + 1];
            for (i, ri) in r.iter().enumerate() {
                next[i + 1] = next[i + 1].add(ri);
                next[i] = next[i].add(&ri.mul(q));
            }
            next[0] = next[0].add(cj);
            r = next;
        }
        BiPoly::new(f, r)
    }

    /// Build from a sparse polynomial in the given (t-variable, main variable)
    /// indices; any other variable is an error.
    pub fn from_mpoly(m: &MPoly, tv: usize, xv: usize) -> Result<BiPoly, AlgError> {
        let f = m.field;
        let dx = m.degree_in(xv) as usize;
        let mut c: Vec<Vec<u64>> = vec![Vec::new(); dx + 1];
        for (e, coef) in &m.terms {
            for (v, &k) in e.iter().enumerate() {
                if v != tv && v != xv && k > 0 {
                    return Err(AlgError::Parse(format!(
                        "unexpected variable {}",
                        super::text::VARS[v]
                    )));
                }
            }
            let row = &mut c[e[xv] as usize];
            let dt = e[tv] as usize;
            if row.len() <= dt {
                row.resize(dt + 1, 0);
            }
            row[dt] = *coef;
        }
        Ok(BiPoly::new(f, c.into_iter().map(|v| Poly::from_coeffs(f, v)).collect()))
    }

    pub fn to_mpoly(&self, tv: usize, xv: usize) -> MPoly {
        let mut m = MPoly::zero(self.field);
        for (j, p) in self.c.iter().enumerate() {
            for (i, &a) in p.coeffs().iter().enumerate() {
                if a != 0 {
                    let mut e = [0u32; 4];
                    e[tv] = i as u32;
                    e[xv] = j as u32;
                    m.add_term(e, a);
                }
            }
        }
        m
    }
}

/// Sylvester matrix of coefficient vectors (low to high) with nominal
/// degrees m = f.len()-1 and n = g.len()-1.
pub fn sylvester(f: &[u64], g: &[u64]) -> Vec<Vec<u64>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut s = vec![vec![0u64; size]; size];
    for i in 0..n {
        for (k, &a) in f.iter().rev().enumerate() {
            s[i][i + k] = a;
        }
    }
    for i in 0..m {
        for (k, &a) in g.iter().rev().enumerate() {
            s[n + i][i + k] = a;
        }
    }
    s
}

/// Resultant over F_p as the Sylvester determinant of nominal-degree
/// coefficient vectors.
pub fn resultant_nominal(field: &PrimeField, f: &[u64], g: &[u64]) -> u64 {
    if f.len() == 1 {
        return field.pow(f[0], (g.len() - 1) as u64);
    }
    if g.len() == 1 {
        return field.pow(g[0], (f.len() - 1) as u64);
    }
    det(field, &sylvester(f, g))
}

pub fn resultant_fp(f: &Poly, g: &Poly) -> u64 {
    assert!(!f.is_zero() && !g.is_zero());
    resultant_nominal(&f.field(), f.coeffs(), g.coeffs())
}

/// Res_x(f, g) in F_p[t] by evaluation at t and interpolation.
pub fn resultant_x(f: &BiPoly, g: &BiPoly, seed: u64) -> Result<Poly, AlgError> {
    assert!(f.deg() >= 0 && g.deg() >= 0);
    let m = f.deg() as usize;
    let n = g.deg() as usize;
    let bound = n * f.max_deg_t().max(0) as usize + m * g.max_deg_t().max(0) as usize;
    let field = f.field();
    let v = interpolate_vector(
        field,
        bound + 1,
        seed,
        |_| true,
        |a| {
            Some(vec![resultant_nominal(
                &field,
                &f.eval_t_nominal(a, m),
                &g.eval_t_nominal(a, n),
            )])
        },
        false,
    )?;
    Ok(v.into_iter().next().unwrap())
}

/// Discriminant in x of a monic polynomial: (-1)^(d(d-1)/2) Res(f, f').
pub fn discriminant_x(f: &BiPoly) -> Result<Poly, AlgError> {
    assert!(f.is_monic(), "discriminant_x expects a monic polynomial");
    let d = f.deg() as usize;
    let df = f.derivative();
    // nominal degree of f' is d-1 even if p | d (excluded by p > d)
    let r = resultant_x(f, &df, 0xd15c)?;
    if (d * (d - 1) / 2) % 2 == 1 {
        Ok(r.neg())
    } else {
        Ok(r)
    }
}

/// Discriminant of a monic univariate polynomial over F_p.
pub fn discriminant_fp(f: &Poly) -> u64 {
    let d = f.deg() as usize;
    let fld = f.field();
    let df = f.derivative();
    let mut dc = df.coeffs().to_vec();
    dc.resize(d, 0);
    let r = resultant_nominal(&fld, f.coeffs(), &dc);
    if (d * (d - 1) / 2) % 2 == 1 {
        fld.neg(r)
    } else {
        r
    }
}
