//! Universal splitting algebra of a monic polynomial,
//! K[z_1..z_d] / (Cauchy modules), with the staircase monomial basis
//! z^a, a_k < k.

use std::collections::BTreeMap;

use crate::exactalg::Field;

type Exps = Vec<u8>;
/// Sparse polynomial in z_1..z_d.
type Sparse<E> = BTreeMap<Exps, E>;
/// Sparse column: (basis index, coefficient).
type Column<E> = Vec<(usize, E)>;

pub struct SplittingAlgebra<F: Field> {
    field: F,
    d: usize,
    /// radix[k] = k! so that index(a) = Σ a_k · radix[k-1] (0-based k).
    radix: Vec<usize>,
    /// mul_var[k][b] = z_{k+1} · basis_b.
    mul_var: Vec<Vec<Column<F::Elem>>>,
}

fn sparse_add<F: Field>(f: &F, acc: &mut Sparse<F::Elem>, e: Exps, c: F::Elem) {
    if f.is_zero(&c) {
        return;
    }
    match acc.get_mut(&e) {
        Some(v) => {
            *v = f.add(v, &c);
            if f.is_zero(v) {
                acc.remove(&e);
            }
        }
        None => {
            acc.insert(e, c);
        }
    }
}

impl<F: Field> SplittingAlgebra<F> {
    /// `coeffs` are the coefficients of a monic polynomial, low to high.
    pub fn new(field: F, coeffs: &[F::Elem]) -> Self {
        let d = coeffs.len() - 1;
        assert!(d >= 1 && field.is_zero(&field.sub(&coeffs[d], &field.one())));
        let mut radix = vec![1usize; d + 1];
        for k in 1..=d {
            radix[k] = radix[k - 1] * k;
        }
        // Cauchy modules: rel[k] (0-based variable k) is monic of degree k+1
        // in z_k with coefficients sparse in z_{k+1..d}.
        let mut rel: Vec<Vec<Sparse<F::Elem>>> = vec![Vec::new(); d];
        let mut cur: Vec<Sparse<F::Elem>> = coeffs
            .iter()
            .map(|c| {
                let mut s = Sparse::new();
                sparse_add(&field, &mut s, vec![0; d], c.clone());
                s
            })
            .collect();
        for k in (0..d).rev() {
            rel[k] = cur.clone();
            if k == 0 {
                break;
            }
            // divide by (z - z_k)
            let n = cur.len() - 1;
            let mut q: Vec<Sparse<F::Elem>> = vec![Sparse::new(); n];
            q[n - 1] = cur[n].clone();
            for i in (1..n).rev() {
                let mut next = cur[i].clone();
                for (e, c) in &q[i] {
                    let mut e2 = e.clone();
                    e2[k] += 1;
                    sparse_add(&field, &mut next, e2, c.clone());
                }
                q[i - 1] = next;
            }
            cur = q;
        }
        let mut alg = SplittingAlgebra { field, d, radix, mul_var: vec![Vec::new(); d] };
        let n = alg.dim();
        for k in (0..d).rev() {
            let mut cols = Vec::with_capacity(n);
            for b in 0..n {
                let mut a = alg.exps(b);
                if (a[k] as usize) + 1 <= k {
                    a[k] += 1;
                    cols.push(vec![(alg.index(&a), alg.field.one())]);
                    continue;
                }
                // z_k^{k+1} · rest = -Σ_j c_j z_k^j · rest, c_j in higher variables
                a[k] = 0;
                let mut acc = vec![alg.field.zero(); n];
                for (j, cj) in rel[k][..=k].iter().enumerate() {
                    for (mono, c) in cj {
                        let mut start = a.clone();
                        start[k] = j as u8;
                        let mut v = alg.unit(alg.index(&start));
                        for (var, &p) in mono.iter().enumerate() {
                            for _ in 0..p {
                                v = alg.mul_var_vec(var, &v);
                            }
                        }
                        let s = alg.field.neg(c);
                        for (x, y) in acc.iter_mut().zip(&v) {
                            if !alg.field.is_zero(y) {
                                *x = alg.field.add(x, &alg.field.mul(&s, y));
                            }
                        }
                    }
                }
                cols.push(alg.sparse(&acc));
            }
            alg.mul_var[k] = cols;
        }
        alg
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.radix[self.d]
    }

    pub fn index(&self, a: &[u8]) -> usize {
        a.iter().enumerate().map(|(k, &x)| x as usize * self.radix[k]).sum()
    }

    pub fn exps(&self, mut b: usize) -> Exps {
        let mut a = vec![0u8; self.d];
        for k in (0..self.d).rev() {
            a[k] = (b / self.radix[k]) as u8;
            b %= self.radix[k];
        }
        a
    }

    pub fn unit(&self, b: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[b] = self.field.one();
        v
    }

    pub fn one(&self) -> Vec<F::Elem> {
        self.unit(0)
    }

    fn sparse(&self, v: &[F::Elem]) -> Column<F::Elem> {
        v.iter().enumerate().filter(|(_, x)| !self.field.is_zero(x)).map(|(i, x)| (i, x.clone())).collect()
    }

    /// z_{k+1} · v (0-based k).
    pub fn mul_var_vec(&self, k: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); v.len()];
        for (b, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (i, c) in &self.mul_var[k][b] {
                out[*i] = f.add(&out[*i], &f.mul(x, c));
            }
        }
        out
    }

    /// The element Π z_k^{e_k}.
    pub fn monomial(&self, e: &[u32]) -> Vec<F::Elem> {
        let mut v = self.one();
        for (k, &p) in e.iter().enumerate() {
            for _ in 0..p {
                v = self.mul_var_vec(k, &v);
            }
        }
        v
    }

    /// The element z_{k+1}.
    pub fn var(&self, k: usize) -> Vec<F::Elem> {
        self.mul_var_vec(k, &self.one())
    }

    /// cols[b] = x · basis_b.
    pub fn mult_columns(&self, x: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let n = self.dim();
        let mut cols: Vec<Vec<F::Elem>> = Vec::with_capacity(n);
        cols.push(x.to_vec());
        for b in 1..n {
            let a = self.exps(b);
            let k = a.iter().position(|&x| x > 0).expect("nonzero index");
            let prev = b - self.radix[k];
            let c = self.mul_var_vec(k, &cols[prev]);
            cols.push(c);
        }
        cols
    }

    /// Matrix of multiplication by x, rows indexed by output coordinate.
    pub fn mult_matrix(&self, x: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let cols = self.mult_columns(x);
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|b| cols[b][i].clone()).collect()).collect()
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let cols = self.mult_columns(x);
        let mut out = vec![f.zero(); self.dim()];
        for (b, yb) in y.iter().enumerate() {
            if f.is_zero(yb) {
                continue;
            }
            for (o, c) in out.iter_mut().zip(&cols[b]) {
                *o = f.add(o, &f.mul(yb, c));
            }
        }
        out
    }

    pub fn add(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, x: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
        x.iter().map(|a| self.field.mul(a, c)).collect()
    }

    /// Coefficient of 1 if x is a scalar.
    pub fn as_scalar(&self, x: &[F::Elem]) -> Option<F::Elem> {
        x[1..].iter().all(|c| self.field.is_zero(c)).then(|| x[0].clone())
    }
}
