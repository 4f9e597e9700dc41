//! Dense linear algebra over any [`Field`].

use super::field::{Field, PrimeField};

pub type Mat<E> = Vec<Vec<E>>;

pub fn zeros<F: Field>(f: &F, r: usize, c: usize) -> Mat<F::Elem> {
    vec![vec![f.zero(); c]; r]
}

pub fn identity<F: Field>(f: &F, n: usize) -> Mat<F::Elem> {
    let mut m = zeros(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

pub fn transpose<E: Clone>(m: &[Vec<E>]) -> Mat<E> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul<F: Field>(f: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> Mat<F::Elem> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    let mut s = f.zero();
                    for (k, x) in row.iter().enumerate() {
                        if !f.is_zero(x) && !f.is_zero(&b[k][j]) {
                            s = f.add(&s, &f.mul(x, &b[k][j]));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<F: Field>(f: &F, a: &[Vec<F::Elem>], v: &[F::Elem]) -> Vec<F::Elem> {
    a.iter()
        .map(|row| {
            let mut s = f.zero();
            for (x, y) in row.iter().zip(v) {
                if !f.is_zero(x) && !f.is_zero(y) {
                    s = f.add(&s, &f.mul(x, y));
                }
            }
            s
        })
        .collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(f: &F, m: &mut Mat<F::Elem>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(&m[r][c]);
        for x in m[r].iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let k = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&k, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> usize {
    let mut a = m.to_vec();
    rref(f, &mut a).len()
}

/// Basis of { v : m v = 0 }, one vector per free column, in column order.
pub fn kernel<F: Field>(f: &F, m: &[Vec<F::Elem>], cols: usize) -> Vec<Vec<F::Elem>> {
    let mut a = m.to_vec();
    let pivots = rref(f, &mut a);
    let mut out = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(&a[r][free]);
        }
        out.push(v);
    }
    out
}

/// Basis of { v : v m = 0 }.
pub fn left_kernel<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let rows = m.len();
    kernel(f, &transpose(m), rows)
}

pub fn det<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = f.one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !f.is_zero(&a[i][c])) else {
            return f.zero();
        };
        if pr != c {
            a.swap(pr, c);
            d = f.neg(&d);
        }
        d = f.mul(&d, &a[c][c]);
        let inv = f.inv(&a[c][c]);
        for i in c + 1..n {
            if f.is_zero(&a[i][c]) {
                continue;
            }
            let k = f.mul(&a[i][c], &inv);
            for j in c..n {
                if !f.is_zero(&a[c][j]) {
                    let t = f.mul(&k, &a[c][j]);
                    a[i][j] = f.sub(&a[i][j], &t);
                }
            }
        }
    }
    d
}

pub fn inverse<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> Option<Mat<F::Elem>> {
    let n = m.len();
    let mut a: Mat<F::Elem> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { f.one() } else { f.zero() });
            }
            r
        })
        .collect();
    let piv = rref(f, &mut a);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve x m = b for a row vector x, if solvable.
pub fn solve_left<F: Field>(f: &F, m: &[Vec<F::Elem>], b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    // columns of [m^T | b]
    let rows = m.len();
    let mt = transpose(m);
    let mut a: Mat<F::Elem> = mt
        .into_iter()
        .zip(b.iter())
        .map(|(mut r, y)| {
            r.push(y.clone());
            r
        })
        .collect();
    let piv = rref(f, &mut a);
    if piv.contains(&rows) {
        return None;
    }
    let mut x = vec![f.zero(); rows];
    for (r, &pc) in piv.iter().enumerate() {
        x[pc] = a[r][rows].clone();
    }
    Some(x)
}

/// Characteristic polynomial det(yI - m) over F_p, coefficients low to high.
/// Hessenberg reduction followed by the standard recurrence.
pub fn charpoly_fp(f: &PrimeField, m: &[Vec<u64>]) -> Vec<u64> {
    let n = m.len();
    let mut h = m.to_vec();
    let p = f.p();
    for k in 1..n.saturating_sub(1) {
        let Some(piv) = (k..n).find(|&i| h[i][k - 1] != 0) else {
            continue;
        };
        if piv != k {
            h.swap(piv, k);
            for row in h.iter_mut() {
                row.swap(piv, k);
            }
        }
        let inv = f.inv(h[k][k - 1]);
        for i in k + 1..n {
            if h[i][k - 1] == 0 {
                continue;
            }
            let u = f.mul(h[i][k - 1], inv);
            // row_i -= u row_k
            let (top, bottom) = h.split_at_mut(i);
            let rk = &top[k];
            let ri = &mut bottom[0];
            if p < (1 << 32) {
                for j in (k - 1)..n {
                    let s = (u * rk[j]) % p;
                    ri[j] = if ri[j] >= s { ri[j] - s } else { ri[j] + p - s };
                }
            } else {
                for j in (k - 1)..n {
                    ri[j] = f.sub(ri[j], f.mul(u, rk[j]));
                }
            }
            // col_k += u col_i
            for row in h.iter_mut() {
                let add = f.mul(u, row[i]);
                row[k] = f.add(row[k], add);
            }
        }
    }
    // p_0 = 1, p_{k+1}(y) = (y - h_kk) p_k - sum_{i<k} h_ik prod_{j=i+1..k} h_{j,j-1} p_i
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.sub(next[i], f.mul(h[k][k], c));
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            if prod == 0 {
                break;
            }
            let coef = f.mul(h[i][k], prod);
            if coef == 0 {
                continue;
            }
            for (j, &c) in polys[i].iter().enumerate() {
                next[j] = f.sub(next[j], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Generic Hessenberg characteristic polynomial, coefficients low to high.
pub fn charpoly<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> Vec<F::Elem> {
    let n = m.len();
    let mut h = m.to_vec();
    for k in 1..n.saturating_sub(1) {
        let Some(piv) = (k..n).find(|&i| !f.is_zero(&h[i][k - 1])) else {
            continue;
        };
        if piv != k {
            h.swap(piv, k);
            for row in h.iter_mut() {
                row.swap(piv, k);
            }
        }
        let inv = f.inv(&h[k][k - 1]);
        for i in k + 1..n {
            if f.is_zero(&h[i][k - 1]) {
                continue;
            }
            let u = f.mul(&h[i][k - 1], &inv);
            for j in (k - 1)..n {
                let t = f.mul(&u, &h[k][j]);
                h[i][j] = f.sub(&h[i][j], &t);
            }
            for row in h.iter_mut() {
                let t = f.mul(&u, &row[i]);
                row[k] = f.add(&row[k], &t);
            }
        }
    }
    let mut polys: Vec<Vec<F::Elem>> = vec![vec![f.one()]];
    for k in 0..n {
        let prev = polys[k].clone();
        let mut next = vec![f.zero(); k + 2];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] = f.add(&next[i + 1], c);
            next[i] = f.sub(&next[i], &f.mul(&h[k][k], c));
        }
        let mut prod = f.one();
        for i in (0..k).rev() {
            prod = f.mul(&prod, &h[i + 1][i]);
            if f.is_zero(&prod) {
                break;
            }
            let coef = f.mul(&h[i][k], &prod);
            for (j, c) in polys[i].iter().enumerate() {
                next[j] = f.sub(&next[j], &f.mul(&coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}
