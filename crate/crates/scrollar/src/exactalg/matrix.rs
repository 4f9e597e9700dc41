//! Polynomial matrices: weak Popov and Popov forms, Hermite forms.

use super::poly::Poly;
use super::AlgError;

pub type PolyMatrix = Vec<Vec<Poly>>;

/// Output of a row reduction: `matrix = transform * input`.
#[derive(Clone, Debug)]
pub struct RowReduced {
    pub matrix: PolyMatrix,
    pub transform: PolyMatrix,
    pub row_degrees: Vec<i64>,
    pub pivots: Vec<usize>,
}

pub fn identity(f: super::field::PrimeField, n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Poly::one(f) } else { Poly::zero(f) })
                .collect()
        })
        .collect()
}

/// Row degree and pivot (rightmost entry of maximal degree); None for a
/// zero row.
pub fn row_pivot(row: &[Poly]) -> Option<(i64, usize)> {
    let mut best: Option<(i64, usize)> = None;
    for (j, e) in row.iter().enumerate() {
        let d = e.deg();
        if d < 0 {
            continue;
        }
        match best {
            Some((bd, _)) if d < bd => {}
            _ => best = Some((d, j)),
        }
    }
    best
}

fn axpy_row(target: &mut [Poly], src: &[Poly], c: u64, shift: usize) {
    for (t, s) in target.iter_mut().zip(src) {
        if s.is_zero() {
            continue;
        }
        *t = t.sub(&s.scale(c).shift(shift));
    }
}

fn axpy_row_poly(target: &mut [Poly], src: &[Poly], q: &Poly) {
    for (t, s) in target.iter_mut().zip(src) {
        if s.is_zero() {
            continue;
        }
        *t = t.sub(&s.mul(q));
    }
}

/// Mulders-Storjohann weak Popov reduction. Requires full row rank.
pub fn weak_popov(m: &PolyMatrix) -> Result<RowReduced, AlgError> {
    let n = m.len();
    if n == 0 {
        return Ok(RowReduced { matrix: vec![], transform: vec![], row_degrees: vec![], pivots: vec![] });
    }
    let f = m[0][0].field();
    let mut a = m.clone();
    let mut u = identity(f, n);
    loop {
        let mut piv = Vec::with_capacity(n);
        for row in &a {
            piv.push(row_pivot(row).ok_or(AlgError::RankDeficient)?);
        }
        // first conflicting pair in index order
        let mut conflict = None;
        'outer: for i in 0..n {
            for k in i + 1..n {
                if piv[i].1 == piv[k].1 {
                    conflict = Some((i, k));
                    break 'outer;
                }
            }
        }
        let Some((i, k)) = conflict else {
            return Ok(RowReduced {
                matrix: a,
                transform: u,
                row_degrees: piv.iter().map(|x| x.0).collect(),
                pivots: piv.iter().map(|x| x.1).collect(),
            });
        };
        // reduce the row of larger degree; on ties the later row
        let (hi, lo) = if piv[i].0 > piv[k].0 { (i, k) } else { (k, i) };
        let j = piv[hi].1;
        let shift = (piv[hi].0 - piv[lo].0) as usize;
        let c = f.mul(a[hi][j].lc(), f.inv(a[lo][j].lc()));
        let src = a[lo].clone();
        axpy_row(&mut a[hi], &src, c, shift);
        let usrc = u[lo].clone();
        axpy_row(&mut u[hi], &usrc, c, shift);
    }
}

/// Popov form: weak Popov, then every pivot column reduced below its pivot
/// degree, pivots monic, rows sorted by (degree, pivot).
pub fn popov(m: &PolyMatrix) -> Result<RowReduced, AlgError> {
    let mut r = weak_popov(m)?;
    let n = r.matrix.len();
    if n == 0 {
        return Ok(r);
    }
    let f = r.matrix[0][0].field();
    loop {
        let mut changed = false;
        for k in 0..n {
            for i in 0..n {
                if i == k {
                    continue;
                }
                let j = r.pivots[i];
                let di = r.row_degrees[i];
                if r.matrix[k][j].deg() >= di {
                    let (q, _) = r.matrix[k][j].divrem(&r.matrix[i][j]);
                    let src = r.matrix[i].clone();
                    axpy_row_poly(&mut r.matrix[k], &src, &q);
                    let usrc = r.transform[i].clone();
                    axpy_row_poly(&mut r.transform[k], &usrc, &q);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    for i in 0..n {
        let c = f.inv(r.matrix[i][r.pivots[i]].lc());
        if c != 1 {
            r.matrix[i] = r.matrix[i].iter().map(|e| e.scale(c)).collect();
            r.transform[i] = r.transform[i].iter().map(|e| e.scale(c)).collect();
        }
        debug_assert_eq!(row_pivot(&r.matrix[i]).map(|x| x.1), Some(r.pivots[i]));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (r.row_degrees[i], r.pivots[i]));
    Ok(RowReduced {
        matrix: order.iter().map(|&i| r.matrix[i].clone()).collect(),
        transform: order.iter().map(|&i| r.transform[i].clone()).collect(),
        row_degrees: order.iter().map(|&i| r.row_degrees[i]).collect(),
        pivots: order.iter().map(|&i| r.pivots[i]).collect(),
    })
}

/// Row-reduced test: leading coefficient matrix has full row rank.
pub fn is_row_reduced(m: &PolyMatrix) -> bool {
    if m.is_empty() {
        return true;
    }
    let f = m[0][0].field();
    let lead: Vec<Vec<u64>> = m
        .iter()
        .map(|row| {
            let d = row.iter().map(|e| e.deg()).max().unwrap_or(-1);
            row.iter()
                .map(|e| if e.deg() == d && d >= 0 { e.lc() } else { 0 })
                .collect()
        })
        .collect();
    super::linalg::rank(&f, &lead) == m.len()
}

/// Lower-triangular Hermite basis of the F_p[t]-span of `gens` inside
/// F_p[t]^n: row i supported on columns 0..=i, monic diagonal, entries
/// left of the diagonal reduced modulo the diagonal of their column.
pub fn hermite_lower(gens: Vec<Vec<Poly>>, n: usize) -> Result<PolyMatrix, AlgError> {
    let mut pool: Vec<Vec<Poly>> = gens.into_iter().filter(|r| r.iter().any(|e| !e.is_zero())).collect();
    let mut basis: Vec<Option<Vec<Poly>>> = vec![None; n];
    for j in (0..n).rev() {
        let mut with: Vec<Vec<Poly>> = Vec::new();
        let mut without: Vec<Vec<Poly>> = Vec::new();
        for r in pool.drain(..) {
            if r[j].is_zero() {
                without.push(r);
            } else {
                with.push(r);
            }
        }
        if with.is_empty() {
            return Err(AlgError::RankDeficient);
        }
        // combine pairwise into a single row holding the gcd
        with.sort_by_key(|r| r[j].deg());
        let mut acc = with.remove(0);
        for b in with {
            let x = acc[j].clone();
            let y = b[j].clone();
            let (g, s, t) = x.ext_gcd(&y);
            let xg = x.div(&g);
            let yg = y.div(&g);
            let new_acc: Vec<Poly> = acc.iter().zip(&b).map(|(a, c)| a.mul(&s).add(&c.mul(&t))).collect();
            let other: Vec<Poly> = acc.iter().zip(&b).map(|(a, c)| a.mul(&yg).sub(&c.mul(&xg))).collect();
            debug_assert!(other[j].is_zero());
            if other.iter().any(|e| !e.is_zero()) {
                without.push(other);
            }
            acc = new_acc;
        }
        let c = acc[j].field().inv(acc[j].lc());
        let acc: Vec<Poly> = acc.iter().map(|e| e.scale(c)).collect();
        // keep the pool small: reduce remaining rows is impossible before the
        // diagonal is fixed, so only drop zero rows
        pool = without;
        basis[j] = Some(acc);
    }
    let mut b: PolyMatrix = basis.into_iter().map(|r| r.unwrap()).collect();
    for k in 1..n {
        for j in (0..k).rev() {
            if b[k][j].deg() >= b[j][j].deg() {
                let q = b[k][j].div(&b[j][j]);
                let src = b[j].clone();
                axpy_row_poly(&mut b[k], &src, &q);
            }
        }
    }
    Ok(b)
}
