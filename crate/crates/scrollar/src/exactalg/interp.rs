//! Evaluation/interpolation: sample-point selection, Newton interpolation,
//! and the interpolated characteristic polynomial.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::field::PrimeField;
use super::linalg::charpoly_fp;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::AlgError;

/// Newton interpolation through (xs[i], ys[i]); xs distinct.
pub fn interpolate(f: PrimeField, xs: &[u64], ys: &[u64]) -> Poly {
    let n = xs.len();
    assert_eq!(n, ys.len());
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = f.sub(coef[i], coef[i - 1]);
            let den = f.sub(xs[i], xs[i - j]);
            coef[i] = f.mul(num, f.inv(den));
        }
    }
    let mut r = Poly::zero(f);
    for i in (0..n).rev() {
        r = r
            .mul(&Poly::from_coeffs(f, vec![f.neg(xs[i]), 1]))
            .add(&Poly::constant(f, coef[i]));
    }
    r
}

/// Seeded permutation of F_p used as the sample stream.
pub fn sample_stream(f: PrimeField, seed: u64) -> Vec<u64> {
    let mut v: Vec<u64> = if f.p() <= 1 << 20 {
        (0..f.p()).collect()
    } else {
        // large moduli: a long pseudo-random window is plenty
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let mut s = std::collections::BTreeSet::new();
        while s.len() < 1 << 16 {
            s.insert(rng.gen_range(0..f.p()));
        }
        s.into_iter().collect()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    v.shuffle(&mut rng);
    v
}

/// Evaluate a vector-valued function at `count` admissible sample points
/// (the callback returns None to reject a point) and interpolate each
/// coordinate. Sequential and parallel runs agree exactly: every point is
/// handled independently and the accepted set is fixed before evaluation.
pub fn interpolate_vector<G>(
    f: PrimeField,
    count: usize,
    seed: u64,
    admissible: impl Fn(u64) -> bool,
    eval: G,
    parallel: bool,
) -> Result<Vec<Poly>, AlgError>
where
    G: Fn(u64) -> Option<Vec<u64>> + Sync,
{
    let stream = sample_stream(f, seed);
    let mut pts = Vec::with_capacity(count);
    for &a in &stream {
        if pts.len() == count {
            break;
        }
        if admissible(a) {
            pts.push(a);
        }
    }
    if pts.len() < count {
        return Err(AlgError::InsufficientPoints { needed: count, p: f.p() });
    }
    let vals: Vec<Option<Vec<u64>>> = if parallel {
        pts.par_iter().map(|&a| eval(a)).collect()
    } else {
        pts.iter().map(|&a| eval(a)).collect()
    };
    let mut xs = Vec::with_capacity(count);
    let mut cols: Vec<Vec<u64>> = Vec::new();
    for (a, v) in pts.iter().zip(vals) {
        let v = v.ok_or(AlgError::SampleRejected(*a))?;
        if cols.is_empty() {
            cols = vec![Vec::with_capacity(count); v.len()];
        }
        if v.len() != cols.len() {
            return Err(AlgError::ShapeMismatch);
        }
        xs.push(*a);
        for (c, y) in cols.iter_mut().zip(v) {
            c.push(y);
        }
    }
    Ok(cols.iter().map(|ys| interpolate(f, &xs, ys)).collect())
}

/// A square operator whose entries are rational in t and can be evaluated
/// at a point.
pub trait SpecializableOperator: Sync {
    fn dim(&self) -> usize;
    /// A polynomial vanishing at every pole of every entry.
    fn pole_locus(&self) -> Poly;
    /// The matrix at t = a (a is never a root of `pole_locus`).
    fn at(&self, a: u64) -> Vec<Vec<u64>>;
}

/// Operator given by explicit rational-function entries.
pub struct RatMatrix {
    pub entries: Vec<Vec<RatFunc>>,
    pub field: PrimeField,
}

impl SpecializableOperator for RatMatrix {
    fn dim(&self) -> usize {
        self.entries.len()
    }
    fn pole_locus(&self) -> Poly {
        let mut l = Poly::one(self.field);
        for row in &self.entries {
            for e in row {
                l = l.lcm(e.den());
            }
        }
        l
    }
    fn at(&self, a: u64) -> Vec<Vec<u64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.eval(a).expect("pole avoided")).collect())
            .collect()
    }
}

/// Characteristic polynomial det(y - M) of a rational operator, returned as
/// coefficients (low to high in y) in F_p(t). `degree_bound` bounds the
/// degree of D^k c_k, where D is the pole locus and c_k the coefficient of
/// y^(n-k).
pub fn charpoly_interpolated<O: SpecializableOperator>(
    op: &O,
    degree_bound: usize,
    seed: u64,
    parallel: bool,
) -> Result<Vec<RatFunc>, AlgError> {
    let n = op.dim();
    let den = op.pole_locus();
    let f = den.field();
    let vals = interpolate_vector(
        f,
        degree_bound + 1,
        seed,
        |a| den.eval(a) != 0,
        |a| {
            let cp = charpoly_fp(&f, &op.at(a));
            let dv = den.eval(a);
            // scale coefficient of y^(n-k) by D(a)^k
            let mut out = vec![0u64; n + 1];
            let mut s = 1u64;
            for k in 0..=n {
                out[n - k] = f.mul(cp[n - k], s);
                s = f.mul(s, dv);
            }
            Some(out)
        },
        parallel,
    )?;
    Ok(vals
        .into_iter()
        .enumerate()
        .map(|(i, num)| RatFunc::new(num, den.pow((n - i) as u64)))
        .collect())
}

/// Monic polynomial root: given monic c = r^k (coefficients low to high),
/// return monic r of degree deg(c)/k, or None if c is not a k-th power.
pub fn monic_root(f: PrimeField, c: &[u64], k: usize) -> Option<Vec<u64>> {
    let n = c.len() - 1;
    if n % k != 0 || c[n] != 1 {
        return None;
    }
    if (k as u64) % f.p() == 0 {
        return None;
    }
    let m = n / k;
    // reversed series: rev(c)(z) = rev(r)(z)^k; solve rev(r) = rev(c)^(1/k)
    // via exp/log-free recurrence: for s = rev(c), g = s^(1/k), g' s = (1/k) g s'
    let s: Vec<u64> = (0..=n).map(|i| c[n - i]).collect();
    let mut g = vec![0u64; m + 1];
    g[0] = 1;
    // k s g' = g s'  =>  coefficient recurrence
    for j in 1..=m {
        // sum_{i=0}^{j} (k*(j-i) - i) * s_i * g_{j-i} = 0, solve for g_j (i=0 term)
        let mut acc = 0u64;
        for i in 1..=j.min(n) {
            let coef = f.sub(
                f.mul(k as u64 % f.p(), (j - i) as u64 % f.p()),
                i as u64 % f.p(),
            );
            acc = f.add(acc, f.mul(coef, f.mul(s[i], g[j - i])));
        }
        // k*j*g_j + acc = 0
        let jj = (j as u64) % f.p();
        if jj == 0 {
            return None;
        }
        g[j] = f.neg(f.mul(acc, f.inv(f.mul(jj, k as u64 % f.p()))));
    }
    let r: Vec<u64> = (0..=m).map(|i| g[m - i]).collect();
    // verify r^k = c
    let rp = Poly::from_coeffs(f, r.clone()).pow(k as u64);
    if rp.coeffs() != c {
        return None;
    }
    Some(r)
}
