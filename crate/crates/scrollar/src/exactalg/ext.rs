//! Dense polynomials over an arbitrary [`Field`] and root finding in
//! extension fields F_{p^m}.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::factor::{factorize, random_irreducible};
use super::field::{ExtField, Field, PrimeField};
use super::poly::Poly;

pub type GPoly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, a: &mut GPoly<F::Elem>) {
    while a.last().is_some_and(|x| f.is_zero(x)) {
        a.pop();
    }
}

pub fn gadd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> GPoly<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let mut r: Vec<F::Elem> = (0..n)
        .map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(f, &mut r);
    r
}

pub fn gsub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> GPoly<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let mut r: Vec<F::Elem> = (0..n)
        .map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(f, &mut r);
    r
}

pub fn gmul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> GPoly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] = f.add(&r[i + j], &f.mul(x, y));
        }
    }
    trim(f, &mut r);
    r
}

pub fn gdivrem<F: Field>(f: &F, a: &[F::Elem], d: &[F::Elem]) -> (GPoly<F::Elem>, GPoly<F::Elem>) {
    assert!(!d.is_empty(), "division by zero polynomial");
    let mut r = a.to_vec();
    trim(f, &mut r);
    if r.len() < d.len() {
        return (Vec::new(), r);
    }
    let inv = f.inv(d.last().unwrap());
    let dd = d.len() - 1;
    let mut q = vec![f.zero(); r.len() - dd];
    for k in (0..q.len()).rev() {
        let top = r[k + dd].clone();
        if f.is_zero(&top) {
            continue;
        }
        let s = f.mul(&top, &inv);
        for (j, b) in d.iter().enumerate() {
            r[k + j] = f.sub(&r[k + j], &f.mul(&s, b));
        }
        q[k] = s;
    }
    r.truncate(dd);
    trim(f, &mut r);
    trim(f, &mut q);
    (q, r)
}

pub fn gmonic<F: Field>(f: &F, a: &[F::Elem]) -> GPoly<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(l) => {
            let inv = f.inv(l);
            a.iter().map(|x| f.mul(x, &inv)).collect()
        }
    }
}

pub fn ggcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> GPoly<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(f, &mut x);
    trim(f, &mut y);
    while !y.is_empty() {
        let r = gdivrem(f, &x, &y).1;
        x = y;
        y = r;
    }
    gmonic(f, &x)
}

pub fn gpow_mod<F: Field>(f: &F, a: &[F::Elem], e: &BigUint, m: &[F::Elem]) -> GPoly<F::Elem> {
    let mut r = gdivrem(f, &[f.one()], m).1;
    let base = gdivrem(f, a, m).1;
    for i in (0..e.bits()).rev() {
        r = gdivrem(f, &gmul(f, &r, &r), m).1;
        if e.bit(i) {
            r = gdivrem(f, &gmul(f, &r, &base), m).1;
        }
    }
    r
}

pub fn geval<F: Field>(f: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut r = f.zero();
    for c in a.iter().rev() {
        r = f.add(&f.mul(&r, x), c);
    }
    r
}

/// Split a monic polynomial over F_q that is a product of distinct linear
/// factors; returns its roots.
fn split_linear(ext: &ExtField, g: &[Poly], rng: &mut ChaCha8Rng) -> Vec<Poly> {
    if g.len() == 2 {
        let root = ext.neg(&ext.div(&g[0], &g[1]));
        return vec![root];
    }
    let p = ext.base().p();
    let m = ext.degree();
    let q = BigUint::from(p).pow(m as u32);
    let e = (q - 1u32) / 2u32;
    loop {
        let a: Poly = Poly::from_coeffs(ext.base(), (0..m).map(|_| rng.gen_range(0..p)).collect());
        let lin = vec![a, ext.one()];
        let h = gsub(ext, &gpow_mod(ext, &lin, &e, g), &[ext.one()]);
        let d = ggcd(ext, &h, g);
        if d.len() > 1 && d.len() < g.len() {
            let other = gmonic(ext, &gdivrem(ext, g, &d).0);
            let mut r = split_linear(ext, &d, rng);
            r.extend(split_linear(ext, &other, rng));
            return r;
        }
    }
}

/// Smallest extension degree over which `f` splits.
pub fn splitting_degree(f: &Poly, seed: u64) -> usize {
    let mut m = 1usize;
    for (g, _) in factorize(f, seed) {
        let k = g.deg() as usize;
        m = m / gcd(m, k) * k;
    }
    m
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Splitting field of `f` over F_p with all roots of `f` (with repetition
/// by multiplicity removed), in a fixed order: factors sorted, roots of each
/// factor in discovery order under the seed.
pub fn roots_in_splitting_field(field: PrimeField, f: &Poly, seed: u64) -> (ExtField, Vec<Poly>) {
    let m = splitting_degree(f, seed);
    let modulus = if m == 1 {
        Poly::var(field)
    } else {
        random_irreducible(field, m, seed ^ 0xe87)
    };
    let ext = ExtField::new(modulus);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, _) in factorize(f, seed) {
        let gl: Vec<Poly> = g.coeffs().iter().map(|&c| ext.embed(c)).collect();
        out.extend(split_linear(&ext, &gl, &mut rng));
    }
    (ext, out)
}
