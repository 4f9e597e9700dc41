//! Factorization over F_p: squarefree, distinct-degree and equal-degree
//! (Cantor-Zassenhaus) splitting.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;
use super::poly::Poly;

fn pth_root(f: &Poly) -> Poly {
    let p = f.field().p() as usize;
    let c: Vec<u64> = f.coeffs().iter().step_by(p).copied().collect();
    Poly::from_coeffs(f.field(), c)
}

/// Squarefree decomposition of a nonzero polynomial: monic squarefree,
/// pairwise coprime factors with multiplicities.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    assert!(!f.is_zero());
    let p = f.field().p() as usize;
    let mut out = Vec::new();
    let f = f.monic();
    if f.deg() <= 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div(&c);
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let z = w.div(&y);
        if z.deg() > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div(&w);
    }
    if c.deg() > 0 {
        let r = pth_root(&c);
        for (g, m) in squarefree_decomposition(&r) {
            out.push((g, m * p));
        }
    }
    merge(out)
}

fn merge(mut v: Vec<(Poly, usize)>) -> Vec<(Poly, usize)> {
    v.sort_by(|a, b| poly_order(&a.0, &b.0));
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (g, m) in v {
        if let Some(last) = out.last_mut() {
            if last.0 == g {
                last.1 += m;
                continue;
            }
        }
        out.push((g, m));
    }
    out
}

/// Deterministic total order: degree, then coefficients from the top.
pub fn poly_order(a: &Poly, b: &Poly) -> core::cmp::Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Squarefree part (product of distinct monic irreducible factors).
pub fn squarefree_part(f: &Poly) -> Poly {
    let mut r = Poly::one(f.field());
    for (g, _) in squarefree_decomposition(f) {
        r = r.mul(&g);
    }
    r
}

pub fn is_squarefree(f: &Poly) -> bool {
    squarefree_decomposition(f).iter().all(|(_, m)| *m == 1)
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let fld = f.field();
    let p = fld.p() as u128;
    let x = Poly::var(fld);
    let mut rest = f.monic();
    let mut h = x.rem(&rest);
    let mut out = Vec::new();
    let mut i = 1;
    while rest.deg() >= 2 * i as i64 {
        h = h.pow_mod(p, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.deg() > 0 {
            rest = rest.div(&g);
            h = h.rem(&rest);
            out.push((g, i));
        }
        i += 1;
    }
    if rest.deg() > 0 {
        let k = rest.deg() as usize;
        out.push((rest, k));
    }
    out
}

fn pow_mod_big(a: &Poly, e: &BigUint, m: &Poly) -> Poly {
    let mut r = Poly::one(a.field()).rem(m);
    let base = a.rem(m);
    for i in (0..e.bits()).rev() {
        r = r.square().rem(m);
        if e.bit(i) {
            r = r.mul(&base).rem(m);
        }
    }
    r
}

/// Split a monic squarefree product of irreducibles of degree `k`.
pub fn equal_degree(f: &Poly, k: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let fld = f.field();
    let n = f.deg() as usize;
    if n == k {
        return vec![f.monic()];
    }
    let q = BigUint::from(fld.p()).pow(k as u32);
    let e = (q - 1u32) / 2u32;
    loop {
        let c: Vec<u64> = (0..n).map(|_| rng.gen_range(0..fld.p())).collect();
        let a = Poly::from_coeffs(fld, c);
        if a.deg() <= 0 {
            continue;
        }
        let b = pow_mod_big(&a, &e, f).sub(&Poly::one(fld));
        let g = b.gcd(f);
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = f.div(&g);
            let mut out = equal_degree(&g, k, rng);
            out.extend(equal_degree(&h.monic(), k, rng));
            return out;
        }
    }
}

/// Full factorization into monic irreducibles with multiplicities, sorted.
pub fn factorize(f: &Poly, seed: u64) -> Vec<(Poly, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, m) in squarefree_decomposition(f) {
        for (h, k) in distinct_degree(&g) {
            for irr in equal_degree(&h, k, &mut rng) {
                out.push((irr, m));
            }
        }
    }
    out.sort_by(|a, b| poly_order(&a.0, &b.0));
    out
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &Poly) -> bool {
    let n = f.deg();
    if n <= 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let n = n as usize;
    let fld = f.field();
    let p = fld.p() as u128;
    let f = f.monic();
    let x = Poly::var(fld);
    let frob = |k: usize| {
        let mut h = x.clone();
        for _ in 0..k {
            h = h.pow_mod(p, &f);
        }
        h
    };
    if !frob(n).sub(&x).rem(&f).is_zero() {
        return false;
    }
    for q in prime_divisors(n) {
        if frob(n / q).sub(&x).gcd(&f).deg() != 0 {
            return false;
        }
    }
    true
}

pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Distinct roots in F_p, sorted.
pub fn roots(f: &Poly, seed: u64) -> Vec<u64> {
    let fld = f.field();
    if f.deg() <= 0 {
        return Vec::new();
    }
    let x = Poly::var(fld);
    let f = f.monic();
    let g = x.pow_mod(fld.p() as u128, &f).sub(&x).gcd(&f);
    if g.deg() <= 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r: Vec<u64> = equal_degree(&g, 1, &mut rng)
        .into_iter()
        .map(|l| fld.neg(l.coeff(0)))
        .collect();
    r.sort_unstable();
    r
}

/// Seeded random monic irreducible polynomial of degree `k`.
pub fn random_irreducible(fld: PrimeField, k: usize, seed: u64) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut c: Vec<u64> = (0..k).map(|_| rng.gen_range(0..fld.p())).collect();
        c.push(1);
        let f = Poly::from_coeffs(fld, c);
        if is_irreducible(&f) {
            return f;
        }
    }
}
