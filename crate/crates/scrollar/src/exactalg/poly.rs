//! Dense univariate polynomials over a prime field.

use core::fmt;

use super::field::PrimeField;
use super::AlgError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    f: PrimeField,
    c: Vec<u64>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fmt, "{}", super::text::poly_to_string(self, 't'))
    }
}

impl Poly {
    pub fn zero(f: PrimeField) -> Self {
        Poly { f, c: Vec::new() }
    }

    pub fn one(f: PrimeField) -> Self {
        Poly { f, c: vec![1] }
    }

    pub fn constant(f: PrimeField, a: u64) -> Self {
        Self::from_coeffs(f, vec![a % f.p()])
    }

    /// The variable itself.
    pub fn var(f: PrimeField) -> Self {
        Poly { f, c: vec![0, 1] }
    }

    pub fn monomial(f: PrimeField, a: u64, k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = a % f.p();
        Self::from_coeffs(f, c)
    }

    pub fn from_coeffs(f: PrimeField, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= f.p();
        }
        let mut p = Poly { f, c };
        p.trim();
        p
    }

    pub fn from_i64s(f: PrimeField, c: &[i64]) -> Self {
        Self::from_coeffs(f, c.iter().map(|&a| f.reduce_i64(a)).collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(f: PrimeField, roots: &[u64]) -> Self {
        let mut r = Poly::one(f);
        for &a in roots {
            r = r.mul(&Poly::from_coeffs(f, vec![f.neg(a % f.p()), 1]));
        }
        r
    }

    fn trim(&mut self) {
        while let Some(&0) = self.c.last() {
            self.c.pop();
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.f
    }

    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.c
    }

    /// Degree, -1 for the zero polynomial.
    #[inline]
    pub fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == 1
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    /// Lowest index with a nonzero coefficient (the t-adic valuation).
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|&a| a != 0)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.f.add(self.coeff(i), o.coeff(i)));
        }
        let mut r = Poly { f: self.f, c };
        r.trim();
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.f.sub(self.coeff(i), o.coeff(i)));
        }
        let mut r = Poly { f: self.f, c };
        r.trim();
        r
    }

    pub fn neg(&self) -> Poly {
        Poly {
            f: self.f,
            c: self.c.iter().map(|&a| self.f.neg(a)).collect(),
        }
    }

    pub fn scale(&self, a: u64) -> Poly {
        let a = a % self.f.p();
        if a == 0 {
            return Poly::zero(self.f);
        }
        Poly {
            f: self.f,
            c: self.c.iter().map(|&x| self.f.mul(x, a)).collect(),
        }
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.c);
        Poly { f: self.f, c }
    }

    /// Divide by t^k, dropping lower terms.
    pub fn shift_down(&self, k: usize) -> Poly {
        if k >= self.c.len() {
            return Poly::zero(self.f);
        }
        Poly { f: self.f, c: self.c[k..].to_vec() }
    }

    /// Truncate modulo t^k.
    pub fn truncate(&self, k: usize) -> Poly {
        let mut c = self.c.clone();
        c.truncate(k);
        let mut r = Poly { f: self.f, c };
        r.trim();
        r
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.f);
        }
        let p = self.f.p();
        let n = self.c.len() + o.c.len() - 1;
        let c = if p < (1 << 32) && self.c.len().min(o.c.len()) < (1 << 20) {
            let mut acc = vec![0u128; n];
            for (i, &a) in self.c.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in o.c.iter().enumerate() {
                    acc[i + j] += (a * b) as u128;
                }
            }
            acc.into_iter().map(|x| (x % p as u128) as u64).collect()
        } else {
            let mut c = vec![0u64; n];
            for (i, &a) in self.c.iter().enumerate() {
                for (j, &b) in o.c.iter().enumerate() {
                    c[i + j] = self.f.add(c[i + j], self.f.mul(a, b));
                }
            }
            c
        };
        let mut r = Poly { f: self.f, c };
        r.trim();
        r
    }

    pub fn square(&self) -> Poly {
        self.mul(self)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut r = Poly::one(self.f);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.square();
            }
        }
        r
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.deg() < d.deg() {
            return (Poly::zero(self.f), self.clone());
        }
        let inv = self.f.inv(d.lc());
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.c.len() - dd];
        for k in (0..q.len()).rev() {
            let top = r[k + dd];
            if top == 0 {
                continue;
            }
            let s = self.f.mul(top, inv);
            q[k] = s;
            for (j, &b) in d.c.iter().enumerate() {
                r[k + j] = self.f.sub(r[k + j], self.f.mul(s, b));
            }
        }
        r.truncate(dd);
        let mut qq = Poly { f: self.f, c: q };
        qq.trim();
        let mut rr = Poly { f: self.f, c: r };
        rr.trim();
        (qq, rr)
    }

    pub fn checked_divrem(&self, d: &Poly) -> Result<(Poly, Poly), AlgError> {
        if d.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self.divrem(d))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn div(&self, d: &Poly) -> Poly {
        self.divrem(d).0
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn divides(&self, o: &Poly) -> bool {
        o.rem(self).is_zero()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.f.inv(self.lc()))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// (g, s, t) with s*self + t*o = g monic.
    pub fn ext_gcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let f = self.f;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = r1;
            r1 = r;
            let s2 = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = s2;
            let t2 = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let k = f.inv(r0.lc());
        (r0.scale(k), s0.scale(k), t0.scale(k))
    }

    pub fn lcm(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.f);
        }
        self.mul(o).div(&self.gcd(o)).monic()
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut r = 0;
        for &a in self.c.iter().rev() {
            r = self.f.add(self.f.mul(r, x), a);
        }
        r
    }

    pub fn derivative(&self) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero(self.f);
        }
        let c = (1..self.c.len())
            .map(|i| self.f.mul(self.c[i], i as u64 % self.f.p()))
            .collect();
        let mut r = Poly { f: self.f, c };
        r.trim();
        r
    }

    /// self(g(t)).
    pub fn compose(&self, g: &Poly) -> Poly {
        let mut r = Poly::zero(self.f);
        for &a in self.c.iter().rev() {
            r = r.mul(g).add(&Poly::constant(self.f, a));
        }
        r
    }

    /// t^deg * self(1/t) for the given nominal degree.
    pub fn reverse(&self, n: usize) -> Poly {
        let mut c = vec![0u64; n + 1];
        for (i, &a) in self.c.iter().enumerate() {
            assert!(i <= n, "reverse: degree exceeds nominal degree");
            c[n - i] = a;
        }
        Poly::from_coeffs(self.f, c)
    }

    /// self^e mod m.
    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut r = Poly::one(self.f).rem(m);
        let mut b = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b).rem(m);
            }
            e >>= 1;
            if e > 0 {
                b = b.square().rem(m);
            }
        }
        r
    }

    /// Valuation of `self` at the prime `pi` (None for zero).
    pub fn valuation_at(&self, pi: &Poly) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut a = self.clone();
        loop {
            let (q, r) = a.divrem(pi);
            if !r.is_zero() {
                return Some(v);
            }
            a = q;
            v += 1;
        }
    }

    /// Inverse modulo t^n of a series with nonzero constant term.
    pub fn inv_series(&self, n: usize) -> Poly {
        assert!(self.coeff(0) != 0, "series inverse needs a unit constant term");
        let f = self.f;
        let mut g = Poly::constant(f, f.inv(self.coeff(0)));
        let mut k = 1;
        while k < n {
            k = (2 * k).min(n);
            // g <- g (2 - self g)
            let e = self.truncate(k).mul(&g).truncate(k);
            let two = Poly::constant(f, 2);
            g = g.mul(&two.sub(&e)).truncate(k);
        }
        g.truncate(n)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fmt, "{}", super::text::poly_to_string(self, 't'))
    }
}
