//! Prime fields, extension fields, and the field interface used by the
//! generic linear algebra.

use core::fmt;

use super::poly::Poly;
use super::AlgError;

/// Minimal field interface. Elements carry no context; the field value does.
pub trait Field: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
}

/// Upper limit on the modulus.
pub const MAX_MODULUS: u64 = 1 << 61;
/// Default modulus of the toolkit.
pub const DEFAULT_P: u64 = 1009;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgError> {
        if p < 3 || p >= MAX_MODULUS || !is_prime(p) {
            return Err(AlgError::BadModulus(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, a: i64) -> u64 {
        let r = a.rem_euclid(self.p as i64);
        r as u64
    }

    #[inline]
    pub fn reduce_u64(&self, a: u64) -> u64 {
        a % self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.p < (1 << 32) {
            (a * b) % self.p
        } else {
            ((a as u128 * b as u128) % self.p as u128) as u64
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on signed integers
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        s0.rem_euclid(self.p as i128) as u64
    }

    /// Square root if `a` is a square.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return Some(0);
        }
        if self.pow(a, (self.p - 1) / 2) != 1 {
            return None;
        }
        // Tonelli-Shanks
        let mut q = self.p - 1;
        let mut s = 0;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while self.pow(z, (self.p - 1) / 2) != self.p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r.min(self.p - r))
    }

    /// Symmetric representative in (-p/2, p/2].
    pub fn signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Field for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::add(self, *a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::sub(self, *a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::mul(self, *a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        PrimeField::neg(self, *a)
    }
    fn inv(&self, a: &u64) -> u64 {
        PrimeField::inv(self, *a)
    }
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod_u64(r, a, m);
        }
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// F_q = F_p[z]/(m(z)) for an irreducible `m`. Elements are polynomials of
/// degree below deg m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    modulus: Poly,
}

impl ExtField {
    /// `modulus` must be irreducible; this is not rechecked.
    pub fn new(modulus: Poly) -> Self {
        assert!(modulus.deg() >= 1);
        ExtField { modulus: modulus.monic() }
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg() as usize
    }

    pub fn base(&self) -> PrimeField {
        self.modulus.field()
    }

    pub fn embed(&self, a: u64) -> Poly {
        Poly::constant(self.base(), a)
    }

    pub fn reduce(&self, a: &Poly) -> Poly {
        a.rem(&self.modulus)
    }

    /// a^(p^k) for repeated Frobenius.
    pub fn frobenius(&self, a: &Poly, k: usize) -> Poly {
        let mut r = a.clone();
        for _ in 0..k {
            r = r.pow_mod(self.base().p() as u128, &self.modulus);
        }
        r
    }

    pub fn pow_big(&self, a: &Poly, e: &num_bigint::BigUint) -> Poly {
        let mut r = Poly::one(self.base());
        for i in (0..e.bits()).rev() {
            r = r.mul(&r).rem(&self.modulus);
            if e.bit(i) {
                r = r.mul(a).rem(&self.modulus);
            }
        }
        r
    }
}

impl Field for ExtField {
    type Elem = Poly;
    fn zero(&self) -> Poly {
        Poly::zero(self.base())
    }
    fn one(&self) -> Poly {
        Poly::one(self.base())
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.sub(b)
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b).rem(&self.modulus)
    }
    fn neg(&self, a: &Poly) -> Poly {
        a.neg()
    }
    fn inv(&self, a: &Poly) -> Poly {
        let (g, s, _) = a.ext_gcd(&self.modulus);
        assert!(g.deg() == 0, "inverse of zero divisor in extension field");
        s.rem(&self.modulus)
    }
}
