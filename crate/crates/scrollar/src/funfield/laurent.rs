use std::fmt;

use crate::exactalg::{Poly, PrimeField};

/// p(t)·t^v with p(0) ≠ 0, or zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Laurent {
    p: Poly,
    v: i64,
}

impl Laurent {
    pub fn zero(f: PrimeField) -> Self {
        Laurent { p: Poly::zero(f), v: 0 }
    }

    pub fn new(p: Poly, v: i64) -> Self {
        match p.valuation() {
            None => Laurent { p, v: 0 },
            Some(k) => Laurent { p: p.shift_down(k), v: v + k as i64 },
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Laurent::new(p, 0)
    }

    /// q(1/t) for a polynomial q in u = 1/t.
    pub fn from_u_poly(q: &Poly) -> Self {
        if q.is_zero() {
            return Laurent::zero(q.field());
        }
        let n = q.deg() as usize;
        Laurent::new(q.reverse(n), -(n as i64))
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    /// Coefficient of t^s.
    pub fn coeff(&self, s: i64) -> u64 {
        if self.is_zero() || s < self.v {
            0
        } else {
            self.p.coeff((s - self.v) as usize)
        }
    }

    /// Lowest exponent of t.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.v)
    }

    /// Highest exponent of t.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.v + self.p.deg())
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let v = self.v.min(o.v);
        let a = self.p.shift((self.v - v) as usize);
        let b = o.p.shift((o.v - v) as usize);
        Laurent::new(a.add(&b), v)
    }

    pub fn neg(&self) -> Laurent {
        Laurent { p: self.p.neg(), v: self.v }
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero(self.p.field());
        }
        Laurent::new(self.p.mul(&o.p), self.v + o.v)
    }

    /// Exact division; None if not exact in F_p[t, 1/t].
    pub fn div(&self, o: &Laurent) -> Option<Laurent> {
        assert!(!o.is_zero(), "Laurent division by zero");
        if self.is_zero() {
            return Some(self.clone());
        }
        let q = self.p.div_exact(&o.p)?;
        Some(Laurent::new(q, self.v - o.v))
    }

    /// t^k·self as a polynomial, if no negative exponents remain.
    pub fn to_poly_shifted(&self, k: i64) -> Option<Poly> {
        if self.is_zero() {
            return Some(self.p.clone());
        }
        let s = self.v + k;
        (s >= 0).then(|| self.p.shift(s as usize))
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})*t^{}", self.p, self.v)
    }
}
