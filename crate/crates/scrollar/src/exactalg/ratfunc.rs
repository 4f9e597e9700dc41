//! Rational functions over a prime field.

use core::fmt;

use super::field::{Field, PrimeField};
use super::poly::Poly;

/// Reduced fraction with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            let f = num.field();
            return RatFunc { num, den: Poly::one(f) };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div(&g), den.div(&g))
        };
        let l = d.lc();
        if l != 1 {
            let k = d.field().inv(l);
            n = n.scale(k);
            d = d.scale(k);
        }
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: Poly) -> Self {
        let f = p.field();
        RatFunc { num: p, den: Poly::one(f) }
    }

    pub fn zero(f: PrimeField) -> Self {
        RatFunc { num: Poly::zero(f), den: Poly::one(f) }
    }

    pub fn one(f: PrimeField) -> Self {
        RatFunc { num: Poly::one(f), den: Poly::one(f) }
    }

    pub fn constant(f: PrimeField, a: u64) -> Self {
        Self::from_poly(Poly::constant(f, a))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn field(&self) -> PrimeField {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// Degree at infinity: deg num - deg den (i64::MIN for zero).
    pub fn degree(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.num.deg() - self.den.deg()
        }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero(self.field());
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div(&g1);
        let d2 = o.den.div(&g1);
        let n2 = o.num.div(&g2);
        let d1 = self.den.div(&g2);
        RatFunc::new(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        self.mul(&RatFunc::from_poly(p.clone()))
    }

    pub fn scale(&self, a: u64) -> RatFunc {
        RatFunc::new(self.num.scale(a), self.den.clone())
    }

    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> RatFunc {
        self.mul(&o.inv())
    }

    /// Value at t = a, or None at a pole.
    pub fn eval(&self, a: u64) -> Option<u64> {
        let d = self.den.eval(a);
        if d == 0 {
            return None;
        }
        let f = self.field();
        Some(f.mul(self.num.eval(a), f.inv(d)))
    }
}

/// The field F_p(t).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatField {
    pub f: PrimeField,
}

impl RatField {
    pub fn new(f: PrimeField) -> Self {
        RatField { f }
    }
}

impl Field for RatField {
    type Elem = RatFunc;
    fn zero(&self) -> RatFunc {
        RatFunc::zero(self.f)
    }
    fn one(&self) -> RatFunc {
        RatFunc::one(self.f)
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b)
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.sub(b)
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.mul(b)
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        a.neg()
    }
    fn inv(&self, a: &RatFunc) -> RatFunc {
        a.inv()
    }
}
