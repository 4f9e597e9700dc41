use std::fmt;

use crate::exactalg::bipoly::BiPoly;
use crate::exactalg::factor::is_irreducible;
use crate::exactalg::interp::sample_stream;
use crate::exactalg::text::parse_mpoly;
use crate::exactalg::{discriminant_x, Poly, PrimeField};

use super::reduce::Analysis;
use super::{FunError, Result};

/// How irreducibility over F_p(t) was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrreducibilityCheck {
    /// An irreducible specialization f(t0, x) was found.
    Specialization(u64),
    /// Exactly one reduced-basis invariant is zero, so the constants of the
    /// function field are F_p.
    ReducedBasis,
    /// Accepted on the caller's word; the reduced-basis step certifies it later.
    Asserted,
}

/// A plane model f(t, x), monic of degree d in x.
#[derive(Clone, PartialEq, Eq)]
pub struct CoverModel {
    field: PrimeField,
    f: BiPoly,
    disc: Poly,
    irreducibility: IrreducibilityCheck,
}

const SPECIALIZATION_TRIES: usize = 32;

impl CoverModel {
    /// Checks tameness, monicity and separability, then tries to certify
    /// irreducibility by specialization. With `assert_irreducible` a failed
    /// certification is accepted.
    pub fn validate(f: BiPoly, assert_irreducible: bool, seed: u64) -> Result<Self> {
        let field = f.field();
        let d = f.deg();
        if d < 2 {
            return Err(FunError::DegreeTooSmall);
        }
        if field.p() <= d as u64 {
            return Err(FunError::WildCharacteristic { p: field.p(), d: d as usize });
        }
        if !f.is_monic() {
            return Err(FunError::NotMonic);
        }
        let disc = discriminant_x(&f)?;
        if disc.is_zero() {
            return Err(FunError::Inseparable);
        }
        let mut irreducibility = None;
        for &a in sample_stream(field, seed).iter().take(SPECIALIZATION_TRIES) {
            let s = f.eval_t(a);
            if s.deg() == d && is_irreducible(&s) {
                irreducibility = Some(IrreducibilityCheck::Specialization(a));
                break;
            }
        }
        if let Some(irreducibility) = irreducibility {
            return Ok(CoverModel { field, f, disc, irreducibility });
        }
        let mut model = CoverModel { field, f, disc, irreducibility: IrreducibilityCheck::Asserted };
        if assert_irreducible {
            return Ok(model);
        }
        match Analysis::new(&model).and_then(|a| a.reduced_basis()) {
            Ok(_) => {
                model.irreducibility = IrreducibilityCheck::ReducedBasis;
                Ok(model)
            }
            Err(FunError::NotGeometricallyIrreducible(_) | FunError::Parity) => Err(FunError::Reducible),
            Err(e) => Err(e),
        }
    }

    pub fn new(f: BiPoly) -> Result<Self> {
        CoverModel::validate(f, false, 0x5eed)
    }

    /// Parses `f` in the variables t and x.
    pub fn parse(field: PrimeField, text: &str) -> Result<Self> {
        let m = parse_mpoly(field, text)?;
        let f = BiPoly::from_mpoly(&m, 0, 2)?;
        CoverModel::new(f)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn poly(&self) -> &BiPoly {
        &self.f
    }

    pub fn d(&self) -> usize {
        self.f.deg() as usize
    }

    pub fn disc(&self) -> &Poly {
        &self.disc
    }

    pub fn irreducibility(&self) -> IrreducibilityCheck {
        self.irreducibility
    }

    /// Smallest m ≥ 0 with deg a_j ≤ m(d-j) for all j < d.
    pub fn infinity_exponent(&self) -> usize {
        let d = self.d();
        (0..d)
            .filter(|&j| !self.f.coeff(j).is_zero())
            .map(|j| {
                let a = self.f.coeff(j).deg() as usize;
                a.div_ceil(d - j)
            })
            .max()
            .unwrap_or(0)
    }

    /// u^{md} f(1/u, x'/u^m) in the variables (u, x'), monic in x'.
    pub fn infinite_model(&self) -> BiPoly {
        let d = self.d();
        let m = self.infinity_exponent();
        let c = (0..=d)
            .map(|j| {
                let a = self.f.coeff(j);
                if a.is_zero() {
                    return a;
                }
                let k = a.deg() as usize;
                a.reverse(k).shift(m * (d - j) - k)
            })
            .collect();
        BiPoly::new(self.field, c)
    }

    pub fn to_text(&self) -> String {
        crate::exactalg::text::mpoly_to_string(&self.f.to_mpoly(0, 2))
    }

    /// The same cover after t -> t + a.
    pub fn shift_t(&self, a: u64) -> Result<Self> {
        CoverModel::validate(self.f.shift_t(a), self.irreducibility == IrreducibilityCheck::Asserted, 0x5eed)
    }

    /// The same cover after x -> x + q(t).
    pub fn shift_x(&self, q: &Poly) -> Result<Self> {
        CoverModel::validate(self.f.shift_x(q), self.irreducibility == IrreducibilityCheck::Asserted, 0x5eed)
    }
}

impl fmt::Debug for CoverModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoverModel(p = {}; f = {})", self.field.p(), self.to_text())
    }
}
