use crate::exactalg::bipoly::{resultant_fp, BiPoly};
use crate::exactalg::factor::squarefree_decomposition;
use crate::exactalg::interp::{interpolate, interpolate_vector, monic_root};
use crate::exactalg::{AlgError, Poly, PrimeField};
use crate::funfield::CoverModel;

use super::{ResolventError, Result};

/// y^2 - disc(f).
pub fn discriminant_resolvent(model: &CoverModel) -> Result<BiPoly> {
    let disc = model.disc();
    let field = model.field();
    if is_square(disc) {
        return Err(ResolventError::DiscriminantSquare);
    }
    Ok(BiPoly::new(field, vec![disc.neg(), Poly::zero(field), Poly::one(field)]))
}

fn is_square(p: &Poly) -> bool {
    let field = p.field();
    field.sqrt(p.lc()).is_some() && squarefree_decomposition(p).iter().all(|(_, m)| m % 2 == 0)
}

/// Classical cubic resolvent of a monic quartic x^4 + a x^3 + b x^2 + c x + e,
/// with roots x1x2 + x3x4 and conjugates.
pub fn cubic_resolvent(model: &CoverModel) -> Result<BiPoly> {
    if model.d() != 4 {
        return Err(ResolventError::DegreeMismatch { subgroup: 4, model: model.d() });
    }
    let f = model.poly();
    let field = model.field();
    let (a, b, c, e) = (f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
    let four = |p: &Poly| p.scale(4);
    let c1 = a.mul(&c).sub(&four(&e));
    let c0 = a.mul(&a).mul(&e).sub(&four(&b.mul(&e))).add(&c.mul(&c)).neg();
    Ok(BiPoly::new(field, vec![c0, c1, b.neg(), Poly::one(field)]))
}

/// Σ_{i<j} (y - x_i - x_j) for one specialization: the square root of
/// Res_z(f(z), f(y - z)) / (2^d f(y/2)).
fn pair_sum_at(field: PrimeField, fa: &Poly) -> Option<Vec<u64>> {
    let d = fa.deg() as usize;
    let n = d * d;
    let xs: Vec<u64> = (0..=n as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&y0| {
            let shifted = fa.compose(&Poly::from_coeffs(field, vec![y0, field.neg(1)]));
            resultant_fp(fa, &shifted)
        })
        .collect();
    let full = interpolate(field, &xs, &ys);
    let half = field.inv(2);
    let diag = fa.compose(&Poly::from_coeffs(field, vec![0, half])).scale(field.pow(2, d as u64));
    let sq = full.div_exact(&diag)?;
    let mut c = sq.coeffs().to_vec();
    c.resize(d * (d - 1) + 1, 0);
    monic_root(field, &c, 2)
}

/// Resolvent whose roots are the pair sums x_i + x_j, i < j.
pub fn pair_sum_resolvent(model: &CoverModel, seed: u64) -> Result<BiPoly> {
    let d = model.d();
    let field = model.field();
    if field.p() <= (d * d) as u64 {
        return Err(ResolventError::ModulusTooSmall(field.p()));
    }
    let index = d * (d - 1) / 2;
    let bound = index * model.infinity_exponent();
    let f = model.poly();
    let vals = interpolate_vector(field, bound + 1, seed, |_| true, |a| pair_sum_at(field, &f.eval_t(a)), false)
        .map_err(|e| match e {
            AlgError::SampleRejected(_) => ResolventError::SquareRoot,
            e => e.into(),
        })?;
    Ok(BiPoly::new(field, vals))
}
