use std::time::Instant;

use proptest::prelude::*;
use scrollar::bhargava::*;
use scrollar::exactalg::{discriminant_x, BiPoly, Poly, PrimeField, RatFunc};
use scrollar::funfield::{generate_hirzebruch_model, CoverModel};
use scrollar::predict::dual_profile;
use scrollar::resolvent::isolate_partition_profile;
use scrollar::symrep::Partition;

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn hirzebruch(c: usize, d: usize, e: usize, seed: u64) -> CoverModel {
    generate_hirzebruch_model(fp(1009), c, d, e, seed, false).unwrap().0
}

#[test]
fn dual_basis_pairing_is_identity() {
    let cfg = point_config(&hirzebruch(2, 4, 0, 3)).unwrap();
    let f = cfg.model.field();
    let pairing = cfg.pairing();
    for (i, row) in pairing.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let want = if i == j { RatFunc::one(f) } else { RatFunc::zero(f) };
            assert_eq!(x, &want);
        }
    }
    for b in &cfg.basis[1..] {
        assert!(cfg.ff.trace(b).is_zero());
    }
    for j in 0..cfg.nvars() {
        for k in 0..cfg.nvars() {
            assert_eq!(cfg.products[j][k], cfg.products[k][j]);
        }
    }
}

#[test]
fn four_points_in_general_position() {
    let cfg = point_config(&hirzebruch(1, 4, 1, 5)).unwrap();
    let sp = specialized_points(&cfg, 11, 0).unwrap();
    let ext = &sp.ext;
    use scrollar::exactalg::linalg::det;
    for skip in 0..4 {
        let m: Vec<Vec<Poly>> = (0..4).filter(|&i| i != skip).map(|i| sp.points[i].clone()).collect();
        assert!(!det(ext, &m).is_zero(), "three collinear points");
    }
}

#[test]
fn plane_quintic_pencil() {
    let m = hirzebruch(1, 4, 1, 1);
    let cfg = point_config(&m).unwrap();
    assert_eq!(cfg.scrollar, vec![2, 3, 4]);
    let q = graded_quadric_degrees(&cfg).unwrap();
    assert_eq!(q.degrees, vec![3, 6]);
    assert!(q.in_interval);
    assert!(q.degrees_respected());
    let r = relative_resolution(&cfg, &q, 1).unwrap();
    assert_eq!(r.betti_table(), vec![1, 2, 1]);
    assert_eq!(r.last, Some(cfg.genus + 3));
    assert!(r.duality_ok());
}

#[test]
fn plane_sextic_resolution() {
    let m = hirzebruch(1, 5, 1, 1);
    let cfg = point_config(&m).unwrap();
    assert_eq!(cfg.genus, 10);
    let q = graded_quadric_degrees(&cfg).unwrap();
    assert_eq!(q.degrees, vec![3, 4, 6, 7, 8]);
    assert_eq!(q.degrees.iter().sum::<i64>(), 2 * (cfg.genus + 4));
    let r = relative_resolution(&cfg, &q, 2).unwrap();
    assert_eq!(r.shifts[1], vec![6, 7, 8, 10, 11]);
    assert_eq!(r.betti_table(), vec![1, 5, 5, 1]);
    assert!(r.betti_ok() && r.duality_ok());
}

#[test]
fn sextic_cover_betti_table() {
    let start = Instant::now();
    let m = hirzebruch(1, 6, 1, 2);
    let cfg = point_config(&m).unwrap();
    let q = graded_quadric_degrees(&cfg).unwrap();
    let r = relative_resolution(&cfg, &q, 3).unwrap();
    assert_eq!(r.betti_table(), vec![1, 9, 16, 9, 1]);
    assert!(r.betti_ok() && r.duality_ok());
    eprintln!("d=6 resolution {:?} {:?}", r.shifts, start.elapsed());
}

#[test]
fn quadric_space_dimension() {
    for (c, d, e) in [(2, 4, 0), (1, 5, 1), (2, 5, 0), (1, 6, 0)] {
        let cfg = point_config(&hirzebruch(c, d, e, 7)).unwrap();
        let q = quadric_space(&cfg).unwrap();
        assert_eq!(q.len(), d * (d - 3) / 2);
        assert!(verify_point_vanishing(&cfg, &q, 2, 1).unwrap());
    }
}

#[test]
fn cubic_cover_has_no_quadrics() {
    let cfg = point_config(&hirzebruch(2, 3, 1, 1)).unwrap();
    assert!(quadric_space(&cfg).unwrap().is_empty());
    assert!(graded_quadric_degrees(&cfg).is_err());
}

#[test]
fn quadrics_vanish_at_points() {
    let start = Instant::now();
    let cfg = point_config(&hirzebruch(1, 4, 1, 4)).unwrap();
    let q = graded_quadric_degrees(&cfg).unwrap();
    assert!(verify_point_vanishing(&cfg, &q, 16, 99).unwrap());
    assert!(!verify_point_vanishing(&cfg, &perturbed(&q), 16, 99).unwrap());
    assert!(start.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn first_step_matches_pair_sum_isolation() {
    for (c, d, e, seed) in [(1, 4, 1, 11), (2, 4, 0, 12), (3, 4, 1, 13), (1, 5, 0, 14), (2, 5, 1, 15)] {
        let m = hirzebruch(c, d, e, seed);
        let cfg = point_config(&m).unwrap();
        let q = graded_quadric_degrees(&cfg).unwrap();
        let lambda = Partition::new(vec![d as u32 - 2, 2]).unwrap();
        let iso = isolate_partition_profile(&m, &lambda, seed).unwrap();
        assert_eq!(q.degrees, iso.values().to_vec(), "(c,d,e) = ({c},{d},{e})");
    }
}

#[test]
fn second_step_is_dual_of_first() {
    let m = hirzebruch(2, 5, 0, 21);
    let cfg = point_config(&m).unwrap();
    let q = graded_quadric_degrees(&cfg).unwrap();
    let r = relative_resolution(&cfg, &q, 2).unwrap();
    let dual = dual_profile(&scrollar::predict::ScrollarProfile::measured(q.degrees.clone()), cfg.genus, 5).unwrap();
    assert_eq!(r.shifts[1], dual.values().to_vec());
}

#[test]
fn pencil_determinant_is_cubic_resolvent() {
    for seed in [1, 2, 3] {
        let m = hirzebruch(1, 4, 1, seed);
        let cfg = point_config(&m).unwrap();
        let q = graded_quadric_degrees(&cfg).unwrap();
        assert!(pencil_matches_cubic_resolvent(&cfg, &q, 12, seed).unwrap());
    }
}

#[test]
fn depth_is_bounded() {
    let cfg = point_config(&hirzebruch(1, 4, 1, 1)).unwrap();
    let q = graded_quadric_degrees(&cfg).unwrap();
    assert!(matches!(relative_resolution(&cfg, &q, 2), Err(BhargavaError::Depth { .. })));
}

fn pure_cubic() -> CoverModel {
    CoverModel::parse(fp(1009), "x^3 - t").unwrap()
}

#[test]
fn cubic_form_of_pure_cubic() {
    let (cfg, c) = cubic_form_d3(&pure_cubic()).unwrap();
    assert!(cubic_form_vanishes(&cfg, &c, 8, 3).unwrap());
    let mut bumped = c.clone();
    bumped.coeffs[0] = bumped.coeffs[0].add(&Poly::one(fp(1009)));
    assert!(!cubic_form_vanishes(&cfg, &bumped, 8, 3).unwrap());
}

fn disc_of_basis(cfg: &PointConfigData) -> Poly {
    let rf = scrollar::exactalg::RatField::new(cfg.model.field());
    let gram: Vec<Vec<RatFunc>> = cfg
        .basis
        .iter()
        .map(|a| cfg.basis.iter().map(|b| cfg.ff.trace(&cfg.ff.mul(a, b))).collect())
        .collect();
    let g = scrollar::exactalg::linalg::det(&rf, &gram);
    assert!(g.is_poly());
    g.num().clone()
}

#[test]
fn cubic_form_discriminant_is_field_discriminant() {
    for model in [pure_cubic(), hirzebruch(2, 3, 1, 4), hirzebruch(3, 3, 0, 5)] {
        let (cfg, c) = cubic_form_d3(&model).unwrap();
        let dc = c.disc();
        let dk = disc_of_basis(&cfg);
        assert!(!dc.is_zero());
        let (q, r) = dc.divrem(&dk);
        assert!(r.is_zero() && q.deg() == 0, "disc {dc:?} vs {dk:?}");
        assert!(cubic_form_vanishes(&cfg, &c, 4, 8).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn psi_squared_is_discriminant(a1 in 0u64..1009, a2 in 0u64..1009) {
        let (cfg, c) = cubic_form_d3(&pure_cubic()).unwrap();
        let ff = &cfg.ff;
        let f = cfg.model.field();
        let a = ff.add(
            &ff.scale(&cfg.basis[1], &RatFunc::constant(f, a1)),
            &ff.scale(&cfg.basis[2], &RatFunc::constant(f, a2)),
        );
        let cp: Vec<Poly> = ff.charpoly(&a).iter().map(|x| { assert!(x.is_poly()); x.num().clone() }).collect();
        let disc = discriminant_x(&BiPoly::new(f, cp)).unwrap();
        let v = c.eval(a1, a2);
        prop_assert_eq!(v.square().mul(&disc_of_basis(&cfg)), disc);
    }
}
