use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use scrollar::exactalg::bipoly::{discriminant_fp, resultant_fp, BiPoly};
use scrollar::exactalg::factor::{factorize, is_irreducible, roots, squarefree_decomposition};
use scrollar::exactalg::interp::{charpoly_interpolated, interpolate, monic_root, RatMatrix};
use scrollar::exactalg::linalg::{charpoly, charpoly_fp, det};
use scrollar::exactalg::matrix::{hermite_lower, is_row_reduced, popov, weak_popov, PolyMatrix};
use scrollar::exactalg::text::{mpoly_to_string, parse_mpoly, parse_poly};
use scrollar::exactalg::{discriminant_x, Poly, PrimeField, RatField, RatFunc};

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn tpoly(f: PrimeField, s: &str) -> Poly {
    parse_poly(f, s, 't').unwrap()
}

fn rand_poly(f: PrimeField, deg: usize, rng: &mut ChaCha8Rng) -> Poly {
    Poly::from_coeffs(f, (0..=deg).map(|_| rng.gen_range(0..f.p())).collect())
}

#[test]
fn modulus_validation() {
    assert!(PrimeField::new(1009).is_ok());
    assert!(PrimeField::new(1008).is_err());
    assert!(PrimeField::new(2).is_err());
    assert!(PrimeField::new((1 << 61) - 1).is_ok());
}

#[test]
fn gcd_with_zero_is_monic_input() {
    let f = fp(7);
    let a = tpoly(f, "3*t^2 + t + 5");
    assert_eq!(a.gcd(&Poly::zero(f)), a.monic());
}

#[test]
fn division_by_linear_factor() {
    let f = fp(1009);
    let (q, r) = tpoly(f, "t^2 - 1").divrem(&tpoly(f, "t - 1"));
    assert_eq!(q, tpoly(f, "t + 1"));
    assert!(r.is_zero());
}

#[test]
fn coprime_quadratics_over_f5() {
    let f = fp(5);
    let a = tpoly(f, "t^2 + 1");
    let b = tpoly(f, "t^2 - 1");
    assert!(a.gcd(&b).is_one());
    assert_ne!(resultant_fp(&a, &b), 0);
}

#[test]
fn division_by_zero_is_an_error() {
    let f = fp(5);
    assert!(tpoly(f, "t").checked_divrem(&Poly::zero(f)).is_err());
}

#[test]
fn factor_examples() {
    let f7 = fp(7);
    let fac = factorize(&tpoly(f7, "t^2 - 1"), 1);
    assert_eq!(fac.len(), 2);
    assert!(fac.contains(&(tpoly(f7, "t - 1"), 1)) && fac.contains(&(tpoly(f7, "t + 1"), 1)));
    let f5 = fp(5);
    let q = tpoly(f5, "t^2 + 2");
    assert!((0..5).all(|a| q.eval(a) != 0));
    assert_eq!(factorize(&q, 3), vec![(q.clone(), 1)]);
    let f11 = fp(11);
    assert_eq!(factorize(&tpoly(f11, "t^6"), 0), vec![(tpoly(f11, "t"), 6)]);
}

#[test]
fn squarefree_in_characteristic_p() {
    let f = fp(5);
    // (t^5 + t + 1)... use a p-th power to exercise the p-th root branch
    let g = tpoly(f, "t^2 + t + 1");
    let h = g.pow(5).mul(&tpoly(f, "t + 3"));
    let dec = squarefree_decomposition(&h);
    let mut prod = Poly::one(f);
    for (a, m) in &dec {
        prod = prod.mul(&a.pow(*m as u64));
    }
    assert_eq!(prod, h.monic());
    assert!(dec.iter().any(|(_, m)| *m == 5));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let f = fp(1009);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rand_poly(f, rng.gen_range(0..8), &mut rng);
        let b = rand_poly(f, rng.gen_range(0..8), &mut rng);
        let c = rand_poly(f, rng.gen_range(0..8), &mut rng);
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.sub(&a), Poly::zero(f));
        if !b.is_zero() {
            let (q, r) = a.divrem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a.clone());
            prop_assert!(r.deg() < b.deg());
        }
        let (g, s, t) = a.ext_gcd(&b);
        prop_assert_eq!(s.mul(&a).add(&t.mul(&b)), g.clone());
        if !g.is_zero() {
            prop_assert!(g.divides(&a) && g.divides(&b));
        }
        let x0 = rng.gen_range(0..1009);
        prop_assert_eq!(a.mul(&b).eval(x0), f.mul(a.eval(x0), b.eval(x0)));
        // derivative is a derivation
        prop_assert_eq!(a.mul(&b).derivative(), a.derivative().mul(&b).add(&a.mul(&b.derivative())));
    }

    #[test]
    fn factorization_multiplies_back(seed in any::<u64>()) {
        let f = fp(1009);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = rand_poly(f, rng.gen_range(1..7), &mut rng);
        let b = rand_poly(f, rng.gen_range(1..4), &mut rng);
        a = a.mul(&b).mul(&b);
        prop_assume!(!a.is_zero() && a.deg() > 0);
        let fac = factorize(&a, seed);
        let mut prod = Poly::one(f);
        for (g, m) in &fac {
            prop_assert!(is_irreducible(g));
            if g.deg() <= 3 {
                prop_assert!(roots(g, 1).is_empty() || g.deg() == 1);
            }
            prod = prod.mul(&g.pow(*m as u64));
        }
        prop_assert_eq!(prod, a.monic());
    }

    #[test]
    fn weak_popov_contract(seed in any::<u64>()) {
        let f = fp(1009);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..4);
        let m: PolyMatrix = (0..n).map(|_| (0..n).map(|_| rand_poly(f, rng.gen_range(0..4), &mut rng)).collect()).collect();
        let rf = RatField::new(f);
        let as_rat: Vec<Vec<RatFunc>> = m.iter().map(|r| r.iter().map(|e| RatFunc::from_poly(e.clone())).collect()).collect();
        prop_assume!(!det(&rf, &as_rat).is_zero());
        let r = weak_popov(&m).unwrap();
        // transform times input equals output
        for i in 0..n {
            for j in 0..n {
                let mut s = Poly::zero(f);
                for k in 0..n {
                    s = s.add(&r.transform[i][k].mul(&m[k][j]));
                }
                prop_assert_eq!(&s, &r.matrix[i][j]);
            }
        }
        // unimodular transform
        let ut: Vec<Vec<RatFunc>> = r.transform.iter().map(|row| row.iter().map(|e| RatFunc::from_poly(e.clone())).collect()).collect();
        let dt = det(&rf, &ut);
        prop_assert!(dt.is_poly() && dt.num().deg() == 0);
        let mut piv = r.pivots.clone();
        piv.sort();
        piv.dedup();
        prop_assert_eq!(piv.len(), n);
        prop_assert!(is_row_reduced(&r.matrix));
        let in_sum: i64 = m.iter().map(|row| row.iter().map(|e| e.deg()).max().unwrap()).sum();
        prop_assert!(r.row_degrees.iter().sum::<i64>() <= in_sum);
        // Popov form is canonical under unimodular changes of the input
        let pop = popov(&m).unwrap();
        let mut m2 = m.clone();
        let c = rand_poly(f, 2, &mut rng);
        if n > 1 {
            let src = m2[0].clone();
            for (x, y) in m2[1].iter_mut().zip(&src) { *x = x.add(&y.mul(&c)); }
            m2.swap(0, 1);
        }
        let pop2 = popov(&m2).unwrap();
        prop_assert_eq!(pop.matrix, pop2.matrix);
    }

    #[test]
    fn interpolation_recovers_polynomial(seed in any::<u64>()) {
        let f = fp(1009);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rand_poly(f, rng.gen_range(0..20), &mut rng);
        let n = a.deg().max(0) as usize + 1 + rng.gen_range(0..3);
        let xs: Vec<u64> = (0..n as u64).map(|i| (i * 7 + 3) % 1009).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| a.eval(x)).collect();
        prop_assert_eq!(interpolate(f, &xs, &ys), a);
    }

    #[test]
    fn charpoly_matches_determinant(seed in any::<u64>()) {
        let f = fp(1009);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..7);
        let m: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| if rng.gen_bool(0.3) { 0 } else { rng.gen_range(0..1009) }).collect()).collect();
        let cp = Poly::from_coeffs(f, charpoly_fp(&f, &m));
        for _ in 0..3 {
            let y: u64 = rng.gen_range(0..1009);
            let ym: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| {
                let d = if i == j { y } else { 0 };
                f.sub(d, m[i][j])
            }).collect()).collect();
            prop_assert_eq!(cp.eval(y), det(&f, &ym));
        }
        prop_assert_eq!(charpoly(&f, &m), charpoly_fp(&f, &m));
    }
}

#[test]
fn resultant_and_discriminant_examples() {
    let f = fp(1009);
    let m = parse_mpoly(f, "x^2 - t").unwrap();
    let b = BiPoly::from_mpoly(&m, 0, 2).unwrap();
    assert_eq!(discriminant_x(&b).unwrap(), tpoly(f, "4*t"));
    // x^3 + a x + b with a, b in t: disc = -4a^3 - 27b^2
    let m = parse_mpoly(f, "x^3 + (t^2+3)*x + (5*t+1)").unwrap();
    let b = BiPoly::from_mpoly(&m, 0, 2).unwrap();
    let a = tpoly(f, "t^2+3");
    let c = tpoly(f, "5*t+1");
    let expect = a.pow(3).scale(f.neg(4)).sub(&c.pow(2).scale(27));
    assert_eq!(discriminant_x(&b).unwrap(), expect);
    // Res(f, 1) = 1
    assert_eq!(resultant_fp(&tpoly(f, "t^3 + 2"), &Poly::one(f)), 1);
    assert_eq!(discriminant_fp(&tpoly(f, "t^2 - 4")), 16);
}

#[test]
fn text_round_trip() {
    let f = fp(1009);
    for s in ["x^4 + (t^3+1)*x + t", "y^2 - 3*t*u + 1008", "-x + 2*t^5*y^3 - 7", "0"] {
        let m = parse_mpoly(f, s).unwrap();
        let printed = mpoly_to_string(&m);
        assert_eq!(parse_mpoly(f, &printed).unwrap(), m, "{printed}");
    }
    assert!(parse_mpoly(f, "x + z").is_err());
    assert!(parse_mpoly(f, "(x + 1").is_err());
}

#[test]
fn weak_popov_examples() {
    let f = fp(1009);
    let one = Poly::one(f);
    let z = Poly::zero(f);
    let r = weak_popov(&vec![vec![one.clone(), z.clone()], vec![z.clone(), one.clone()]]).unwrap();
    assert_eq!(r.row_degrees, vec![0, 0]);
    let d = vec![vec![tpoly(f, "t^3"), z.clone(), z.clone()], vec![z.clone(), tpoly(f, "t"), z.clone()], vec![z.clone(), z.clone(), tpoly(f, "t^2")]];
    let mut rd = weak_popov(&d).unwrap().row_degrees;
    rd.sort();
    assert_eq!(rd, vec![1, 2, 3]);
    // [[t^2, t], [t^3+1, 1]]: brute-force minimal row-degree profile
    let m = vec![vec![tpoly(f, "t^2"), tpoly(f, "t")], vec![tpoly(f, "t^3+1"), one.clone()]];
    let mut got = weak_popov(&m).unwrap().row_degrees;
    got.sort();
    assert_eq!(got, brute_force_profile(f, &m, 3));
}

/// Smallest row-degree profile over all bases reachable as combinations
/// a*r1 + b*r2 with deg a, deg b <= bound, found by searching for the
/// lowest-degree nonzero vector and then the lowest-degree vector
/// independent of it with unit determinant change.
fn brute_force_profile(f: PrimeField, m: &PolyMatrix, bound: usize) -> Vec<i64> {
    let p = f.p();
    // enumerate small-coefficient combinations over a small prime would be
    // too large for p=1009, so use the determinant degree identity instead:
    // minimal profile (d1 <= d2) has d1 = min row degree over the lattice,
    // d1 + d2 = deg det.
    let det_deg = m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])).deg();
    let mut best = i64::MAX;
    // coefficients of a, b restricted to {0,1,p-1} and degrees <= bound
    let vals = [0u64, 1, p - 1];
    let mut polys = Vec::new();
    let mut idx = vec![0usize; bound + 1];
    loop {
        polys.push(Poly::from_coeffs(f, idx.iter().map(|&i| vals[i]).collect()));
        let mut k = 0;
        loop {
            if k > bound {
                break;
            }
            idx[k] += 1;
            if idx[k] < 3 {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k > bound {
            break;
        }
    }
    for a in &polys {
        for b in &polys {
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let v0 = a.mul(&m[0][0]).add(&b.mul(&m[1][0]));
            let v1 = a.mul(&m[0][1]).add(&b.mul(&m[1][1]));
            let d = v0.deg().max(v1.deg());
            if d >= 0 {
                best = best.min(d);
            }
        }
    }
    vec![best, det_deg - best]
}

#[test]
fn hermite_lower_is_triangular() {
    let f = fp(101);
    let gens = vec![
        vec![tpoly(f, "t^2"), tpoly(f, "t+1")],
        vec![tpoly(f, "t"), tpoly(f, "t^2")],
        vec![tpoly(f, "3"), Poly::zero(f)],
    ];
    let h = hermite_lower(gens, 2).unwrap();
    assert!(h[0][1].is_zero());
    assert!(h[0][0].is_one() || h[0][0].lc() == 1);
    assert!(h[1][0].deg() < h[0][0].deg().max(0) || h[0][0].deg() == 0);
}

#[test]
fn charpoly_interpolated_examples() {
    let f = fp(1009);
    let rf = RatField::new(f);
    // diagonal rational operator
    let r1 = RatFunc::new(tpoly(f, "t^2+1"), tpoly(f, "t+5"));
    let r2 = RatFunc::from_poly(tpoly(f, "3*t"));
    let z = RatFunc::zero(f);
    let op = RatMatrix { entries: vec![vec![r1.clone(), z.clone()], vec![z.clone(), r2.clone()]], field: f };
    let cp = charpoly_interpolated(&op, 8, 7, false).unwrap();
    let y_minus = |r: &RatFunc| vec![r.neg(), RatFunc::one(f)];
    let a = y_minus(&r1);
    let b = y_minus(&r2);
    let expect = vec![a[0].mul(&b[0]), a[0].add(&b[0]), RatFunc::one(f)];
    assert_eq!(cp, expect);
    // companion matrix of x^3 + t x + (t^2 + 1)
    let c0 = RatFunc::from_poly(tpoly(f, "t^2+1"));
    let c1 = RatFunc::from_poly(tpoly(f, "t"));
    let one = RatFunc::one(f);
    let comp = RatMatrix {
        entries: vec![
            vec![z.clone(), z.clone(), c0.neg()],
            vec![one.clone(), z.clone(), c1.neg()],
            vec![z.clone(), one.clone(), z.clone()],
        ],
        field: f,
    };
    let cp = charpoly_interpolated(&comp, 6, 1, false).unwrap();
    assert_eq!(cp, vec![c0.clone(), c1.clone(), z.clone(), one.clone()]);
    // random 4x4 with degree <= 3 entries against the direct Hessenberg method over F_p(t)
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let m: Vec<Vec<RatFunc>> = (0..4).map(|_| (0..4).map(|_| RatFunc::from_poly(rand_poly(f, 3, &mut rng))).collect()).collect();
    let op = RatMatrix { entries: m.clone(), field: f };
    let seq = charpoly_interpolated(&op, 12, 5, false).unwrap();
    let par = charpoly_interpolated(&op, 12, 99, true).unwrap();
    assert_eq!(seq, par);
    assert_eq!(seq, charpoly(&rf, &m));
    // independent oracle: det(y0 - M(t0)) by cofactor expansion
    for (t0, y0) in [(3u64, 17u64), (500, 2), (1000, 999)] {
        let mm: Vec<Vec<u64>> = (0..4).map(|i| (0..4).map(|j| {
            let v = m[i][j].eval(t0).unwrap();
            if i == j { f.sub(y0, v) } else { f.neg(v) }
        }).collect()).collect();
        let val = Poly::from_coeffs(f, seq.iter().map(|c| c.eval(t0).unwrap()).collect()).eval(y0);
        assert_eq!(val, cofactor_det(f, &mm));
    }
}

fn cofactor_det(f: PrimeField, m: &[Vec<u64>]) -> u64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut s = 0;
    for j in 0..n {
        let minor: Vec<Vec<u64>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| *v).collect()).collect();
        let term = f.mul(m[0][j], cofactor_det(f, &minor));
        s = if j % 2 == 0 { f.add(s, term) } else { f.sub(s, term) };
    }
    s
}

#[test]
fn monic_root_inverts_power() {
    let f = fp(1009);
    let r = tpoly(f, "t^3 + 5*t + 7");
    let c = r.pow(20);
    assert_eq!(monic_root(f, c.coeffs(), 20).unwrap(), r.coeffs().to_vec());
    assert!(monic_root(f, tpoly(f, "t^2 + 1").coeffs(), 2).is_none());
}
