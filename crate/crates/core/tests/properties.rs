use nalgebra::{DMatrix, Matrix4};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use projdes::exactnum::{int, pochhammer, ratio, Cyclotomic, Quaternion, Rational};
use projdes::jacobi::{chi, integrate_poly, shifted_p, DesignParams, Field};
use projdes::projective::{angle_set, gram, GramMatrix, PointSet, Points};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=20).prop_map(|(p, q)| ratio(p, q))
}

fn cyclotomic(order: u64) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-5i64..=5, -6i64..=6), 1..4).prop_map(move |terms| {
        terms.iter().fold(Cyclotomic::zero(), |acc, &(c, k)| {
            &acc + &(&Cyclotomic::from_integer(c) * &Cyclotomic::zeta_power(order, k))
        })
    })
}

fn quaternion() -> impl Strategy<Value = Quaternion<Rational>> {
    (rational(), rational(), rational(), rational())
        .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + a.norm().max(b.norm()))
}

fn same_gram(a: &GramMatrix, b: &GramMatrix) -> bool {
    (0..a.size()).all(|i| (0..a.size()).all(|j| a.get(i, j).approx_eq(b.get(i, j), 0.0)))
}

fn close_gram(a: &GramMatrix, b: &GramMatrix, tol: f64) -> bool {
    (0..a.size())
        .all(|i| (0..a.size()).all(|j| (a.get(i, j).to_f64() - b.get(i, j).to_f64()).abs() < tol))
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), Rational::one());
        }
    }

    #[test]
    fn cyclotomic_matches_float((a, b) in (1u64..=24).prop_flat_map(|m| (cyclotomic(m), cyclotomic(m)))) {
        prop_assert!(close((&a + &b).to_complex(), a.to_complex() + b.to_complex()));
        prop_assert!(close((&a * &b).to_complex(), a.to_complex() * b.to_complex()));
        prop_assert!(close((&a - &b).to_complex(), a.to_complex() - b.to_complex()));
        if !b.is_zero() {
            prop_assert!(close((&a / &b).to_complex(), a.to_complex() / b.to_complex()));
        }
    }

    #[test]
    fn conj_and_abs2(z in (1u64..=24).prop_flat_map(cyclotomic)) {
        prop_assert_eq!(z.conj().conj(), z.clone());
        let a = z.abs2();
        prop_assert!(a.is_real());
        let m = z.order();
        for k in (1..=m as i64).filter(|k| k.gcd(&(m as i64)) == 1) {
            let v = a.embed(k);
            prop_assert!(v.im.abs() < 1e-9 && v.re > -1e-9, "embedding {k}: {v}");
        }
    }

    #[test]
    fn quaternion_norm_is_multiplicative(p in quaternion(), q in quaternion()) {
        prop_assert_eq!((&p * &q).abs2(), p.abs2() * q.abs2());
        prop_assert_eq!((&p * &q).conj(), &q.conj() * &p.conj());
    }

    #[test]
    fn pochhammer_recurrence(g in rational(), i in 0i64..12) {
        let lhs = pochhammer(&g, i + 1).unwrap();
        prop_assert_eq!(lhs, pochhammer(&g, i).unwrap() * (&g + int(i)));
    }

    #[test]
    fn jacobi_orthogonality(fi in 0usize..3, n in 1u32..=5, i in 0u32..7, j in 0u32..7) {
        let p = DesignParams::new(Field::ALL[fi], n, 1).unwrap();
        let prod = &shifted_p(&p, i) * &shifted_p(&p, j);
        let val = integrate_poly(&p, &prod);
        if i == j {
            prop_assert_eq!(val, chi(&p, i) * shifted_p(&p, i).eval(&int(1)));
        } else {
            prop_assert!(val.is_zero());
        }
    }

    #[test]
    fn gram_invariant_under_unit_scaling(
        rows in prop::collection::vec(prop::collection::vec((-3i64..=3, 0i64..12), 2), 2..6),
        scales in prop::collection::vec(0i64..12, 6),
    ) {
        let build = |k: &dyn Fn(usize) -> i64| -> Option<PointSet> {
            let pts: Vec<Vec<Cyclotomic>> = rows
                .iter()
                .enumerate()
                .map(|(r, row)| {
                    row.iter()
                        .map(|&(c, e)| &Cyclotomic::from_integer(c) * &Cyclotomic::zeta_power(12, e + k(r)))
                        .collect()
                })
                .collect();
            PointSet::new(Field::C, 1, Points::Cyclotomic(pts)).ok()
        };
        if let (Some(a), Some(b)) = (build(&|_| 0), build(&|r| scales[r])) {
            if let (Ok(ga), Ok(gb)) = (gram(&a), gram(&b)) {
                prop_assert!(same_gram(&ga, &gb));
            }
        }
    }

    #[test]
    fn gram_invariant_under_right_quaternion_scaling(
        rows in prop::collection::vec(prop::collection::vec(quaternion(), 2), 2..5),
        units in prop::collection::vec(quaternion(), 5),
    ) {
        let a = PointSet::new(Field::H, 1, Points::Quaternion(rows.clone()));
        let scaled: Vec<Vec<Quaternion<Rational>>> = rows
            .iter()
            .zip(&units)
            .map(|(row, u)| {
                let u = if u.abs2().is_zero() { Quaternion::one() } else { u.clone() };
                row.iter().map(|x| x * &u).collect()
            })
            .collect();
        let b = PointSet::new(Field::H, 1, Points::Quaternion(scaled));
        if let (Ok(a), Ok(b)) = (a, b) {
            if let (Ok(ga), Ok(gb)) = (gram(&a), gram(&b)) {
                prop_assert!(same_gram(&ga, &gb));
            }
        }
    }

    #[test]
    fn gram_invariant_under_unitary_maps(
        re in prop::collection::vec(-1.0f64..1.0, 12),
        im in prop::collection::vec(-1.0f64..1.0, 12),
        u in prop::collection::vec(-1.0f64..1.0, 18),
    ) {
        let n = 2;
        let pts: Vec<Vec<Complex64>> = (0..4)
            .map(|r| (0..=n).map(|c| Complex64::new(re[3 * r + c], im[3 * r + c])).collect())
            .collect();
        let m = DMatrix::from_fn(3, 3, |i, j| Complex64::new(u[3 * i + j], u[9 + 3 * i + j]));
        let q = m.qr().q();
        let moved: Vec<Vec<Complex64>> = pts
            .iter()
            .map(|p| (0..=n).map(|i| (0..=n).map(|j| q[(i, j)] * p[j]).sum()).collect())
            .collect();
        let a = PointSet::new(Field::C, n as u32, Points::FloatComplex(pts));
        let b = PointSet::new(Field::C, n as u32, Points::FloatComplex(moved));
        if let (Ok(a), Ok(b)) = (a, b) {
            if let (Ok(ga), Ok(gb)) = (gram(&a), gram(&b)) {
                prop_assert!(close_gram(&ga, &gb, 1e-9));
            }
        }
    }

    #[test]
    fn gram_invariant_under_orthogonal_maps(
        coords in prop::collection::vec(-1.0f64..1.0, 20),
        u in prop::collection::vec(-1.0f64..1.0, 16),
    ) {
        let pts: Vec<Vec<Complex64>> = coords.chunks(4).map(|c| c.iter().map(|&x| Complex64::new(x, 0.0)).collect()).collect();
        let q = Matrix4::from_iterator(u).qr().q();
        let moved: Vec<Vec<Complex64>> = coords
            .chunks(4)
            .map(|c| (0..4).map(|i| Complex64::new((0..4).map(|j| q[(i, j)] * c[j]).sum(), 0.0)).collect())
            .collect();
        let a = PointSet::new(Field::R, 3, Points::FloatComplex(pts));
        let b = PointSet::new(Field::R, 3, Points::FloatComplex(moved));
        if let (Ok(a), Ok(b)) = (a, b) {
            if let (Ok(ga), Ok(gb)) = (gram(&a), gram(&b)) {
                prop_assert!(close_gram(&ga, &gb, 1e-9));
            }
        }
    }

    #[test]
    fn angle_set_ignores_order(perm in Just((0..12usize).collect::<Vec<_>>()).prop_shuffle()) {
        let base = projdes::designs::construct_cp1_5design();
        let Points::Cyclotomic(rows) = base.points() else { unreachable!() };
        let shuffled: Vec<Vec<Cyclotomic>> = perm.iter().map(|&i| rows[i].clone()).collect();
        let ps = PointSet::new(Field::C, 1, Points::Cyclotomic(shuffled)).unwrap();
        let a = angle_set(&gram(&base).unwrap(), 1e-9).unwrap();
        let b = angle_set(&gram(&ps).unwrap(), 1e-9).unwrap();
        prop_assert_eq!(a.to_string(), b.to_string());
        prop_assert!(projdes::designs::is_t_design(&ps, 5).unwrap().is_design);
    }
}

#[test]
fn mixed_orders_lift() {
    let a = &Cyclotomic::zeta_power(4, 1) + &Cyclotomic::zeta_power(6, 1);
    let want = Complex64::new(0.5, 1.0 + 3f64.sqrt() / 2.0);
    assert!(close(a.to_complex(), want));
    assert_eq!(a.order(), 12);
}
