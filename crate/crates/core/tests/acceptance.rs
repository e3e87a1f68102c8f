//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p projdes-core --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::Zero;

use projdes::bma::{
    build, build_with_tol, e_trace_comparison, matrix_rank, verify_idempotents, verify_mult_table,
    BoseMesnerAlgebra,
};
use projdes::census::{polygon_angles_rational, rationality_table, sweep};
use projdes::designs::{
    construct_cp1_5design, construct_rp1_polygon, is_t_design, tightness, tightness_with_tol,
};
use projdes::exactnum::{int, ratio, rational_to_f64, Cyclotomic, Rational, RealScalar};
use projdes::jacobi::{
    chi, design_bound, integrate_poly, shifted_p, weight_moment, DesignParams, Field,
    RationalPolynomial, Variable,
};
use projdes::projective::{angle_set, gram, PointSet};

/// Largest float residual accepted for the float pipeline.
const FLOAT_RESIDUAL: f64 = 1e-8;
/// Agreement between exact moments and numeric quadrature.
const QUADRATURE_TOL: f64 = 1e-10;
/// Runtime budget for the exact CP^1 check.
const CP1_BUDGET: Duration = Duration::from_secs(1);

const POLYGON_T: [u32; 5] = [1, 3, 5, 7, 9];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn params(f: Field, n: u32, t: u32) -> DesignParams {
    DesignParams::new(f, n, t).unwrap()
}

fn sqrt5() -> Cyclotomic {
    // Gauss sum over Z/5
    [(1, 1), (2, -1), (3, -1), (4, 1)]
        .iter()
        .fold(Cyclotomic::zero(), |acc, &(k, c)| {
            &acc + &(&Cyclotomic::from_integer(c) * &Cyclotomic::zeta_power(5, k))
        })
}

fn exact_rank_expectation(alg: &BoseMesnerAlgebra) -> Outcome {
    for (i, li) in alg.l.iter().enumerate() {
        let r = matrix_rank(li).map_err(|e| e.to_string())?;
        ensure!(
            int(r as i64) == alg.expected_rank(i),
            "rank L_{i} = {r}, closed form {}",
            alg.expected_rank(i)
        );
    }
    Ok(String::new())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ps = construct_cp1_5design();
    let v5 = is_t_design(&ps, 5).map_err(|e| e.to_string())?;
    ensure!(v5.is_design && v5.exact, "not an exact 5-design");
    for r in &v5.residuals {
        ensure!(
            r.max_abs.is_zero(0.0),
            "degree {} residual {}",
            r.degree,
            r.max_abs
        );
    }
    let v6 = is_t_design(&ps, 6).map_err(|e| e.to_string())?;
    ensure!(
        v6.first_failure() == Some(6),
        "degree 6 should be the first failure"
    );
    let bound = design_bound(&params(Field::C, 1, 5));
    ensure!(
        bound == int(12) && ps.len() == 12,
        "|X| = {}, bound {bound}",
        ps.len()
    );

    let angles =
        angle_set(&gram(&ps).map_err(|e| e.to_string())?, 0.0).map_err(|e| e.to_string())?;
    let r5 = sqrt5();
    let tenth = Cyclotomic::from_rational(&ratio(1, 10));
    let five = Cyclotomic::from_integer(5);
    let want = [
        Cyclotomic::zero(),
        &(&five - &r5) * &tenth,
        &(&five + &r5) * &tenth,
    ];
    ensure!(angles.values.len() == 3, "angle set {angles}");
    for (got, w) in angles.values.iter().zip(&want) {
        ensure!(got.as_exact() == Some(w), "angle {got} differs from {w}");
    }
    let annihilator =
        RationalPolynomial::new(vec![int(0), int(6), int(-30), int(30)], Variable::Xi);
    for a in &angles.values {
        ensure!(
            annihilator.eval_real(a).is_zero(0.0),
            "annihilator nonzero at {a}"
        );
    }
    ensure!(
        tightness(&ps, 5).map_err(|e| e.to_string())?.is_tight(),
        "not certified tight"
    );
    let elapsed = start.elapsed();
    ensure!(elapsed < CP1_BUDGET, "took {elapsed:?}");
    Ok(format!("|X| = 12, angles {angles}, {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    let alg = build(&construct_cp1_5design(), 5).map_err(|e| e.to_string())?;
    ensure!(alg.is_exact(), "algebra is not exact");
    let table = verify_mult_table(&alg, 0.0);
    ensure!(
        table.all_pass(),
        "multiplication table: {:?}",
        table.failures().next()
    );
    let idem = verify_idempotents(&alg, 0.0);
    ensure!(idem.all_pass(), "idempotents: {:?}", idem.failures().next());
    for (i, li) in alg.l.iter().enumerate() {
        let sq = li * li;
        ensure!(sq.approx_eq(li, 0.0), "L_{i}^2 != L_{i}");
        for (k, lk) in alg.l.iter().enumerate().skip(i + 1) {
            ensure!((li * lk).is_zero(0.0), "L_{i} L_{k} != 0");
        }
    }
    let total = alg
        .l
        .iter()
        .skip(1)
        .fold(alg.l[0].clone(), |acc, l| &acc + l);
    ensure!(
        total.approx_eq(&projdes::matrix::Matrix::identity(12), 0.0),
        "sum L_i != I"
    );
    let ranks: Vec<usize> = alg.l.iter().map(|l| matrix_rank(l).unwrap()).collect();
    ensure!(ranks == [1, 3, 5, 3], "ranks {ranks:?}");
    ensure!(ranks.iter().sum::<usize>() == 12, "ranks do not sum to 12");
    let rho3 = alg.rho[3].clone();
    ensure!(
        rho3.approx_eq(&RealScalar::from_rational(&ratio(1, 3)), 0.0),
        "rho_3 = {rho3}"
    );
    let chi3 = chi(&alg.params, 3);
    ensure!(chi3 == ratio(1, 7), "chi_3 = {chi3}");
    ensure!(
        rho3.to_rational() != Some(chi3.clone()),
        "rho_3 equals chi_3"
    );
    Ok(format!("ranks {ranks:?}, rho_3 = {rho3}, chi_3 = {chi3}"))
}

fn polygon_algebras() -> Result<Vec<(u32, PointSet, BoseMesnerAlgebra)>, String> {
    POLYGON_T
        .iter()
        .map(|&t| {
            let ps = construct_rp1_polygon(t).map_err(|e| e.to_string())?;
            let alg = build(&ps, t).map_err(|e| format!("t = {t}: {e}"))?;
            Ok((t, ps, alg))
        })
        .collect()
}

fn criterion_3() -> Outcome {
    let mut summary = Vec::new();
    for (t, ps, alg) in polygon_algebras()? {
        let cert = tightness(&ps, t).map_err(|e| e.to_string())?;
        ensure!(
            cert.verdict.exact && cert.is_tight(),
            "t = {t}: not an exact tight design"
        );
        let bound = design_bound(&params(Field::R, 1, t));
        ensure!(
            int(ps.len() as i64) == bound,
            "t = {t}: |X| = {}, bound {bound}",
            ps.len()
        );
        let s = t.div_ceil(2) as usize;
        let e = (t / 2) as usize;
        let mut want = vec![1];
        want.extend(std::iter::repeat_n(2, e));
        if s > e {
            want.push(1);
        }
        ensure!(
            alg.ranks == want,
            "t = {t}: ranks {:?}, want {want:?}",
            alg.ranks
        );
        ensure!(
            alg.ranks.iter().sum::<usize>() == ps.len(),
            "t = {t}: rank sum"
        );
        summary.push(format!("t={t}:{}", ps.len()));
    }
    Ok(summary.join(" "))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    let cp1 = build(&construct_cp1_5design(), 5).map_err(|e| e.to_string())?;
    exact_rank_expectation(&cp1).map_err(|e| format!("CP^1: {e}"))?;
    count += cp1.l.len();
    for (t, _, alg) in polygon_algebras()? {
        exact_rank_expectation(&alg).map_err(|e| format!("t = {t}: {e}"))?;
        count += alg.l.len();
    }
    Ok(format!("{count} idempotents"))
}

fn criterion_5() -> Outcome {
    let rows = sweep(&Field::ALL, 10, 12).map_err(|e| e.to_string())?;
    ensure!(rows.len() == 3 * 10 * 11, "{} rows", rows.len());
    let equal: Vec<_> = rows.iter().filter(|r| r.equal).collect();
    ensure!(equal.len() == 1, "{} equality rows", equal.len());
    let r = equal[0];
    ensure!(
        r.field == Field::C && r.n == 1 && r.s == 3 && r.rank_l1 == int(3) && r.rank_ls == int(3),
        "equality row {r:?}"
    );
    for row in rows.iter().filter(|r| r.n == 1) {
        let s = row.s as i64;
        let want = match row.field {
            Field::R => int(-1),
            Field::C => int(s - 3),
            Field::H => int(s * (s + 1) * (s + 2) / 6 - 5),
        };
        ensure!(row.difference() == want, "n = 1 difference for {row:?}");
    }
    Ok(format!(
        "{} rows, single equality (C, n=1, s=3)",
        rows.len()
    ))
}

fn phi(k: u64) -> u64 {
    (1..=k).filter(|j| j.gcd(&k) == 1).count() as u64
}

fn criterion_6() -> Outcome {
    let table = rationality_table(200).map_err(|e| e.to_string())?;
    let rational: Vec<u32> = table.iter().filter(|r| r.rational).map(|r| r.t).collect();
    ensure!(rational == [1, 2, 3, 5], "rational t = {rational:?}");
    for row in table.iter().take(30) {
        let by_phi = phi(row.t as u64 + 1) <= 2;
        let by_angles = polygon_angles_rational(row.t).map_err(|e| e.to_string())?;
        ensure!(
            row.rational == by_phi && by_phi == by_angles,
            "t = {}: table {}, phi {by_phi}, angles {by_angles}",
            row.t,
            row.rational
        );
    }
    Ok("rational exactly for t in {1, 2, 3, 5}".into())
}

fn criterion_7() -> Outcome {
    let mut worst: f64 = 0.0;
    for field in Field::ALL {
        for n in 1..=4 {
            let p = params(field, n, 1);
            for k in 0..=12 {
                let exact = rational_to_f64(&weight_moment(&p, k));
                let err = (exact - common::quadrature_moment(&p, k)).abs();
                worst = worst.max(err);
                ensure!(err < QUADRATURE_TOL, "{field} n={n} k={k}: error {err:e}");
            }
            for i in 1..=12 {
                let v: Rational = integrate_poly(&p, &shifted_p(&p, i));
                ensure!(v.is_zero(), "{field} n={n}: integral of P_{i} = {v}");
            }
        }
    }
    Ok(format!("max quadrature error {worst:.1e}"))
}

fn criterion_8() -> Outcome {
    let exact = construct_cp1_5design();
    let float = exact.to_float();
    let v5 = is_t_design(&float, 5).map_err(|e| e.to_string())?;
    ensure!(v5.is_design && !v5.exact, "float 5-design verdict");
    let residual = v5.max_float_residual();
    ensure!(residual < FLOAT_RESIDUAL, "residual {residual:e}");
    ensure!(
        is_t_design(&float, 6)
            .map_err(|e| e.to_string())?
            .first_failure()
            == Some(6),
        "float degree 6"
    );
    ensure!(
        tightness_with_tol(&float, 5, 1e-9)
            .map_err(|e| e.to_string())?
            .is_tight(),
        "float tightness"
    );
    let fa = build_with_tol(&float, 5, 1e-9).map_err(|e| e.to_string())?;
    let ea = build(&exact, 5).map_err(|e| e.to_string())?;
    ensure!(
        verify_mult_table(&fa, FLOAT_RESIDUAL).all_pass(),
        "float multiplication table"
    );
    ensure!(
        verify_idempotents(&fa, FLOAT_RESIDUAL).all_pass(),
        "float idempotents"
    );
    ensure!(
        fa.ranks == ea.ranks,
        "float ranks {:?} vs exact {:?}",
        fa.ranks,
        ea.ranks
    );
    let float_ranks: Vec<usize> = fa.l.iter().map(|l| matrix_rank(l).unwrap()).collect();
    ensure!(
        float_ranks == ea.ranks,
        "float matrix ranks {float_ranks:?}"
    );
    let mut worst: f64 = 0.0;
    for (lf, le) in fa.l.iter().zip(&ea.l) {
        worst = worst.max(lf.max_abs_diff(&le.to_float()));
    }
    ensure!(worst < FLOAT_RESIDUAL, "float L_i deviate by {worst:e}");
    Ok(format!(
        "design residual {residual:.1e}, idempotent deviation {worst:.1e}"
    ))
}

fn criterion_9() -> Outcome {
    let c = e_trace_comparison(&params(Field::C, 1, 5)).map_err(|e| e.to_string())?;
    ensure!(
        c.q_s_at_1 == int(7) && c.rank_ls == int(3) && c.differs,
        "(C,1,5): {c:?}"
    );
    let mut count = 0;
    for field in Field::ALL {
        for n in 1..=10 {
            for s in 2..=12u32 {
                let c =
                    e_trace_comparison(&params(field, n, 2 * s - 1)).map_err(|e| e.to_string())?;
                ensure!(c.q_s_at_1 > c.rank_ls, "{field} n={n} s={s}: {c:?}");
                count += 1;
            }
        }
    }
    Ok(format!("Q_3(1) = 7 > 3; strict in all {count} cases"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("CP^1 5-design, exact", criterion_1),
        ("Bose-Mesner exactness", criterion_2),
        ("RP^1 polygons", criterion_3),
        ("closed-form ranks vs matrix ranks", criterion_4),
        ("census", criterion_5),
        ("rationality", criterion_6),
        ("moment identity", criterion_7),
        ("float pipeline", criterion_8),
        ("E_s trace discrepancy", criterion_9),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS  criterion {}: {name} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {}: {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
