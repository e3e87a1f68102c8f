//! Rank-comparison sweeps for tight `(2s - 1)`-designs and the `RP^1`
//! rationality table.

use std::fmt::Write as _;

use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::designs::{construct_rp1_polygon, rp1_rational};
use crate::error::{Error, Result};
use crate::exactnum::{euler_phi, format_rational, int, Rational};
use crate::jacobi::{design_bound, rank_last, DesignParams, Field};
use crate::projective::{angle_set, gram};

pub const CSV_HEADER: &str = "field,n,s,t,rank_L1,rank_Ls,equal,bound";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub field: Field,
    pub n: u32,
    pub s: u32,
    pub t: u32,
    pub rank_l1: Rational,
    pub rank_ls: Rational,
    pub equal: bool,
    /// `R_{s-1}^1(1)`; informational.
    pub bound: Rational,
}

impl CensusRow {
    pub fn difference(&self) -> Rational {
        &self.rank_ls - &self.rank_l1
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.field.symbol(),
            self.n,
            self.s,
            self.t,
            format_rational(&self.rank_l1),
            format_rational(&self.rank_ls),
            self.equal,
            format_rational(&self.bound)
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field.symbol(),
            "n": self.n,
            "s": self.s,
            "t": self.t,
            "rank_L1": format_rational(&self.rank_l1),
            "rank_Ls": format_rational(&self.rank_ls),
            "equal": self.equal,
            "bound": format_rational(&self.bound),
        })
    }
}

/// `rank L_1 = (N - m)(N + 1) / m` against `rank L_s` for a tight
/// `(2s - 1)`-design in `FP^n`.
pub fn classify(field: Field, n: u32, s: u32) -> Result<CensusRow> {
    if s < 2 {
        return Err(Error::Domain(format!("census needs s >= 2, got {s}")));
    }
    let t = 2 * s - 1;
    let params = DesignParams::new(field, n, t)?;
    let nm = &params.big_n - &params.m;
    let rank_l1 = &nm * (&params.big_n + Rational::one()) / &params.m;
    let rank_ls = rank_last(&params)?;
    Ok(CensusRow {
        field,
        n,
        s,
        t,
        equal: rank_l1 == rank_ls,
        bound: design_bound(&params),
        rank_l1,
        rank_ls,
    })
}

/// Every row for `fields x 1..=n_max x 2..=s_max`, ordered by
/// `(field, n, s)`, after checking the threshold claims on them.
pub fn sweep(fields: &[Field], n_max: u32, s_max: u32) -> Result<Vec<CensusRow>> {
    sweep_with_jobs(fields, n_max, s_max, 0)
}

/// [`sweep`] on a pool of `jobs` threads (`0` uses the global pool).
pub fn sweep_with_jobs(
    fields: &[Field],
    n_max: u32,
    s_max: u32,
    jobs: usize,
) -> Result<Vec<CensusRow>> {
    if n_max < 1 || s_max < 1 {
        return Err(Error::Domain("census needs n_max, s_max >= 1".into()));
    }
    let keys: Vec<(Field, u32, u32)> = fields
        .iter()
        .flat_map(|&f| (1..=n_max).flat_map(move |n| (2..=s_max).map(move |s| (f, n, s))))
        .collect();
    let run = || {
        keys.par_iter()
            .map(|&(f, n, s)| classify(f, n, s))
            .collect::<Result<Vec<_>>>()
    };
    let rows = if jobs == 0 {
        run()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(run)?
    };
    check_claims(&rows)?;
    Ok(rows)
}

/// The `n = 1` difference `rank L_s - rank L_1` in closed form:
/// `-1` over `R`, `s - 3` over `C`, `s(s+1)(s+2)/6 - 5` over `H`.
pub fn n1_difference(field: Field, s: u32) -> Rational {
    let s = int(s as i64);
    match field {
        Field::R => int(-1),
        Field::C => s - int(3),
        Field::H => &s * (&s + int(1)) * (&s + int(2)) / int(6) - int(5),
    }
}

/// Whether `n^2 > 1 + 1/m + 1/m^2`, which forces `rank L_s > rank L_1`.
pub fn strict_regime(field: Field, n: u32) -> bool {
    let inv = field.m().recip();
    int(n as i64 * n as i64) > Rational::one() + &inv + &inv * &inv
}

fn check_claims(rows: &[CensusRow]) -> Result<()> {
    for row in rows {
        let diff = row.difference();
        if row.n == 1 && diff != n1_difference(row.field, row.s) {
            return Err(Error::Internal(format!(
                "n = 1 difference {diff} disagrees with the closed form for {row:?}"
            )));
        }
        if strict_regime(row.field, row.n) && row.rank_ls <= row.rank_l1 {
            return Err(Error::Internal(format!(
                "expected rank L_s > rank L_1 for {row:?}"
            )));
        }
    }
    Ok(())
}

pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(out, "{}", row.to_csv());
    }
    out
}

/// Aligned table with a closing summary of the equal rows.
pub fn census_text(rows: &[CensusRow]) -> String {
    let header = [
        "field", "n", "s", "t", "rank_L1", "rank_Ls", "equal", "bound",
    ];
    let cells: Vec<[String; 8]> = rows
        .iter()
        .map(|r| {
            [
                r.field.symbol().to_string(),
                r.n.to_string(),
                r.s.to_string(),
                r.t.to_string(),
                format_rational(&r.rank_l1),
                format_rational(&r.rank_ls),
                if r.equal { "yes" } else { "no" }.to_string(),
                format_rational(&r.bound),
            ]
        })
        .collect();
    let mut width = header.map(str::len);
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |row: &[&str]| {
        let parts: Vec<String> = row
            .iter()
            .zip(width)
            .enumerate()
            .map(|(k, (c, w))| {
                if k == 0 {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect();
        parts.join("  ")
    };
    let mut out = String::new();
    let _ = writeln!(out, "{}", line(&header));
    for row in &cells {
        let refs: Vec<&str> = row.iter().map(String::as_str).collect();
        let _ = writeln!(out, "{}", line(&refs));
    }
    let equal: Vec<String> = rows
        .iter()
        .filter(|r| r.equal)
        .map(|r| format!("({}, n={}, s={})", r.field.symbol(), r.n, r.s))
        .collect();
    let summary = if equal.is_empty() {
        "none".to_string()
    } else {
        equal.join(", ")
    };
    let _ = writeln!(out, "equal rows: {summary}");
    out
}

pub fn census_json(rows: &[CensusRow]) -> Value {
    Value::Array(rows.iter().map(CensusRow::to_json).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalityRow {
    pub t: u32,
    pub phi: u64,
    pub rational: bool,
}

/// `rp1_rational(t)` for `t = 1..=t_max`.
pub fn rationality_table(t_max: u32) -> Result<Vec<RationalityRow>> {
    if t_max < 1 {
        return Err(Error::Domain("rationality table needs t_max >= 1".into()));
    }
    let rows: Vec<RationalityRow> = (1..=t_max)
        .map(|t| RationalityRow {
            t,
            phi: euler_phi(t as u64 + 1),
            rational: rp1_rational(t),
        })
        .collect();
    if let Some(r) = rows
        .iter()
        .find(|r| r.rational != matches!(r.t, 1 | 2 | 3 | 5))
    {
        return Err(Error::Internal(format!(
            "unexpected rationality at t = {}",
            r.t
        )));
    }
    Ok(rows)
}

/// Whether every angle of the polygon design of strength `t` is rational,
/// decided in exact cyclotomic arithmetic.
pub fn polygon_angles_rational(t: u32) -> Result<bool> {
    let g = gram(&construct_rp1_polygon(t)?)?;
    let angles = angle_set(&g, 0.0)?;
    Ok(angles.values.iter().all(|v| v.to_rational().is_some()))
}

pub fn rationality_csv(rows: &[RationalityRow]) -> String {
    let mut out = String::from("t,phi,rational\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{}", r.t, r.phi, r.rational);
    }
    out
}

pub fn rationality_text(rows: &[RationalityRow]) -> String {
    let mut out = format!("{:>5}{:>8}  rational\n", "t", "phi");
    for r in rows {
        let _ = writeln!(
            out,
            "{:>5}{:>8}  {}",
            r.t,
            r.phi,
            if r.rational { "yes" } else { "no" }
        );
    }
    let rational: Vec<String> = rows
        .iter()
        .filter(|r| r.rational)
        .map(|r| r.t.to_string())
        .collect();
    let _ = writeln!(out, "rational at t = {{{}}}", rational.join(", "));
    out
}

pub fn rationality_json(rows: &[RationalityRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| json!({ "t": r.t, "phi": r.phi, "rational": r.rational }))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use crate::jacobi::rank_closed;

    #[test]
    fn classify_examples() {
        let c = classify(Field::C, 1, 3).unwrap();
        assert!(c.equal);
        assert_eq!(
            (c.rank_l1.clone(), c.rank_ls.clone()),
            (ratio(3, 1), ratio(3, 1))
        );
        assert_eq!(c.bound, ratio(12, 1));
        let h = classify(Field::H, 1, 2).unwrap();
        assert_eq!(
            (h.rank_ls.clone(), h.rank_l1.clone(), h.equal),
            (ratio(4, 1), ratio(5, 1), false)
        );
        for s in 2..15 {
            let r = classify(Field::R, 2, s).unwrap();
            assert_eq!(r.rank_l1, ratio(5, 1));
            assert_eq!(r.rank_ls, ratio(2 * s as i64, 1));
            assert!(!r.equal);
        }
        assert!(classify(Field::C, 1, 1).is_err());
    }

    #[test]
    fn rank_l1_matches_rank_closed() {
        for field in Field::ALL {
            for n in 1..6 {
                let row = classify(field, n, 2).unwrap();
                let p = DesignParams::new(field, n, 3).unwrap();
                assert_eq!(row.rank_l1, rank_closed(&p, 1));
            }
        }
    }

    #[test]
    fn sweep_has_one_equal_row() {
        let rows = sweep(&Field::ALL, 10, 12).unwrap();
        assert_eq!(rows.len(), 3 * 10 * 11);
        let equal: Vec<_> = rows
            .iter()
            .filter(|r| r.equal)
            .map(|r| (r.field, r.n, r.s))
            .collect();
        assert_eq!(equal, vec![(Field::C, 1, 3)]);
        let single = sweep_with_jobs(&Field::ALL, 10, 12, 1).unwrap();
        assert_eq!(rows, single);
    }

    #[test]
    fn monotone_in_s() {
        for field in Field::ALL {
            for n in 1..6 {
                let rows = sweep(&[field], n, 20).unwrap();
                for w in rows.windows(2).filter(|w| w[0].n == n && w[1].n == n) {
                    if field == Field::R && n == 1 {
                        assert_eq!(w[1].rank_ls, w[0].rank_ls);
                    } else {
                        assert!(w[1].rank_ls > w[0].rank_ls);
                    }
                }
            }
        }
    }

    #[test]
    fn csv_layout() {
        let rows = sweep(&[Field::C], 1, 3).unwrap();
        let csv = census_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines[2], "C,1,3,5,3,3,true,12");
    }

    #[test]
    fn rationality() {
        let rows = rationality_table(10).unwrap();
        let rational: Vec<u32> = rows.iter().filter(|r| r.rational).map(|r| r.t).collect();
        assert_eq!(rational, vec![1, 2, 3, 5]);
        assert!(!rationality_table(11).unwrap()[10].rational);
        for t in 1..=12 {
            assert_eq!(
                polygon_angles_rational(t).unwrap(),
                rp1_rational(t),
                "t = {t}"
            );
        }
    }
}
