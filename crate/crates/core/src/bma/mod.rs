//! The Bose-Mesner algebra of a design: the matrices `M_i = [P_i((x, y))]`,
//! the zero-one basis `Delta_zeta`, the idempotents `L_i = M_i / (rho_i |X|)`
//! and the identities relating them.

mod report;

use num_traits::{One, Zero};
use rayon::prelude::*;

pub use report::{value_json, BmaReport, Check, Report, Witness};

use crate::designs::{is_t_design_with_tol, FLOAT_DESIGN_TOL};
use crate::error::{Error, Result};
use crate::exactnum::{int, Rational, RealScalar, DEFAULT_TOL};
use crate::jacobi::{chi, rank_closed, rank_last, shifted_p, DesignParams};
use crate::matrix::Matrix;
use crate::projective::{gram_with_tol, GramMatrix, PointSet};

/// Default tolerance for float identity checks, relative to the largest
/// expected entry.
pub const BMA_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct BoseMesnerAlgebra {
    pub params: DesignParams,
    pub size: usize,
    pub gram: GramMatrix,
    /// `M_0, ..., M_s`.
    pub m: Vec<Matrix>,
    /// The distinct Gram values, 1 included, ascending.
    pub zetas: Vec<RealScalar>,
    /// `Delta_zeta` for each entry of `zetas`.
    pub delta: Vec<Matrix>,
    /// `chi_0, ..., chi_[t/2]`.
    pub chi: Vec<Rational>,
    /// `rho_0, ..., rho_s`.
    pub rho: Vec<RealScalar>,
    /// `lambda_s = |X| P_s(1) / sum P_s((x, y))^2`, odd `t` only.
    pub lambda_s: Option<RealScalar>,
    /// `L_0, ..., L_s`.
    pub l: Vec<Matrix>,
    pub ranks: Vec<usize>,
    tol: f64,
}

/// Builds the algebra of a `t`-design, failing if `ps` is not one.
pub fn build(ps: &PointSet, t: u32) -> Result<BoseMesnerAlgebra> {
    build_with_tol(ps, t, DEFAULT_TOL)
}

pub fn build_with_tol(ps: &PointSet, t: u32, tol: f64) -> Result<BoseMesnerAlgebra> {
    let verdict = is_t_design_with_tol(ps, t, FLOAT_DESIGN_TOL)?;
    if !verdict.is_design {
        return Err(Error::Precondition(format!(
            "not a {t}-design: degree {} sums do not vanish",
            verdict.first_failure().unwrap_or(0)
        )));
    }
    let params = DesignParams::new(ps.field(), ps.n(), t)?;
    BoseMesnerAlgebra::from_gram(params, gram_with_tol(ps, tol)?, tol)
}

impl BoseMesnerAlgebra {
    /// Builds the algebra from a Gram matrix without checking the design
    /// property, so that broken inputs can be examined.
    pub fn from_gram(params: DesignParams, gram: GramMatrix, tol: f64) -> Result<Self> {
        let size = gram.size();
        let g = gram.matrix();
        let s = params.s;

        let mut zetas: Vec<RealScalar> = Vec::new();
        for i in 0..size {
            for v in g.row(i) {
                if !zetas.iter().any(|z| z.approx_eq(v, tol)) {
                    zetas.push(v.clone());
                }
            }
        }
        zetas.sort_by(|a, b| a.cmp_value(b));
        let delta = zetas
            .iter()
            .map(|z| g.map(|v| v.like(&level(v.approx_eq(z, tol)))))
            .collect();

        let m: Vec<Matrix> = (0..=s)
            .into_par_iter()
            .map(|i| {
                let p = shifted_p(&params, i);
                g.map(|v| p.eval_real(v))
            })
            .collect();

        let chi: Vec<Rational> = (0..=params.e).map(|i| chi(&params, i)).collect();
        let sample = g[(0, 0)].clone();
        let mut rho: Vec<RealScalar> = chi.iter().map(|c| sample.like(c)).collect();
        let size_r = sample.like(&int(size as i64));
        let mut lambda_s = None;
        if params.eps == 1 {
            let ms = &m[s as usize];
            let p_at_1 = shifted_p(&params, s).eval(&Rational::one());
            let trace_sq = ms.map(|v| v * v).sum();
            if trace_sq.is_zero(0.0) {
                return Err(Error::Internal("sum of P_s^2 over X x X vanished".into()));
            }
            let lambda = (&size_r * &sample.like(&p_at_1)).checked_div(&trace_sq)?;
            rho.push((&lambda * &size_r).recip()?);
            lambda_s = Some(lambda);
        }

        let l: Vec<Matrix> = m
            .iter()
            .zip(&rho)
            .map(|(mi, r)| Ok(mi.scale(&(r * &size_r).recip()?)))
            .collect::<Result<_>>()?;
        let ranks = l.par_iter().map(Matrix::rank).collect();

        Ok(BoseMesnerAlgebra {
            params,
            size,
            gram,
            m,
            zetas,
            delta,
            chi,
            rho,
            lambda_s,
            l,
            ranks,
            tol,
        })
    }

    pub fn s(&self) -> usize {
        self.params.s as usize
    }

    pub fn is_exact(&self) -> bool {
        self.gram.is_exact()
    }

    /// The closed-form rank expected for `L_i`: `rank_closed(i)` for
    /// `i <= [t/2]`, `rank_last` for `i = s` when `t` is odd.
    pub fn expected_rank(&self, i: usize) -> Rational {
        if i <= self.params.e as usize {
            rank_closed(&self.params, i as u32)
        } else {
            rank_last(&self.params).expect("i > [t/2] only when t is odd")
        }
    }

    /// Coefficients of `a` in the `Delta` basis, if `a` is constant on every
    /// level set of the Gram matrix.
    pub fn delta_coefficients(&self, a: &Matrix, tol: f64) -> Option<Vec<RealScalar>> {
        let g = self.gram.matrix();
        let mut coeffs: Vec<Option<RealScalar>> = vec![None; self.zetas.len()];
        for x in 0..self.size {
            for y in 0..self.size {
                let z = self
                    .zetas
                    .iter()
                    .position(|z| z.approx_eq(&g[(x, y)], self.tol))?;
                let v = &a[(x, y)];
                match &coeffs[z] {
                    None => coeffs[z] = Some(v.clone()),
                    Some(c) if c.approx_eq(v, tol) => {}
                    Some(_) => return None,
                }
            }
        }
        coeffs.into_iter().collect()
    }

    /// Rank of the coefficient matrix `[P_i(zeta)]` of `M_0..M_s` in the
    /// `Delta` basis; `s + 1` means the `M_i` are independent.
    pub fn basis_rank(&self) -> usize {
        let rows = (0..=self.params.s)
            .map(|i| {
                let p = shifted_p(&self.params, i);
                self.zetas.iter().map(|z| p.eval_real(z)).collect()
            })
            .collect();
        Matrix::from_rows(rows).rank()
    }
}

fn level(on: bool) -> Rational {
    if on {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Rank of a square matrix: exact elimination, or the float eigenvalue count.
pub fn matrix_rank(a: &Matrix) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::Precondition(format!(
            "matrix_rank needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(a.rank())
}

fn scaled_tol(tol: f64, expected: &Matrix) -> f64 {
    let peak = expected
        .entries()
        .iter()
        .map(|v| v.to_f64().abs())
        .fold(1.0, f64::max);
    tol * peak
}

fn matrix_check(
    identity: String,
    got: &Matrix,
    want: &Matrix,
    tol: f64,
    i: usize,
    k: Option<usize>,
) -> Check {
    let tol = scaled_tol(tol, want);
    match got.first_mismatch(want, tol) {
        None => Check::pass(identity),
        Some((x, y)) => Check::fail(
            identity,
            Some(Witness { i, k, x, y }),
            format!(
                "entry ({x}, {y}): got {}, expected {}",
                got[(x, y)],
                want[(x, y)]
            ),
        ),
    }
}

/// Checks `M_i M_k = delta_ik |X| rho_i M_i` for all `0 <= i, k <= s`.
pub fn verify_mult_table(alg: &BoseMesnerAlgebra, tol: f64) -> Report {
    let s = alg.s();
    let pairs: Vec<(usize, usize)> = (0..=s).flat_map(|i| (0..=s).map(move |k| (i, k))).collect();
    let size_r = alg.gram.get(0, 0).like(&int(alg.size as i64));
    let checks = pairs
        .par_iter()
        .map(|&(i, k)| {
            let got = &alg.m[i] * &alg.m[k];
            let want = if i == k {
                alg.m[i].scale(&(&size_r * &alg.rho[i]))
            } else {
                Matrix::zeros(alg.size, alg.size)
            };
            let name = if i == k {
                format!("M_{i} M_{i} = |X| rho_{i} M_{i}")
            } else {
                format!("M_{i} M_{k} = 0")
            };
            matrix_check(name, &got, &want, tol, i, Some(k))
        })
        .collect();
    Report::new("multiplication table", checks)
}

/// Checks `L_i^2 = L_i`, `L_i L_k = 0`, `sum L_i = I`, `rank L_i = tr L_i`
/// and the closed-form ranks.
pub fn verify_idempotents(alg: &BoseMesnerAlgebra, tol: f64) -> Report {
    let s = alg.s();
    let mut checks: Vec<Check> = (0..=s)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut out = vec![matrix_check(
                format!("L_{i}^2 = L_{i}"),
                &(&alg.l[i] * &alg.l[i]),
                &alg.l[i],
                tol,
                i,
                None,
            )];
            for k in i + 1..=s {
                out.push(matrix_check(
                    format!("L_{i} L_{k} = 0"),
                    &(&alg.l[i] * &alg.l[k]),
                    &Matrix::zeros(alg.size, alg.size),
                    tol,
                    i,
                    Some(k),
                ));
            }
            out
        })
        .collect();

    let sum = alg.l[1..]
        .iter()
        .fold(alg.l[0].clone(), |acc, li| &acc + li);
    let id = Matrix::identity(alg.size);
    checks.push(matrix_check("sum L_i = I".into(), &sum, &id, tol, 0, None));

    for i in 0..=s {
        let trace = alg.l[i].trace();
        let rank = alg.ranks[i];
        let rank_r = trace.like(&int(rank as i64));
        let name = format!("rank L_{i} = tr L_{i}");
        checks.push(if trace.approx_eq(&rank_r, tol * alg.size as f64) {
            Check::pass(name)
        } else {
            Check::fail(
                name,
                None,
                format!("rank {rank}, trace {}", trace.describe()),
            )
        });
        let expected = alg.expected_rank(i);
        let formula = if i <= alg.params.e as usize {
            "rank_closed"
        } else {
            "rank_last"
        };
        let name = format!("rank L_{i} = {formula}");
        checks.push(if expected == int(rank as i64) {
            Check::pass(name)
        } else {
            Check::fail(
                name,
                None,
                format!("matrix rank {rank}, closed form {expected}"),
            )
        });
    }
    Report::new("idempotents", checks)
}

/// Checks that every product `M_i M_k` lies in the span of the `Delta_zeta`,
/// and that the `M_i` are linearly independent there.
pub fn verify_closure(alg: &BoseMesnerAlgebra, tol: f64) -> Report {
    let s = alg.s();
    let pairs: Vec<(usize, usize)> = (0..=s).flat_map(|i| (i..=s).map(move |k| (i, k))).collect();
    let mut checks: Vec<Check> = pairs
        .par_iter()
        .map(|&(i, k)| {
            let prod = &alg.m[i] * &alg.m[k];
            let name = format!("M_{i} M_{k} in span(Delta)");
            match alg.delta_coefficients(&prod, scaled_tol(tol, &prod)) {
                Some(_) => Check::pass(name),
                None => Check::fail(
                    name,
                    Some(Witness {
                        i,
                        k: Some(k),
                        x: 0,
                        y: 0,
                    }),
                    "not constant on a Gram level set".into(),
                ),
            }
        })
        .collect();
    let rank = alg.basis_rank();
    let name = format!("M_0..M_{s} independent");
    checks.push(if rank == s + 1 {
        Check::pass(name)
    } else {
        Check::fail(name, None, format!("coefficient rank {rank}"))
    });
    Report::new("closure", checks)
}

/// Checks that every `L_i` has float eigenvalues in `{0, 1}` within `tol`.
pub fn verify_spectra(alg: &BoseMesnerAlgebra, tol: f64) -> Report {
    let checks = alg
        .l
        .iter()
        .enumerate()
        .map(|(i, li)| {
            let ev = li.symmetric_eigenvalues();
            let name = format!("spectrum of L_{i} in {{0, 1}}");
            match ev.iter().find(|&&x| x.abs() > tol && (x - 1.0).abs() > tol) {
                None => Check::pass(name),
                Some(x) => Check::fail(name, None, format!("eigenvalue {x:.3e}")),
            }
        })
        .collect();
    Report::new("spectra", checks)
}

/// Runs every verification on `alg`. Spectra are computed in floats, so they
/// use at least [`BMA_TOL`].
pub fn full_report(alg: &BoseMesnerAlgebra, tol: f64) -> BmaReport {
    let sections = vec![
        verify_mult_table(alg, tol),
        verify_idempotents(alg, tol),
        verify_closure(alg, tol),
        verify_spectra(alg, tol.max(BMA_TOL)),
    ];
    BmaReport::new(alg, sections)
}

/// `tr E_s = Q_s(1)` against `rank L_s` for `t = 2s - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ETraceComparison {
    pub q_s_at_1: Rational,
    pub rank_ls: Rational,
    /// `E_s` cannot be an idempotent when the two differ.
    pub differs: bool,
}

pub fn e_trace_comparison(params: &DesignParams) -> Result<ETraceComparison> {
    let rank_ls = rank_last(params)?;
    let q_s_at_1 = rank_closed(params, params.s);
    Ok(ETraceComparison {
        differs: q_s_at_1 != rank_ls,
        q_s_at_1,
        rank_ls,
    })
}
