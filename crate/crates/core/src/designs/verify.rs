use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::RealScalar;
use crate::exactnum::{rational_to_f64, Rational, DEFAULT_TOL};
use crate::jacobi::{
    annihilator, design_bound, shifted_p, weight_moment, DesignParams, RationalPolynomial,
};
use crate::projective::{angle_set, gram_with_tol, AngleSet, GramMatrix, PointSet};

/// Per-degree float threshold, multiplied by `|X|`.
pub const FLOAT_DESIGN_TOL: f64 = 1e-8;

/// The worst row of one degree's design sums.
#[derive(Clone, Debug)]
pub struct DegreeResidual {
    pub degree: u32,
    /// `max_y |sum_x F((x, y))|`, exact when the Gram matrix is.
    pub max_abs: RealScalar,
    /// The `y` attaining the maximum.
    pub witness: usize,
    pub vanishes: bool,
}

#[derive(Clone, Debug)]
pub struct DesignVerdict {
    pub is_design: bool,
    pub t_checked: u32,
    pub exact: bool,
    pub residuals: Vec<DegreeResidual>,
}

impl DesignVerdict {
    /// Smallest degree whose sums do not vanish.
    pub fn first_failure(&self) -> Option<u32> {
        self.residuals
            .iter()
            .find(|r| !r.vanishes)
            .map(|r| r.degree)
    }

    /// Largest `t` such that every degree `1..=t` vanishes.
    pub fn strength(&self) -> u32 {
        self.first_failure().map_or(self.t_checked, |d| d - 1)
    }

    pub fn max_float_residual(&self) -> f64 {
        self.residuals
            .iter()
            .map(|r| r.max_abs.to_f64().abs())
            .fold(0.0, f64::max)
    }
}

/// Checks `sum_x P_i((x, y)) = 0` for `i = 1..=t` and every `y` in `X`.
pub fn is_t_design(ps: &PointSet, t: u32) -> Result<DesignVerdict> {
    is_t_design_with_tol(ps, t, FLOAT_DESIGN_TOL)
}

pub fn is_t_design_with_tol(ps: &PointSet, t: u32, tol: f64) -> Result<DesignVerdict> {
    let params = DesignParams::new(ps.field(), ps.n(), t)?;
    let g = gram_with_tol(ps, DEFAULT_TOL)?;
    Ok(design_sums_verdict(&params, &g, t, tol))
}

pub(crate) fn design_sums_verdict(
    params: &DesignParams,
    g: &GramMatrix,
    t: u32,
    tol: f64,
) -> DesignVerdict {
    let polys: Vec<RationalPolynomial> = (1..=t).map(|i| shifted_p(params, i)).collect();
    let threshold = g.size() as f64 * tol;
    let residuals = polys
        .iter()
        .zip(1..)
        .map(|(p, degree)| {
            let sums = row_sums(g, |x| p.eval_real(x));
            worst(degree, sums, threshold)
        })
        .collect();
    verdict(t, g.is_exact(), residuals)
}

/// Checks `(1/|X|) sum_x (x, y)^k` against the weight moment for `k = 1..=t`
/// and every `y`; equivalent to [`is_t_design`].
pub fn averaging_check(ps: &PointSet, t: u32) -> Result<DesignVerdict> {
    averaging_check_with_tol(ps, t, FLOAT_DESIGN_TOL)
}

pub fn averaging_check_with_tol(ps: &PointSet, t: u32, tol: f64) -> Result<DesignVerdict> {
    let params = DesignParams::new(ps.field(), ps.n(), t)?;
    let g = gram_with_tol(ps, DEFAULT_TOL)?;
    let inv_size = Rational::new(1.into(), (g.size() as i64).into());
    let residuals = (1..=t)
        .map(|k| {
            let moment = weight_moment(&params, k);
            let sums = row_sums(&g, |x| power(x, k));
            let diffs = sums
                .into_iter()
                .map(|s| {
                    let avg = &s * &s.like(&inv_size);
                    &avg - &avg.like(&moment)
                })
                .collect();
            worst(k, diffs, tol)
        })
        .collect();
    Ok(verdict(t, g.is_exact(), residuals))
}

fn power(x: &RealScalar, k: u32) -> RealScalar {
    (1..k).fold(x.clone(), |acc, _| &acc * x)
}

/// `sum_x f((x, y))` for each `y`, in a fixed order.
fn row_sums(g: &GramMatrix, f: impl Fn(&RealScalar) -> RealScalar + Sync) -> Vec<RealScalar> {
    (0..g.size())
        .into_par_iter()
        .map(|y| {
            g.row(y)
                .iter()
                .fold(RealScalar::zero(), |acc, v| &acc + &f(v))
        })
        .collect()
}

fn worst(degree: u32, sums: Vec<RealScalar>, threshold: f64) -> DegreeResidual {
    let vanishes = sums.iter().all(|s| s.is_zero(threshold));
    let (witness, max_abs) = sums
        .into_iter()
        .map(|s| s.abs())
        .enumerate()
        .reduce(|a, b| if b.1.to_f64() > a.1.to_f64() { b } else { a })
        .expect("point sets are nonempty");
    DegreeResidual {
        degree,
        max_abs,
        witness,
        vanishes,
    }
}

fn verdict(t: u32, exact: bool, residuals: Vec<DegreeResidual>) -> DesignVerdict {
    DesignVerdict {
        is_design: residuals.iter().all(|r| r.vanishes),
        t_checked: t,
        exact,
        residuals,
    }
}

/// Outcome of checking a design against the tightness conditions.
#[derive(Clone, Debug)]
pub struct TightnessCertificate {
    pub angles: AngleSet,
    pub s: usize,
    pub e: usize,
    pub eps: usize,
    /// Largest verified strength, at most `s + e`.
    pub t_max: u32,
    pub size: usize,
    /// `R_e^eps(1)` for `t = s + e`.
    pub bound: Rational,
    pub cardinality_match: bool,
    /// Every angle is a root of the annihilator.
    pub angle_roots_match: bool,
    pub annihilator: RationalPolynomial,
    /// Value of the annihilator at each angle.
    pub annihilator_residuals: Vec<RealScalar>,
    pub verdict: DesignVerdict,
}

impl TightnessCertificate {
    pub fn is_tight(&self) -> bool {
        self.t_max as usize == self.s + self.e && self.cardinality_match && self.angle_roots_match
    }
}

/// Certifies whether a `t`-design is tight: `t = s + e`, `|X| = R_e^eps(1)`
/// and `A(X)` is the root set of `xi^eps R_e^eps`.
pub fn tightness(ps: &PointSet, t: u32) -> Result<TightnessCertificate> {
    tightness_with_tol(ps, t, DEFAULT_TOL)
}

pub fn tightness_with_tol(ps: &PointSet, t: u32, tol: f64) -> Result<TightnessCertificate> {
    let g = gram_with_tol(ps, tol)?;
    let base = DesignParams::new(ps.field(), ps.n(), t)?;
    let check = design_sums_verdict(&base, &g, t, FLOAT_DESIGN_TOL);
    if !check.is_design {
        return Err(Error::Precondition(format!(
            "not a {t}-design: degree {} sums do not vanish",
            check.first_failure().unwrap_or(0)
        )));
    }
    let angles = angle_set(&g, tol)?;
    let (s, e, eps) = (angles.s, angles.e, angles.eps);
    let t_tight = (s + e) as u32;
    // t <= s + e always holds for a design, so this covers every strength
    let verdict = design_sums_verdict(&base, &g, t_tight.max(t), FLOAT_DESIGN_TOL);
    let t_max = verdict.strength().min(t_tight.max(t));
    let params = base.with_t(t_tight.max(1))?;
    let bound = design_bound(&params);
    let cardinality_match = Rational::from_integer((ps.len() as i64).into()) == bound;
    let ann = annihilator(&params);
    let annihilator_residuals: Vec<RealScalar> =
        angles.values.iter().map(|a| ann.eval_real(a)).collect();
    let scale = ann
        .coeffs()
        .iter()
        .map(|c| rational_to_f64(c).abs())
        .fold(1.0, f64::max);
    let angle_roots_match = annihilator_residuals.iter().all(|r| r.is_zero(tol * scale));
    Ok(TightnessCertificate {
        s,
        e,
        eps,
        t_max,
        size: ps.len(),
        bound,
        cardinality_match,
        angle_roots_match,
        annihilator: ann,
        annihilator_residuals,
        verdict,
        angles,
    })
}
