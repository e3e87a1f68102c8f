//! Root isolation for `xi^eps R_e^eps(xi)` on `[0, 1)`.

use std::fmt;

use num_traits::{Signed, Zero};

use super::{annihilator, r_poly, DesignParams, RationalPolynomial};
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, int, rational_to_f64, QuadraticSurd, Rational};

pub const DEFAULT_ROOT_TOL: f64 = 1e-13;
const SAMPLES: usize = 512;

/// A root known in closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactRoot {
    Rational(Rational),
    Surd(QuadraticSurd),
}

impl ExactRoot {
    pub fn to_f64(&self) -> f64 {
        match self {
            ExactRoot::Rational(r) => rational_to_f64(r),
            ExactRoot::Surd(s) => s.to_f64(),
        }
    }
}

impl fmt::Display for ExactRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactRoot::Rational(r) => f.write_str(&format_rational(r)),
            ExactRoot::Surd(s) => write!(f, "{s}"),
        }
    }
}

/// Predicted angle set of a tight design with the given parameters.
#[derive(Clone, Debug)]
pub struct TightAngleSet {
    /// Sorted ascending, `0` first when `eps = 1`.
    pub approx: Vec<f64>,
    /// Same roots in closed form, available when `e <= 2`.
    pub exact: Option<Vec<ExactRoot>>,
    pub annihilator: RationalPolynomial,
}

/// Roots of `xi^eps R_e^eps(xi)`: the `e` simple roots of `R` in `(0, 1)`,
/// bracketed on a uniform grid and bisected, plus `0` when `eps = 1`.
pub fn tight_angle_set(params: &DesignParams, tol: f64) -> Result<TightAngleSet> {
    let r = r_poly(params);
    let mut roots = bracket_and_bisect(&r, tol);
    if roots.len() != params.e as usize {
        return Err(Error::Internal(format!(
            "R_{}^{} has {} roots in (0,1), expected {}",
            params.e,
            params.eps,
            roots.len(),
            params.e
        )));
    }
    if params.eps == 1 {
        roots.insert(0, 0.0);
    }
    let exact = exact_roots(&r).map(|mut rs| {
        if params.eps == 1 {
            rs.insert(0, ExactRoot::Rational(int(0)));
        }
        rs
    });
    Ok(TightAngleSet {
        approx: roots,
        exact,
        annihilator: annihilator(params),
    })
}

fn bracket_and_bisect(p: &RationalPolynomial, tol: f64) -> Vec<f64> {
    let grid: Vec<(f64, f64)> = (0..=SAMPLES)
        .map(|j| {
            let x = j as f64 / SAMPLES as f64;
            (x, p.eval_f64(x))
        })
        .collect();
    let mut roots = Vec::new();
    for (j, w) in grid.windows(2).enumerate() {
        let ((a, fa), (b, fb)) = (w[0], w[1]);
        if fa == 0.0 {
            if j > 0 {
                roots.push(a);
            }
        } else if fa * fb < 0.0 {
            roots.push(bisect(p, a, b, fa, tol));
        }
    }
    roots
}

/// Bisects until the bracket is below `tol` and then on to the limit of
/// `f64` resolution. Signs are taken from exact evaluation at the dyadic
/// midpoints, so large coefficients cannot flip a bracket.
fn bisect(p: &RationalPolynomial, mut lo: f64, mut hi: f64, flo: f64, tol: f64) -> f64 {
    let lo_negative = flo < 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = exact_value(p, mid);
        if fm.is_zero() {
            return mid;
        }
        if fm.is_negative() == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= tol * 1e-3 {
            break;
        }
    }
    if exact_value(p, lo).abs() <= exact_value(p, hi).abs() {
        lo
    } else {
        hi
    }
}

/// `p(x)` evaluated exactly at the binary value of `x`.
pub(crate) fn exact_value(p: &RationalPolynomial, x: f64) -> Rational {
    p.eval(&Rational::from_float(x).expect("finite sample point"))
}

fn exact_roots(p: &RationalPolynomial) -> Option<Vec<ExactRoot>> {
    let c = p.coeffs();
    match p.degree() {
        0 => Some(Vec::new()),
        1 => Some(vec![ExactRoot::Rational(-&c[0] / &c[1])]),
        2 => {
            let (a, b, cc) = (&c[2], &c[1], &c[0]);
            let disc = b * b - int(4) * a * cc;
            let two_a = int(2) * a;
            let center = -b / &two_a;
            let mut roots = match QuadraticSurd::from_sqrt_of(&center, &(int(1) / &two_a), &disc) {
                Some(surd) => {
                    let other = surd.conjugate();
                    vec![ExactRoot::Surd(surd), ExactRoot::Surd(other)]
                }
                None if disc.is_zero() => vec![ExactRoot::Rational(center)],
                None if disc.is_negative() => return None,
                None => {
                    let root = rational_sqrt(&disc)?;
                    vec![
                        ExactRoot::Rational(&center - &root / &two_a),
                        ExactRoot::Rational(&center + &root / &two_a),
                    ]
                }
            };
            roots.sort_by(|x, y| x.to_f64().total_cmp(&y.to_f64()));
            Some(roots)
        }
        _ => None,
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}
