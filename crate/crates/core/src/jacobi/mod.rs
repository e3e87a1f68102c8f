//! Jacobi polynomials with rational parameters and the quantities a projective
//! design inherits from them: shifted polynomials `P_i(xi)`, the annihilator
//! `R_e^eps`, exact moments of the normalised Jacobi weight, the constants
//! `chi_i`, closed-form idempotent ranks and the cardinality bound.

mod params;
mod poly;
mod roots;

use num_traits::{One, Zero};

pub use params::{DesignParams, Field};
pub use poly::{RationalPolynomial, Variable};
pub use roots::{tight_angle_set, ExactRoot, TightAngleSet, DEFAULT_ROOT_TOL};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, int, pochhammer, ratio, Rational};

/// `P_i^{(alpha, beta)}(tau)` normalised by `P_i(1) = (alpha + 1)_i / i!`,
/// built with the three-term recurrence in exact arithmetic.
pub fn jacobi_poly(alpha: &Rational, beta: &Rational, i: u32) -> Result<RationalPolynomial> {
    let minus_one = -Rational::one();
    if *alpha <= minus_one || *beta <= minus_one {
        return Err(Error::Domain(format!(
            "Jacobi parameters must exceed -1, got ({alpha}, {beta})"
        )));
    }
    let var = Variable::Tau;
    let mut prev = RationalPolynomial::constant(Rational::one(), var);
    if i == 0 {
        return Ok(prev);
    }
    let ab = alpha + beta;
    // P_1 = ((alpha - beta) + (alpha + beta + 2) tau) / 2
    let mut cur = RationalPolynomial::new(
        vec![(alpha - beta) * ratio(1, 2), (&ab + int(2)) * ratio(1, 2)],
        var,
    );
    for k in 2..=i {
        let k = int(k as i64);
        let two_k_ab = int(2) * &k + &ab;
        let lhs = int(2) * &k * (&k + &ab) * (&two_k_ab - int(2));
        let c1 = &two_k_ab - int(1);
        let lin = RationalPolynomial::new(
            vec![
                &c1 * (alpha * alpha - beta * beta),
                &c1 * &two_k_ab * (&two_k_ab - int(2)),
            ],
            var,
        );
        let c2 = int(2) * (&k + alpha - int(1)) * (&k + beta - int(1)) * &two_k_ab;
        let next = (&(&lin * &cur) - &prev.scale(&c2)).scale(&lhs.recip());
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `P_i(xi) = P_i^{(alpha, beta)}(2 xi - 1)` with the design's `alpha, beta`.
pub fn shifted_p(params: &DesignParams, i: u32) -> RationalPolynomial {
    jacobi_poly(&params.alpha, &params.beta, i)
        .expect("design parameters are always admissible")
        .compose_affine(&int(2), &int(-1), Variable::Xi)
}

/// `R_e^eps(xi) = ((N)_s / (m)_s) P_e^{(alpha + 1, beta + eps)}(2 xi - 1)`.
pub fn r_poly(params: &DesignParams) -> RationalPolynomial {
    let eps = int(params.eps as i64);
    let scale = poch(&params.big_n, params.s as i64) / poch(&params.m, params.s as i64);
    jacobi_poly(&(&params.alpha + int(1)), &(&params.beta + eps), params.e)
        .expect("shifted design parameters are admissible")
        .compose_affine(&int(2), &int(-1), Variable::Xi)
        .scale(&scale)
}

/// `xi^eps R_e^eps(xi)`, whose roots are the angle set of a tight design.
pub fn annihilator(params: &DesignParams) -> RationalPolynomial {
    let r = r_poly(params);
    if params.eps == 1 {
        &RationalPolynomial::x(Variable::Xi) * &r
    } else {
        r
    }
}

/// `int xi^k dOmega = (beta + 1)_k / (alpha + beta + 2)_k` for the normalised
/// Jacobi weight, with `xi = (1 + tau) / 2`.
pub fn weight_moment_ab(alpha: &Rational, beta: &Rational, k: u32) -> Rational {
    poch(&(beta + int(1)), k as i64) / poch(&(alpha + beta + int(2)), k as i64)
}

pub fn weight_moment(params: &DesignParams, k: u32) -> Rational {
    weight_moment_ab(&params.alpha, &params.beta, k)
}

/// Exact integral of a `xi`-polynomial against the normalised weight.
pub fn integrate_poly(params: &DesignParams, p: &RationalPolynomial) -> Rational {
    debug_assert_eq!(
        p.var(),
        Variable::Xi,
        "integrate_poly expects a xi-polynomial"
    );
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| c * weight_moment(params, k as u32))
        .fold(Rational::zero(), |a, b| a + b)
}

/// `chi_i = int P_i^2 dOmega / P_i(1)`.
pub fn chi(params: &DesignParams, i: u32) -> Rational {
    let p = shifted_p(params, i);
    integrate_poly(params, &(&p * &p)) / p.eval(&Rational::one())
}

/// `(N + 2i - 1) (N)_{i-1}`, taken as 1 at `i = 0` per the convention
/// `(gamma - 1)(gamma)_{-1} = 1`.
fn leading_factor(big_n: &Rational, i: u32) -> Rational {
    if i == 0 {
        return Rational::one();
    }
    (big_n + int(2 * i as i64 - 1)) * poch(big_n, i as i64 - 1)
}

/// `rank L_i = (N)_{i-1} (N - m)_i (N + 2i - 1) / ((m)_i i!)`.
pub fn rank_closed(params: &DesignParams, i: u32) -> Rational {
    let nm = &params.big_n - &params.m;
    leading_factor(&params.big_n, i) * poch(&nm, i as i64)
        / (poch(&params.m, i as i64) * factorial(i as u64))
}

/// `rank L_s = (N)_{s-1} (N - m)_s / ((m)_s (s - 1)!)` for a tight design
/// with odd `t = 2s - 1`.
pub fn rank_last(params: &DesignParams) -> Result<Rational> {
    if params.eps != 1 {
        return Err(Error::Precondition(format!(
            "rank_last needs odd t, got t = {}; use rank_closed(s) instead",
            params.t
        )));
    }
    Ok(rank_last_formula(params))
}

pub(crate) fn rank_last_formula(params: &DesignParams) -> Rational {
    let s = params.s as i64;
    let nm = &params.big_n - &params.m;
    poch(&params.big_n, s - 1) * poch(&nm, s) / (poch(&params.m, s) * factorial(s as u64 - 1))
}

/// `R_e^eps(1) = (N)_s (N - m + 1)_e / ((m)_s e!)`, the minimum size of a
/// t-design.
pub fn design_bound(params: &DesignParams) -> Rational {
    let bound = poch(&params.big_n, params.s as i64)
        * poch(&(&params.big_n - &params.m + int(1)), params.e as i64)
        / (poch(&params.m, params.s as i64) * factorial(params.e as u64));
    assert!(
        bound.is_integer(),
        "design bound {bound} is not an integer for {params:?}"
    );
    bound
}

fn poch(gamma: &Rational, i: i64) -> Rational {
    pochhammer(gamma, i).expect("pochhammer index is in range")
}
