//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_traits::{One, Zero};
use projdes::exactnum::{int, Rational};
use projdes::jacobi::DesignParams;

/// Adaptive Simpson on `[a, b]` to absolute accuracy `eps`.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, eps: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        eps: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let diff = left + right - whole;
        // the first few levels always split so symmetric integrands cannot fool the estimate
        if depth == 0 || (depth < 44 && diff.abs() <= 15.0 * eps) {
            left + right + diff / 15.0
        } else {
            recurse(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1)
                + recurse(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1)
        }
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = simpson(fa, fm, fb, a, b);
    recurse(f, a, b, fa, fm, fb, whole, eps, 50)
}

/// `int_0^1 xi^k (1 - xi)^alpha xi^beta d xi`, normalised by the `k = 0`
/// value. With `xi = sin^2 theta` the integrand becomes
/// `2 cos^(2 alpha + 1) sin^(2 beta + 2k + 1)` on `[0, pi/2]`, which is
/// smooth for the design exponents.
pub fn quadrature_moment(params: &DesignParams, k: u32) -> f64 {
    let a = 2.0 * to_f64(&params.alpha) + 1.0;
    let b = 2.0 * to_f64(&params.beta) + 1.0;
    let weight = |k: u32| {
        let f = move |th: f64| 2.0 * th.cos().powf(a) * th.sin().powf(b + 2.0 * k as f64);
        adaptive_simpson(&f, 0.0, std::f64::consts::FRAC_PI_2, 1e-14)
    };
    weight(k) / weight(0)
}

pub fn to_f64(r: &Rational) -> f64 {
    projdes::exactnum::rational_to_f64(r)
}

/// Generalised binomial `C(x, j)` for rational `x`.
pub fn binom(x: &Rational, j: u32) -> Rational {
    (0..j).fold(Rational::one(), |acc, l| {
        acc * (x - int(l as i64)) / int(l as i64 + 1)
    })
}

/// Explicit sum `P_i(tau) = sum_k C(i+alpha, i-k) C(i+beta, k) ((tau-1)/2)^k ((tau+1)/2)^(i-k)`.
pub fn jacobi_sum(alpha: &Rational, beta: &Rational, i: u32, tau: &Rational) -> Rational {
    let half = Rational::new(1.into(), 2.into());
    let lo = (tau - int(1)) * &half;
    let hi = (tau + int(1)) * &half;
    let ia = int(i as i64) + alpha;
    let ib = int(i as i64) + beta;
    (0..=i).fold(Rational::zero(), |acc, k| {
        acc + binom(&ia, i - k) * binom(&ib, k) * pow(&lo, k) * pow(&hi, i - k)
    })
}

pub fn pow(x: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * x)
}
