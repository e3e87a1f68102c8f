//! Elements of the cyclotomic fields `Q(zeta_m)`.
//!
//! An element is stored in the power basis `1, zeta, ..., zeta^(phi(m)-1)`
//! reduced modulo the `m`-th cyclotomic polynomial, with integer numerators
//! over one positive common denominator. The representation is canonical for
//! a fixed order, so equality is coefficient equality. Operands of different
//! orders are lifted into `Q(zeta_lcm)` before combining.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{divisors, euler_phi, format_rational, Rational};
use super::surd::QuadraticSurd;
use crate::error::{Error, Result};

type IntPoly = Vec<BigInt>;

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of the monic cyclotomic polynomial `Phi_m`, lowest degree
/// first, obtained by dividing `x^m - 1` by `Phi_d` for every proper divisor
/// `d` of `m`.
pub fn cyclotomic_polynomial(m: u64) -> Arc<IntPoly> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(p) = phi_cache().read().expect("phi cache poisoned").get(&m) {
        return Arc::clone(p);
    }
    // computed outside the lock: recursion takes the lock again for divisors,
    // and a concurrent fill produces the same value
    let mut quotient: IntPoly = vec![BigInt::zero(); m as usize + 1];
    quotient[0] = BigInt::from(-1);
    quotient[m as usize] = BigInt::one();
    for d in divisors(m).into_iter().filter(|&d| d < m) {
        quotient = exact_monic_division(&quotient, &cyclotomic_polynomial(d));
    }
    let poly = Arc::new(quotient);
    phi_cache()
        .write()
        .expect("phi cache poisoned")
        .entry(m)
        .or_insert(poly)
        .clone()
}

fn exact_monic_division(dividend: &[BigInt], divisor: &[BigInt]) -> IntPoly {
    let dd = divisor.len() - 1;
    let mut rem = dividend.to_vec();
    let qlen = dividend.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in divisor.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// Reduces an integer polynomial modulo the monic `phi`, in place, returning
/// the low `deg phi` coefficients.
fn reduce_mod(mut poly: IntPoly, phi: &[BigInt]) -> IntPoly {
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            let c = std::mem::take(&mut poly[k]);
            if c.is_zero() {
                continue;
            }
            for (j, pj) in phi[..deg].iter().enumerate() {
                poly[k - deg + j] -= &c * pj;
            }
        }
        poly.truncate(deg);
    } else {
        poly.resize(deg, BigInt::zero());
    }
    poly
}

/// An element of `Q(zeta_order)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    num: IntPoly,
    den: BigInt,
}

impl Cyclotomic {
    fn from_parts(order: u64, num: IntPoly, den: BigInt) -> Self {
        let mut z = Cyclotomic { order, num, den };
        z.normalize();
        z
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let g = self.num.iter().fold(self.den.clone(), |g, c| g.gcd(c));
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
        } else if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    /// Builds an element from power-basis coefficients of any length; powers
    /// at or above `phi(order)` are reduced.
    pub fn from_coeffs(order: u64, coeffs: &[Rational]) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let den = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let mut folded = vec![BigInt::zero(); order as usize];
        for (j, c) in coeffs.iter().enumerate() {
            folded[j % order as usize] += c.numer() * (&den / c.denom());
        }
        let num = reduce_mod(folded, &cyclotomic_polynomial(order));
        Self::from_parts(order, num, den)
    }

    /// `zeta_order^power`.
    pub fn zeta_power(order: u64, power: i64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let k = power.rem_euclid(order as i64) as usize;
        let mut poly = vec![BigInt::zero(); order as usize];
        poly[k] = BigInt::one();
        let num = reduce_mod(poly, &cyclotomic_polynomial(order));
        Self::from_parts(order, num, BigInt::one())
    }

    pub fn from_rational(r: &Rational) -> Self {
        Cyclotomic {
            order: 1,
            num: vec![r.numer().clone()],
            den: r.denom().clone(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Power-basis coefficients, `phi(order)` of them.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// The rational value, if every non-constant coefficient vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    /// Re-expresses the element in `Q(zeta_target)`; `order` must divide
    /// `target`.
    pub fn lift(&self, target: u64) -> Self {
        assert!(
            target.is_multiple_of(self.order),
            "cannot lift order {} into order {target}",
            self.order
        );
        if target == self.order {
            return self.clone();
        }
        if self.is_rational() {
            let mut num = vec![BigInt::zero(); euler_phi(target) as usize];
            num[0] = self.num[0].clone();
            return Cyclotomic {
                order: target,
                num,
                den: self.den.clone(),
            };
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![BigInt::zero(); target as usize];
        for (j, c) in self.num.iter().enumerate() {
            poly[(j * step) % target as usize] += c;
        }
        let num = reduce_mod(poly, &cyclotomic_polynomial(target));
        Self::from_parts(target, num, self.den.clone())
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let target = a.order.lcm(&b.order);
        (a.lift(target), b.lift(target))
    }

    /// The Galois automorphism `zeta -> zeta^k`; `k` must be coprime to the
    /// order.
    pub fn galois(&self, k: i64) -> Self {
        let m = self.order as i64;
        assert!(
            k.rem_euclid(m.max(1)).gcd(&m) == 1 || m == 1,
            "galois exponent {k} is not a unit modulo {m}"
        );
        if self.is_rational() {
            return self.clone();
        }
        let mut poly = vec![BigInt::zero(); m as usize];
        for (j, c) in self.num.iter().enumerate() {
            poly[(j as i64 * k).rem_euclid(m) as usize] += c;
        }
        let num = reduce_mod(poly, &cyclotomic_polynomial(self.order));
        Cyclotomic {
            order: self.order,
            num,
            den: self.den.clone(),
        }
    }

    /// Complex conjugation, `zeta -> zeta^(m-1)`.
    pub fn conj(&self) -> Self {
        self.galois(self.order as i64 - 1)
    }

    /// `z * conj(z)`, a totally nonnegative real element.
    pub fn abs2(&self) -> Self {
        self * &self.conj()
    }

    pub fn is_real(&self) -> bool {
        self.is_rational() || self.conj() == *self
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("inverse of zero cyclotomic".into()));
        }
        if let Some(r) = self.to_rational() {
            let mut num = vec![BigInt::zero(); self.num.len()];
            num[0] = r.denom().clone();
            return Ok(Self::from_parts(self.order, num, r.numer().clone()));
        }
        let phi: Vec<Rational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let a: Vec<Rational> = self.coeffs();
        let inv = rational_poly_inverse(&a, &phi)
            .ok_or_else(|| Error::Internal(format!("cyclotomic element {self} has no inverse")))?;
        Ok(Self::from_coeffs(self.order, &inv))
    }

    /// Value under the embedding `zeta -> exp(2 pi i k / m)`.
    pub fn embed(&self, k: i64) -> Complex64 {
        let den = big_to_f64(&self.den);
        let m = self.order as f64;
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let theta = 2.0 * std::f64::consts::PI * ((j as i64 * k) as f64) / m;
                Complex64::from_polar(big_to_f64(c) / den, theta)
            })
            .sum()
    }

    /// Value under the principal embedding `zeta -> exp(2 pi i / m)`.
    pub fn to_complex(&self) -> Complex64 {
        self.embed(1)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_complex().re
    }

    /// Distinct images under the Galois group of `Q(zeta_order)`.
    pub fn galois_orbit(&self) -> Vec<Self> {
        let m = self.order as i64;
        let mut orbit: Vec<Self> = Vec::new();
        for k in 1..=m.max(1) {
            if k.gcd(&m) != 1 {
                continue;
            }
            let image = self.galois(k);
            if !orbit.contains(&image) {
                orbit.push(image);
            }
        }
        orbit
    }

    /// `a + b sqrt(d)` with rational `a, b` and squarefree `d > 1`, when the
    /// element is real and generates a real quadratic field.
    pub fn as_quadratic_surd(&self) -> Option<QuadraticSurd> {
        if self.is_rational() || !self.is_real() {
            return None;
        }
        let orbit = self.galois_orbit();
        if orbit.len() != 2 {
            return None;
        }
        let sum = (&orbit[0] + &orbit[1]).to_rational()?;
        let product = (&orbit[0] * &orbit[1]).to_rational()?;
        let disc = &sum * &sum - Rational::from_integer(BigInt::from(4)) * product;
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let surd = QuadraticSurd::from_sqrt_of(&(&sum * &half), &half, &disc)?;
        if (surd.to_f64() - self.to_f64()).abs() < (surd.conjugate().to_f64() - self.to_f64()).abs()
        {
            Some(surd)
        } else {
            Some(surd.conjugate())
        }
    }

    fn combine_same_order(&self, other: &Self, sign: i32) -> Self {
        let l = self.den.lcm(&other.den);
        let fa = &l / &self.den;
        let fb = &l / &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| {
                if sign > 0 {
                    a * &fa + b * &fb
                } else {
                    a * &fa - b * &fb
                }
            })
            .collect();
        Self::from_parts(self.order, num, l)
    }

    fn scale_by_rational(&self, r: &Self) -> Self {
        let num = self.num.iter().map(|c| c * &r.num[0]).collect();
        Self::from_parts(self.order, num, &self.den * &r.den)
    }

    fn mul_same_order(&self, other: &Self) -> Self {
        let n = self.num.len();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let num = reduce_mod(prod, &cyclotomic_polynomial(self.order));
        Self::from_parts(self.order, num, &self.den * &other.den)
    }
}

fn big_to_f64(n: &BigInt) -> f64 {
    n.to_f64().unwrap_or(if n.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() <= db {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    rem.truncate(db.max(1));
    trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `modulus` by the extended Euclidean algorithm.
fn rational_poly_inverse(a: &[Rational], modulus: &[Rational]) -> Option<Vec<Rational>> {
    let is_zero_poly = |p: &[Rational]| p.iter().all(Zero::is_zero);
    let (mut r0, mut r1) = (modulus.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::one()]);
    while !is_zero_poly(&r1) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    trim(&mut r0);
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(s0.into_iter().map(|x| x / &c).collect())
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.num == other.num;
        }
        match (self.to_rational(), other.to_rational()) {
            (Some(a), Some(b)) => a == b,
            (Some(_), None) | (None, Some(_)) => false,
            (None, None) => {
                let (a, b) = Cyclotomic::aligned(self, other);
                a.den == b.den && a.num == b.num
            }
        }
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == rhs.order {
            return self.combine_same_order(rhs, 1);
        }
        let (a, b) = Cyclotomic::aligned(self, rhs);
        a.combine_same_order(&b, 1)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == rhs.order {
            return self.combine_same_order(rhs, -1);
        }
        let (a, b) = Cyclotomic::aligned(self, rhs);
        a.combine_same_order(&b, -1)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.is_rational() {
            return self.scale_by_rational(rhs);
        }
        if self.is_rational() {
            return rhs.scale_by_rational(self);
        }
        if self.order == rhs.order {
            return self.mul_same_order(rhs);
        }
        let (a, b) = Cyclotomic::aligned(self, rhs);
        a.mul_same_order(&b)
    }
}

impl<'a> Div<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    /// Panics on division by zero; use [`Cyclotomic::inverse`] to handle it.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self * &rhs.inverse().expect("cyclotomic division by zero")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(&r)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", format_rational(&r));
        }
        if let Some(surd) = self.as_quadratic_surd() {
            return write!(f, "{surd}");
        }
        let coeffs: Vec<String> = self.coeffs().iter().map(format_rational).collect();
        write!(f, "cyclo({})[{}]", self.order, coeffs.join(", "))
    }
}
