use num_complex::Complex64;

use crate::exactnum::{Cyclotomic, Quaternion, Rational, RealScalar};

/// A scalar that can be a homogeneous coordinate of a point in `FP^n`.
pub trait Coordinate: Clone + Send + Sync {
    fn zero() -> Self;
    fn conj(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;
    /// `|z|^2` as a real scalar in the matching exact/float family.
    fn abs2(&self) -> RealScalar;
}

/// `a^* b = sum conj(a_k) b_k`.
pub fn inner<C: Coordinate>(a: &[C], b: &[C]) -> C {
    a.iter()
        .zip(b)
        .fold(C::zero(), |acc, (x, y)| acc.add(&x.conj().mul(y)))
}

/// `a^* a`.
pub fn norm2<C: Coordinate>(a: &[C]) -> RealScalar {
    a.iter().fold(RealScalar::zero(), |acc, x| &acc + &x.abs2())
}

impl Coordinate for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn conj(&self) -> Self {
        Cyclotomic::conj(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn abs2(&self) -> RealScalar {
        RealScalar::Exact(Cyclotomic::abs2(self))
    }
}

impl Coordinate for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn abs2(&self) -> RealScalar {
        RealScalar::Float(self.norm_sqr())
    }
}

impl Coordinate for Quaternion<Rational> {
    fn zero() -> Self {
        Quaternion::zero()
    }
    fn conj(&self) -> Self {
        Quaternion::conj(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn is_zero(&self) -> bool {
        Quaternion::is_zero(self)
    }
    fn abs2(&self) -> RealScalar {
        RealScalar::from_rational(&Quaternion::abs2(self))
    }
}

impl Coordinate for Quaternion<f64> {
    fn zero() -> Self {
        Quaternion::zero()
    }
    fn conj(&self) -> Self {
        Quaternion::conj(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn is_zero(&self) -> bool {
        Quaternion::is_zero(self)
    }
    fn abs2(&self) -> RealScalar {
        RealScalar::Float(Quaternion::abs2(self))
    }
}
