use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Num;

/// Component type a quaternion can be built over: exact rationals or `f64`.
pub trait QuatScalar: Clone + Num + Neg<Output = Self> {}
impl<T: Clone + Num + Neg<Output = T>> QuatScalar for T {}

/// `w + x i + y j + z k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: QuatScalar> Quaternion<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn real(w: T) -> Self {
        Quaternion::new(w, T::zero(), T::zero(), T::zero())
    }

    pub fn zero() -> Self {
        Quaternion::real(T::zero())
    }

    pub fn one() -> Self {
        Quaternion::real(T::one())
    }

    pub fn i() -> Self {
        Quaternion::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Quaternion::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Quaternion::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    /// Squared norm `w^2 + x^2 + y^2 + z^2`.
    pub fn abs2(&self) -> T {
        self.w.clone() * self.w.clone()
            + self.x.clone() * self.x.clone()
            + self.y.clone() * self.y.clone()
            + self.z.clone() * self.z.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn components(&self) -> [T; 4] {
        [
            self.w.clone(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        ]
    }

    pub fn map<U: QuatScalar>(&self, f: impl Fn(&T) -> U) -> Quaternion<U> {
        Quaternion::new(f(&self.w), f(&self.x), f(&self.y), f(&self.z))
    }
}

impl<T: QuatScalar> Add for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn add(self, o: &Quaternion<T>) -> Quaternion<T> {
        Quaternion::new(
            self.w.clone() + o.w.clone(),
            self.x.clone() + o.x.clone(),
            self.y.clone() + o.y.clone(),
            self.z.clone() + o.z.clone(),
        )
    }
}

impl<T: QuatScalar> Sub for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn sub(self, o: &Quaternion<T>) -> Quaternion<T> {
        Quaternion::new(
            self.w.clone() - o.w.clone(),
            self.x.clone() - o.x.clone(),
            self.y.clone() - o.y.clone(),
            self.z.clone() - o.z.clone(),
        )
    }
}

impl<T: QuatScalar> Mul for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn mul(self, o: &Quaternion<T>) -> Quaternion<T> {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        let p = |u: &T, v: &T| u.clone() * v.clone();
        Quaternion::new(
            p(a1, a2) - p(b1, b2) - p(c1, c2) - p(d1, d2),
            p(a1, b2) + p(b1, a2) + p(c1, d2) - p(d1, c2),
            p(a1, c2) - p(b1, d2) + p(c1, a2) + p(d1, b2),
            p(a1, d2) + p(b1, c2) - p(c1, b2) + p(d1, a2),
        )
    }
}

impl<T: QuatScalar> Neg for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn neg(self) -> Quaternion<T> {
        Quaternion::new(
            -self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }
}

impl<T: QuatScalar> Add for Quaternion<T> {
    type Output = Quaternion<T>;
    fn add(self, o: Quaternion<T>) -> Quaternion<T> {
        &self + &o
    }
}

impl<T: QuatScalar> Mul for Quaternion<T> {
    type Output = Quaternion<T>;
    fn mul(self, o: Quaternion<T>) -> Quaternion<T> {
        &self * &o
    }
}

impl<T: QuatScalar + fmt::Display> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}
