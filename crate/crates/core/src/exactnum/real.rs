use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::cyclotomic::Cyclotomic;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Default absolute tolerance for float comparisons. Projective inner products
/// lie in `[0, 1]`, so an absolute threshold is meaningful.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A real scalar: either an exact real cyclotomic number (rationals included)
/// or an `f64`.
///
/// Arithmetic between an exact and a float operand degrades to float.
#[derive(Clone, Debug)]
pub enum RealScalar {
    Exact(Cyclotomic),
    Float(f64),
}

impl RealScalar {
    pub fn zero() -> Self {
        RealScalar::Exact(Cyclotomic::zero())
    }

    pub fn one() -> Self {
        RealScalar::Exact(Cyclotomic::one())
    }

    pub fn from_rational(r: &Rational) -> Self {
        RealScalar::Exact(Cyclotomic::from_rational(r))
    }

    pub fn from_integer(n: i64) -> Self {
        RealScalar::Exact(Cyclotomic::from_integer(n))
    }

    /// Same representation family as `self`: exact stays exact, float stays
    /// float.
    pub fn like(&self, r: &Rational) -> Self {
        match self {
            RealScalar::Exact(_) => RealScalar::from_rational(r),
            RealScalar::Float(_) => RealScalar::Float(super::rational::rational_to_f64(r)),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RealScalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&Cyclotomic> {
        match self {
            RealScalar::Exact(z) => Some(z),
            RealScalar::Float(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            RealScalar::Exact(z) => z.to_f64(),
            RealScalar::Float(x) => *x,
        }
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.as_exact().and_then(Cyclotomic::to_rational)
    }

    pub fn to_float(&self) -> Self {
        RealScalar::Float(self.to_f64())
    }

    /// Exact zero test, or `|x| <= tol` for floats.
    pub fn is_zero(&self, tol: f64) -> bool {
        match self {
            RealScalar::Exact(z) => z.is_zero(),
            RealScalar::Float(x) => x.abs() <= tol,
        }
    }

    /// Canonical equality when both are exact; otherwise within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        match (self, other) {
            (RealScalar::Exact(a), RealScalar::Exact(b)) => a == b,
            _ => (self.to_f64() - other.to_f64()).abs() <= tol,
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (RealScalar::Exact(a), RealScalar::Exact(b)) => {
                Ok(RealScalar::Exact(a * &b.inverse()?))
            }
            _ if rhs.to_f64() == 0.0 => Err(Error::DivisionByZero("real scalar".into())),
            _ => Ok(RealScalar::Float(self.to_f64() / rhs.to_f64())),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        self.like(&Rational::from_integer(1.into()))
            .checked_div(self)
    }

    pub fn abs(&self) -> Self {
        if self.to_f64() < 0.0 {
            -self
        } else {
            self.clone()
        }
    }

    /// The exact form followed by a 15-digit approximation; floats print
    /// only the approximation.
    pub fn describe(&self) -> String {
        match self {
            RealScalar::Exact(z) => match z.to_rational() {
                Some(r) if r.is_integer() => z.to_string(),
                _ => format!("{z} ~ {:.15}", z.to_f64()),
            },
            RealScalar::Float(x) => format!("{x:.15}"),
        }
    }

    /// Total order through the principal real embedding. Distinct exact values
    /// that agree in `f64` fall back to equality, which callers never rely on
    /// for the well-separated inner products handled here.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.to_f64().total_cmp(&other.to_f64())
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl<'a> $tr<&'a RealScalar> for &'a RealScalar {
            type Output = RealScalar;
            fn $method(self, rhs: &RealScalar) -> RealScalar {
                match (self, rhs) {
                    (RealScalar::Exact(a), RealScalar::Exact(b)) => RealScalar::Exact(a $op b),
                    _ => RealScalar::Float(self.to_f64() $op rhs.to_f64()),
                }
            }
        }
        impl $tr for RealScalar {
            type Output = RealScalar;
            fn $method(self, rhs: RealScalar) -> RealScalar {
                &self $op &rhs
            }
        }
        impl<'a> $tr<&'a RealScalar> for RealScalar {
            type Output = RealScalar;
            fn $method(self, rhs: &RealScalar) -> RealScalar {
                &self $op rhs
            }
        }
    };
}
real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);

impl<'a> Div<&'a RealScalar> for &'a RealScalar {
    type Output = RealScalar;
    fn div(self, rhs: &RealScalar) -> RealScalar {
        self.checked_div(rhs).expect("real scalar division by zero")
    }
}

impl Neg for &RealScalar {
    type Output = RealScalar;
    fn neg(self) -> RealScalar {
        match self {
            RealScalar::Exact(z) => RealScalar::Exact(-z),
            RealScalar::Float(x) => RealScalar::Float(-x),
        }
    }
}

impl Neg for RealScalar {
    type Output = RealScalar;
    fn neg(self) -> RealScalar {
        -&self
    }
}

impl From<Cyclotomic> for RealScalar {
    fn from(z: Cyclotomic) -> Self {
        RealScalar::Exact(z)
    }
}

impl From<f64> for RealScalar {
    fn from(x: f64) -> Self {
        RealScalar::Float(x)
    }
}

impl fmt::Display for RealScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealScalar::Exact(z) => write!(f, "{z}"),
            RealScalar::Float(x) => write!(f, "{x:.15e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::ratio;

    #[test]
    fn mixed_arithmetic_degrades_to_float() {
        let a = RealScalar::from_rational(&ratio(1, 3));
        let b = RealScalar::Float(0.5);
        let c = &a + &b;
        assert!(!c.is_exact());
        assert!((c.to_f64() - 5.0 / 6.0).abs() < 1e-15);
        let d = &a * &a;
        assert_eq!(d.to_rational(), Some(ratio(1, 9)));
    }

    #[test]
    fn tolerance_rules() {
        let tiny = RealScalar::Float(1e-12);
        assert!(tiny.is_zero(DEFAULT_TOL));
        assert!(!RealScalar::from_rational(&ratio(1, 1_000_000_000_000)).is_zero(DEFAULT_TOL));
        assert!(RealScalar::Float(0.25).approx_eq(&RealScalar::from_rational(&ratio(1, 4)), 1e-12));
        assert!(RealScalar::zero().recip().is_err());
        assert!(RealScalar::Float(0.0).recip().is_err());
    }
}
