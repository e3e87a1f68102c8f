use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, rational_to_f64, square_part, Rational};

/// `a + b sqrt(d)` with rational `a`, `b` and squarefree integer `d > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub a: Rational,
    pub b: Rational,
    pub d: BigInt,
}

impl QuadraticSurd {
    /// `a + b sqrt(disc)` for a positive rational `disc` that is not a
    /// rational square. Returns `None` otherwise.
    pub fn from_sqrt_of(a: &Rational, b: &Rational, disc: &Rational) -> Option<Self> {
        if !disc.is_positive() {
            return None;
        }
        // sqrt(p/q) = sqrt(p q) / q
        let pq = disc.numer() * disc.denom();
        let (outside, d) = square_part(&pq);
        if d.is_one() {
            return None;
        }
        let scale = Rational::new(outside, disc.denom().clone());
        Some(QuadraticSurd {
            a: a.clone(),
            b: b * scale,
            d,
        })
    }

    pub fn conjugate(&self) -> Self {
        QuadraticSurd {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a)
            + rational_to_f64(&self.b)
                * rational_to_f64(&Rational::from_integer(self.d.clone())).sqrt()
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let den = self.a.denom().lcm(self.b.denom());
        let big_a = (&self.a * Rational::from_integer(den.clone())).to_integer();
        let big_b = (&self.b * Rational::from_integer(den.clone())).to_integer();
        let root = if big_b.abs().is_one() {
            format!("sqrt{}", self.d)
        } else {
            format!("{}sqrt{}", big_b.abs(), self.d)
        };
        let body = match (big_a.is_zero(), big_b.is_negative()) {
            (true, false) => root,
            (true, true) => format!("-{root}"),
            (false, false) => format!("{big_a}+{root}"),
            (false, true) => format!("{big_a}-{root}"),
        };
        if den.is_one() {
            write!(f, "{body}")
        } else if big_a.is_zero() {
            write!(f, "{body}/{den}")
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, ratio};

    #[test]
    fn formats_golden_angles() {
        let s = QuadraticSurd::from_sqrt_of(&ratio(1, 2), &ratio(-1, 10), &int(5)).unwrap();
        assert_eq!(s.to_string(), "(5-sqrt5)/10");
        assert!((s.to_f64() - 0.276_393_202_250_021).abs() < 1e-14);
        assert_eq!(s.conjugate().to_string(), "(5+sqrt5)/10");
    }

    #[test]
    fn extracts_square_factors() {
        let s = QuadraticSurd::from_sqrt_of(&int(0), &int(1), &ratio(20, 9)).unwrap();
        assert_eq!(s.d, BigInt::from(5));
        assert_eq!(s.b, ratio(2, 3));
        assert_eq!(s.to_string(), "2sqrt5/3");
        assert!(QuadraticSurd::from_sqrt_of(&int(0), &int(1), &ratio(4, 9)).is_none());
        assert!(QuadraticSurd::from_sqrt_of(&int(0), &int(1), &int(-3)).is_none());
    }
}
