use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::exactnum::{format_rational, rational_to_f64, Rational, RealScalar};

/// Which variable a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    /// `tau` on `[-1, 1]`
    Tau,
    /// `xi = (1 + tau) / 2` on `[0, 1]`
    Xi,
}

/// Dense polynomial with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
    var: Variable,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>, var: Variable) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        RationalPolynomial { coeffs, var }
    }

    pub fn constant(c: Rational, var: Variable) -> Self {
        Self::new(vec![c], var)
    }

    /// The identity polynomial `x`.
    pub fn x(var: Variable) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], var)
    }

    pub fn monomial(k: usize, var: Variable) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Self::new(coeffs, var)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rational_to_f64(c))
    }

    /// Horner evaluation at an exact or float real scalar.
    pub fn eval_real(&self, x: &RealScalar) -> RealScalar {
        let mut coeffs = self.coeffs.iter().rev();
        let lead = coeffs.next().expect("polynomial has a coefficient");
        coeffs.fold(x.like(lead), |acc, c| &(&acc * x) + &x.like(c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.var)
    }

    /// `p(a x + b)`, relabelled to the variable `var`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational, var: Variable) -> Self {
        let inner = Self::new(vec![b.clone(), a.clone()], var);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::constant(Rational::zero(), var), |acc, c| {
                &(&acc * &inner) + &Self::constant(c.clone(), var)
            })
    }
}

impl<'a> Add<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        debug_assert_eq!(self.var, rhs.var);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let a = self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero);
                let b = rhs.coeffs.get(k).cloned().unwrap_or_else(Rational::zero);
                a + b
            })
            .collect();
        RationalPolynomial::new(coeffs, self.var)
    }
}

impl<'a> Sub<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        self + &rhs.scale(&-Rational::one())
    }
}

impl<'a> Mul<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        debug_assert_eq!(self.var, rhs.var);
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out, self.var)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.var {
            Variable::Tau => "tau",
            Variable::Xi => "xi",
        };
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            let coeff = format_rational(c);
            let term = match k {
                0 => coeff,
                1 => format!("{coeff}*{name}"),
                _ => format!("{coeff}*{name}^{k}"),
            };
            terms.push(term);
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, ratio};

    #[test]
    fn arithmetic_and_composition() {
        let x = RationalPolynomial::x(Variable::Tau);
        let p = &(&x * &x) - &RationalPolynomial::constant(int(1), Variable::Tau);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.eval(&int(3)), int(8));
        // p(2 xi - 1) = 4 xi^2 - 4 xi
        let q = p.compose_affine(&int(2), &int(-1), Variable::Xi);
        assert_eq!(q.coeffs(), &[int(0), int(-4), int(4)]);
        assert_eq!(q.var(), Variable::Xi);
        assert_eq!(q.to_string(), "4*xi^2 - 4*xi");
        assert!((q.eval_f64(0.25) + 0.75).abs() < 1e-15);
        assert_eq!(
            q.eval_real(&RealScalar::from_rational(&ratio(1, 4)))
                .to_rational(),
            Some(ratio(-3, 4))
        );
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = RationalPolynomial::new(vec![int(1), int(0), int(0)], Variable::Xi);
        assert_eq!(p.degree(), 0);
        let z = RationalPolynomial::new(vec![], Variable::Xi);
        assert!(z.is_zero());
    }
}
