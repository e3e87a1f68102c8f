//! Big rationals and the integer helpers built on them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rising factorial `(gamma)_i = gamma (gamma + 1) ... (gamma + i - 1)`.
///
/// `i = -1` is accepted and returns `1 / (gamma - 1)`, the value that makes
/// `(gamma - 1) (gamma)_{-1} = 1` hold.
pub fn pochhammer(gamma: &Rational, i: i64) -> Result<Rational> {
    match i {
        i if i < -1 => Err(Error::Domain(format!("pochhammer index {i} < -1"))),
        -1 => {
            let shifted = gamma - Rational::one();
            if shifted.is_zero() {
                Err(Error::DivisionByZero("pochhammer(1, -1)".into()))
            } else {
                Ok(shifted.recip())
            }
        }
        _ => Ok((0..i).fold(Rational::one(), |acc, l| acc * (gamma + int(l)))),
    }
}

pub fn factorial(i: u64) -> Rational {
    Rational::from_integer((1..=i).fold(BigInt::one(), |acc, l| acc * BigInt::from(l)))
}

/// Euler's totient through the prime factorisation `prod q^(v-1) (q - 1)`.
pub fn euler_phi(k: u64) -> u64 {
    assert!(k >= 1, "euler_phi is defined for k >= 1");
    let mut rest = k;
    let mut phi = 1;
    let mut q = 2;
    while q * q <= rest {
        if rest.is_multiple_of(q) {
            let mut power = 1;
            rest /= q;
            while rest.is_multiple_of(q) {
                rest /= q;
                power *= q;
            }
            phi *= power * (q - 1);
        }
        q += 1;
    }
    if rest > 1 {
        phi *= rest - 1;
    }
    phi
}

pub fn divisors(k: u64) -> Vec<u64> {
    (1..=k).filter(|d| k.is_multiple_of(*d)).collect()
}

/// Parses `"p"`, `"p/q"` or a plain decimal such as `"-0.125"` or `"1e-3"`
/// into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::parse(format!("\"{s}\""), "not a rational or decimal literal");
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::parse(format!("\"{s}\""), "zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let joined = format!("{whole}{frac}");
    let mut value = Rational::from_integer(joined.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac.len() as i64;
    let ten = BigInt::from(10);
    let power = Rational::from_integer(num_traits::pow(ten, scale.unsigned_abs() as usize));
    if scale >= 0 {
        value *= power;
    } else {
        value /= power;
    }
    Ok(if negative { -value } else { value })
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator and denominator may both overflow f64 individually
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Splits a positive integer into `(a, d)` with `n = a^2 d` and `d` squarefree.
pub(crate) fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut outside = BigInt::one();
    let mut q = BigInt::from(2);
    while &q * &q <= rest {
        let sq = &q * &q;
        while (&rest % &sq).is_zero() {
            rest /= &sq;
            outside *= &q;
        }
        q += 1;
    }
    (outside, rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(2), 3).unwrap(), int(24));
        assert_eq!(pochhammer(&ratio(7, 3), 0).unwrap(), int(1));
        assert_eq!(pochhammer(&int(5), -1).unwrap(), ratio(1, 4));
        assert_eq!(pochhammer(&ratio(1, 2), 2).unwrap(), ratio(3, 4));
    }

    #[test]
    fn pochhammer_minus_one_at_one_is_division_by_zero() {
        assert!(matches!(
            pochhammer(&int(1), -1),
            Err(Error::DivisionByZero(_))
        ));
        assert!(matches!(pochhammer(&int(1), -2), Err(Error::Domain(_))));
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(5), 4);
        assert_eq!(euler_phi(97), 96);
        assert_eq!(euler_phi(124), 60);
    }

    #[test]
    fn totient_matches_gcd_count() {
        for k in 1..200u64 {
            let count = (1..=k).filter(|j| num_integer::gcd(*j, k) == 1).count() as u64;
            assert_eq!(euler_phi(k), count, "k = {k}");
        }
    }

    #[test]
    fn parses_decimal_and_fraction_literals() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-0.125").unwrap(), ratio(-1, 8));
        assert_eq!(parse_rational("1e-3").unwrap(), ratio(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), int(250));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn square_part_splits() {
        let (a, d) = square_part(&BigInt::from(720));
        assert_eq!((a, d), (BigInt::from(12), BigInt::from(5)));
    }
}
