use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{int, ratio, Rational};

/// The division algebra the projective space is built over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    R,
    C,
    H,
}

impl Field {
    pub const ALL: [Field; 3] = [Field::R, Field::C, Field::H];

    /// Half the real dimension of `F`: 1/2, 1, 2.
    pub fn m(self) -> Rational {
        match self {
            Field::R => ratio(1, 2),
            Field::C => int(1),
            Field::H => int(2),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Field::R => "R",
            Field::C => "C",
            Field::H => "H",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(Field::R),
            "C" => Ok(Field::C),
            "H" => Ok(Field::H),
            other => Err(Error::parse(
                format!("\"{other}\""),
                "field must be one of R, C, H",
            )),
        }
    }
}

/// Parameters of a t-design in `FP^n` and every quantity derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignParams {
    pub field: Field,
    pub n: u32,
    pub t: u32,
    /// `(F:R)/2`
    pub m: Rational,
    /// `m (n + 1)`, half the real dimension of `F^(n+1)`.
    pub big_n: Rational,
    /// `N - m - 1`
    pub alpha: Rational,
    /// `m - 1`
    pub beta: Rational,
    /// `floor((t + 1) / 2)`
    pub s: u32,
    /// `floor(t / 2)`
    pub e: u32,
    /// `t mod 2`
    pub eps: u32,
}

impl DesignParams {
    pub fn new(field: Field, n: u32, t: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("projective dimension n must be >= 1".into()));
        }
        if t == 0 {
            return Err(Error::Domain("design strength t must be >= 1".into()));
        }
        let m = field.m();
        let big_n = &m * int(n as i64 + 1);
        let alpha = &big_n - &m - int(1);
        let beta = &m - int(1);
        Ok(DesignParams {
            field,
            n,
            t,
            m,
            big_n,
            alpha,
            beta,
            s: t.div_ceil(2),
            e: t / 2,
            eps: t % 2,
        })
    }

    /// Same space, different strength.
    pub fn with_t(&self, t: u32) -> Result<Self> {
        DesignParams::new(self.field, self.n, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_symbols() {
        let p = DesignParams::new(Field::C, 1, 5).unwrap();
        assert_eq!((p.s, p.e, p.eps), (3, 2, 1));
        assert_eq!(p.big_n, int(2));
        assert_eq!((p.alpha.clone(), p.beta.clone()), (int(0), int(0)));

        let r = DesignParams::new(Field::R, 1, 4).unwrap();
        assert_eq!(
            (r.alpha.clone(), r.beta.clone()),
            (ratio(-1, 2), ratio(-1, 2))
        );
        assert_eq!((r.s, r.e, r.eps), (2, 2, 0));

        let h = DesignParams::new(Field::H, 3, 2).unwrap();
        assert_eq!(h.big_n, int(8));
        assert_eq!(h.alpha, int(5));
        assert_eq!(h.beta, int(1));
    }

    #[test]
    fn invariants_hold_over_a_grid() {
        for field in Field::ALL {
            for n in 1..6 {
                for t in 1..12 {
                    let p = DesignParams::new(field, n, t).unwrap();
                    assert_eq!(p.t, 2 * p.e + p.eps);
                    assert_eq!(p.s, p.e + p.eps);
                    assert!(p.alpha >= ratio(-1, 2) && p.beta >= ratio(-1, 2));
                    assert_eq!(&p.big_n - &p.m, &p.m * int(n as i64));
                }
            }
        }
    }

    #[test]
    fn rejects_degenerate_input() {
        assert!(DesignParams::new(Field::R, 0, 3).is_err());
        assert!(DesignParams::new(Field::R, 2, 0).is_err());
        assert!("Q".parse::<Field>().is_err());
        assert_eq!("H".parse::<Field>().unwrap(), Field::H);
    }
}
