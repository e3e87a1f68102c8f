//! Exact scalar arithmetic: big rationals, cyclotomic fields, quaternions and
//! the real scalars that Gram entries live in.

mod cyclotomic;
mod quaternion;
mod rational;
mod real;
mod surd;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use quaternion::{QuatScalar, Quaternion};
pub use rational::{
    euler_phi, factorial, format_rational, int, parse_rational, pochhammer, ratio, rational_to_f64,
    Rational,
};
pub use real::{RealScalar, DEFAULT_TOL};
pub use surd::QuadraticSurd;

/// `zeta_order^power`.
pub fn cyclo_make(order: u64, power: i64) -> Cyclotomic {
    Cyclotomic::zeta_power(order, power)
}

pub fn cyclo_conj(z: &Cyclotomic) -> Cyclotomic {
    z.conj()
}

pub fn cyclo_abs2(z: &Cyclotomic) -> Cyclotomic {
    z.abs2()
}

pub fn cyclo_is_rational(z: &Cyclotomic) -> Option<Rational> {
    z.to_rational()
}
