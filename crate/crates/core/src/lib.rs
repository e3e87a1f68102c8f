//! Exact construction, verification and analysis of projective t-designs in
//! `FP^n` for `F` in {R, C, H}.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactnum`]: rationals, cyclotomic fields, quaternions, real scalars.
//! - [`jacobi`]: design parameters, Jacobi polynomials, weight moments,
//!   closed-form idempotent ranks and the cardinality bound.
//! - [`projective`]: point sets, Gram matrices, angle sets, design files.
//! - [`designs`]: t-design verification, tightness certificates and the
//!   built-in constructions.
//! - [`bma`]: the Bose-Mesner algebra of a design and its idempotents.
//! - [`census`]: rank-comparison sweeps and the `RP^1` rationality table.
//! - [`report`]: text, JSON and CSV renderings used by the command line.

pub mod bma;
pub mod census;
pub mod designs;
pub mod error;
pub mod exactnum;
pub mod jacobi;
pub mod matrix;
pub mod projective;
pub mod report;

pub use error::{Error, Result};
