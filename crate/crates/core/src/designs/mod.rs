//! Design verification, tightness certificates and the built-in
//! constructions.

mod construct;
mod verify;

pub use construct::{construct_cp1_5design, construct_rp1_polygon, rp1_rational};
pub use verify::{
    averaging_check, averaging_check_with_tol, is_t_design, is_t_design_with_tol, tightness,
    tightness_with_tol, DegreeResidual, DesignVerdict, TightnessCertificate, FLOAT_DESIGN_TOL,
};
