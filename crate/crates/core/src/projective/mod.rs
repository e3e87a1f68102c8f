//! Points of `FP^n`, their Gram matrices and angle sets, and design files.

mod coords;
mod gram;
mod io;
mod pointset;

pub use coords::{inner, norm2, Coordinate};
pub use gram::{angle_set, gram, gram_with_tol, AngleSet, GramMatrix};
pub use io::{design_from_json, design_to_json, load_design, save_design};
pub use pointset::{orthonormal_basis, Backend, PointSet, Points};
