use num_complex::Complex64;

use super::coords::Coordinate;
use crate::error::{Error, Result};
use crate::exactnum::{rational_to_f64, Cyclotomic, Quaternion, Rational};
use crate::jacobi::Field;

/// Homogeneous coordinates of every point, in one scalar backend.
#[derive(Clone, Debug, PartialEq)]
pub enum Points {
    /// Exact `R` or `C` coordinates in a cyclotomic field (rationals included).
    Cyclotomic(Vec<Vec<Cyclotomic>>),
    /// Exact `H` coordinates with rational components.
    Quaternion(Vec<Vec<Quaternion<Rational>>>),
    /// Float `R` or `C` coordinates.
    FloatComplex(Vec<Vec<Complex64>>),
    /// Float `H` coordinates.
    FloatQuaternion(Vec<Vec<Quaternion<f64>>>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

/// Applies a generic expression to whichever coordinate vector a
/// [`Points`] holds.
#[macro_export]
#[doc(hidden)]
macro_rules! with_points {
    ($points:expr, $p:ident => $body:expr) => {
        match $points {
            $crate::projective::Points::Cyclotomic($p) => $body,
            $crate::projective::Points::Quaternion($p) => $body,
            $crate::projective::Points::FloatComplex($p) => $body,
            $crate::projective::Points::FloatQuaternion($p) => $body,
        }
    };
}

/// A finite set of points in `FP^n`, given by unnormalised homogeneous
/// coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    field: Field,
    n: u32,
    points: Points,
}

impl PointSet {
    /// Validates coordinate lengths, nonzero rows and that the backend fits
    /// the field. Projective duplicates are detected later, by the Gram
    /// matrix.
    pub fn new(field: Field, n: u32, points: Points) -> Result<Self> {
        let dim = n as usize + 1;
        let len = with_points!(&points, p => p.len());
        if len == 0 {
            return Err(Error::Precondition("point set is empty".into()));
        }
        with_points!(&points, p => check_rows(p, dim))?;
        match (&points, field) {
            (Points::Quaternion(_) | Points::FloatQuaternion(_), Field::H) => {}
            (Points::Quaternion(_) | Points::FloatQuaternion(_), _) => {
                return Err(Error::Precondition(format!(
                    "quaternion coordinates need field H, got {field}"
                )))
            }
            (_, Field::H) => {
                return Err(Error::Precondition(
                    "field H needs quaternion coordinates".into(),
                ))
            }
            (Points::Cyclotomic(rows), Field::R) => {
                for (index, row) in rows.iter().enumerate() {
                    if !row.iter().all(Cyclotomic::is_real) {
                        return Err(Error::InvalidPoint {
                            index,
                            reason: "non-real coordinate in RP^n".into(),
                        });
                    }
                }
            }
            (Points::FloatComplex(rows), Field::R) => {
                for (index, row) in rows.iter().enumerate() {
                    if row.iter().any(|z| z.im != 0.0) {
                        return Err(Error::InvalidPoint {
                            index,
                            reason: "non-real coordinate in RP^n".into(),
                        });
                    }
                }
            }
            _ => {}
        }
        Ok(PointSet { field, n, points })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        with_points!(&self.points, p => p.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> &Points {
        &self.points
    }

    pub fn backend(&self) -> Backend {
        match self.points {
            Points::Cyclotomic(_) | Points::Quaternion(_) => Backend::Exact,
            Points::FloatComplex(_) | Points::FloatQuaternion(_) => Backend::Float,
        }
    }

    /// Same points with `f64` coordinates.
    pub fn to_float(&self) -> PointSet {
        let points = match &self.points {
            Points::Cyclotomic(rows) => Points::FloatComplex(
                rows.iter()
                    .map(|r| r.iter().map(Cyclotomic::to_complex).collect())
                    .collect(),
            ),
            Points::Quaternion(rows) => Points::FloatQuaternion(
                rows.iter()
                    .map(|r| r.iter().map(|q| q.map(rational_to_f64)).collect())
                    .collect(),
            ),
            other => other.clone(),
        };
        let mut out = PointSet {
            field: self.field,
            n: self.n,
            points,
        };
        // principal embeddings of real cyclotomics can pick up -0.0 or tiny
        // imaginary parts from cos/sin evaluation
        if let (Field::R, Points::FloatComplex(rows)) = (self.field, &mut out.points) {
            for z in rows.iter_mut().flatten() {
                z.im = 0.0;
            }
        }
        out
    }

    /// The subset with point `index` removed.
    pub fn without(&self, index: usize) -> Result<PointSet> {
        fn drop<T: Clone>(rows: &[T], index: usize) -> Vec<T> {
            rows.iter()
                .enumerate()
                .filter(|(k, _)| *k != index)
                .map(|(_, r)| r.clone())
                .collect()
        }
        let points = match &self.points {
            Points::Cyclotomic(p) => Points::Cyclotomic(drop(p, index)),
            Points::Quaternion(p) => Points::Quaternion(drop(p, index)),
            Points::FloatComplex(p) => Points::FloatComplex(drop(p, index)),
            Points::FloatQuaternion(p) => Points::FloatQuaternion(drop(p, index)),
        };
        PointSet::new(self.field, self.n, points)
    }
}

fn check_rows<C: Coordinate>(rows: &[Vec<C>], dim: usize) -> Result<()> {
    for (index, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::InvalidPoint {
                index,
                reason: format!("expected {dim} coordinates, found {}", row.len()),
            });
        }
        if row.iter().all(Coordinate::is_zero) {
            return Err(Error::ZeroPoint { index });
        }
    }
    Ok(())
}

/// The standard basis of `F^(n+1)`, as exact points.
pub fn orthonormal_basis(field: Field, n: u32) -> PointSet {
    let dim = n as usize + 1;
    let points = match field {
        Field::H => Points::Quaternion(
            (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| Quaternion::real(Rational::from_integer(((i == j) as i64).into())))
                        .collect()
                })
                .collect(),
        ),
        _ => Points::Cyclotomic(
            (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| Cyclotomic::from_integer((i == j) as i64))
                        .collect()
                })
                .collect(),
        ),
    };
    PointSet::new(field, n, points).expect("standard basis is valid")
}
