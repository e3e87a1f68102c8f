use std::fmt;

use rayon::prelude::*;

use super::coords::{inner, norm2, Coordinate};
use super::pointset::PointSet;
use crate::error::{Error, Result};
use crate::exactnum::{RealScalar, DEFAULT_TOL};
use crate::matrix::Matrix;
use crate::with_points;

/// Pairwise projective inner products `(x, y) = |a^* b|^2 / (a^* a  b^* b)`.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    entries: Matrix,
}

impl GramMatrix {
    /// Wraps a precomputed matrix, checking symmetry, the unit diagonal and
    /// that entries lie in `[0, 1]`.
    pub fn from_matrix(entries: Matrix, tol: f64) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::Precondition("Gram matrix must be square".into()));
        }
        let n = entries.rows();
        for i in 0..n {
            if !entries[(i, i)].approx_eq(&RealScalar::one(), tol) {
                return Err(Error::Precondition(format!(
                    "Gram diagonal entry {i} is not 1"
                )));
            }
            for j in 0..i {
                if !entries[(i, j)].approx_eq(&entries[(j, i)], tol) {
                    return Err(Error::Precondition(format!(
                        "Gram matrix not symmetric at ({i}, {j})"
                    )));
                }
                let v = entries[(i, j)].to_f64();
                if !(-tol..=1.0 + tol).contains(&v) {
                    return Err(Error::Precondition(format!(
                        "Gram entry ({i}, {j}) = {v} outside [0, 1]"
                    )));
                }
            }
        }
        Ok(GramMatrix { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &RealScalar {
        &self.entries[(i, j)]
    }

    pub fn row(&self, i: usize) -> &[RealScalar] {
        self.entries.row(i)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn is_exact(&self) -> bool {
        self.entries.is_exact()
    }

    pub fn to_float(&self) -> GramMatrix {
        GramMatrix {
            entries: self.entries.to_float(),
        }
    }
}

/// Gram matrix of a point set, with duplicates detected at the default
/// tolerance for float backends.
pub fn gram(ps: &PointSet) -> Result<GramMatrix> {
    gram_with_tol(ps, DEFAULT_TOL)
}

pub fn gram_with_tol(ps: &PointSet, tol: f64) -> Result<GramMatrix> {
    let entries = with_points!(ps.points(), p => gram_entries(p))?;
    let g = GramMatrix { entries };
    if let Some((first, second)) = find_duplicate(&g, tol) {
        return Err(Error::DuplicatePoint { first, second });
    }
    Ok(g)
}

fn gram_entries<C: Coordinate>(rows: &[Vec<C>]) -> Result<Matrix> {
    let inv_norms: Vec<RealScalar> = rows
        .par_iter()
        .enumerate()
        .map(|(index, a)| norm2(a).recip().map_err(|_| Error::ZeroPoint { index }))
        .collect::<Result<_>>()?;
    let n = rows.len();
    let upper: Vec<Vec<RealScalar>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i + 1..n)
                .map(|j| {
                    let ab = inner(&rows[i], &rows[j]).abs2();
                    &(&ab * &inv_norms[i]) * &inv_norms[j]
                })
                .collect()
        })
        .collect();
    let one = if inv_norms[0].is_exact() {
        RealScalar::one()
    } else {
        RealScalar::Float(1.0)
    };
    Ok(Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => one.clone(),
        std::cmp::Ordering::Less => upper[i][j - i - 1].clone(),
        std::cmp::Ordering::Greater => upper[j][i - j - 1].clone(),
    }))
}

fn find_duplicate(g: &GramMatrix, tol: f64) -> Option<(usize, usize)> {
    let one = RealScalar::one();
    (0..g.size())
        .flat_map(|i| (i + 1..g.size()).map(move |j| (i, j)))
        .find(|&(i, j)| g.get(i, j).approx_eq(&one, tol))
}

/// The distinct off-diagonal Gram values and the counts derived from them.
#[derive(Clone, Debug)]
pub struct AngleSet {
    /// Ascending.
    pub values: Vec<RealScalar>,
    /// `|A(X)|`
    pub s: usize,
    /// `|A(X) \ {0}|`
    pub e: usize,
    /// `s - e`
    pub eps: usize,
}

impl AngleSet {
    pub fn contains_zero(&self) -> bool {
        self.eps == 1
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(RealScalar::to_f64).collect()
    }
}

impl fmt::Display for AngleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", vals.join(", "))
    }
}

/// Distinct off-diagonal values of `g`: exact entries are deduplicated by
/// canonical equality, float entries are clustered within `tol`.
pub fn angle_set(g: &GramMatrix, tol: f64) -> Result<AngleSet> {
    let n = g.size();
    let one = RealScalar::one();
    let mut values: Vec<RealScalar> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = g.get(i, j);
            if v.approx_eq(&one, tol) {
                return Err(Error::DuplicatePoint {
                    first: i,
                    second: j,
                });
            }
            if !values.iter().any(|w| w.approx_eq(v, tol)) {
                values.push(v.clone());
            }
        }
    }
    values.sort_by(|a, b| a.cmp_value(b));
    if !g.is_exact() {
        // merge any chain of floats that drifted together after sorting
        values.dedup_by(|b, a| (a.to_f64() - b.to_f64()).abs() <= tol);
    }
    let s = values.len();
    let eps = values.iter().filter(|v| v.is_zero(tol)).count();
    Ok(AngleSet {
        values,
        s,
        e: s - eps,
        eps,
    })
}
