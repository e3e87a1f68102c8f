//! Dense square-or-rectangular matrices over [`RealScalar`], with exact
//! Gaussian elimination and a symmetric-eigenvalue rank for floats.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::exactnum::{Rational, RealScalar};

/// Relative eigenvalue threshold for the float rank.
pub const FLOAT_RANK_REL_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RealScalar>,
}

impl Matrix {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> RealScalar + Sync,
    ) -> Self {
        let data = (0..rows * cols)
            .into_par_iter()
            .map(|k| f(k / cols, k % cols))
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<RealScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![RealScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| RealScalar::from_integer((i == j) as i64))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_exact(&self) -> bool {
        self.data.iter().all(RealScalar::is_exact)
    }

    /// All entries, row-major.
    pub fn entries(&self) -> &[RealScalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[RealScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map(&self, f: impl Fn(&RealScalar) -> RealScalar + Sync + Send) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.par_iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &RealScalar) -> Self {
        self.map(|x| x * c)
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.map(|x| x * &x.like(c))
    }

    pub fn to_float(&self) -> Self {
        self.map(RealScalar::to_float)
    }

    pub fn trace(&self) -> RealScalar {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(RealScalar::zero(), |a, b| a + b)
    }

    /// Sum of all entries.
    pub fn sum(&self) -> RealScalar {
        self.data.iter().fold(RealScalar::zero(), |a, b| &a + b)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// First `(i, j)` where the entries differ (exactly, or beyond `tol` when
    /// either is a float).
    pub fn first_mismatch(&self, other: &Self, tol: f64) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (0..self.data.len())
            .find(|&k| !self.data[k].approx_eq(&other.data[k], tol))
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.first_mismatch(other, tol).is_none()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.data.iter().all(|x| x.is_zero(tol))
    }

    /// Largest absolute entry difference, in `f64`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).to_f64().abs())
            .fold(0.0, f64::max)
    }

    pub fn to_nalgebra(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].to_f64())
    }

    /// Eigenvalues of the symmetric part, ascending.
    pub fn symmetric_eigenvalues(&self) -> Vec<f64> {
        assert!(self.is_square(), "eigenvalues of a non-square matrix");
        let m = self.to_nalgebra();
        let sym = (&m + m.transpose()) * 0.5;
        let mut ev: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// Exact rank by Gaussian elimination with full pivoting when every entry
    /// is exact; otherwise the number of symmetric eigenvalues above
    /// `1e-8` times the spectral radius (singular values for non-square
    /// matrices).
    pub fn rank(&self) -> usize {
        if self.is_exact() {
            self.exact_rank()
        } else {
            self.float_rank()
        }
    }

    fn exact_rank(&self) -> usize {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut rank = 0;
        while rank < rows.min(cols) {
            let pivot = (rank..rows)
                .flat_map(|i| (rank..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_zero(0.0));
            let Some((pi, pj)) = pivot else { break };
            a.swap_rows(rank, pi);
            a.swap_cols(rank, pj);
            let inv = a[(rank, rank)].recip().expect("pivot is nonzero");
            let pivot_row: Vec<RealScalar> = a.row(rank).to_vec();
            let r = rank;
            let tail: Vec<Vec<RealScalar>> = (r + 1..rows)
                .into_par_iter()
                .map(|i| {
                    let f = &a[(i, r)] * &inv;
                    (0..cols)
                        .map(|j| {
                            if j <= r || f.is_zero(0.0) {
                                if j == r {
                                    RealScalar::zero()
                                } else {
                                    a[(i, j)].clone()
                                }
                            } else {
                                &a[(i, j)] - &(&f * &pivot_row[j])
                            }
                        })
                        .collect()
                })
                .collect();
            for (offset, row) in tail.into_iter().enumerate() {
                let i = r + 1 + offset;
                a.data[i * cols..(i + 1) * cols].clone_from_slice(&row);
            }
            rank += 1;
        }
        rank
    }

    fn float_rank(&self) -> usize {
        if !self.is_square() {
            let sv = self.to_nalgebra().singular_values();
            let top = sv.iter().copied().fold(0.0, f64::max);
            return sv.iter().filter(|x| **x > FLOAT_RANK_REL_TOL * top).count();
        }
        let ev = self.symmetric_eigenvalues();
        let radius = ev.iter().map(|x| x.abs()).fold(0.0, f64::max);
        if radius == 0.0 {
            return 0;
        }
        ev.iter()
            .filter(|x| x.abs() > FLOAT_RANK_REL_TOL * radius)
            .count()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = RealScalar;
    fn index(&self, (i, j): (usize, usize)) -> &RealScalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RealScalar {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not chain");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            // fixed summation order keeps float results reproducible
            (0..self.cols).fold(RealScalar::zero(), |acc, k| {
                &acc + &(&self[(i, k)] * &rhs[(k, j)])
            })
        })
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
