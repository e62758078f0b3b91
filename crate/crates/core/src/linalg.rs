//! Small dense matrices and a Jacobi eigensolver.
//!
//! Everything at desk scale: operators between spaces of dimension a
//! few hundred at most. The Jacobi iteration is chosen over power
//! methods because its convergence does not depend on spectral gaps,
//! which keeps the certified norm comparisons honest at 1e-9.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// `Aᵀ x`, without materializing the transpose.
    pub fn apply_transpose(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: x.len(),
            });
        }
        let mut out = vec![T::zero(); self.cols];
        for (row, xr) in x.iter().enumerate() {
            for (o, a) in out.iter_mut().zip(self.row(row)) {
                *o = o.clone() + a.clone() * xr.clone();
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&f).collect(),
        }
    }
}

impl Mat<f64> {
    /// Gram matrix `AᵀA`.
    pub fn gram(&self) -> Mat<f64> {
        let n = self.cols;
        let mut g = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = 0.0;
                for r in 0..self.rows {
                    acc += self.at(r, i) * self.at(r, j);
                }
                *g.at_mut(i, j) = acc;
                *g.at_mut(j, i) = acc;
            }
        }
        g
    }
}

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi
/// rotations. Returns the eigenvalues (unsorted) and the matrix whose
/// columns are the corresponding eigenvectors.
pub fn jacobi_symmetric_eigen(a: &Mat<f64>) -> Result<(Vec<f64>, Mat<f64>)> {
    if a.rows != a.cols {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            got: a.cols,
        });
    }
    let n = a.rows;
    let mut m = a.clone();
    let mut v = Mat::identity(n);
    if n <= 1 {
        return Ok((m.data.clone(), v));
    }
    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += m.at(p, q) * m.at(p, q);
            }
        }
        let scale: f64 = (0..n)
            .map(|i| m.at(i, i).abs())
            .fold(0.0, f64::max)
            .max(1e-300);
        if off.sqrt() <= 1e-15 * scale * n as f64 {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = *m.at(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = *m.at(p, p);
                let aqq = *m.at(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Rotate rows and columns p, q of m.
                for k in 0..n {
                    let mkp = *m.at(k, p);
                    let mkq = *m.at(k, q);
                    *m.at_mut(k, p) = c * mkp - s * mkq;
                    *m.at_mut(k, q) = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = *m.at(p, k);
                    let mqk = *m.at(q, k);
                    *m.at_mut(p, k) = c * mpk - s * mqk;
                    *m.at_mut(q, k) = s * mpk + c * mqk;
                }
                // Accumulate the eigenvector rotation.
                for k in 0..n {
                    let vkp = *v.at(k, p);
                    let vkq = *v.at(k, q);
                    *v.at_mut(k, p) = c * vkp - s * vkq;
                    *v.at_mut(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    let eigenvalues = (0..n).map(|i| *m.at(i, i)).collect();
    Ok((eigenvalues, v))
}

/// Largest singular value of a matrix with a maximizing unit vector of
/// the domain (a top right singular vector).
pub fn spectral_norm(a: &Mat<f64>) -> Result<(f64, Vec<f64>)> {
    let (eigenvalues, vectors) = jacobi_symmetric_eigen(&a.gram())?;
    let mut best = 0usize;
    for (i, lambda) in eigenvalues.iter().enumerate() {
        if *lambda > eigenvalues[best] {
            best = i;
        }
    }
    let sigma = eigenvalues[best].max(0.0).sqrt();
    let mut x: Vec<f64> = (0..a.cols).map(|r| *vectors.at(r, best)).collect();
    let len = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if len > 0.0 {
        for v in &mut x {
            *v /= len;
        }
    }
    Ok((sigma, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: usize, cols: usize, vals: &[f64]) -> Mat<f64> {
        Mat::new(rows, cols, vals.to_vec()).unwrap()
    }

    #[test]
    fn apply_and_transpose() {
        let a = mat(2, 3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert_eq!(a.apply(&[1.0, 0.0, -1.0]).unwrap(), vec![-2.0, -2.0]);
        assert_eq!(a.apply_transpose(&[1.0, 1.0]).unwrap(), vec![5.0, 7.0, 9.0]);
        assert!(a.apply(&[1.0, 2.0]).is_err());
    }

    #[test]
    fn jacobi_diagonalizes() {
        // Symmetric matrix with known spectrum {3, 1}.
        let a = mat(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        let (mut ev, _) = jacobi_symmetric_eigen(&a).unwrap();
        ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert!((ev[0] - 1.0).abs() < 1e-12);
        assert!((ev[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn spectral_norm_diagonal() {
        let a = mat(2, 2, &[2.0, 0.0, 0.0, 1.0]);
        let (sigma, x) = spectral_norm(&a).unwrap();
        assert!((sigma - 2.0).abs() < 1e-12);
        // Witness reproduces the norm.
        let y = a.apply(&x).unwrap();
        let ny = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!((ny - sigma).abs() < 1e-12);
    }

    #[test]
    fn spectral_norm_rectangular() {
        // Rank-one 3x2: norm is the Euclidean length of the generator.
        let a = mat(3, 2, &[1.0, 2.0, 2.0, 4.0, 2.0, 4.0]);
        let (sigma, _) = spectral_norm(&a).unwrap();
        let expected = (1.0f64 + 4.0 + 4.0 + 16.0 + 4.0 + 16.0).sqrt();
        assert!((sigma - expected).abs() < 1e-12);
    }

    #[test]
    fn jacobi_handles_repeated_eigenvalues() {
        let a = mat(3, 3, &[5.0, 0.0, 0.0, 0.0, 5.0, 0.0, 0.0, 0.0, 5.0]);
        let (ev, _) = jacobi_symmetric_eigen(&a).unwrap();
        for lambda in ev {
            assert!((lambda - 5.0).abs() < 1e-14);
        }
    }
}
