//! Scalar step functions on a dyadic grid.
//!
//! A [`StepFunction`] holds one value per grid cell and represents the
//! function constant on each cell. Integrals over `[0,1)` are finite
//! sums weighted by the cell measure `2^{-q}`, so rational inputs give
//! exact rational integrals.

use crate::dyadic::DyadicGrid;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct StepFunction<T: Scalar> {
    grid: DyadicGrid,
    values: Vec<T>,
}

impl<T: Scalar> StepFunction<T> {
    pub fn new(grid: DyadicGrid, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.cells() {
            return Err(Error::DimensionMismatch {
                expected: grid.cells(),
                got: values.len(),
            });
        }
        Ok(StepFunction { grid, values })
    }

    pub fn constant(grid: DyadicGrid, value: T) -> Self {
        StepFunction {
            grid,
            values: vec![value; grid.cells()],
        }
    }

    pub fn zero(grid: DyadicGrid) -> Self {
        Self::constant(grid, T::zero())
    }

    /// Indicator of a single cell.
    pub fn indicator(grid: DyadicGrid, cell: usize) -> Result<Self> {
        grid.check_cell(cell)?;
        let mut f = Self::zero(grid);
        f.values[cell] = T::one();
        Ok(f)
    }

    pub fn grid(&self) -> DyadicGrid {
        self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [T] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn value(&self, cell: usize) -> &T {
        &self.values[cell]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Dyadic translation: `g(cell k) = f(cell k ⊕ t)`.
    ///
    /// Permutes the cell values, so every integral — in particular the
    /// mean and all norms — is preserved exactly.
    pub fn translate(&self, t: usize) -> Result<Self> {
        self.grid.check_cell(t)?;
        let values = (0..self.grid.cells())
            .map(|k| self.values[k ^ t].clone())
            .collect();
        Ok(StepFunction {
            grid: self.grid,
            values,
        })
    }

    /// `∫ f = 2^{-q} Σ_k f_k`.
    pub fn integral(&self) -> T {
        let sum = self.values.iter().fold(T::zero(), |acc, v| acc + v.clone());
        sum.div_pow2(self.grid.resolution())
    }

    /// `∫ |f|`, the L1 norm.
    pub fn l1_norm(&self) -> T {
        let sum = self.values.iter().fold(T::zero(), |acc, v| acc + v.abs());
        sum.div_pow2(self.grid.resolution())
    }

    /// `‖f‖_2² = ∫ f² = 2^{-q} Σ_k f_k²`, exact in rational mode.
    pub fn l2_norm_sq(&self) -> T {
        let sum = self
            .values
            .iter()
            .fold(T::zero(), |acc, v| acc + v.clone() * v.clone());
        sum.div_pow2(self.grid.resolution())
    }

    /// `⟨f,g⟩ = ∫ fg`.
    pub fn inner_product(&self, other: &Self) -> Result<T> {
        if self.grid != other.grid {
            return Err(Error::SpaceMismatch("inner product needs a common grid"));
        }
        let sum = self
            .values
            .iter()
            .zip(&other.values)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone());
        Ok(sum.div_pow2(self.grid.resolution()))
    }

    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::SpaceMismatch(
                "pointwise product needs a common grid",
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.clone() * b.clone())
            .collect();
        Ok(StepFunction {
            grid: self.grid,
            values,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::SpaceMismatch("sum needs a common grid"));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(StepFunction {
            grid: self.grid,
            values,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::SpaceMismatch("difference needs a common grid"));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(StepFunction {
            grid: self.grid,
            values,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        let values = self.values.iter().map(|v| v.clone() * c.clone()).collect();
        StepFunction {
            grid: self.grid,
            values,
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> StepFunction<U> {
        StepFunction {
            grid: self.grid,
            values: self.values.iter().map(f).collect(),
        }
    }
}

impl StepFunction<f64> {
    pub fn l2_norm(&self) -> f64 {
        self.l2_norm_sq().sqrt()
    }
}
