//! Finite-dimensional normed spaces and vector-valued step functions.
//!
//! Three norm families are supported: Euclidean, weighted `ℓ1` (with
//! weights `2^{-p}` this discretizes `L_1[0,1]`), and `ℓ∞`. A
//! [`VectorStepFunction`] is a step function with values in such a
//! space; its `L_2^X` norm is the `2^{-q}`-weighted quadratic mean of
//! the cell norms.

use crate::dyadic::DyadicGrid;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::step::StepFunction;
use crate::walsh;

/// Which norm a [`NormedSpace`] carries.
#[derive(Debug, Clone, PartialEq)]
pub enum NormKind<T: Scalar> {
    Euclidean,
    /// `‖x‖ = Σ w_i |x_i|` with strictly positive weights.
    L1Weighted(Vec<T>),
    LInf,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormedSpace<T: Scalar> {
    dim: usize,
    kind: NormKind<T>,
}

impl<T: Scalar> NormedSpace<T> {
    pub fn new(dim: usize, kind: NormKind<T>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        if let NormKind::L1Weighted(w) = &kind {
            if w.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: w.len(),
                });
            }
            if w.iter().any(|v| {
                v.partial_cmp(&T::zero()) != Some(std::cmp::Ordering::Greater)
                    || !v.to_f64().is_finite()
            }) {
                return Err(Error::SpaceMismatch(
                    "l1 weights must be positive and finite",
                ));
            }
        }
        Ok(NormedSpace { dim, kind })
    }

    pub fn euclidean(dim: usize) -> Self {
        NormedSpace {
            dim,
            kind: NormKind::Euclidean,
        }
    }

    pub fn l1_weighted(weights: Vec<T>) -> Result<Self> {
        let dim = weights.len();
        Self::new(dim, NormKind::L1Weighted(weights))
    }

    pub fn linf(dim: usize) -> Self {
        NormedSpace {
            dim,
            kind: NormKind::LInf,
        }
    }

    /// The discretization of `L_1[0,1]` at resolution `p`: dimension
    /// `2^p`, all weights `2^{-p}`.
    pub fn l1_discretized(p: u32) -> Self {
        let dim = 1usize << p;
        let w = T::one().div_pow2(p);
        NormedSpace {
            dim,
            kind: NormKind::L1Weighted(vec![w; dim]),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &NormKind<T> {
        &self.kind
    }

    pub fn is_euclidean(&self) -> bool {
        matches!(self.kind, NormKind::Euclidean)
    }

    fn check_dim(&self, x: &[T]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(())
    }

    /// Squared norm, exact in rational mode for every kind (the
    /// Euclidean square root is never taken here).
    pub fn norm_sq(&self, x: &[T]) -> Result<T> {
        self.check_dim(x)?;
        Ok(match &self.kind {
            NormKind::Euclidean => x
                .iter()
                .fold(T::zero(), |acc, v| acc + v.clone() * v.clone()),
            NormKind::L1Weighted(w) => {
                let s = x
                    .iter()
                    .zip(w)
                    .fold(T::zero(), |acc, (v, wi)| acc + wi.clone() * v.abs());
                s.clone() * s
            }
            NormKind::LInf => {
                let m = max_abs(x);
                m.clone() * m
            }
        })
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> NormedSpace<U> {
        let kind = match &self.kind {
            NormKind::Euclidean => NormKind::Euclidean,
            NormKind::L1Weighted(w) => NormKind::L1Weighted(w.iter().map(&f).collect()),
            NormKind::LInf => NormKind::LInf,
        };
        NormedSpace {
            dim: self.dim,
            kind,
        }
    }
}

fn max_abs<T: Scalar>(x: &[T]) -> T {
    x.iter()
        .map(|v| v.abs())
        .fold(T::zero(), |acc, v| if v > acc { v } else { acc })
}

impl NormedSpace<f64> {
    pub fn norm(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        Ok(match &self.kind {
            NormKind::Euclidean => x.iter().map(|v| v * v).sum::<f64>().sqrt(),
            NormKind::L1Weighted(w) => x.iter().zip(w).map(|(v, wi)| wi * v.abs()).sum(),
            NormKind::LInf => x.iter().fold(0.0f64, |acc, v| acc.max(v.abs())),
        })
    }

    /// Norm of a functional (coefficient vector) in the dual space.
    pub fn dual_norm(&self, psi: &[f64]) -> Result<f64> {
        self.check_dim(psi)?;
        Ok(match &self.kind {
            NormKind::Euclidean => psi.iter().map(|v| v * v).sum::<f64>().sqrt(),
            // (ℓ1_w)* = ℓ∞ with weights 1/w.
            NormKind::L1Weighted(w) => psi
                .iter()
                .zip(w)
                .fold(0.0f64, |acc, (v, wi)| acc.max(v.abs() / wi)),
            // (ℓ∞)* = ℓ1.
            NormKind::LInf => psi.iter().map(|v| v.abs()).sum(),
        })
    }

    /// A functional `u` with `⟨u, x⟩ = ‖x‖` and `‖u‖_* = 1` (for
    /// `x ≠ 0`): a supporting functional of the unit ball at `x`.
    pub fn norming_functional(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(x)?;
        Ok(match &self.kind {
            NormKind::Euclidean => {
                let n = self.norm(x)?;
                if n == 0.0 {
                    let mut u = vec![0.0; self.dim];
                    u[0] = 1.0;
                    u
                } else {
                    x.iter().map(|v| v / n).collect()
                }
            }
            NormKind::L1Weighted(w) => x
                .iter()
                .zip(w)
                .map(|(v, wi)| wi * if *v < 0.0 { -1.0 } else { 1.0 })
                .collect(),
            NormKind::LInf => {
                let mut j = 0;
                for (i, v) in x.iter().enumerate() {
                    if v.abs() > x[j].abs() {
                        j = i;
                    }
                }
                let mut u = vec![0.0; self.dim];
                u[j] = if x[j] < 0.0 { -1.0 } else { 1.0 };
                u
            }
        })
    }

    /// A unit vector `x̂` with `⟨ψ, x̂⟩ = ‖ψ‖_*`: the direction in the
    /// unit ball that a functional ψ norms. Ties break at the smallest
    /// index, keeping search paths deterministic.
    pub fn norming_vector(&self, psi: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(psi)?;
        Ok(match &self.kind {
            NormKind::Euclidean => {
                let n = self.norm(psi)?;
                if n == 0.0 {
                    let mut x = vec![0.0; self.dim];
                    x[0] = 1.0;
                    x
                } else {
                    psi.iter().map(|v| v / n).collect()
                }
            }
            // Extreme points of the weighted-ℓ1 ball are ±e_j / w_j.
            NormKind::L1Weighted(w) => {
                let mut j = 0;
                let mut best = f64::NEG_INFINITY;
                for i in 0..self.dim {
                    let score = psi[i].abs() / w[i];
                    if score > best {
                        best = score;
                        j = i;
                    }
                }
                let mut x = vec![0.0; self.dim];
                x[j] = (if psi[j] < 0.0 { -1.0 } else { 1.0 }) / w[j];
                x
            }
            NormKind::LInf => psi
                .iter()
                .map(|v| if *v < 0.0 { -1.0 } else { 1.0 })
                .collect(),
        })
    }
}

/// A step function with values in a normed space: `2^q` points of `X`,
/// stored cell-major.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorStepFunction<T: Scalar> {
    grid: DyadicGrid,
    space: NormedSpace<T>,
    values: Vec<T>,
}

impl<T: Scalar> VectorStepFunction<T> {
    pub fn new(grid: DyadicGrid, space: NormedSpace<T>, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.cells() * space.dim() {
            return Err(Error::DimensionMismatch {
                expected: grid.cells() * space.dim(),
                got: values.len(),
            });
        }
        Ok(VectorStepFunction {
            grid,
            space,
            values,
        })
    }

    pub fn zero(grid: DyadicGrid, space: NormedSpace<T>) -> Self {
        let values = vec![T::zero(); grid.cells() * space.dim()];
        VectorStepFunction {
            grid,
            space,
            values,
        }
    }

    /// Constant function `f ≡ x`.
    pub fn constant(grid: DyadicGrid, space: NormedSpace<T>, x: &[T]) -> Result<Self> {
        if x.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                got: x.len(),
            });
        }
        let mut values = Vec::with_capacity(grid.cells() * space.dim());
        for _ in 0..grid.cells() {
            values.extend_from_slice(x);
        }
        Ok(VectorStepFunction {
            grid,
            space,
            values,
        })
    }

    /// Lift a scalar step function into a one-dimensional space.
    pub fn from_scalar(f: &StepFunction<T>, space: NormedSpace<T>) -> Result<Self> {
        if space.dim() != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: space.dim(),
            });
        }
        Ok(VectorStepFunction {
            grid: f.grid(),
            space,
            values: f.values().to_vec(),
        })
    }

    pub fn grid(&self) -> DyadicGrid {
        self.grid
    }

    pub fn space(&self) -> &NormedSpace<T> {
        &self.space
    }

    pub fn cell(&self, k: usize) -> &[T] {
        let d = self.space.dim();
        &self.values[k * d..(k + 1) * d]
    }

    pub fn cell_mut(&mut self, k: usize) -> &mut [T] {
        let d = self.space.dim();
        &mut self.values[k * d..(k + 1) * d]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// One coordinate as a scalar step function.
    pub fn coordinate(&self, j: usize) -> Result<StepFunction<T>> {
        if j >= self.space.dim() {
            return Err(Error::IndexOutOfRange {
                what: "coordinate",
                index: j,
                limit: self.space.dim(),
            });
        }
        let d = self.space.dim();
        let values = (0..self.grid.cells())
            .map(|k| self.values[k * d + j].clone())
            .collect();
        StepFunction::new(self.grid, values)
    }

    /// Rebuild from per-coordinate scalar functions.
    pub fn from_coordinates(
        grid: DyadicGrid,
        space: NormedSpace<T>,
        coords: &[StepFunction<T>],
    ) -> Result<Self> {
        if coords.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                got: coords.len(),
            });
        }
        let d = space.dim();
        let mut values = vec![T::zero(); grid.cells() * d];
        for (j, c) in coords.iter().enumerate() {
            if c.grid() != grid {
                return Err(Error::SpaceMismatch("coordinate grids differ"));
            }
            for k in 0..grid.cells() {
                values[k * d + j] = c.value(k).clone();
            }
        }
        Ok(VectorStepFunction {
            grid,
            space,
            values,
        })
    }

    /// Apply a scalar operation coordinatewise.
    pub fn map_coordinates(
        &self,
        op: impl Fn(&StepFunction<T>) -> crate::error::Result<StepFunction<T>>,
    ) -> Result<Self> {
        let coords: Result<Vec<_>> = (0..self.space.dim())
            .map(|j| op(&self.coordinate(j)?))
            .collect();
        Self::from_coordinates(self.grid, self.space.clone(), &coords?)
    }

    /// Coordinatewise partial sum `S_n`.
    pub fn partial_sum(&self, n: usize) -> Result<Self> {
        self.map_coordinates(|c| walsh::partial_sum(c, n))
    }

    /// Coordinatewise conditional expectation at level `i`.
    pub fn conditional_expectation(&self, i: u32) -> Result<Self> {
        self.map_coordinates(|c| walsh::conditional_expectation(c, i))
    }

    /// Pointwise multiplication by a scalar step function (each cell's
    /// vector scaled by the scalar value on that cell).
    pub fn scalar_mul(&self, s: &StepFunction<T>) -> Result<Self> {
        if s.grid() != self.grid {
            return Err(Error::SpaceMismatch("scalar multiplier grid differs"));
        }
        let d = self.space.dim();
        let mut out = self.clone();
        for k in 0..self.grid.cells() {
            let c = s.value(k).clone();
            for v in &mut out.values[k * d..(k + 1) * d] {
                *v = v.clone() * c.clone();
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &T) -> Self {
        let values = self.values.iter().map(|v| v.clone() * c.clone()).collect();
        VectorStepFunction {
            grid: self.grid,
            space: self.space.clone(),
            values,
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(T, T) -> T) -> Result<Self> {
        if self.grid != other.grid || self.space != other.space {
            return Err(Error::SpaceMismatch(
                "vector step functions live on different spaces",
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| op(a.clone(), b.clone()))
            .collect();
        Ok(VectorStepFunction {
            grid: self.grid,
            space: self.space.clone(),
            values,
        })
    }

    /// Re-express the function on a finer grid by replicating cell
    /// values; all norms and Walsh coefficients up to the original
    /// resolution are unchanged.
    pub fn refine(&self, to: DyadicGrid) -> Result<Self> {
        if to.resolution() < self.grid.resolution() {
            return Err(Error::LevelOutOfRange {
                level: to.resolution() as usize,
                resolution: self.grid.resolution(),
            });
        }
        let copies = 1usize << (to.resolution() - self.grid.resolution());
        let d = self.space.dim();
        let mut values = Vec::with_capacity(to.cells() * d);
        for k in 0..self.grid.cells() {
            for _ in 0..copies {
                values.extend_from_slice(self.cell(k));
            }
        }
        VectorStepFunction::new(to, self.space.clone(), values)
    }

    /// `‖f‖_2² = 2^{-q} Σ_k ‖f(cell k)‖_X²`, exact in rational mode.
    pub fn l2x_norm_sq(&self) -> T {
        let mut acc = T::zero();
        for k in 0..self.grid.cells() {
            acc = acc
                + self
                    .space
                    .norm_sq(self.cell(k))
                    .expect("cell dims consistent");
        }
        acc.div_pow2(self.grid.resolution())
    }

    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> VectorStepFunction<U> {
        VectorStepFunction {
            grid: self.grid,
            space: self.space.map(&f),
            values: self.values.iter().map(&f).collect(),
        }
    }
}

impl VectorStepFunction<f64> {
    /// `‖f‖_2` in `L_2^X`.
    pub fn l2x_norm(&self) -> f64 {
        self.l2x_norm_sq().sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    #[test]
    fn vector_norm_examples() {
        let e2 = NormedSpace::<f64>::euclidean(2);
        assert_eq!(e2.norm(&[3.0, 4.0]).unwrap(), 5.0);
        let l1 = NormedSpace::l1_weighted(vec![0.25; 4]).unwrap();
        assert_eq!(l1.norm(&[1.0, 1.0, 1.0, 1.0]).unwrap(), 1.0);
        let li = NormedSpace::<f64>::linf(2);
        assert_eq!(li.norm(&[-2.0, 1.0]).unwrap(), 2.0);
        assert!(e2.norm(&[1.0]).is_err());
    }

    #[test]
    fn weights_must_be_positive() {
        assert!(NormedSpace::l1_weighted(vec![0.5, 0.0]).is_err());
        assert!(NormedSpace::l1_weighted(vec![0.5, -1.0]).is_err());
        assert!(NormedSpace::l1_weighted(vec![0.5, f64::INFINITY]).is_err());
    }

    #[test]
    fn l2x_norm_examples() {
        let grid = DyadicGrid::new(2).unwrap();
        // Constant function: ‖f‖₂ = ‖x‖.
        let e2 = NormedSpace::<f64>::euclidean(2);
        let f = VectorStepFunction::constant(grid, e2.clone(), &[3.0, 4.0]).unwrap();
        assert!((f.l2x_norm() - 5.0).abs() < 1e-15);
        // Indicator-like: one cell holding e_1.
        let mut g = VectorStepFunction::zero(grid, e2);
        g.cell_mut(0)[0] = 1.0;
        assert!((g.l2x_norm() - 0.5).abs() < 1e-15);
        // Scalar case reduces to the step-function norm.
        let sf = StepFunction::new(grid, vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)]).unwrap();
        let lifted = VectorStepFunction::from_scalar(&sf, NormedSpace::euclidean(1)).unwrap();
        assert_eq!(lifted.l2x_norm_sq(), sf.l2_norm_sq());
    }

    #[test]
    fn norming_pairs_certify_duality() {
        let spaces = [
            NormedSpace::<f64>::euclidean(3),
            NormedSpace::l1_weighted(vec![0.5, 0.25, 1.0]).unwrap(),
            NormedSpace::<f64>::linf(3),
        ];
        let x = [1.5, -2.0, 0.25];
        for space in &spaces {
            let u = space.norming_functional(&x).unwrap();
            let dot: f64 = u.iter().zip(&x).map(|(a, b)| a * b).sum();
            assert!((dot - space.norm(&x).unwrap()).abs() < 1e-12);
            assert!((space.dual_norm(&u).unwrap() - 1.0).abs() < 1e-12);

            let xhat = space.norming_vector(&x).unwrap();
            let dot2: f64 = x.iter().zip(&xhat).map(|(a, b)| a * b).sum();
            assert!((dot2 - space.dual_norm(&x).unwrap()).abs() < 1e-12);
            assert!((space.norm(&xhat).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn norms_are_homogeneous_and_subadditive(
            xs in prop::collection::vec(-10.0f64..10.0, 3),
            ys in prop::collection::vec(-10.0f64..10.0, 3),
            c in -4.0f64..4.0,
        ) {
            let spaces = [
                NormedSpace::<f64>::euclidean(3),
                NormedSpace::l1_weighted(vec![0.5, 0.25, 1.0]).unwrap(),
                NormedSpace::<f64>::linf(3),
            ];
            for space in &spaces {
                let nx = space.norm(&xs).unwrap();
                let scaled: Vec<f64> = xs.iter().map(|v| c * v).collect();
                prop_assert!((space.norm(&scaled).unwrap() - c.abs() * nx).abs() < 1e-9);
                let sum: Vec<f64> = xs.iter().zip(&ys).map(|(a, b)| a + b).collect();
                prop_assert!(space.norm(&sum).unwrap() <= nx + space.norm(&ys).unwrap() + 1e-9);
            }
        }
    }
}
