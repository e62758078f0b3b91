//! The translation embedding of scalar functions into `L_2^{L_1}`.
//!
//! A scalar step function `f` at resolution `p` becomes the
//! vector-valued `F(t) := f(t ⊕ ·)` with values in the discretized
//! `L_1[0,1]` (dimension `2^p`, weights `2^{-p}`). Three identities
//! hold exactly and are enforced in the suites:
//!
//! - coefficients: `⟨F, w_j⟩ = ⟨f, w_j⟩ · w_j` as an element of the
//!   target space,
//! - isometry: `‖F‖_2 = ‖f‖_1`,
//! - partial sums: `‖S_n F‖_2 = ‖S_n f‖_1`.
//!
//! Embedding the indicator of `[0, 2^{-p})` turns the Lebesgue
//! constant into a norm quotient: the resulting `F` certifies
//! `δ(L_1 | W_n, W_n) ≥ L_n`, which together with the universal kernel
//! bound `δ ≤ L_n` pins the value exactly.

use crate::dyadic::DyadicGrid;
use crate::error::{Error, Result};
use crate::scalar::{Rat, Scalar};
use crate::spaces::{NormKind, NormedSpace, VectorStepFunction};
use crate::step::StepFunction;

/// `F(t) := f(t ⊕ ·)` over the discretized `L_1` of the same
/// resolution.
pub fn embed<S: Scalar>(f: &StepFunction<S>) -> Result<VectorStepFunction<S>> {
    let grid = f.grid();
    let p = grid.resolution();
    let dim = grid.cells();
    let space = NormedSpace::<S>::l1_discretized(p);
    let mut values = Vec::with_capacity(dim * dim);
    for t in 0..dim {
        for s in 0..dim {
            values.push(f.value(t ^ s).clone());
        }
    }
    VectorStepFunction::new(grid, space, values)
}

/// The embedded indicator of `[0, 2^{-p})` together with the exact
/// quotient `‖S_n F‖_2 / ‖F‖_2`, which equals the Lebesgue constant
/// `L_n`.
///
/// Both norms are constant over cells for this witness (a translation
/// argument), which the construction asserts; the quotient is then a
/// ratio of two cell norms and stays rational.
pub fn corollary_witness(p: u32, n: usize) -> Result<(VectorStepFunction<Rat>, Rat)> {
    let grid = DyadicGrid::new(p)?;
    if n == 0 || n >= grid.cells() {
        return Err(Error::IndexOutOfRange {
            what: "partial-sum order",
            index: n,
            limit: grid.cells(),
        });
    }
    let f: StepFunction<Rat> = StepFunction::indicator(grid, 0)?;
    let embedded = embed(&f)?;
    let truncated = embedded.partial_sum(n)?;

    let cell_l1 = |g: &VectorStepFunction<Rat>, k: usize| -> Rat {
        let w = Rat::one().div_pow2(p);
        g.cell(k)
            .iter()
            .fold(Rat::zero(), |acc, v| acc + w.clone() * v.abs())
    };
    let denom = cell_l1(&embedded, 0);
    let numer = cell_l1(&truncated, 0);
    for k in 1..grid.cells() {
        assert_eq!(
            cell_l1(&embedded, k),
            denom,
            "witness cell norms must be constant"
        );
        assert_eq!(
            cell_l1(&truncated, k),
            numer,
            "truncated cell norms must be constant"
        );
    }
    Ok((embedded, numer / denom))
}

/// Exact δ-witness for operators whose domain discretizes `L_1`: the
/// embedded indicator, refined to the working grid.
///
/// Returns `None` when the domain is not a uniform-weight `ℓ1` space
/// of dyadic dimension, when the grid cannot hold the witness, or when
/// `n` is out of the certified range.
pub fn l1_delta_seed(
    domain: &NormedSpace<f64>,
    grid: DyadicGrid,
    n: usize,
) -> Option<VectorStepFunction<f64>> {
    let p = uniform_l1_resolution(domain)?;
    if grid.resolution() < p || n == 0 || n >= (1usize << p) {
        return None;
    }
    let (witness, _) = corollary_witness(p, n).ok()?;
    let refined = witness.refine(grid).ok()?;
    Some(refined.map_scalar(|v| v.to_f64()))
}

/// Resolution `p` when the space is `ℓ1` with `2^p` coordinates all
/// weighted `2^{-p}`.
pub fn uniform_l1_resolution(space: &NormedSpace<f64>) -> Option<u32> {
    let NormKind::L1Weighted(w) = space.kind() else {
        return None;
    };
    if !space.dim().is_power_of_two() {
        return None;
    }
    let p = space.dim().trailing_zeros();
    let expected = 1.0 / space.dim() as f64;
    let uniform = w.iter().all(|wi| (wi - expected).abs() <= 1e-12 * expected);
    uniform.then_some(p)
}
