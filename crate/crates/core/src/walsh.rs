//! The Walsh system in Paley enumeration, the Haar system, fast
//! transforms, partial sums and conditional expectations.
//!
//! Enumeration is fixed to Paley order throughout the crate: `w_n` is
//! the product of the Rademacher functions selected by the binary
//! digits of `n`. Natural (Hadamard) and sequency orders exist only as
//! index permutations at the CLI layer; none of the identities here
//! depend on them.
//!
//! Convention, pinned once: on a grid of resolution `q`, the
//! Rademacher function `r_i` (1 ≤ i ≤ q) on cell `k` reads bit
//! `q - i` of `k`, the bit that decides which half of the scale-`i`
//! subdivision the cell falls in. All Walsh values follow from this
//! single choice.

use crate::dyadic::{bit_reverse, DyadicGrid};
use crate::error::{Error, Result};
use crate::scalar::{Rat, Scalar};
use crate::step::StepFunction;

/// `r_i` evaluated on one cell: `+1` on the left half of each scale-`i`
/// subdivision, `-1` on the right.
///
/// Requires `1 ≤ i ≤ q`; above the resolution the function is not
/// constant on cells.
pub fn rademacher(i: u32, cell: usize, grid: DyadicGrid) -> Result<i8> {
    let q = grid.resolution();
    if i == 0 || i > q {
        return Err(Error::LevelOutOfRange {
            level: i as usize,
            resolution: q,
        });
    }
    grid.check_cell(cell)?;
    Ok(if cell & (1 << (q - i)) == 0 { 1 } else { -1 })
}

/// The signs of `w_n` on every cell of the grid.
///
/// `w_n(cell k) = (-1)^{popcount(n & rev_q(k))}`: the Paley product of
/// Rademacher functions collapses to a parity of masked bits.
pub fn walsh_signs(n: usize, grid: DyadicGrid) -> Result<Vec<i8>> {
    if n >= grid.cells() {
        return Err(Error::IndexOutOfRange {
            what: "Walsh index",
            index: n,
            limit: grid.cells(),
        });
    }
    let q = grid.resolution();
    let mask = bit_reverse(n, q);
    Ok((0..grid.cells())
        .map(|k| {
            if (k & mask).count_ones().is_multiple_of(2) {
                1
            } else {
                -1
            }
        })
        .collect())
}

/// `w_n` as a step function in the chosen arithmetic mode.
pub fn walsh_eval<T: Scalar>(n: usize, grid: DyadicGrid) -> Result<StepFunction<T>> {
    let signs = walsh_signs(n, grid)?;
    let values = signs.iter().map(|&s| T::from_int(s as i64)).collect();
    StepFunction::new(grid, values)
}

/// The Haar function `h_j` in float mode.
///
/// `h_0 ≡ 1`; for `j = 2^{p-1} + m` the function is `+2^{(p-1)/2}` on
/// the left half of the `m`-th dyadic interval of order `p-1`,
/// `-2^{(p-1)/2}` on the right half, and `0` elsewhere.
pub fn haar_eval(j: usize, grid: DyadicGrid) -> Result<StepFunction<f64>> {
    let (pattern, scale_log2) = haar_scaled(j, grid)?;
    let scale = 2f64.powf(scale_log2 as f64 / 2.0);
    Ok(pattern.map(|v| v.to_f64() * scale))
}

/// `h_j` in exact scaled form: a `{-1, 0, +1}`-valued pattern and the
/// exponent `e` with `h_j = pattern · 2^{e/2}` (`e = p - 1`).
///
/// Keeps Haar inner products exact: `⟨h_i, h_j⟩` is the rational
/// `⟨pat_i, pat_j⟩` times `2^{(e_i + e_j)/2}`, so orthonormality
/// reduces to rational identities.
pub fn haar_scaled(j: usize, grid: DyadicGrid) -> Result<(StepFunction<Rat>, u32)> {
    if j >= grid.cells() {
        return Err(Error::IndexOutOfRange {
            what: "Haar index",
            index: j,
            limit: grid.cells(),
        });
    }
    let q = grid.resolution();
    if j == 0 {
        return Ok((StepFunction::constant(grid, Rat::one()), 0));
    }
    let p = usize::BITS - j.leading_zeros(); // j in [2^{p-1}, 2^p)
    let m = j - (1usize << (p - 1));
    let block = 1usize << (q - p); // cells per order-p interval
    let start = 2 * m * block;
    let mut values = vec![Rat::zero(); grid.cells()];
    for v in values.iter_mut().skip(start).take(block) {
        *v = Rat::one();
    }
    for v in values.iter_mut().skip(start + block).take(block) {
        *v = -Rat::one();
    }
    Ok((StepFunction::new(grid, values)?, p - 1))
}

/// Walsh coefficients of a step function: `coeff[i] = ⟨f, w_i⟩` in
/// Paley order.
#[derive(Debug, Clone, PartialEq)]
pub struct WalshCoefficients<T: Scalar> {
    grid: DyadicGrid,
    coeffs: Vec<T>,
}

impl<T: Scalar> WalshCoefficients<T> {
    pub fn new(grid: DyadicGrid, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != grid.cells() {
            return Err(Error::DimensionMismatch {
                expected: grid.cells(),
                got: coeffs.len(),
            });
        }
        Ok(WalshCoefficients { grid, coeffs })
    }

    pub fn grid(&self) -> DyadicGrid {
        self.grid
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [T] {
        &mut self.coeffs
    }

    /// `Σ_i coeff[i]²`; equals `‖f‖_2²` by Parseval.
    pub fn energy(&self) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, c| acc + c.clone() * c.clone())
    }
}

/// In-place butterfly computing the natural-order (Hadamard) transform
/// `v[m] ← Σ_k (-1)^{popcount(m & k)} v[k]`. Self-inverse up to the
/// factor `2^q`.
fn butterfly<T: Scalar>(v: &mut [T]) {
    let n = v.len();
    let mut h = 1;
    while h < n {
        let mut base = 0;
        while base < n {
            for j in base..base + h {
                let a = v[j].clone();
                let b = v[j + h].clone();
                v[j] = a.clone() + b.clone();
                v[j + h] = a - b;
            }
            base += 2 * h;
        }
        h *= 2;
    }
}

/// Fast Walsh–Hadamard transform: all `2^q` Paley-order coefficients
/// `⟨f, w_i⟩` in `O(2^q · q)` operations, exact in rational mode.
pub fn fwht<T: Scalar>(f: &StepFunction<T>) -> WalshCoefficients<T> {
    let grid = f.grid();
    let q = grid.resolution();
    let mut work = f.values().to_vec();
    butterfly(&mut work);
    let coeffs = (0..grid.cells())
        .map(|n| work[bit_reverse(n, q)].div_pow2(q))
        .collect();
    WalshCoefficients { grid, coeffs }
}

/// Inverse transform: reassemble `f = Σ_i coeff[i] · w_i`. Exact
/// inverse of [`fwht`] in rational mode.
pub fn ifwht<T: Scalar>(c: &WalshCoefficients<T>) -> StepFunction<T> {
    let grid = c.grid;
    let q = grid.resolution();
    let mut work: Vec<T> = (0..grid.cells())
        .map(|m| c.coeffs[bit_reverse(m, q)].clone())
        .collect();
    butterfly(&mut work);
    StepFunction::new(grid, work).expect("length preserved")
}

/// The `n`-th partial sum `S_n(f) = Σ_{i<n} ⟨f, w_i⟩ w_i`.
///
/// `S_0 = 0` by the empty-sum convention and `S_{2^q} = f` exactly.
/// Truncation beyond the resolution is rejected rather than silently
/// clamped.
pub fn partial_sum<T: Scalar>(f: &StepFunction<T>, n: usize) -> Result<StepFunction<T>> {
    let cells = f.grid().cells();
    if n > cells {
        return Err(Error::IndexOutOfRange {
            what: "partial-sum order",
            index: n,
            limit: cells + 1,
        });
    }
    let mut c = fwht(f);
    for coeff in c.coeffs_mut().iter_mut().skip(n) {
        *coeff = T::zero();
    }
    Ok(ifwht(&c))
}

/// Conditional expectation onto the dyadic filtration at level `i`:
/// the block average over each interval of order `i`.
///
/// Equals `partial_sum(f, 2^i)` exactly — the first `2^i` Walsh and
/// Haar functions span the same space; the identity is a standing
/// cross-check in the test suites.
pub fn conditional_expectation<T: Scalar>(f: &StepFunction<T>, i: u32) -> Result<StepFunction<T>> {
    let q = f.grid().resolution();
    if i > q {
        return Err(Error::LevelOutOfRange {
            level: i as usize,
            resolution: q,
        });
    }
    let block = 1usize << (q - i);
    let mut values = Vec::with_capacity(f.grid().cells());
    for chunk in f.values().chunks(block) {
        let avg = chunk
            .iter()
            .fold(T::zero(), |acc, v| acc + v.clone())
            .div_pow2(q - i);
        for _ in 0..block {
            values.push(avg.clone());
        }
    }
    StepFunction::new(f.grid(), values)
}
