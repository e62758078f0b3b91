//! Dirichlet kernels for the Walsh system, their product
//! factorization, kernel-form partial sums, and Lebesgue constants as
//! exact rationals.
//!
//! `D_n = Σ_{i<n} w_i` is integer-valued on every grid that resolves
//! it, and `∫ D_n = 1` because only the `w_0` term survives
//! integration. The factorization
//! `D_n = w_n Σ_{i ∈ bits(n)} (D_{2^{i+1}} - D_{2^i})` is checked
//! cell-for-cell against the defining sum in exact integer arithmetic;
//! the two routes never share intermediate results.

use crate::dyadic::{bit_decompose, DyadicGrid};
use crate::error::{Error, Result};
use crate::scalar::{rat, Rat, Scalar};
use crate::step::StepFunction;
use crate::walsh::walsh_signs;

/// The `n`-th Dirichlet kernel on a grid, `1 ≤ n ≤ 2^q`, stored as
/// exact integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletKernel {
    n: usize,
    grid: DyadicGrid,
    values: Vec<i64>,
}

impl DirichletKernel {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn grid(&self) -> DyadicGrid {
        self.grid
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `∫ D_n` as an exact rational; equals 1 for every order.
    pub fn integral(&self) -> Rat {
        let sum: i64 = self.values.iter().sum();
        rat(sum, 1 << self.grid.resolution())
    }

    /// `∫ |D_n|`, the Lebesgue constant `L_n`.
    pub fn l1_norm(&self) -> Rat {
        let sum: i64 = self.values.iter().map(|v| v.abs()).sum();
        rat(sum, 1 << self.grid.resolution())
    }

    pub fn to_step<T: Scalar>(&self) -> StepFunction<T> {
        StepFunction::new(
            self.grid,
            self.values.iter().map(|&v| T::from_int(v)).collect(),
        )
        .expect("length matches grid")
    }
}

fn check_order(n: usize, grid: DyadicGrid, strict: bool) -> Result<()> {
    // The factored form needs w_n on the grid, so it caps at 2^q - 1.
    let max = if strict {
        grid.cells() - 1
    } else {
        grid.cells()
    };
    if n == 0 || n > max {
        return Err(Error::IndexOutOfRange {
            what: "kernel order",
            index: n,
            limit: max + 1,
        });
    }
    Ok(())
}

/// `D_n = Σ_{i<n} w_i` by direct summation of Walsh rows.
pub fn dirichlet(n: usize, grid: DyadicGrid) -> Result<DirichletKernel> {
    check_order(n, grid, false)?;
    let mut values = vec![0i64; grid.cells()];
    for i in 0..n {
        for (v, &s) in values.iter_mut().zip(walsh_signs(i, grid)?.iter()) {
            *v += s as i64;
        }
    }
    Ok(DirichletKernel { n, grid, values })
}

/// The power-of-two kernels `D_{2^0}, …, D_{2^q}` of one grid,
/// precomputed in a single `O(4^q)` pass for repeated factorizations.
#[derive(Debug, Clone)]
pub struct DirichletPowers {
    grid: DyadicGrid,
    snapshots: Vec<Vec<i64>>,
}

impl DirichletPowers {
    pub fn new(grid: DyadicGrid) -> Self {
        let q = grid.resolution();
        let mut snapshots = Vec::with_capacity(q as usize + 1);
        let mut acc = vec![0i64; grid.cells()];
        let mut next_power = 1usize;
        for i in 0..grid.cells() {
            let signs = walsh_signs(i, grid).expect("index below 2^q");
            for (v, &s) in acc.iter_mut().zip(signs.iter()) {
                *v += s as i64;
            }
            if i + 1 == next_power {
                snapshots.push(acc.clone());
                next_power <<= 1;
            }
        }
        debug_assert_eq!(snapshots.len(), q as usize + 1);
        DirichletPowers { grid, snapshots }
    }

    pub fn grid(&self) -> DyadicGrid {
        self.grid
    }

    /// `D_{2^j}` for `0 ≤ j ≤ q`.
    pub fn power(&self, j: u32) -> &[i64] {
        &self.snapshots[j as usize]
    }
}

/// `D_n` assembled from the factorization
/// `w_n Σ_{i ∈ bits(n)} (D_{2^{i+1}} - D_{2^i})`, `1 ≤ n < 2^q`.
///
/// Agrees cell-for-cell with [`dirichlet`]; the equality is the
/// executable form of the kernel factorization lemma and is enforced
/// exhaustively in the acceptance suite.
pub fn dirichlet_factored(n: usize, grid: DyadicGrid) -> Result<DirichletKernel> {
    dirichlet_factored_with(&DirichletPowers::new(grid), n)
}

/// Factorized kernel using precomputed power-of-two snapshots.
pub fn dirichlet_factored_with(powers: &DirichletPowers, n: usize) -> Result<DirichletKernel> {
    let grid = powers.grid;
    check_order(n, grid, true)?;
    let mut sum = vec![0i64; grid.cells()];
    for &i in bit_decompose(n as u64).exponents() {
        let hi = powers.power(i + 1);
        let lo = powers.power(i);
        for (acc, (a, b)) in sum.iter_mut().zip(hi.iter().zip(lo.iter())) {
            *acc += a - b;
        }
    }
    let wn = walsh_signs(n, grid)?;
    let values = sum
        .iter()
        .zip(wn.iter())
        .map(|(&v, &s)| v * s as i64)
        .collect();
    Ok(DirichletKernel { n, grid, values })
}

/// Partial sum in kernel form: `S_n(f)(t) = ∫ f(s) D_n(s ⊕ t) ds`.
///
/// The `O(4^q)` convolution against the kernel; serves as the
/// independent oracle for the transform-based partial sum.
pub fn kernel_partial_sum<T: Scalar>(f: &StepFunction<T>, n: usize) -> Result<StepFunction<T>> {
    let grid = f.grid();
    check_order(n, grid, false)?;
    let kernel = dirichlet(n, grid)?;
    let q = grid.resolution();
    let mut values = Vec::with_capacity(grid.cells());
    for t in 0..grid.cells() {
        let mut acc = T::zero();
        for s in 0..grid.cells() {
            acc = acc + f.value(s).clone() * T::from_int(kernel.values[s ^ t]);
        }
        values.push(acc.div_pow2(q));
    }
    StepFunction::new(grid, values)
}

/// The Lebesgue constant `L_n = ∫ |D_n|` as an exact rational with
/// denominator dividing `2^q`.
///
/// `D_n` is constant on the cells of the minimal grid resolving it, so
/// the value does not depend on which admissible grid is used.
pub fn lebesgue_constant(n: usize, grid: DyadicGrid) -> Result<Rat> {
    Ok(dirichlet(n, grid)?.l1_norm())
}

/// All Lebesgue constants `L_1, …, L_{2^q}` of one grid with their
/// running maximum, built incrementally (`D_{n+1} = D_n + w_n`) in
/// `O(4^q)` total.
#[derive(Debug, Clone)]
pub struct LebesgueTable {
    grid: DyadicGrid,
    entries: Vec<Rat>,
    running_max: Vec<Rat>,
    argmax: usize,
}

impl LebesgueTable {
    pub fn new(grid: DyadicGrid) -> Self {
        let cells = grid.cells();
        let denom = 1i64 << grid.resolution();
        let mut kernel = vec![0i64; cells];
        let mut entries = Vec::with_capacity(cells);
        let mut running_max = Vec::with_capacity(cells);
        let mut best: i64 = 0;
        let mut argmax = 1usize;
        for n in 1..=cells {
            let signs = walsh_signs(n - 1, grid).expect("index below 2^q");
            for (v, &s) in kernel.iter_mut().zip(signs.iter()) {
                *v += s as i64;
            }
            let abs_sum: i64 = kernel.iter().map(|v| v.abs()).sum();
            // ∫ D_n = 1 forces L_n ≥ 1.
            assert!(abs_sum >= denom, "Lebesgue constant below 1 at n={n}");
            if abs_sum > best {
                best = abs_sum;
                argmax = n;
            }
            entries.push(rat(abs_sum, denom));
            running_max.push(rat(best, denom));
        }
        LebesgueTable {
            grid,
            entries,
            running_max,
            argmax,
        }
    }

    pub fn grid(&self) -> DyadicGrid {
        self.grid
    }

    /// `L_n`, `1 ≤ n ≤ 2^q`.
    pub fn constant(&self, n: usize) -> &Rat {
        &self.entries[n - 1]
    }

    /// `L^max_n = max_{k ≤ n} L_k`.
    pub fn running_max(&self, n: usize) -> &Rat {
        &self.running_max[n - 1]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The maximal constant over the whole table and the smallest
    /// maximizing order.
    pub fn max(&self) -> (Rat, usize) {
        (
            self.running_max[self.entries.len() - 1].clone(),
            self.argmax,
        )
    }
}

/// `L^max_{2^p}` with its smallest maximizing order, computed exactly
/// at the minimal resolution `q = p`.
///
/// Asserts the two-sided estimate `p/8 ≤ L^max_{2^p} ≤ p`; a violation
/// would falsify the kernel machinery, not the inputs.
pub fn lebesgue_max(p: u32) -> Result<(Rat, usize)> {
    if p == 0 {
        return Err(Error::IndexOutOfRange {
            what: "depth p",
            index: 0,
            limit: 25,
        });
    }
    let grid = DyadicGrid::new(p)?;
    let (value, argmax) = LebesgueTable::new(grid).max();
    let lower = rat(p as i64, 8);
    let upper = rat(p as i64, 1);
    assert!(
        lower <= value && value <= upper,
        "sandwich p/8 <= Lmax <= p failed at p={p}: {value}"
    );
    Ok((value, argmax))
}
