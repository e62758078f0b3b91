//! Exact dyadic arithmetic: grids, cell indexing, the dyadic sum `⊕`,
//! and binary decomposition of indices.
//!
//! A grid of resolution `q` partitions `[0, 1)` into `2^q` half-open
//! cells; cell `k` is `[k·2^{-q}, (k+1)·2^{-q})`, indexed from 0.
//! Every point is represented by the cell containing it, so each cell
//! has exactly one finite binary expansion and all arithmetic is
//! exact.

use crate::error::{Error, Result};

/// A dyadic grid of resolution `q`: the partition of `[0,1)` into
/// `2^q` equal half-open cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyadicGrid {
    q: u32,
}

impl DyadicGrid {
    /// Grid with `2^q` cells. Resolutions above 24 are rejected as a
    /// memory guard.
    pub fn new(q: u32) -> Result<Self> {
        if q > 24 {
            return Err(Error::IndexOutOfRange {
                what: "resolution q",
                index: q as usize,
                limit: 24,
            });
        }
        Ok(DyadicGrid { q })
    }

    pub fn resolution(&self) -> u32 {
        self.q
    }

    /// Number of cells, `2^q`.
    pub fn cells(&self) -> usize {
        1usize << self.q
    }

    pub fn check_cell(&self, k: usize) -> Result<()> {
        if k < self.cells() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                what: "cell",
                index: k,
                limit: self.cells(),
            })
        }
    }

    /// Dyadic sum of two cells: digitwise addition mod 2 of the binary
    /// expansions, i.e. exclusive-or of the cell indices.
    ///
    /// `⊕` makes the cells of the grid a group in which every element
    /// is its own inverse.
    pub fn dyadic_add(&self, j: usize, k: usize) -> Result<usize> {
        self.check_cell(j)?;
        self.check_cell(k)?;
        Ok(j ^ k)
    }

}

/// The strictly ascending exponents `k_1 < k_2 < … < k_s` with
/// `n = Σ 2^{k_l}`; empty exactly when `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryDecomposition {
    exponents: Vec<u32>,
}

impl BinaryDecomposition {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Highest exponent `k_s`, if any.
    pub fn top(&self) -> Option<u32> {
        self.exponents.last().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Reassemble the integer `Σ 2^{k_l}`.
    pub fn reconstruct(&self) -> u64 {
        self.exponents.iter().map(|&e| 1u64 << e).sum()
    }
}

/// Binary decomposition of `n`: the ascending list of exponents of the
/// set bits.
pub fn bit_decompose(n: u64) -> BinaryDecomposition {
    let mut exponents = Vec::with_capacity(n.count_ones() as usize);
    let mut rest = n;
    while rest != 0 {
        let e = rest.trailing_zeros();
        exponents.push(e);
        rest &= rest - 1;
    }
    BinaryDecomposition { exponents }
}

/// Reverse the low `q` bits of `n`.
///
/// Connects the Paley enumeration of Walsh functions to the natural
/// (Hadamard) one: the Paley index is the bit-reversal of the natural
/// index within `q` bits.
pub fn bit_reverse(n: usize, q: u32) -> usize {
    let mut out = 0usize;
    for i in 0..q {
        if n & (1 << i) != 0 {
            out |= 1 << (q - 1 - i);
        }
    }
    out
}

/// Binary-reflected Gray code, mapping a sequency index to its Paley
/// index.
pub fn gray(n: usize) -> usize {
    n ^ (n >> 1)
}

/// Inverse Gray code (prefix xor), mapping a Paley index to its
/// sequency index.
pub fn gray_inverse(mut n: usize) -> usize {
    let mut shift = 1;
    while shift < usize::BITS {
        n ^= n >> shift;
        shift <<= 1;
    }
    n
}
