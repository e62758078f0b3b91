//! Walsh analysis on dyadic grids.
//!
//! Everything here lives on the partition of `[0,1)` into `2^q` equal
//! cells: Walsh and Haar systems in Paley enumeration, fast
//! Walsh–Hadamard transforms, Dirichlet kernels and their
//! factorization, Lebesgue constants as exact rationals, dyadic
//! martingales and martingale transforms, and certified interval
//! estimates for the partial-sum ideal norm `δ(T | W_n, W_n)` and the
//! martingale-transform norm `μ_p(T)`, linked by the two-sided
//! sandwich `δ^max ≤ μ_p ≤ 2 δ^max`.
//!
//! Two arithmetic modes coexist: exact rationals ([`scalar::Rat`]) for
//! everything the identities promise exactly, and `f64` for norm
//! maximization. The mode is a type parameter, so the two cannot be
//! mixed by accident.
//!
//! The narrative guide lives under `book/`; its code blocks are
//! compiled and run as part of `cargo test` (see the `book` module
//! below), so the prose cannot drift from the library.

pub mod dyadic;
pub mod embedding;
pub mod error;
pub mod kernels;
pub mod linalg;
pub mod martingale;
pub mod norms;
pub mod scalar;
pub mod spaces;
pub mod step;
pub mod verify;
pub mod walsh;

/// Default seed for every randomized search; ASCII `walsh`.
pub const DEFAULT_SEED: u64 = 0x77616c7368;

pub use dyadic::{bit_decompose, BinaryDecomposition, DyadicGrid};
pub use error::{Error, Result};
pub use scalar::{rat, Rat, Scalar};
pub use step::StepFunction;
pub use walsh::{conditional_expectation, fwht, ifwht, partial_sum, WalshCoefficients};

// Run every code block of the guide as a doctest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/dyadic.md")]
    mod dyadic {}
    #[doc = include_str!("../../../book/src/walsh.md")]
    mod walsh {}
    #[doc = include_str!("../../../book/src/kernels.md")]
    mod kernels {}
    #[doc = include_str!("../../../book/src/norms.md")]
    mod norms {}
    #[doc = include_str!("../../../book/src/martingales.md")]
    mod martingales {}
    #[doc = include_str!("../../../book/src/embedding.md")]
    mod embedding {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
