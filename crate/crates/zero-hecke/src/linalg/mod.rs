//! Arbitrary-precision rational vectors, matrices, and subspaces.
//!
//! All elimination is fraction-free: rows are scaled to integers and pivoted
//! with exact division, with a single rational normalization at the end. No
//! floating point anywhere.

mod matrix;
mod subspace;

use num_bigint::BigInt;
use num_rational::Ratio;

/// Exact rational scalar used throughout the crate.
pub type Rat = Ratio<BigInt>;

pub fn rat(n: i64) -> Rat {
    Ratio::from_integer(BigInt::from(n))
}

pub fn rat_zero() -> Rat {
    Ratio::from_integer(BigInt::from(0))
}

pub fn rat_one() -> Rat {
    Ratio::from_integer(BigInt::from(1))
}

pub use matrix::{image, nullspace, rat_to_string, RatMatrix, Rref};
pub use subspace::{operator_closure, operator_closure_with, LinearOp, Subspace};
