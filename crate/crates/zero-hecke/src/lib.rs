//! Exact-arithmetic toolkit for modules over the 0-Hecke algebra `H_n(0)`.
//!
//! The crate builds the classical tableau modules (standard ribbon,
//! immaculate, extended, permuted composition and permuted Young composition
//! tableaux) together with their generator matrices, certifies the defining
//! relations, materializes the explicit homomorphisms between them, and
//! decides structural questions (radicals, tops, essential epimorphisms,
//! projective covers) by exact rational linear algebra.
//!
//! Everything is deterministic: enumeration orders, basis orders, and report
//! orders are fixed once, so repeated runs produce identical output.

pub mod comb;
pub mod error;
pub mod linalg;
pub mod modules;
pub mod morphisms;
pub mod qsym;
pub mod structure;
pub mod sweeps;
pub mod tableaux;

pub use error::{Error, Result};
