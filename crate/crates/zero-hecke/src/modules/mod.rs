//! Module representations of the 0-Hecke algebra: ordered bases with one
//! exact generator matrix per simple generator, relation certification,
//! twists, word actions, and sub/quotient constructions.

mod action;
mod build;
mod ops;
mod rep;

pub use action::Action;
pub use build::{build_module, spyct_compatible, ModuleKind};
pub use ops::{act_word, decompose_spct, direct_sum, phi_twist, sub_quotient, to_pi_style};
pub use rep::{verify_relations, Basis, GenStyle, ModuleRep, RelationReport, RelationViolation};
