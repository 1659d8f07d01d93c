//! The explicit homomorphisms between the tableau modules, materialized as
//! exact matrices over the canonical bases, with certification helpers for
//! the intertwining property, surjectivity, and kernel descriptions.

mod eta;
mod hom;
mod kappa;
mod lift;
mod psi;
mod strips;
mod upsilon;

pub use eta::{eta_map, eta_section, theta_kernel, KernelCondition, KernelWitness};
pub use hom::{compose_chain, hom_check, surjectivity_check, HomCertificate, HomReport, LinearHom};
pub use kappa::kappa_map;
pub use lift::{gamma_kernel_tableaux, gamma_map, phi_kernel_tableaux, phi_map, phi_section};
pub use psi::{psi_bijection, psi_step_canonical, shat_step_canonical, surjection_chain};
pub use strips::{alpha_of_strips, strip_decompose, StripDecomposition};
pub use upsilon::{upphi_map, upsilon_map, xi_kernel};
