//! Poisson brackets, canonical forms, and Hamiltonian vector fields on the
//! iterated bundles of a matrix Lie group.
//!
//! The crate is a registry plus three evaluators:
//!
//! * [`BracketId`] / [`poisson`] — the Poisson brackets carried by the
//!   trivialized bundles and their reductions, evaluated on scalar fields;
//! * [`FormId`] / [`one_form`] / [`two_form`] — tautological and symplectic
//!   forms, evaluated on right-invariant generators;
//! * [`hamiltonian_vf`] — closed-form Hamiltonian fields for the symplectic
//!   entries, audited against the interior-product identity before use.
//!
//! [`jacobi_residual`] closes the loop by measuring the cyclic Jacobi sum of
//! any registered bracket on concrete fields.

mod bracket;
mod error;
mod form;
mod hamvf;
mod jacobi;

pub use bracket::{poisson, BracketId};
pub use error::BracketError;
pub use form::{one_form, two_form, FormId, FormKind};
pub use hamvf::{hamiltonian_vf, HAMVF_RESIDUAL_TOL};
pub use jacobi::{bracket_field, jacobi_residual};
