//! Error type shared by the bracket, form, and vector-field evaluators.

use poincare_bundles::SpaceId;
use thiserror::Error;

use crate::form::FormId;

/// Errors raised when evaluating brackets, forms, or Hamiltonian fields.
#[derive(Debug, Error)]
pub enum BracketError {
    /// An argument lives on a different space than the registry entry.
    #[error("{what} lives on {got:?} but the entry is bound to {expected:?}")]
    SpaceMismatch {
        what: &'static str,
        expected: SpaceId,
        got: SpaceId,
    },

    /// A one-form evaluator was asked for a two-form entry, or vice versa.
    #[error("{id:?} takes {expected} vector-field argument(s), not {got}")]
    ArityMismatch {
        id: FormId,
        expected: usize,
        got: usize,
    },

    /// No Hamiltonian vector-field formula is registered for this form.
    #[error("no Hamiltonian vector field is registered for {0:?}")]
    NoGenerator(FormId),

    /// The generated field failed the interior-product residual check.
    #[error(
        "Hamiltonian field for {form:?} fails its residual check: \
         |i_X omega + dH| = {residual:.3e} exceeds {tol:.3e}"
    )]
    Residual {
        form: FormId,
        residual: f64,
        tol: f64,
    },
}
