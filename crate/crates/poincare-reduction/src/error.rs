//! Error type for the reduction layer.

use poincare_bundles::SpaceId;
use thiserror::Error;

/// Everything that can go wrong while acting, reducing, or verifying.
#[derive(Debug, Error)]
pub enum ReductionError {
    /// A point was handed to an operation defined on a different space.
    #[error("{what}: expected a point of {expected}, got {got}")]
    SpaceMismatch {
        what: &'static str,
        expected: SpaceId,
        got: SpaceId,
    },

    /// An acting element of the wrong kind was handed to an action.
    #[error("action {action} expects a {expected} element, got a {got} element")]
    ActingKind {
        action: &'static str,
        expected: &'static str,
        got: &'static str,
    },

    /// A Hamiltonian failed the invariance precheck for a declared symmetry.
    #[error(
        "field `{field}` is not invariant under {action}: residual {residual:.3e} exceeds {tol:.3e}"
    )]
    NotInvariant {
        field: String,
        action: &'static str,
        residual: f64,
        tol: f64,
    },

    /// A scenario or check was configured inconsistently.
    #[error("configuration: {0}")]
    Config(String),

    /// An integration failed underneath a scenario run.
    #[error(transparent)]
    Dynamics(#[from] poincare_dynamics::DynError),

    /// A bracket evaluation failed underneath a reduced flow.
    #[error(transparent)]
    Bracket(#[from] poincare_brackets::BracketError),
}
