//! Error type for dynamics evaluation and integration.

use thiserror::Error;

/// Errors raised while building fields, inverting fiber derivatives, or
/// integrating equations of motion.
#[derive(Debug, Error)]
pub enum DynError {
    /// A scalar field was handed a point on the wrong space.
    #[error("field on {field} evaluated on {point}")]
    FieldSpaceMismatch { field: String, point: String },

    /// A state tuple does not match the family's slot signature.
    #[error("state for {family} expects {expected}, got {got}")]
    StateShape {
        family: String,
        expected: String,
        got: String,
    },

    /// Analytic partials disagree with finite differences at registration.
    #[error(
        "analytic partials of `{field}` deviate from finite differences by {deviation:.3e} \
         (slot {slot}, component {component})"
    )]
    PartialsMismatch {
        field: String,
        slot: usize,
        component: usize,
        deviation: f64,
    },

    /// A quadratic kinetic matrix is not symmetric positive definite.
    #[error("kinetic matrix for velocity slot {slot} is not symmetric positive definite")]
    MassNotSpd { slot: usize },

    /// A Lagrangian-side family was evaluated without a usable fiber-derivative inverse.
    #[error("family {family} needs a fiber-derivative inverse but none was supplied")]
    MissingLegendre { family: String },

    /// The damped Newton inversion of the fiber derivative stalled.
    #[error("fiber-derivative inversion stalled at residual {residual:.3e} after {iterations} iterations")]
    LegendreFailed { residual: f64, iterations: usize },

    /// The integrator produced a non-finite state.
    #[error("integration aborted: non-finite state after step {step}")]
    NonFinite { step: usize },

    /// Writing trajectory output failed.
    #[error("output error: {0}")]
    Output(String),
}
