//! Lie-algebraic core: finite-dimensional Lie algebras given by structure
//! constants, matrix realizations of their groups, and the right-trivialized
//! calculus built on top of them.
//!
//! Conventions used throughout the workspace:
//!
//! * The bracket is the Jacobi–Lie bracket of **right-invariant** vector
//!   fields. For a matrix realization this equals *minus* the matrix
//!   commutator of basis representatives: `hat([x, y]) = -(X Y - Y X)`.
//! * The adjoint action is the derivative of the inner automorphism
//!   `h ↦ g⁻¹ h g`, so `Ad_g x = unhat(g⁻¹ hat(x) g)` and
//!   `Ad_{hg} = Ad_g ∘ Ad_h` (a right representation).
//! * The coadjoint action is the dual: `⟨Ad*_g μ, x⟩ = ⟨μ, Ad_{g⁻¹} x⟩`,
//!   and its derivative satisfies `d/dt|₀ Ad*_{exp(t x)} μ = -ad*_x μ`.
//! * `ad*` is the plain transpose contraction of the structure constants:
//!   `⟨ad*_x μ, y⟩ = ⟨μ, [x, y]⟩`.
//!
//! Derivatives of scalar functions on the group are taken along
//! right-invariant directions (`right_derivative`), which is the natural
//! momentum-space gradient in this trivialization.

pub mod algebra;
pub mod algebras;
pub mod derivative;
pub mod error;
pub mod group;
pub mod json;
pub mod vector;

pub use algebra::{Algebra, LieAlgebraSpec};
pub use derivative::{fd_step, right_derivative};
pub use error::LieError;
pub use group::GroupElement;
pub use vector::{pairing, AlgebraVector, DualVector};

/// Centralized numerical tolerances. Every check that accepts or rejects an
/// algebra, a basis, or a matrix references one of these named constants.
pub mod tol {
    /// Load-time identities on structure constants (antisymmetry, Jacobi,
    /// bracket/commutator compatibility of a supplied basis).
    pub const STRUCTURE_IDENTITY: f64 = 1e-12;

    /// Relative residual allowed when projecting a matrix back onto the span
    /// of the basis (`unhat`). Exceeding it means the matrix left the algebra.
    pub const UNHAT_RESIDUAL: f64 = 1e-9;

    /// Relative accuracy demanded of the matrix exponential on the shipped
    /// algebras (pinned against closed forms in the test suite).
    pub const EXP_RELATIVE: f64 = 1e-13;

    /// Singular values below this (relative to the largest) are treated as
    /// zero when ranking bases and building pseudo-inverses.
    pub const RANK_CUTOFF: f64 = 1e-10;
}
