//! Error type shared by algebra construction, JSON loading, and group calculus.

use thiserror::Error;

/// Everything that can go wrong while building or using an algebra.
///
/// Construction errors name the *first* violated identity together with the
/// offending indices, so a bad structure-constants file is diagnosable from
/// the message alone.
#[derive(Debug, Error)]
pub enum LieError {
    /// The structure-constant array is not `dim` matrices of shape `dim × dim`.
    #[error("structure constants malformed: {detail}")]
    StructureShape { detail: String },

    /// `C[k][i][j] + C[k][j][i]` exceeded the identity tolerance.
    #[error("antisymmetry violated at C[{k}][{i}][{j}]: |C[k][i][j] + C[k][j][i]| = {residual:.3e}")]
    Antisymmetry { k: usize, i: usize, j: usize, residual: f64 },

    /// The Jacobi identity failed on a basis triple.
    #[error("Jacobi identity violated on basis triple ({i},{j},{k}): residual norm {residual:.3e}")]
    Jacobi { i: usize, j: usize, k: usize, residual: f64 },

    /// A basis matrix has the wrong shape.
    #[error("basis matrix {index} has wrong shape: expected {expected}×{expected}")]
    BasisShape { index: usize, expected: usize },

    /// The basis matrices are linearly dependent.
    #[error("basis is linearly dependent: rank {rank} < dim {dim}")]
    BasisRank { rank: usize, dim: usize },

    /// The supplied basis does not reproduce the structure constants through
    /// minus the matrix commutator.
    #[error(
        "basis incompatible with structure constants at pair ({i},{j}): \
         ‖hat([e_i,e_j]) + (B_i B_j - B_j B_i)‖ = {residual:.3e}"
    )]
    BasisCompatibility { i: usize, j: usize, residual: f64 },

    /// An operation needed a matrix realization but the algebra has none.
    #[error("algebra '{name}' has no matrix basis; operation '{op}' requires one")]
    MissingBasis { name: String, op: String },

    /// A matrix was projected onto the basis span but the residual was large:
    /// the matrix is not an element of the algebra.
    #[error("matrix is not in the span of the basis: relative residual {residual:.3e}")]
    NotInAlgebra { residual: f64 },

    /// Malformed JSON or I/O failure while reading an algebra file.
    #[error("algebra file '{path}': {detail}")]
    File { path: String, detail: String },

    /// Two operands belong to different algebras.
    #[error("algebra mismatch: '{left}' vs '{right}'")]
    AlgebraMismatch { left: String, right: String },
}
