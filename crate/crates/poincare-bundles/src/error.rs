//! Error type for bundle construction and parsing.

use thiserror::Error;

use crate::space::{SlotKind, SpaceId};

#[derive(Debug, Error)]
pub enum BundleError {
    #[error("unknown space `{name}`")]
    UnknownSpace { name: String },
    #[error("space {space}: expected {expected} slots, got {got}")]
    SlotCount { space: SpaceId, expected: usize, got: usize },
    #[error("space {space}: slot {index} should be {expected:?}, got {got:?}")]
    SlotKind { space: SpaceId, index: usize, expected: SlotKind, got: SlotKind },
    #[error("slots use different algebras: `{left}` vs `{right}`")]
    AlgebraMismatch { left: String, right: String },
}
