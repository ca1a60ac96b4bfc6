//! Trivialized iterated tangent and cotangent bundles of a matrix Lie group.
//!
//! Every space handled here is a product `G × (fiber slots)` obtained by
//! right-translating tangent directions to the identity and cotangent
//! directions to the dual of the algebra.  Each space carries a group law of
//! its own (a semidirect product built from `Ad`, `Ad*`, and at most one
//! bracket twist), and every one-parameter subgroup of that law induces a
//! right-invariant vector field on the space.
//!
//! The crate provides, for each space:
//! - slot signatures ([`SpaceId`]), points ([`BundlePoint`]) and generator
//!   tuples ([`Generator`]),
//! - the group law ([`mul`], [`inverse`]),
//! - right-invariant fields ([`right_invariant_field`]) together with the
//!   inverse reading of a tangent value back to its generator
//!   ([`generator_from_value`]),
//! - the Lie bracket of generators ([`algebra_bracket`]),
//! - trivialization of raw tangent/cotangent data and its inverse
//!   (see [`trivialize`]).

mod algebra_bracket;
mod error;
mod field;
mod mul;
mod point;
mod sampling;
mod space;
pub mod trivialize;

pub use algebra_bracket::algebra_bracket;
pub use error::BundleError;
pub use field::{
    first_order_path, generator_from_value, right_invariant_field, TangentVector, ValueSlot,
};
pub use mul::{inverse, mul};
pub use point::{field_labels, BundlePoint, SlotValue};
pub use sampling::{random_generator, random_group, random_point, random_vector};
pub use space::{Generator, GenSlot, SlotKind, SlotSig, SpaceId};
