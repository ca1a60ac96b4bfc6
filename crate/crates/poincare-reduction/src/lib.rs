//! Symmetry reductions of the dynamics on iterated bundles of a matrix Lie
//! group.
//!
//! The crate assembles the reduction side of the engine:
//!
//! * [`ActionId`] / [`act`] — the translation and lifted actions each bundle
//!   carries, realized through the bundle group laws, with infinitesimal
//!   generators and one-parameter subgroups;
//! * [`MomentumMapId`] / [`momentum`] — the momentum maps of those actions,
//!   paired against the tautological one-forms and transported by the
//!   coadjoint representations of the acting groups;
//! * [`StructureMapId`] / [`structure_map`] — the fibrewise maps connecting
//!   the three second-level bundles, checked to be symplectic or Poisson by
//!   [`check_structure_map`];
//! * [`isotropy`](crate::isotropy) — coadjoint-orbit ranks and isotropy
//!   subalgebras at fixed momentum values;
//! * [`ScenarioId`] / [`verify_reduction`] — full-versus-reduced trajectory
//!   comparisons, one per reduction the bundles support, each gated by an
//!   invariance precheck of the Hamiltonian.

pub mod action;
pub mod error;
pub mod fields;
pub mod isotropy;
pub mod maps;
pub mod momentum;
pub mod pushforward;
pub mod scenario;
pub mod symplectic;

pub use action::{
    act, compose, direction_kind, embedded_acting, exp_direction, identity_acting, infinitesimal,
    invert_acting, sample_acting, sample_direction, ActingDirection, ActingElement, ActionId,
};
pub use error::ReductionError;
pub use fields::{invariant_probe, probe_field};
pub use isotropy::{
    coadjoint_image, isotropy_dual_vector, isotropy_mu, isotropy_pair_duals, isotropy_xi,
    orbit_rank, RANK_TOL,
};
pub use maps::{
    coadjoint, inverse_structure_map, structure_map, CoadjointId, StructureMapId,
};
pub use momentum::{momentum, MomentumMapId, MomentumValue};
pub use pushforward::{pushforward, PUSHFORWARD_STEP};
pub use scenario::{
    invariance_residual, verify_reduction, ReducedKind, ScenarioId, ScenarioOptions,
    ScenarioReport, INVARIANCE_TOL,
};
pub use symplectic::{
    action_form_expectations, bundle_translation_residual, canonical_form, check_structure_map,
    check_symplectic_action, potential_pullback_residual, MapCheck, SymplecticReport,
};
