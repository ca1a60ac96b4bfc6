//! Equations of motion on a Lie group's iterated tangent and cotangent
//! bundles, in right-trivialized coordinates.
//!
//! The crate evaluates and integrates twenty-three equation families — the
//! classical pairs on `TG`/`T*G` and their duals, the full flows on the four
//! second-iterated bundles, and every staged reduction between them. Scalar
//! fields drive the flows through per-slot gradients; Lagrangian-side
//! families run in momentum form, recovering velocities by inverting the
//! fiber derivative (exactly for quadratic kinetic terms, by damped Newton
//! otherwise). A Munthe-Kaas fourth-order stepper keeps group slots on the
//! group by construction.

mod energy;
mod error;
mod family;
mod field;
mod identity;
mod integrate;
mod legendre;
mod output;
mod quadratic;
mod rhs;
mod state;

pub use energy::energy_from_lagrangian;
pub use error::DynError;
pub use family::{space_velocity_slots, EOMFamily};
pub use field::ScalarField;
pub use identity::{second_order_identity_check, SecondOrderReport};
pub use integrate::{dexpinv, integrate, step, Trajectory};
pub use legendre::{LegendreMap, LEGENDRE_MAX_ITER, LEGENDRE_TOL};
pub use output::{sidecar, write_csv, write_sidecar, Sidecar};
pub use quadratic::QuadraticLagrangian;
pub use rhs::{recover_velocities, rhs};
pub use state::{embed, State, StateDeriv};
