//! Dynamical states: an optional group slot plus named fiber vectors.

use nalgebra::DVector;
use poincare_bundles::{BundlePoint, SlotKind, SlotValue};
use poincare_lie::{Algebra, AlgebraVector, DualVector, GroupElement};

use crate::error::DynError;
use crate::family::EOMFamily;

/// State of one equation family: group slot (if the family keeps one) and
/// fiber components in the order of [`EOMFamily::fiber_names`].
#[derive(Debug, Clone)]
pub struct State {
    pub alg: Algebra,
    pub group: Option<GroupElement>,
    pub fibers: Vec<DVector<f64>>,
}

impl State {
    pub fn new(alg: &Algebra, group: Option<GroupElement>, fibers: Vec<DVector<f64>>) -> Self {
        State {
            alg: alg.clone(),
            group,
            fibers,
        }
    }

    /// Validate the state against a family's signature.
    pub fn check(&self, family: EOMFamily) -> Result<(), DynError> {
        let want_group = family.has_group();
        let names = family.fiber_names();
        let ok = (self.group.is_some() == want_group)
            && self.fibers.len() == names.len()
            && self.fibers.iter().all(|f| f.len() == self.alg.dim());
        if ok {
            Ok(())
        } else {
            Err(DynError::StateShape {
                family: family.token().into(),
                expected: format!(
                    "{}{} fibers of dim {}",
                    if want_group { "group + " } else { "" },
                    names.len(),
                    self.alg.dim()
                ),
                got: format!(
                    "{}{} fibers",
                    if self.group.is_some() { "group + " } else { "" },
                    self.fibers.len()
                ),
            })
        }
    }

    /// Flat coordinates: group matrix entries row-major (when present), then
    /// fiber components in order.
    pub fn flat(&self) -> Vec<f64> {
        let mut out = Vec::new();
        if let Some(g) = &self.group {
            for r in 0..g.mat.nrows() {
                for c in 0..g.mat.ncols() {
                    out.push(g.mat[(r, c)]);
                }
            }
        }
        for f in &self.fibers {
            out.extend(f.iter().copied());
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        self.group.as_ref().map_or(true, |g| g.is_finite())
            && self
                .fibers
                .iter()
                .all(|f| f.iter().all(|v| v.is_finite()))
    }

    /// Supremum distance between flat coordinates.
    pub fn distance(&self, other: &State) -> f64 {
        self.flat()
            .iter()
            .zip(other.flat().iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Column labels matching [`State::flat`], for trajectory output.
    pub fn labels(family: EOMFamily, alg: &Algebra) -> Vec<String> {
        let mut out = Vec::new();
        if family.has_group() {
            let n = alg.matrix_size();
            for r in 0..n {
                for c in 0..n {
                    out.push(format!("g_{r}_{c}"));
                }
            }
        }
        for name in family.fiber_names() {
            for k in 0..alg.dim() {
                out.push(format!("{name}_{k}"));
            }
        }
        out
    }
}

/// Time derivative of a [`State`]: the group slot moves by a right-
/// trivialized velocity, fibers componentwise.
#[derive(Debug, Clone)]
pub struct StateDeriv {
    pub group_vel: Option<DVector<f64>>,
    pub fibers: Vec<DVector<f64>>,
}

impl StateDeriv {
    pub fn is_finite(&self) -> bool {
        self.group_vel
            .as_ref()
            .map_or(true, |v| v.iter().all(|x| x.is_finite()))
            && self
                .fibers
                .iter()
                .all(|f| f.iter().all(|v| v.is_finite()))
    }

    pub fn norm(&self) -> f64 {
        let mut m: f64 = 0.0;
        if let Some(v) = &self.group_vel {
            m = m.max(v.amax());
        }
        for f in &self.fibers {
            if f.len() > 0 {
                m = m.max(f.amax());
            }
        }
        m
    }
}

/// Build the field-space point a family evaluates its scalar field at, given
/// the state and the recovered velocity components (aligned with
/// [`EOMFamily::velocity_slots`]; empty for Hamiltonian-side families).
///
/// Dropped slots are embedded canonically: identity in the group slot, zero
/// in the fibers. Fields invariant along those directions make the full and
/// embedded evaluations agree, which is the reduction statement itself.
pub fn embed(family: EOMFamily, state: &State, velocities: &[DVector<f64>]) -> BundlePoint {
    let alg = &state.alg;
    let space = family.field_space();
    let g = state
        .group
        .clone()
        .unwrap_or_else(|| GroupElement::identity(alg));
    let vel = |i: usize| velocities[i].clone();
    let fib = |i: usize| state.fibers[i].clone();
    let zero = || DVector::zeros(alg.dim());

    use EOMFamily::*;
    let comps: Vec<DVector<f64>> = match family {
        ElTg | EpG => vec![vel(0)],
        HamTstarG | LpGstar => vec![fib(0)],
        ElTtgFull | ElTtgAlgAlgAlg => vec![fib(0), vel(0), vel(1)],
        ElTtgGrpAlgAlg | ElTtgAlgAlg => vec![zero(), vel(0), vel(1)],
        ElTtgGrpAlg | ElTtgAlg => vec![zero(), vel(0), zero()],
        El2T2g | Ep2Gg => vec![fib(0), vel(0)],
        HamTstarTg => vec![fib(0), fib(1), fib(2)],
        LpGstarGstar => vec![zero(), fib(0), fib(1)],
        HamTstarTstarG => vec![fib(0), fib(1), fib(2)],
        LpGstarG => vec![zero(), fib(0), fib(1)],
        HamTTstarG => vec![fib(0), fib(1), fib(2)],
        ElTTstarGFull | ElTTstarDualAlgDual => vec![fib(0), vel(0), vel(1)],
        ElTTstarGrpAlgDual | ElTTstarAlgDual => vec![zero(), vel(0), vel(1)],
        ElTTstarGrpAlg | ElTTstarAlg => vec![zero(), vel(0), zero()],
    };

    let mut slots = Vec::with_capacity(space.slot_count());
    slots.push(SlotValue::Group(g));
    for (sig, comps) in space.slots().iter().skip(1).zip(comps) {
        slots.push(match sig.kind {
            SlotKind::Vector => SlotValue::Vector(AlgebraVector {
                alg: alg.clone(),
                comps,
            }),
            SlotKind::Covector => SlotValue::Covector(DualVector {
                alg: alg.clone(),
                comps,
            }),
            SlotKind::Group => unreachable!("only the leading slot is a group slot"),
        });
    }
    BundlePoint::new(space, slots).expect("embedding matches the space signature")
}
