//! Points of trivialized spaces.

use std::sync::Arc;

use poincare_lie::{Algebra, AlgebraVector, DualVector, GroupElement};

use crate::error::BundleError;
use crate::space::{SlotKind, SpaceId};

/// One slot of a bundle point.
#[derive(Debug, Clone)]
pub enum SlotValue {
    Group(GroupElement),
    Vector(AlgebraVector),
    Covector(DualVector),
}

impl SlotValue {
    pub fn kind(&self) -> SlotKind {
        match self {
            SlotValue::Group(_) => SlotKind::Group,
            SlotValue::Vector(_) => SlotKind::Vector,
            SlotValue::Covector(_) => SlotKind::Covector,
        }
    }

    fn alg(&self) -> &Algebra {
        match self {
            SlotValue::Group(g) => &g.alg,
            SlotValue::Vector(x) => &x.alg,
            SlotValue::Covector(m) => &m.alg,
        }
    }
}

/// A point of a trivialized space: a group element followed by algebra and
/// dual-algebra coordinates, in the slot order fixed by [`SpaceId::slots`].
#[derive(Debug, Clone)]
pub struct BundlePoint {
    space: SpaceId,
    slots: Vec<SlotValue>,
}

impl BundlePoint {
    pub fn new(space: SpaceId, slots: Vec<SlotValue>) -> Result<Self, BundleError> {
        let sig = space.slots();
        if slots.len() != sig.len() {
            return Err(BundleError::SlotCount {
                space,
                expected: sig.len(),
                got: slots.len(),
            });
        }
        for (i, (slot, sig)) in slots.iter().zip(sig).enumerate() {
            if slot.kind() != sig.kind {
                return Err(BundleError::SlotKind {
                    space,
                    index: i,
                    expected: sig.kind,
                    got: slot.kind(),
                });
            }
        }
        let alg = slots[0].alg();
        for slot in &slots[1..] {
            if !Arc::ptr_eq(alg, slot.alg()) && alg.name() != slot.alg().name() {
                return Err(BundleError::AlgebraMismatch {
                    left: alg.name().to_string(),
                    right: slot.alg().name().to_string(),
                });
            }
        }
        Ok(BundlePoint { space, slots })
    }

    /// Identity of the space's group law.
    pub fn identity(space: SpaceId, alg: &Algebra) -> Self {
        let slots = space
            .slots()
            .iter()
            .map(|sig| match sig.kind {
                SlotKind::Group => SlotValue::Group(GroupElement::identity(alg)),
                SlotKind::Vector => SlotValue::Vector(AlgebraVector::zero(alg)),
                SlotKind::Covector => SlotValue::Covector(DualVector::zero(alg)),
            })
            .collect();
        BundlePoint { space, slots }
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn slots(&self) -> &[SlotValue] {
        &self.slots
    }

    pub fn alg(&self) -> &Algebra {
        self.slots[0].alg()
    }

    /// The group slot.
    pub fn group(&self) -> &GroupElement {
        match &self.slots[0] {
            SlotValue::Group(g) => g,
            _ => unreachable!("validated points have a group slot first"),
        }
    }

    /// Algebra-vector slot `i` (panics if the slot is not a vector).
    pub fn vec(&self, i: usize) -> &AlgebraVector {
        match &self.slots[i] {
            SlotValue::Vector(x) => x,
            _ => panic!("slot {i} of {} is not a vector", self.space),
        }
    }

    /// Dual-vector slot `i` (panics if the slot is not a covector).
    pub fn cov(&self, i: usize) -> &DualVector {
        match &self.slots[i] {
            SlotValue::Covector(m) => m,
            _ => panic!("slot {i} of {} is not a covector", self.space),
        }
    }

    /// All coordinates as one flat vector: group entries row-major, then
    /// fiber components in slot order.  Matches [`field_labels`].
    pub fn flat(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.flat_len());
        for slot in &self.slots {
            match slot {
                SlotValue::Group(g) => {
                    for r in 0..g.mat.nrows() {
                        for c in 0..g.mat.ncols() {
                            out.push(g.mat[(r, c)]);
                        }
                    }
                }
                SlotValue::Vector(x) => out.extend(x.comps.iter()),
                SlotValue::Covector(m) => out.extend(m.comps.iter()),
            }
        }
        out
    }

    pub fn flat_len(&self) -> usize {
        let n = self.alg().matrix_size();
        n * n + (self.space.slot_count() - 1) * self.alg().dim()
    }

    /// Sup-norm distance between flat coordinate vectors.
    pub fn distance(&self, other: &BundlePoint) -> f64 {
        assert_eq!(self.space, other.space, "point space mismatch");
        self.flat()
            .iter()
            .zip(other.flat())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.flat().iter().all(|v| v.is_finite())
    }
}

/// Column labels matching [`BundlePoint::flat`]: `g_r_c` for group entries,
/// `name_k` for fiber components.
pub fn field_labels(space: SpaceId, alg: &Algebra) -> Vec<String> {
    let n = alg.matrix_size();
    let dim = alg.dim();
    let mut out = Vec::new();
    for sig in space.slots() {
        match sig.kind {
            SlotKind::Group => {
                for r in 0..n {
                    for c in 0..n {
                        out.push(format!("{}_{r}_{c}", sig.name));
                    }
                }
            }
            _ => {
                for k in 0..dim {
                    out.push(format!("{}_{k}", sig.name));
                }
            }
        }
    }
    out
}
