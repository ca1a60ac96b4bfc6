//! Space identifiers, slot signatures, and generator tuples.

use std::fmt;
use std::str::FromStr;

use poincare_lie::{Algebra, AlgebraVector, DualVector};

use crate::error::BundleError;

/// Kind of a single slot of a trivialized space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotKind {
    /// A matrix group element.
    Group,
    /// An algebra-valued coordinate.
    Vector,
    /// A dual-algebra-valued coordinate.
    Covector,
}

/// Name and kind of one slot.
#[derive(Debug, Clone, Copy)]
pub struct SlotSig {
    pub kind: SlotKind,
    pub name: &'static str,
}

const fn gs(name: &'static str) -> SlotSig {
    SlotSig { kind: SlotKind::Group, name }
}
const fn vs(name: &'static str) -> SlotSig {
    SlotSig { kind: SlotKind::Vector, name }
}
const fn cs(name: &'static str) -> SlotSig {
    SlotSig { kind: SlotKind::Covector, name }
}

const SIG_GROUP: &[SlotSig] = &[gs("g")];
const SIG_TG: &[SlotSig] = &[gs("g"), vs("xi")];
const SIG_TSTAR_G: &[SlotSig] = &[gs("g"), cs("mu")];
const SIG_TTG: &[SlotSig] = &[gs("g"), vs("xi1"), vs("xi2"), vs("xi3")];
const SIG_TSTAR_TG: &[SlotSig] = &[gs("g"), vs("xi"), cs("mu"), cs("nu")];
const SIG_TSTAR_TSTAR_G: &[SlotSig] = &[gs("g"), cs("mu"), cs("nu"), vs("xi")];
const SIG_T_TSTAR_G: &[SlotSig] = &[gs("g"), cs("mu"), vs("xi"), cs("nu")];
const SIG_T2G: &[SlotSig] = &[gs("g"), vs("xi"), vs("xidot")];

/// Identifier of a trivialized space built over a matrix group `G`.
///
/// Slot orders are fixed once here; every other operation reads them from
/// [`SpaceId::slots`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceId {
    /// The group itself.
    Group,
    /// Tangent bundle, slots `(g, xi)`.
    TG,
    /// Cotangent bundle, slots `(g, mu)`.
    TstarG,
    /// Second-iterated tangent bundle, slots `(g, xi1, xi2, xi3)`.
    TTG,
    /// Cotangent bundle of `TG`, slots `(g, xi, mu, nu)`.
    TstarTG,
    /// Cotangent bundle of `T*G`, slots `(g, mu, nu, xi)`.
    TstarTstarG,
    /// Tangent bundle of `T*G`, slots `(g, mu, xi, nu)`.
    TTstarG,
    /// Second-order bundle (holonomic curves), slots `(g, xi, xidot)`.
    T2G,
}

impl SpaceId {
    pub const ALL: [SpaceId; 8] = [
        SpaceId::Group,
        SpaceId::TG,
        SpaceId::TstarG,
        SpaceId::TTG,
        SpaceId::TstarTG,
        SpaceId::TstarTstarG,
        SpaceId::TTstarG,
        SpaceId::T2G,
    ];

    pub fn slots(self) -> &'static [SlotSig] {
        match self {
            SpaceId::Group => SIG_GROUP,
            SpaceId::TG => SIG_TG,
            SpaceId::TstarG => SIG_TSTAR_G,
            SpaceId::TTG => SIG_TTG,
            SpaceId::TstarTG => SIG_TSTAR_TG,
            SpaceId::TstarTstarG => SIG_TSTAR_TSTAR_G,
            SpaceId::TTstarG => SIG_T_TSTAR_G,
            SpaceId::T2G => SIG_T2G,
        }
    }

    pub fn slot_count(self) -> usize {
        self.slots().len()
    }

    pub fn name(self) -> &'static str {
        match self {
            SpaceId::Group => "G",
            SpaceId::TG => "TG",
            SpaceId::TstarG => "T*G",
            SpaceId::TTG => "TTG",
            SpaceId::TstarTG => "T*TG",
            SpaceId::TstarTstarG => "T*T*G",
            SpaceId::TTstarG => "TT*G",
            SpaceId::T2G => "T2G",
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpaceId {
    type Err = BundleError;

    fn from_str(s: &str) -> Result<Self, BundleError> {
        let norm: String =
            s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
        let norm = norm.replace("star", "*");
        match norm.as_str() {
            "g" => Ok(SpaceId::Group),
            "tg" => Ok(SpaceId::TG),
            "t*g" => Ok(SpaceId::TstarG),
            "ttg" => Ok(SpaceId::TTG),
            "t*tg" => Ok(SpaceId::TstarTG),
            "t*t*g" => Ok(SpaceId::TstarTstarG),
            "tt*g" => Ok(SpaceId::TTstarG),
            "t2g" | "t²g" => Ok(SpaceId::T2G),
            _ => Err(BundleError::UnknownSpace { name: s.to_string() }),
        }
    }
}

/// One slot of a generator tuple.
///
/// The group slot of a space contributes an algebra vector (the direction of
/// its one-parameter subgroup); fiber slots keep their own kind.
#[derive(Debug, Clone)]
pub enum GenSlot {
    Vector(AlgebraVector),
    Covector(DualVector),
}

impl GenSlot {
    fn kind(&self) -> SlotKind {
        match self {
            GenSlot::Vector(_) => SlotKind::Vector,
            GenSlot::Covector(_) => SlotKind::Covector,
        }
    }
}

/// Expected generator-slot kind for a point-slot kind.
fn generator_kind(slot: SlotKind) -> SlotKind {
    match slot {
        SlotKind::Group => SlotKind::Vector,
        other => other,
    }
}

/// An element of the Lie algebra of a trivialized space's group law.
///
/// Generators label one-parameter subgroups and hence right-invariant
/// fields; slot `i` corresponds to slot `i` of the space, with the group
/// slot replaced by an algebra direction.
#[derive(Debug, Clone)]
pub struct Generator {
    space: SpaceId,
    slots: Vec<GenSlot>,
}

impl Generator {
    pub fn new(space: SpaceId, slots: Vec<GenSlot>) -> Result<Self, BundleError> {
        let sig = space.slots();
        if slots.len() != sig.len() {
            return Err(BundleError::SlotCount {
                space,
                expected: sig.len(),
                got: slots.len(),
            });
        }
        for (i, (slot, sig)) in slots.iter().zip(sig).enumerate() {
            let expected = generator_kind(sig.kind);
            if slot.kind() != expected {
                return Err(BundleError::SlotKind {
                    space,
                    index: i,
                    expected,
                    got: slot.kind(),
                });
            }
        }
        Ok(Generator { space, slots })
    }

    pub fn zero(space: SpaceId, alg: &Algebra) -> Self {
        let slots = space
            .slots()
            .iter()
            .map(|sig| match generator_kind(sig.kind) {
                SlotKind::Vector => GenSlot::Vector(AlgebraVector::zero(alg)),
                SlotKind::Covector => GenSlot::Covector(DualVector::zero(alg)),
                SlotKind::Group => unreachable!(),
            })
            .collect();
        Generator { space, slots }
    }

    /// Basis of the generator algebra, slot by slot.
    pub fn basis(space: SpaceId, alg: &Algebra) -> Vec<Generator> {
        let dim = alg.dim();
        let mut out = Vec::with_capacity(space.slot_count() * dim);
        for slot in 0..space.slot_count() {
            for j in 0..dim {
                let mut gen = Generator::zero(space, alg);
                match &mut gen.slots[slot] {
                    GenSlot::Vector(x) => x.comps[j] = 1.0,
                    GenSlot::Covector(m) => m.comps[j] = 1.0,
                }
                out.push(gen);
            }
        }
        out
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn slots(&self) -> &[GenSlot] {
        &self.slots
    }

    pub fn alg(&self) -> &Algebra {
        match &self.slots[0] {
            GenSlot::Vector(x) => &x.alg,
            GenSlot::Covector(m) => &m.alg,
        }
    }

    /// Algebra-vector slot `i` (panics if the slot is a covector).
    pub fn vec(&self, i: usize) -> &AlgebraVector {
        match &self.slots[i] {
            GenSlot::Vector(x) => x,
            GenSlot::Covector(_) => panic!("generator slot {i} of {} is a covector", self.space),
        }
    }

    /// Dual-vector slot `i` (panics if the slot is a vector).
    pub fn cov(&self, i: usize) -> &DualVector {
        match &self.slots[i] {
            GenSlot::Covector(m) => m,
            GenSlot::Vector(_) => panic!("generator slot {i} of {} is a vector", self.space),
        }
    }

    pub fn flat(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for slot in &self.slots {
            match slot {
                GenSlot::Vector(x) => out.extend(x.comps.iter()),
                GenSlot::Covector(m) => out.extend(m.comps.iter()),
            }
        }
        out
    }

    pub fn from_flat(space: SpaceId, alg: &Algebra, flat: &[f64]) -> Self {
        let dim = alg.dim();
        assert_eq!(flat.len(), space.slot_count() * dim, "flat generator length");
        let slots = space
            .slots()
            .iter()
            .enumerate()
            .map(|(i, sig)| {
                let chunk = &flat[i * dim..(i + 1) * dim];
                match generator_kind(sig.kind) {
                    SlotKind::Vector => GenSlot::Vector(AlgebraVector::from_slice(alg, chunk)),
                    SlotKind::Covector => GenSlot::Covector(DualVector::from_slice(alg, chunk)),
                    SlotKind::Group => unreachable!(),
                }
            })
            .collect();
        Generator { space, slots }
    }

    pub fn norm(&self) -> f64 {
        self.flat().iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn distance(&self, other: &Generator) -> f64 {
        assert_eq!(self.space, other.space, "generator space mismatch");
        self.flat()
            .iter()
            .zip(other.flat())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: f64) -> Generator {
        let slots = self
            .slots
            .iter()
            .map(|s| match s {
                GenSlot::Vector(x) => GenSlot::Vector(x * factor),
                GenSlot::Covector(m) => GenSlot::Covector(m * factor),
            })
            .collect();
        Generator { space: self.space, slots }
    }

    pub fn add(&self, other: &Generator) -> Generator {
        assert_eq!(self.space, other.space, "generator space mismatch");
        let slots = self
            .slots
            .iter()
            .zip(&other.slots)
            .map(|(a, b)| match (a, b) {
                (GenSlot::Vector(x), GenSlot::Vector(y)) => GenSlot::Vector(x + y),
                (GenSlot::Covector(m), GenSlot::Covector(n)) => GenSlot::Covector(m + n),
                _ => unreachable!("validated generators have matching slot kinds"),
            })
            .collect();
        Generator { space: self.space, slots }
    }

    pub fn sub(&self, other: &Generator) -> Generator {
        self.add(&other.scale(-1.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use poincare_lie::algebras::so3;

    #[test]
    fn slot_signatures_have_group_first() {
        for id in SpaceId::ALL {
            assert_eq!(id.slots()[0].kind, SlotKind::Group, "{id}");
            assert!(id.slots().iter().skip(1).all(|s| s.kind != SlotKind::Group), "{id}");
        }
    }

    #[test]
    fn space_names_round_trip() {
        for id in SpaceId::ALL {
            assert_eq!(id.name().parse::<SpaceId>().unwrap(), id);
        }
        assert_eq!("TstarTG".parse::<SpaceId>().unwrap(), SpaceId::TstarTG);
        assert_eq!("tt*g".parse::<SpaceId>().unwrap(), SpaceId::TTstarG);
        assert!("TQG".parse::<SpaceId>().is_err());
    }

    #[test]
    fn generator_basis_spans_all_slots() {
        let alg = so3();
        let basis = Generator::basis(SpaceId::TstarTG, &alg);
        assert_eq!(basis.len(), 4 * 3);
        for (k, gen) in basis.iter().enumerate() {
            let flat = gen.flat();
            assert_eq!(flat.iter().filter(|v| **v != 0.0).count(), 1);
            assert_eq!(flat[k], 1.0);
        }
    }

    #[test]
    fn generator_flat_round_trip() {
        let alg = so3();
        let flat: Vec<f64> = (0..12).map(|i| i as f64 / 7.0).collect();
        let gen = Generator::from_flat(SpaceId::TTstarG, &alg, &flat);
        assert_eq!(gen.flat(), flat);
        assert!(gen.distance(&gen) == 0.0);
    }

    #[test]
    fn generator_kind_mismatch_is_rejected() {
        let alg = so3();
        let bad = Generator::new(
            SpaceId::TstarG,
            vec![
                GenSlot::Vector(AlgebraVector::zero(&alg)),
                GenSlot::Vector(AlgebraVector::zero(&alg)),
            ],
        );
        assert!(matches!(bad, Err(BundleError::SlotKind { index: 1, .. })));
    }
}
