//! Left actions of structure groups on the trivialized bundles.
//!
//! Each registered action is a left action of the group itself, of a fiber
//! translation group, or of a semidirect pair on one of the bundle spaces.
//! With one exception every action is left multiplication by an element of
//! the bundle's own group law, embedded into the unused slots as zeros;
//! [`act`] applies them uniformly through that embedding, so composition of
//! acting elements is literally the bundle product.  The exception is
//! [`ActionId::Psi`], a plain translation of the covector slot of `TT*G`
//! that is *not* a left multiplication (the group law would add an `ad*`
//! twist to the last slot).

use poincare_bundles::{mul, BundlePoint, GenSlot, Generator, SlotValue, SpaceId};
use poincare_lie::{Algebra, AlgebraVector, DualVector, GroupElement};
use rand::Rng;

use crate::error::ReductionError;

/// The registered actions on the iterated bundles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionId {
    /// `G` on `T*G` by cotangent-lifted left translation.
    GOnGgstar,
    /// An isotropy subgroup `G_μ` on `T*G`, the restriction of the lift.
    GmuOnGg2star,
    /// `G` on `T*TG` by cotangent-lifted left translation of `TG`.
    GOnTstarTG,
    /// The algebra, as an additive group, translating the velocity slot of
    /// `T*TG` (with the compensating `ad*` shift of the first momentum).
    AlgOnTstarTG,
    /// The semidirect pair `G ⋉ g` on `T*TG`, the full lift of left
    /// translation by tangent-group elements.
    GAlgOnTstarTG,
    /// `G` on `T*T*G` by cotangent-lifted left translation of `T*G`.
    GOnTstarTstarG,
    /// The dual space, as an additive group, translating the first momentum
    /// slot of `T*T*G` (with the compensating `ad*` shift of the second).
    DualOnTstarTstarG,
    /// The semidirect pair `G ⋉ g*` on `T*T*G`, the full lift of left
    /// translation by cotangent-group elements.
    TstarGOnTstarTstarG,
    /// `G` on `TT*G` by the tangent lift of the lifted left translation.
    GOnTTstarG,
    /// The algebra translating the velocity slot of `TT*G`.
    Alg2OnTTstarG,
    /// The dual space translating the momentum slot of `TT*G`.
    Psi,
    /// The dual space translating the fiber-velocity slot of `TT*G`.
    Phi,
    /// The semidirect pair `G ⋉ g` on `TT*G`: left translation combined
    /// with the velocity-slot shift.
    ThetaGAlg2,
    /// The semidirect pair `G ⋉ g*` on `TT*G`: left translation combined
    /// with the momentum-slot shift.
    AlphaGAlg1star,
}

/// Kinds of acting elements, used for dispatch and error reporting.
#[derive(Debug, Clone)]
pub enum ActingElement {
    Group(GroupElement),
    Vector(AlgebraVector),
    Covector(DualVector),
    GroupVector(GroupElement, AlgebraVector),
    GroupCovector(GroupElement, DualVector),
}

impl ActingElement {
    pub fn kind(&self) -> &'static str {
        match self {
            ActingElement::Group(_) => "group",
            ActingElement::Vector(_) => "vector",
            ActingElement::Covector(_) => "covector",
            ActingElement::GroupVector(..) => "group-vector",
            ActingElement::GroupCovector(..) => "group-covector",
        }
    }
}

/// An element of the acting group's Lie algebra.
#[derive(Debug, Clone)]
pub enum ActingDirection {
    Vector(AlgebraVector),
    Covector(DualVector),
    VectorVector(AlgebraVector, AlgebraVector),
    VectorCovector(AlgebraVector, DualVector),
}

impl ActionId {
    pub const ALL: [ActionId; 14] = [
        ActionId::GOnGgstar,
        ActionId::GmuOnGg2star,
        ActionId::GOnTstarTG,
        ActionId::AlgOnTstarTG,
        ActionId::GAlgOnTstarTG,
        ActionId::GOnTstarTstarG,
        ActionId::DualOnTstarTstarG,
        ActionId::TstarGOnTstarTstarG,
        ActionId::GOnTTstarG,
        ActionId::Alg2OnTTstarG,
        ActionId::Psi,
        ActionId::Phi,
        ActionId::ThetaGAlg2,
        ActionId::AlphaGAlg1star,
    ];

    /// Stable identifier used by the command-line tools.
    pub fn token(&self) -> &'static str {
        match self {
            ActionId::GOnGgstar => "G_on_Ggstar",
            ActionId::GmuOnGg2star => "Gmu_on_Gg2star",
            ActionId::GOnTstarTG => "G_on_TstarTG",
            ActionId::AlgOnTstarTG => "g_on_TstarTG",
            ActionId::GAlgOnTstarTG => "Gxg_on_TstarTG",
            ActionId::GOnTstarTstarG => "G_on_TstarTstarG",
            ActionId::DualOnTstarTstarG => "gstar_on_TstarTstarG",
            ActionId::TstarGOnTstarTstarG => "TstarG_on_TstarTstarG",
            ActionId::GOnTTstarG => "G_on_TTstarG",
            ActionId::Alg2OnTTstarG => "g2_on_TTstarG",
            ActionId::Psi => "psi",
            ActionId::Phi => "phi",
            ActionId::ThetaGAlg2 => "theta_Gxg2",
            ActionId::AlphaGAlg1star => "alpha_Gxg1star",
        }
    }

    /// The space acted on.
    pub fn space(&self) -> SpaceId {
        match self {
            ActionId::GOnGgstar | ActionId::GmuOnGg2star => SpaceId::TstarG,
            ActionId::GOnTstarTG | ActionId::AlgOnTstarTG | ActionId::GAlgOnTstarTG => {
                SpaceId::TstarTG
            }
            ActionId::GOnTstarTstarG
            | ActionId::DualOnTstarTstarG
            | ActionId::TstarGOnTstarTstarG => SpaceId::TstarTstarG,
            ActionId::GOnTTstarG
            | ActionId::Alg2OnTTstarG
            | ActionId::Psi
            | ActionId::Phi
            | ActionId::ThetaGAlg2
            | ActionId::AlphaGAlg1star => SpaceId::TTstarG,
        }
    }

    /// The kind of acting element the action expects.
    pub fn acting_kind(&self) -> &'static str {
        match self {
            ActionId::GOnGgstar
            | ActionId::GmuOnGg2star
            | ActionId::GOnTstarTG
            | ActionId::GOnTstarTstarG
            | ActionId::GOnTTstarG => "group",
            ActionId::AlgOnTstarTG | ActionId::Alg2OnTTstarG => "vector",
            ActionId::DualOnTstarTstarG | ActionId::Psi | ActionId::Phi => "covector",
            ActionId::GAlgOnTstarTG | ActionId::ThetaGAlg2 => "group-vector",
            ActionId::TstarGOnTstarTstarG | ActionId::AlphaGAlg1star => "group-covector",
        }
    }

    /// One-line description of what the action does.
    pub fn description(&self) -> &'static str {
        match self {
            ActionId::GOnGgstar => {
                "group elements left-translate the base of T*G and rotate the momentum"
            }
            ActionId::GmuOnGg2star => {
                "an isotropy subgroup left-translates T*G, the restriction used for two-stage reduction"
            }
            ActionId::GOnTstarTG => {
                "group elements left-translate T*TG, rotating velocity and both momenta"
            }
            ActionId::AlgOnTstarTG => {
                "algebra elements shift the velocity slot of T*TG and twist the first momentum"
            }
            ActionId::GAlgOnTstarTG => {
                "tangent-group elements act on T*TG by the lift of left translation in TG"
            }
            ActionId::GOnTstarTstarG => {
                "group elements left-translate T*T*G, rotating both momenta and the velocity"
            }
            ActionId::DualOnTstarTstarG => {
                "dual elements shift the first momentum of T*T*G and twist the second"
            }
            ActionId::TstarGOnTstarTstarG => {
                "cotangent-group elements act on T*T*G by the lift of left translation in T*G"
            }
            ActionId::GOnTTstarG => {
                "group elements left-translate TT*G, rotating momentum, velocity, and fiber momentum"
            }
            ActionId::Alg2OnTTstarG => "algebra elements shift the velocity slot of TT*G",
            ActionId::Psi => "dual elements shift the momentum slot of TT*G in place",
            ActionId::Phi => "dual elements shift the fiber-momentum slot of TT*G",
            ActionId::ThetaGAlg2 => {
                "tangent-group elements combine left translation of TT*G with a velocity shift"
            }
            ActionId::AlphaGAlg1star => {
                "cotangent-group elements combine left translation of TT*G with a momentum shift"
            }
        }
    }

    /// Check that an acting element has the right kind for this action.
    fn accepts(&self, elem: &ActingElement) -> Result<(), ReductionError> {
        if self.acting_kind() == elem.kind() {
            Ok(())
        } else {
            Err(ReductionError::ActingKind {
                action: self.token(),
                expected: self.acting_kind(),
                got: elem.kind(),
            })
        }
    }

    /// Slot index carrying the translation part of the embedded element.
    fn shift_slot(&self) -> Option<usize> {
        match self {
            ActionId::AlgOnTstarTG | ActionId::GAlgOnTstarTG => Some(1),
            ActionId::DualOnTstarTstarG | ActionId::TstarGOnTstarTstarG => Some(1),
            ActionId::Alg2OnTTstarG | ActionId::ThetaGAlg2 => Some(2),
            ActionId::Phi => Some(3),
            ActionId::Psi | ActionId::AlphaGAlg1star => Some(1),
            _ => None,
        }
    }
}

fn check_space(what: &'static str, expected: SpaceId, p: &BundlePoint) -> Result<(), ReductionError> {
    if p.space() == expected {
        Ok(())
    } else {
        Err(ReductionError::SpaceMismatch {
            what,
            expected,
            got: p.space(),
        })
    }
}

/// Embed an acting element into the bundle's group law (identity group slot,
/// zero fibers away from the action's shift slot).  `None` for the one
/// action that is not a left multiplication.
pub fn embedded_acting(
    id: ActionId,
    elem: &ActingElement,
    alg: &Algebra,
) -> Result<Option<BundlePoint>, ReductionError> {
    id.accepts(elem)?;
    if id == ActionId::Psi {
        return Ok(None);
    }
    let space = id.space();
    let group = match elem {
        ActingElement::Group(h) => h.clone(),
        ActingElement::GroupVector(h, _) | ActingElement::GroupCovector(h, _) => h.clone(),
        _ => GroupElement::identity(alg),
    };
    let mut slots = vec![SlotValue::Group(group)];
    for sig in space.slots().iter().skip(1) {
        match sig.kind {
            poincare_bundles::SlotKind::Vector => {
                slots.push(SlotValue::Vector(AlgebraVector::zero(alg)))
            }
            poincare_bundles::SlotKind::Covector => {
                slots.push(SlotValue::Covector(DualVector::zero(alg)))
            }
            poincare_bundles::SlotKind::Group => unreachable!("only slot 0 is a group slot"),
        }
    }
    if let Some(i) = id.shift_slot() {
        match elem {
            ActingElement::Vector(x) | ActingElement::GroupVector(_, x) => {
                slots[i] = SlotValue::Vector(x.clone())
            }
            ActingElement::Covector(m) | ActingElement::GroupCovector(_, m) => {
                slots[i] = SlotValue::Covector(m.clone())
            }
            ActingElement::Group(_) => {}
        }
    }
    Ok(Some(
        BundlePoint::new(space, slots).expect("embedded acting element is well-formed"),
    ))
}

/// Apply an action to a point.
pub fn act(
    id: ActionId,
    elem: &ActingElement,
    p: &BundlePoint,
) -> Result<BundlePoint, ReductionError> {
    check_space("act", id.space(), p)?;
    match embedded_acting(id, elem, p.alg())? {
        Some(acting) => Ok(mul(&acting, p)),
        None => {
            // Psi: shift the momentum slot, leaving the other three alone.
            let lam = match elem {
                ActingElement::Covector(m) => m,
                _ => unreachable!("kind already checked"),
            };
            let slots = vec![
                SlotValue::Group(p.group().clone()),
                SlotValue::Covector(lam + p.cov(1)),
                SlotValue::Vector(p.vec(2).clone()),
                SlotValue::Covector(p.cov(3).clone()),
            ];
            Ok(BundlePoint::new(SpaceId::TTstarG, slots).expect("shifted point is well-formed"))
        }
    }
}

/// Compose two acting elements (`compose(a, b)` acts as `a` after `b`).
pub fn compose(
    id: ActionId,
    a: &ActingElement,
    b: &ActingElement,
    alg: &Algebra,
) -> Result<ActingElement, ReductionError> {
    if id == ActionId::Psi {
        match (a, b) {
            (ActingElement::Covector(la), ActingElement::Covector(lb)) => {
                return Ok(ActingElement::Covector(la + lb));
            }
            _ => {
                return Err(ReductionError::ActingKind {
                    action: id.token(),
                    expected: id.acting_kind(),
                    got: a.kind(),
                })
            }
        }
    }
    let pa = embedded_acting(id, a, alg)?.expect("non-psi actions embed");
    let pb = embedded_acting(id, b, alg)?.expect("non-psi actions embed");
    let prod = mul(&pa, &pb);
    Ok(extract_acting(id, &prod))
}

/// Inverse of an acting element in the acting group.
pub fn invert_acting(
    id: ActionId,
    elem: &ActingElement,
    alg: &Algebra,
) -> Result<ActingElement, ReductionError> {
    if id == ActionId::Psi {
        match elem {
            ActingElement::Covector(l) => return Ok(ActingElement::Covector(-l)),
            _ => {
                return Err(ReductionError::ActingKind {
                    action: id.token(),
                    expected: id.acting_kind(),
                    got: elem.kind(),
                })
            }
        }
    }
    let p = embedded_acting(id, elem, alg)?.expect("non-psi actions embed");
    Ok(extract_acting(id, &poincare_bundles::inverse(&p)))
}

/// Read an acting element back out of its embedded form.
fn extract_acting(id: ActionId, p: &BundlePoint) -> ActingElement {
    let slot = id.shift_slot();
    match id.acting_kind() {
        "group" => ActingElement::Group(p.group().clone()),
        "vector" => ActingElement::Vector(p.vec(slot.expect("vector actions shift")).clone()),
        "covector" => ActingElement::Covector(p.cov(slot.expect("covector actions shift")).clone()),
        "group-vector" => ActingElement::GroupVector(
            p.group().clone(),
            p.vec(slot.expect("pair actions shift")).clone(),
        ),
        "group-covector" => ActingElement::GroupCovector(
            p.group().clone(),
            p.cov(slot.expect("pair actions shift")).clone(),
        ),
        _ => unreachable!(),
    }
}

/// Identity element of the acting group.
pub fn identity_acting(id: ActionId, alg: &Algebra) -> ActingElement {
    match id.acting_kind() {
        "group" => ActingElement::Group(GroupElement::identity(alg)),
        "vector" => ActingElement::Vector(AlgebraVector::zero(alg)),
        "covector" => ActingElement::Covector(DualVector::zero(alg)),
        "group-vector" => {
            ActingElement::GroupVector(GroupElement::identity(alg), AlgebraVector::zero(alg))
        }
        "group-covector" => {
            ActingElement::GroupCovector(GroupElement::identity(alg), DualVector::zero(alg))
        }
        _ => unreachable!(),
    }
}

/// Infinitesimal generator of the action along a direction of the acting
/// group's algebra, expressed as a generator of the bundle's group law.
///
/// For embedded left multiplications the generator is the constant embedding
/// of the direction; the momentum-slot translation of `TT*G` is the one
/// point-dependent case, where the last slot picks up an `ad*` twist.
pub fn infinitesimal(
    id: ActionId,
    dir: &ActingDirection,
    p: &BundlePoint,
) -> Result<Generator, ReductionError> {
    check_space("infinitesimal", id.space(), p)?;
    let alg = p.alg();
    let expected = direction_kind(id);
    let got = direction_kind_of(dir);
    if expected != got {
        return Err(ReductionError::ActingKind {
            action: id.token(),
            expected,
            got,
        });
    }
    if id == ActionId::Psi {
        let lam = match dir {
            ActingDirection::Covector(l) => l,
            _ => unreachable!("kind already checked"),
        };
        let slots = vec![
            GenSlot::Vector(AlgebraVector::zero(alg)),
            GenSlot::Covector(lam.clone()),
            GenSlot::Vector(AlgebraVector::zero(alg)),
            GenSlot::Covector(p.vec(2).ad_star(lam)),
        ];
        return Ok(Generator::new(SpaceId::TTstarG, slots).expect("psi generator is well-formed"));
    }
    let space = id.space();
    let mut gen = Generator::zero(space, alg);
    let mut slots: Vec<GenSlot> = gen.slots().to_vec();
    match dir {
        ActingDirection::Vector(z) => match id.acting_kind() {
            "group" => slots[0] = GenSlot::Vector(z.clone()),
            _ => slots[id.shift_slot().expect("vector actions shift")] = GenSlot::Vector(z.clone()),
        },
        ActingDirection::Covector(l) => {
            slots[id.shift_slot().expect("covector actions shift")] = GenSlot::Covector(l.clone())
        }
        ActingDirection::VectorVector(z, x) => {
            slots[0] = GenSlot::Vector(z.clone());
            slots[id.shift_slot().expect("pair actions shift")] = GenSlot::Vector(x.clone());
        }
        ActingDirection::VectorCovector(z, l) => {
            slots[0] = GenSlot::Vector(z.clone());
            slots[id.shift_slot().expect("pair actions shift")] = GenSlot::Covector(l.clone());
        }
    }
    gen = Generator::new(space, slots).expect("action generator is well-formed");
    Ok(gen)
}

/// Kind of algebra direction an action's infinitesimal generator expects.
pub fn direction_kind(id: ActionId) -> &'static str {
    match id.acting_kind() {
        "group" => "vector",
        "vector" => "vector",
        "covector" => "covector",
        "group-vector" => "vector-vector",
        "group-covector" => "vector-covector",
        _ => unreachable!(),
    }
}

fn direction_kind_of(dir: &ActingDirection) -> &'static str {
    match dir {
        ActingDirection::Vector(_) => "vector",
        ActingDirection::Covector(_) => "covector",
        ActingDirection::VectorVector(..) => "vector-vector",
        ActingDirection::VectorCovector(..) => "vector-covector",
    }
}

/// Acting element reached from a direction at time `t` along a first-order
/// curve through the identity (exact exponential on the group part, linear
/// on the translation parts).
pub fn exp_direction(id: ActionId, dir: &ActingDirection, t: f64) -> ActingElement {
    match (id.acting_kind(), dir) {
        ("group", ActingDirection::Vector(z)) => ActingElement::Group(GroupElement::exp(&(z * t))),
        ("vector", ActingDirection::Vector(z)) => ActingElement::Vector(z * t),
        ("covector", ActingDirection::Covector(l)) => ActingElement::Covector(l * t),
        ("group-vector", ActingDirection::VectorVector(z, x)) => {
            ActingElement::GroupVector(GroupElement::exp(&(z * t)), x * t)
        }
        ("group-covector", ActingDirection::VectorCovector(z, l)) => {
            ActingElement::GroupCovector(GroupElement::exp(&(z * t)), l * t)
        }
        _ => panic!("direction kind does not match action {}", id.token()),
    }
}

fn random_dual<R: Rng>(alg: &Algebra, rng: &mut R, spread: f64) -> DualVector {
    let comps =
        nalgebra::DVector::from_fn(alg.dim(), |_, _| rng.gen_range(-spread..spread));
    DualVector {
        alg: alg.clone(),
        comps,
    }
}

/// Draw a random acting element for an action.
pub fn sample_acting<R: Rng>(
    id: ActionId,
    alg: &Algebra,
    rng: &mut R,
    spread: f64,
) -> ActingElement {
    match id.acting_kind() {
        "group" => ActingElement::Group(poincare_bundles::random_group(alg, rng, spread)),
        "vector" => ActingElement::Vector(poincare_bundles::random_vector(alg, rng, spread)),
        "covector" => ActingElement::Covector(random_dual(alg, rng, spread)),
        "group-vector" => ActingElement::GroupVector(
            poincare_bundles::random_group(alg, rng, spread),
            poincare_bundles::random_vector(alg, rng, spread),
        ),
        "group-covector" => ActingElement::GroupCovector(
            poincare_bundles::random_group(alg, rng, spread),
            random_dual(alg, rng, spread),
        ),
        _ => unreachable!(),
    }
}

/// Draw a random algebra direction for an action.
pub fn sample_direction<R: Rng>(
    id: ActionId,
    alg: &Algebra,
    rng: &mut R,
    spread: f64,
) -> ActingDirection {
    match direction_kind(id) {
        "vector" => ActingDirection::Vector(poincare_bundles::random_vector(alg, rng, spread)),
        "covector" => ActingDirection::Covector(random_dual(alg, rng, spread)),
        "vector-vector" => ActingDirection::VectorVector(
            poincare_bundles::random_vector(alg, rng, spread),
            poincare_bundles::random_vector(alg, rng, spread),
        ),
        "vector-covector" => ActingDirection::VectorCovector(
            poincare_bundles::random_vector(alg, rng, spread),
            random_dual(alg, rng, spread),
        ),
        _ => unreachable!(),
    }
}
