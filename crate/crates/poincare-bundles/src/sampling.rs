//! Seeded random sampling of points and generators (used by the check
//! suites and the property tests).

use rand::Rng;

use poincare_lie::{Algebra, AlgebraVector, DualVector, GroupElement};

use crate::point::{BundlePoint, SlotValue};
use crate::space::{GenSlot, Generator, SlotKind, SpaceId};

pub fn random_vector<R: Rng>(alg: &Algebra, rng: &mut R, spread: f64) -> AlgebraVector {
    let comps: Vec<f64> = (0..alg.dim()).map(|_| rng.gen_range(-spread..spread)).collect();
    AlgebraVector::from_slice(alg, &comps)
}

fn random_dual<R: Rng>(alg: &Algebra, rng: &mut R, spread: f64) -> DualVector {
    let comps: Vec<f64> = (0..alg.dim()).map(|_| rng.gen_range(-spread..spread)).collect();
    DualVector::from_slice(alg, &comps)
}

/// A generic group element: product of two exponentials, so it does not sit
/// on a single one-parameter subgroup.
pub fn random_group<R: Rng>(alg: &Algebra, rng: &mut R, spread: f64) -> GroupElement {
    let a = GroupElement::exp(&random_vector(alg, rng, spread));
    let b = GroupElement::exp(&random_vector(alg, rng, spread));
    a.mul(&b)
}

pub fn random_point<R: Rng>(
    space: SpaceId,
    alg: &Algebra,
    rng: &mut R,
    spread: f64,
) -> BundlePoint {
    let slots = space
        .slots()
        .iter()
        .map(|sig| match sig.kind {
            SlotKind::Group => SlotValue::Group(random_group(alg, rng, spread)),
            SlotKind::Vector => SlotValue::Vector(random_vector(alg, rng, spread)),
            SlotKind::Covector => SlotValue::Covector(random_dual(alg, rng, spread)),
        })
        .collect();
    BundlePoint::new(space, slots).expect("random point is well-formed")
}

pub fn random_generator<R: Rng>(
    space: SpaceId,
    alg: &Algebra,
    rng: &mut R,
    spread: f64,
) -> Generator {
    let slots = space
        .slots()
        .iter()
        .map(|sig| match sig.kind {
            SlotKind::Group | SlotKind::Vector => {
                GenSlot::Vector(random_vector(alg, rng, spread))
            }
            SlotKind::Covector => GenSlot::Covector(random_dual(alg, rng, spread)),
        })
        .collect();
    Generator::new(space, slots).expect("random generator is well-formed")
}
