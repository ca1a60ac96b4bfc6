//! Shared builders for the bracket, form, and generator integration tests.

#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use poincare_bundles::{BundlePoint, GenSlot, Generator, SlotKind, SpaceId};
use poincare_dynamics::ScalarField;
use poincare_lie::{Algebra, AlgebraVector, DualVector};
use rand::Rng;

/// Component column of fiber slot `i` of `p` (vector or covector).
pub fn fiber_comps(p: &BundlePoint, i: usize) -> DVector<f64> {
    match p.space().slots()[i].kind {
        SlotKind::Vector => p.vec(i).comps.clone(),
        SlotKind::Covector => p.cov(i).comps.clone(),
        SlotKind::Group => panic!("slot {i} is the group slot, not a fiber"),
    }
}

/// Every slot index of `space`, for building fields that read the whole point.
pub fn all_slots(space: SpaceId) -> Vec<usize> {
    (0..space.slot_count()).collect()
}

/// Random scalar field with a trace potential on the group slot and
/// linear-plus-quadratic terms on fiber slots, restricted to the `active`
/// slot indices.  Analytic partial derivatives are attached, so bracket
/// evaluations of this field never fall back to finite differences.
pub fn quad_field<R: Rng>(
    name: &str,
    space: SpaceId,
    alg: &Algebra,
    rng: &mut R,
    active: &[usize],
) -> ScalarField {
    poly_field(name, space, alg, rng, active, 0.0, true)
}

/// Like [`quad_field`] but with an extra cubic term on each active fiber
/// slot and no analytic partials, forcing the finite-difference gradient.
pub fn cubic_field<R: Rng>(
    name: &str,
    space: SpaceId,
    alg: &Algebra,
    rng: &mut R,
    active: &[usize],
) -> ScalarField {
    poly_field(name, space, alg, rng, active, 0.3, false)
}

fn poly_field<R: Rng>(
    name: &str,
    space: SpaceId,
    alg: &Algebra,
    rng: &mut R,
    active: &[usize],
    cubic_amp: f64,
    analytic: bool,
) -> ScalarField {
    let dim = alg.dim();
    let n = alg.hat(&DVector::zeros(dim)).nrows();
    let slots = space.slots();

    let group_active = active.contains(&0) && slots[0].kind == SlotKind::Group;
    let amat: Option<DMatrix<f64>> =
        group_active.then(|| DMatrix::from_fn(n, n, |_, _| rng.gen_range(-0.4..0.4)));

    let mut fibers: Vec<Option<(DVector<f64>, DMatrix<f64>, DVector<f64>)>> =
        vec![None; slots.len()];
    for (i, sig) in slots.iter().enumerate() {
        if sig.kind == SlotKind::Group || !active.contains(&i) {
            continue;
        }
        let c = DVector::from_fn(dim, |_, _| rng.gen_range(-0.5..0.5));
        let b = DMatrix::from_fn(dim, dim, |_, _| rng.gen_range(-0.4..0.4));
        let q = (&b + b.transpose()) * 0.5;
        let w = if cubic_amp > 0.0 {
            DVector::from_fn(dim, |_, _| rng.gen_range(-cubic_amp..cubic_amp))
        } else {
            DVector::zeros(dim)
        };
        fibers[i] = Some((c, q, w));
    }

    let amat_eval = amat.clone();
    let fibers_eval = fibers.clone();
    let field = ScalarField::new(name, space, move |p: &BundlePoint| {
        let mut v = 0.0;
        if let Some(a) = &amat_eval {
            v += (a * &p.group().mat).trace();
        }
        for (i, coeff) in fibers_eval.iter().enumerate() {
            if let Some((c, q, w)) = coeff {
                let x = fiber_comps(p, i);
                v += c.dot(&x) + 0.5 * x.dot(&(q * &x)) + w.dot(&x.map(|t| t * t * t));
            }
        }
        v
    });
    if !analytic {
        return field;
    }

    let alg = alg.clone();
    field.with_partials(move |p: &BundlePoint| {
        let mut out = Vec::with_capacity(p.space().slot_count());
        for (i, sig) in p.space().slots().iter().enumerate() {
            if sig.kind == SlotKind::Group {
                out.push(match &amat {
                    Some(a) => DVector::from_fn(dim, |j, _| {
                        let mut e = DVector::zeros(dim);
                        e[j] = 1.0;
                        (a * alg.hat(&e) * &p.group().mat).trace()
                    }),
                    None => DVector::zeros(dim),
                });
            } else {
                out.push(match &fibers[i] {
                    Some((c, q, _)) => c + q * fiber_comps(p, i),
                    None => DVector::zeros(dim),
                });
            }
        }
        out
    })
}

/// Field `p ↦ ⟨c, x_slot⟩` reading one fiber slot, with analytic partials.
pub fn linear_field(
    name: &str,
    space: SpaceId,
    alg: &Algebra,
    slot: usize,
    c: DVector<f64>,
) -> ScalarField {
    let dim = alg.dim();
    let c_eval = c.clone();
    ScalarField::new(name, space, move |p: &BundlePoint| {
        c_eval.dot(&fiber_comps(p, slot))
    })
    .with_partials(move |p: &BundlePoint| {
        (0..p.space().slot_count())
            .map(|i| if i == slot { c.clone() } else { DVector::zeros(dim) })
            .collect()
    })
}

/// Field `p ↦ ‖x_slot‖²` with analytic partials.
pub fn norm_squared_field(name: &str, space: SpaceId, alg: &Algebra, slot: usize) -> ScalarField {
    let dim = alg.dim();
    ScalarField::new(name, space, move |p: &BundlePoint| {
        fiber_comps(p, slot).norm_squared()
    })
    .with_partials(move |p: &BundlePoint| {
        (0..p.space().slot_count())
            .map(|i| {
                if i == slot {
                    fiber_comps(p, slot) * 2.0
                } else {
                    DVector::zeros(dim)
                }
            })
            .collect()
    })
}

/// Slotwise linear combination `s·a + t·b` of two generators.
pub fn combine(a: &Generator, b: &Generator, s: f64, t: f64) -> Generator {
    let slots = a
        .slots()
        .iter()
        .zip(b.slots())
        .map(|(x, y)| match (x, y) {
            (GenSlot::Vector(u), GenSlot::Vector(v)) => GenSlot::Vector(AlgebraVector {
                alg: u.alg.clone(),
                comps: &u.comps * s + &v.comps * t,
            }),
            (GenSlot::Covector(u), GenSlot::Covector(v)) => GenSlot::Covector(DualVector {
                alg: u.alg.clone(),
                comps: &u.comps * s + &v.comps * t,
            }),
            _ => unreachable!("generator slot kinds disagree"),
        })
        .collect();
    Generator::new(a.space(), slots).expect("combination keeps the slot signature")
}
