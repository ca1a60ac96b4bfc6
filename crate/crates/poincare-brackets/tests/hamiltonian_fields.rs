//! Consistency of the symplectic generators with the equation-of-motion
//! right-hand sides, plus the audit paths that reject inconsistent fields.

mod common;

use common::{all_slots, fiber_comps, quad_field};
use nalgebra::DVector;
use poincare_brackets::{hamiltonian_vf, BracketError, FormId};
use poincare_bundles::{
    random_point, right_invariant_field, BundlePoint, GenSlot, SlotKind, SpaceId,
};
use poincare_dynamics::{rhs, EOMFamily, ScalarField, State};
use poincare_lie::algebras::{se2, so3};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0xc0de_f11e_d00d_cafe;
const MATCH_TOL: f64 = 1e-12;

/// Repackage a bundle point as an equation-of-motion state, fiber slots in
/// point order.
fn point_state(p: &BundlePoint) -> State {
    let fibers = (1..p.space().slot_count())
        .map(|i| fiber_comps(p, i))
        .collect();
    State::new(p.alg(), Some(p.group().clone()), fibers)
}

#[test]
fn generators_reproduce_the_hamiltonian_equations() {
    let cases = [
        (FormId::OmegaGGstar, EOMFamily::HamTstarG),
        (FormId::OmegaTstarTG, EOMFamily::HamTstarTg),
        (FormId::OmegaTstarTstarG, EOMFamily::HamTstarTstarG),
        (FormId::OmegaTTstarG, EOMFamily::HamTTstarG),
    ];
    for alg in [so3(), se2()] {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for (form, family) in cases {
            let space = form.space();
            for rep in 0..3 {
                let h = quad_field("h", space, &alg, &mut rng, &all_slots(space));
                let p = random_point(space, &alg, &mut rng, 0.6);
                let gen = hamiltonian_vf(form, &h, &p).unwrap();
                let deriv = rhs(family, &h, &point_state(&p), None).unwrap();

                let group_vel = deriv.group_vel.as_ref().unwrap();
                assert!(
                    (group_vel - &gen.vec(0).comps).norm()
                        <= MATCH_TOL * (1.0 + group_vel.norm()),
                    "{} vs {family} rep {rep}: group velocity mismatch",
                    form.token()
                );

                let value = right_invariant_field(&gen, &p);
                for (j, rate) in deriv.fibers.iter().enumerate() {
                    let slot = j + 1;
                    let comps = match p.space().slots()[slot].kind {
                        SlotKind::Vector => &value.vec(slot).comps,
                        SlotKind::Covector => &value.cov(slot).comps,
                        SlotKind::Group => unreachable!(),
                    };
                    assert!(
                        (rate - comps).norm() <= MATCH_TOL * (1.0 + rate.norm()),
                        "{} vs {family} rep {rep}: fiber {slot} rate mismatch\n  eom: {rate}\n  field: {comps}",
                        form.token()
                    );
                }
            }
        }
    }
}

#[test]
fn the_orbit_generator_is_the_momentum_gradient() {
    let alg = so3();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x01);
    for rep in 0..3 {
        let h = quad_field("h", SpaceId::TstarG, &alg, &mut rng, &[1]);
        let p = random_point(SpaceId::TstarG, &alg, &mut rng, 0.8);
        let gen = hamiltonian_vf(FormId::Kks, &h, &p).unwrap();
        let grad = &h.partials(&p)[1];
        assert!(
            (grad - &gen.vec(0).comps).norm() <= MATCH_TOL * (1.0 + grad.norm()),
            "rep {rep}: generator differs from momentum gradient"
        );
        assert!(
            gen.cov(1).norm() == 0.0,
            "rep {rep}: orbit generator must not move the momentum slot directly"
        );
    }
}

#[test]
fn a_constant_hamiltonian_generates_the_zero_field() {
    let alg = se2();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x02);
    for form in [
        FormId::OmegaGGstar,
        FormId::OmegaTstarTG,
        FormId::OmegaTstarTstarG,
        FormId::OmegaTTstarG,
    ] {
        let space = form.space();
        let h = ScalarField::new("const", space, |_| 1.25);
        let p = random_point(space, &alg, &mut rng, 0.7);
        let gen = hamiltonian_vf(form, &h, &p).unwrap();
        let norm: f64 = gen
            .slots()
            .iter()
            .map(|s| match s {
                GenSlot::Vector(x) => x.norm(),
                GenSlot::Covector(m) => m.norm(),
            })
            .sum();
        assert_eq!(norm, 0.0, "{}: constant field moved the point", form.token());
    }
}

#[test]
fn inconsistent_analytic_gradients_are_rejected() {
    let alg = so3();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x03);
    // The claimed gradient disagrees with the evaluated values, so the
    // audit must refuse to return a generator.
    let lying = ScalarField::new("drift", SpaceId::TstarG, |p: &BundlePoint| {
        p.cov(1).comps[0]
    })
    .with_partials(|p: &BundlePoint| {
        vec![
            DVector::zeros(p.alg().dim()),
            DVector::from_column_slice(&[0.0, 0.0, 3.0]),
        ]
    });
    let p = random_point(SpaceId::TstarG, &alg, &mut rng, 0.8);
    match hamiltonian_vf(FormId::OmegaGGstar, &lying, &p) {
        Err(BracketError::Residual { residual, tol, .. }) => {
            assert!(residual > tol, "audit reported {residual} within {tol}");
        }
        other => panic!("expected a residual rejection, got {other:?}"),
    }
}
