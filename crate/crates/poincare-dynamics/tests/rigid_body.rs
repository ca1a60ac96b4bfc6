//! Classical checks on the first-order families: the free rigid body and
//! its Lagrangian/Hamiltonian reductions.

use nalgebra::{DMatrix, DVector};
use poincare_bundles::{BundlePoint, SpaceId};
use poincare_dynamics::{
    integrate, rhs, EOMFamily, QuadraticLagrangian, ScalarField, State,
};
use poincare_lie::algebras::{abelian, so3};
use poincare_lie::{Algebra, AlgebraVector, DualVector, GroupElement};

const DT: f64 = 1e-3;
const LONG_RUN: usize = 10_000;

/// Kinetic energy on the dual side: `h(μ) = ½⟨μ, I⁻¹μ⟩`, independent of `g`.
fn rigid_body_energy(inertia: &[f64]) -> ScalarField {
    let inv: Vec<f64> = inertia.iter().map(|x| 1.0 / x).collect();
    let inv_eval = inv.clone();
    ScalarField::new("rigid-body-energy", SpaceId::TstarG, move |p: &BundlePoint| {
        let mu = &p.cov(1).comps;
        0.5 * mu
            .iter()
            .zip(&inv_eval)
            .map(|(m, i)| m * m * i)
            .sum::<f64>()
    })
    .with_partials(move |p: &BundlePoint| {
        let mu = &p.cov(1).comps;
        let dmu = DVector::from_iterator(mu.len(), mu.iter().zip(&inv).map(|(m, i)| m * i));
        vec![DVector::zeros(mu.len()), dmu]
    })
}

/// `V(g) = tr(A g)` with its right-trivialized gradient.
fn trace_potential(alg: &Algebra, a: DMatrix<f64>) -> ScalarField {
    let alg = alg.clone();
    let a_eval = a.clone();
    ScalarField::new("trace-potential", SpaceId::TstarG, move |p: &BundlePoint| {
        (&a_eval * &p.group().mat).trace()
    })
    .with_partials(move |p: &BundlePoint| {
        let dim = alg.dim();
        let mut dg = DVector::zeros(dim);
        for j in 0..dim {
            let ej = alg.hat(&AlgebraVector::basis(&alg, j).comps);
            dg[j] = (&a * ej * &p.group().mat).trace();
        }
        vec![dg, DVector::zeros(dim)]
    })
}

/// The reduced momentum equation at `ξ = (1,1,1)`, `I = diag(1,2,3)` equals
/// the pairing oracle `⟨π̇, e_k⟩ = ⟨π, [ξ, e_k]⟩`, with the value frozen.
#[test]
fn reduced_rhs_matches_pairing_oracle() {
    let alg = so3();
    let inertia = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0, 3.0]));
    let lag = QuadraticLagrangian::new(SpaceId::TG, vec![inertia.clone()], None).unwrap();

    let xi = AlgebraVector::from_slice(&alg, &[1.0, 1.0, 1.0]);
    let pi = &inertia * &xi.comps;
    let state = State::new(&alg, None, vec![pi.clone()]);
    let d = rhs(EOMFamily::EpG, &lag.field(), &state, Some(&lag.legendre())).unwrap();

    let pi_dual = DualVector {
        alg: alg.clone(),
        comps: pi,
    };
    for k in 0..3 {
        let ek = AlgebraVector::basis(&alg, k);
        let oracle = pi_dual.pairing(&xi.bracket(&ek));
        assert!(
            (d.fibers[0][k] - oracle).abs() < 1e-12,
            "component {k}: rhs {} vs oracle {oracle}",
            d.fibers[0][k]
        );
    }
    let frozen = [1.0, -2.0, 1.0];
    for k in 0..3 {
        assert!((d.fibers[0][k] - frozen[k]).abs() < 1e-12);
    }
}

/// On an abelian algebra the reduced momentum equation is static.
#[test]
fn abelian_reduction_is_static() {
    let alg = abelian(4);
    let lag = QuadraticLagrangian::isotropic(SpaceId::TG, 4);
    let state = State::new(&alg, None, vec![DVector::from_vec(vec![1.0, -2.0, 0.5, 3.0])]);
    let d = rhs(EOMFamily::EpG, &lag.field(), &state, Some(&lag.legendre())).unwrap();
    assert_eq!(d.fibers[0].amax(), 0.0);
}

/// For a `g`-independent Hamiltonian the momentum component of the full
/// cotangent flow coincides with the dual-side reduced flow exactly.
#[test]
fn cotangent_flow_reduces_exactly_when_g_independent() {
    let alg = so3();
    let h = rigid_body_energy(&[1.0, 2.0, 3.0]);
    let mu = DVector::from_vec(vec![0.7, -1.3, 2.1]);

    let full = State::new(
        &alg,
        Some(GroupElement::exp(&AlgebraVector::from_slice(
            &alg,
            &[0.3, 0.1, -0.5],
        ))),
        vec![mu.clone()],
    );
    let reduced = State::new(&alg, None, vec![mu]);

    let d_full = rhs(EOMFamily::HamTstarG, &h, &full, None).unwrap();
    let d_reduced = rhs(EOMFamily::LpGstar, &h, &reduced, None).unwrap();
    assert!(
        (&d_full.fibers[0] - &d_reduced.fibers[0]).amax() < 1e-14,
        "momentum equations disagree"
    );
}

/// The dual-side flow preserves both Casimir and energy over a long run.
#[test]
fn casimir_and_energy_survive_long_dual_flow() {
    let alg = so3();
    let h = rigid_body_energy(&[1.0, 2.0, 3.0]);
    let mu0 = DVector::from_vec(vec![1.0, 0.2, -0.7]);
    let s0 = State::new(&alg, None, vec![mu0.clone()]);
    let traj = integrate(EOMFamily::LpGstar, &h, None, &s0, DT, LONG_RUN).unwrap();

    let casimir0 = mu0.dot(&mu0);
    let energy0 = h.eval(&poincare_dynamics::embed(EOMFamily::LpGstar, &s0, &[]));
    let mut casimir_drift: f64 = 0.0;
    let mut energy_drift: f64 = 0.0;
    for s in &traj.states {
        let mu = &s.fibers[0];
        casimir_drift = casimir_drift.max((mu.dot(mu) - casimir0).abs());
        let e = h.eval(&poincare_dynamics::embed(EOMFamily::LpGstar, s, &[]));
        energy_drift = energy_drift.max((e - energy0).abs());
    }
    assert!(casimir_drift < 1e-8, "Casimir drift {casimir_drift:.3e}");
    assert!(energy_drift < 1e-8, "energy drift {energy_drift:.3e}");
}

/// The group slot stays orthogonal to tight tolerance over a long flow with
/// a potential.
#[test]
fn group_slot_stays_on_the_group() {
    let alg = so3();
    let a = DMatrix::from_row_slice(3, 3, &[0.2, -0.5, 0.1, 0.4, 0.3, 0.0, -0.1, 0.2, 0.6]);
    let h = {
        let kinetic = rigid_body_energy(&[1.0, 2.0, 3.0]);
        let potential = trace_potential(&alg, a);
        ScalarField::new("heavy-body", SpaceId::TstarG, {
            let kinetic = kinetic.clone();
            let potential = potential.clone();
            move |p: &BundlePoint| kinetic.eval(p) + potential.eval(p)
        })
        .with_partials(move |p: &BundlePoint| {
            let k = kinetic.partials(p);
            let v = potential.partials(p);
            k.into_iter().zip(v).map(|(a, b)| a + b).collect()
        })
    };
    let s0 = State::new(
        &alg,
        Some(GroupElement::identity(&alg)),
        vec![DVector::from_vec(vec![1.0, 0.2, -0.7])],
    );
    let traj = integrate(EOMFamily::HamTstarG, &h, None, &s0, DT, LONG_RUN).unwrap();
    let eye = DMatrix::<f64>::identity(3, 3);
    let mut worst: f64 = 0.0;
    for s in &traj.states {
        let g = &s.group.as_ref().unwrap().mat;
        worst = worst.max((g.transpose() * g - &eye).amax());
    }
    assert!(worst < 1e-8, "orthogonality residual {worst:.3e}");
}

/// Halving the step divides the worst energy drift by ~16; anything far
/// below that would expose a wrong-order stepper (or a wrong sign in the
/// exponential pull-back).
#[test]
fn energy_drift_scales_at_fourth_order() {
    let alg = so3();
    let h = rigid_body_energy(&[1.0, 2.0, 3.0]);
    let mu0 = DVector::from_vec(vec![1.0, 0.2, -0.7]);

    let drift = |dt: f64, steps: usize| -> f64 {
        let s0 = State::new(&alg, None, vec![mu0.clone()]);
        let traj = integrate(EOMFamily::LpGstar, &h, None, &s0, dt, steps).unwrap();
        let e0 = h.eval(&poincare_dynamics::embed(EOMFamily::LpGstar, &s0, &[]));
        traj.states
            .iter()
            .map(|s| {
                (h.eval(&poincare_dynamics::embed(EOMFamily::LpGstar, s, &[])) - e0).abs()
            })
            .fold(0.0, f64::max)
    };

    let coarse = drift(4e-2, 250);
    let fine = drift(2e-2, 500);
    let ratio = coarse / fine;
    assert!(
        ratio >= 15.0,
        "energy drift ratio {ratio:.2} (coarse {coarse:.3e}, fine {fine:.3e})"
    );
}

/// The momentum-form tangent flow and the cotangent flow are images of each
/// other under the fiber derivative.
#[test]
fn tangent_and_cotangent_flows_agree_through_the_fiber_derivative() {
    let alg = so3();
    let inertia = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0, 3.0]));
    let lag = QuadraticLagrangian::new(SpaceId::TG, vec![inertia], None).unwrap();
    let h = rigid_body_energy(&[1.0, 2.0, 3.0]);

    let pi0 = DVector::from_vec(vec![0.9, -0.4, 1.2]);
    let g0 = GroupElement::exp(&AlgebraVector::from_slice(&alg, &[0.2, -0.1, 0.4]));
    let lag_state = State::new(&alg, Some(g0.clone()), vec![pi0.clone()]);
    let ham_state = State::new(&alg, Some(g0), vec![pi0]);

    let lag_traj = integrate(
        EOMFamily::ElTg,
        &lag.field(),
        Some(&lag.legendre()),
        &lag_state,
        1e-2,
        200,
    )
    .unwrap();
    let ham_traj = integrate(EOMFamily::HamTstarG, &h, None, &ham_state, 1e-2, 200).unwrap();

    let worst = lag_traj
        .states
        .iter()
        .zip(&ham_traj.states)
        .map(|(a, b)| a.distance(b))
        .fold(0.0, f64::max);
    assert!(worst < 1e-9, "flows diverge by {worst:.3e}");
}
