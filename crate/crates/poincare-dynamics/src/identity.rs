//! Consistency checks for second-order Lagrangian dynamics.
//!
//! Starting from a point `(g, ξ, ξ̇)` of the second-order bundle, the flow of
//! the second-order equations is integrated a few steps both backward and
//! forward so the point of interest sits at the center of a short sampled
//! trajectory. Three kinds of residuals are measured there with fourth-order
//! time stencils applied to analytically evaluated momenta (one numerical
//! differentiation layer, never nested):
//!
//! * **momentum**: the evolving fibers match the analytic fiber derivatives
//!   of the Lagrangian — `d/dt δL/δξ̇ = δL/δξ − p`, `d/dt p = ad*_ξ p +
//!   T*R_g δL/δg`, and `d/dt ξ` equals the acceleration recovered from its
//!   momentum;
//! * **fiber transport**: with the base momentum initialized as
//!   `p = δL/δξ − ad*_ξ δL/δξ̇`, the fiber derivative is coadjointly
//!   transported at the center point, so `ad*_ξ̇ δL/δξ̇ = (d/dt − ad*_ξ)(d/dt
//!   δL/δξ̇)` holds there;
//! * **immersion**: the center state pushed through the second-order
//!   immersion satisfies the full second-tangent-bundle equations — shared
//!   components of the right-hand sides agree, and the full system's base
//!   momentum equation differs from the actual `d/dt δL/δξ` by exactly the
//!   fiber-transport defect.

use nalgebra::DVector;
use poincare_bundles::{BundlePoint, SpaceId};
use poincare_lie::GroupElement;

use crate::error::DynError;
use crate::family::EOMFamily;
use crate::field::ScalarField;
use crate::integrate::integrate;
use crate::legendre::LegendreMap;
use crate::rhs::rhs;
use crate::state::State;

/// Residuals of the second-order identities, sup-norm over components.
#[derive(Debug, Clone, Copy)]
pub struct SecondOrderReport {
    /// Momentum balance along the flow.
    pub momentum_residual: f64,
    /// Coadjoint transport of the fiber derivative at the center point.
    pub fiber_residual: f64,
    /// Agreement of the immersed state's derivative with the second tangent
    /// bundle equations.
    pub immersion_residual: f64,
}

impl SecondOrderReport {
    pub fn max(&self) -> f64 {
        self.momentum_residual
            .max(self.fiber_residual)
            .max(self.immersion_residual)
    }
}

const HALF_STEPS: usize = 4;
const DT: f64 = 1e-3;

/// Check the second-order identities on a short flow centered at `point`.
pub fn second_order_identity_check(
    lagrangian: &ScalarField,
    legendre: &LegendreMap,
    point: &BundlePoint,
) -> Result<SecondOrderReport, DynError> {
    assert_eq!(point.space(), SpaceId::T2G);
    let alg = point.alg().clone();
    let ads = |x: &DVector<f64>, m: &DVector<f64>| alg.ad_star(x, m);

    // Momentum state (g, ξ, π₃, p) matching the given point. The base
    // momentum p = δL/δξ − ad*_ξ δL/δξ̇ puts the center on the subset where
    // the fiber momentum is coadjointly transported, which is where the
    // immersed picture coincides with the intrinsic one.
    let parts0 = lagrangian.partials(point);
    let xi0 = point.vec(1).comps.clone();
    let pi3_0 = parts0[2].clone();
    let p0 = &parts0[1] - ads(&xi0, &pi3_0);
    let state0 = State::new(&alg, Some(point.group().clone()), vec![xi0, pi3_0, p0]);

    // Sample the flow through the point: backward then forward, so the
    // point itself is the center sample.
    let back = integrate(
        EOMFamily::El2T2g,
        lagrangian,
        Some(legendre),
        &state0,
        -DT,
        HALF_STEPS,
    )?;
    let fore = integrate(
        EOMFamily::El2T2g,
        lagrangian,
        Some(legendre),
        &state0,
        DT,
        HALF_STEPS,
    )?;
    let states: Vec<&State> = back.states[1..]
        .iter()
        .rev()
        .chain(fore.states.iter())
        .collect();

    // Analytic momenta along the flow.
    let n = states.len();
    let mut p_mom = Vec::with_capacity(n); // δL/δξ
    let mut q_mom = Vec::with_capacity(n); // δL/δξ̇
    let mut qdot = Vec::with_capacity(n); // d/dt δL/δξ̇ = δL/δξ − p
    let mut transported = Vec::with_capacity(n); // ad*_ξ δL/δξ̇
    let mut xis = Vec::with_capacity(n);
    let mut ps = Vec::with_capacity(n);
    let mut samples = Vec::with_capacity(n);
    for s in states {
        let xidot =
            crate::rhs::recover_velocities(EOMFamily::El2T2g, lagrangian, s, Some(legendre))?
                .remove(0);
        let at = crate::state::embed(EOMFamily::El2T2g, s, &[xidot.clone()]);
        let parts = lagrangian.partials(&at);
        p_mom.push(parts[1].clone());
        q_mom.push(parts[2].clone());
        qdot.push(&parts[1] - &s.fibers[2]);
        transported.push(ads(&s.fibers[0], &parts[2]));
        xis.push(s.fibers[0].clone());
        ps.push(s.fibers[2].clone());
        samples.push((
            s.group.clone().expect("second-order states carry the group"),
            s.fibers[0].clone(),
            xidot,
            parts[2].clone(),
            parts[0].clone(),
        ));
    }

    let m = HALF_STEPS;
    let stencil = |f: &dyn Fn(usize) -> DVector<f64>| -> DVector<f64> {
        (-f(m + 2) + f(m + 1) * 8.0 - f(m - 1) * 8.0 + f(m - 2)) / (12.0 * DT)
    };
    let (_, xi_m, xidot_m, q_m, dg_m) = samples[m].clone();

    // Momentum balance: each evolving fiber differentiates to its equation,
    // with the time derivatives of analytic series taken by the stencil.
    let fiber_eq = (stencil(&|k| q_mom[k].clone()) - &qdot[m]).amax();
    let base_eq = (stencil(&|k| ps[k].clone()) - ads(&xi_m, &ps[m]) - &dg_m).amax();
    let kinematic = (stencil(&|k| xis[k].clone()) - &xidot_m).amax();
    let momentum_residual = fiber_eq.max(base_eq).max(kinematic);

    // Fiber transport at the center: the acceleration momentum's rate is its
    // coadjoint transport, so transporting the transported series once more
    // reproduces ad*_ξ̇ δL/δξ̇.
    let fiber_residual = (ads(&xidot_m, &q_m) + ads(&xi_m, &transported[m])
        - stencil(&|k| transported[k].clone()))
    .amax();

    // Immersed-state derivative against the second tangent bundle equations.
    let pdot_flow = stencil(&|k| p_mom[k].clone());
    let qddot_flow = stencil(&|k| qdot[k].clone());
    let transport_defect = &qddot_flow - ads(&xi_m, &qdot[m]) - ads(&xidot_m, &q_m);
    let immersion_residual = immersion_check(
        lagrangian,
        &samples[m],
        &p_mom[m],
        &qdot[m],
        &pdot_flow,
        &transport_defect,
        &alg,
    )?;

    Ok(SecondOrderReport {
        momentum_residual,
        fiber_residual,
        immersion_residual,
    })
}

type Sample = (
    GroupElement,
    DVector<f64>,
    DVector<f64>,
    DVector<f64>,
    DVector<f64>,
);

/// Push the center sample through the second-order immersion and evaluate
/// the full second-tangent-bundle equations there. The group velocity, the
/// base-fiber kinematics, and the acceleration-momentum equation must
/// reproduce the flow's own derivatives, and the base-momentum equation must
/// differ from the flow's `d/dt δL/δξ` by exactly the transport defect.
fn immersion_check(
    lagrangian: &ScalarField,
    sample: &Sample,
    p_m: &DVector<f64>,
    qdot_m: &DVector<f64>,
    pdot_flow: &DVector<f64>,
    transport_defect: &DVector<f64>,
    alg: &poincare_lie::Algebra,
) -> Result<f64, DynError> {
    let (g, xi, xidot, q_m, _) = sample.clone();

    // The Lagrangian, read on the second tangent bundle through the
    // immersion: value at (g, x1, x2, x3) is the second-order value at
    // (g, x2, x3), independent of x1.
    let immersed = {
        let l = lagrangian.clone();
        ScalarField::new(
            format!("immersed-{}", lagrangian.name()),
            SpaceId::TTG,
            move |p: &BundlePoint| {
                let at = BundlePoint::new(
                    SpaceId::T2G,
                    vec![
                        p.slots()[0].clone(),
                        p.slots()[2].clone(),
                        p.slots()[3].clone(),
                    ],
                )
                .expect("second-order signature");
                l.eval(&at)
            },
        )
    };

    // Immersed momentum state: x1 = ξ, π₂ = δL/δξ, π₃ = δL/δξ̇; its
    // velocities are known, so hand them to the inversion directly.
    let state = State::new(alg, Some(g), vec![xi.clone(), p_m.clone(), q_m.clone()]);
    let known = {
        let x2 = xi.clone();
        let x3 = xidot.clone();
        LegendreMap::custom(move |_, _| vec![x2.clone(), x3.clone()])
    };
    let d = rhs(EOMFamily::ElTtgFull, &immersed, &state, Some(&known))?;

    // The group moves with ξ, the x1 kinematics reproduces ξ̇, and the
    // acceleration-momentum equation reproduces the flow's d/dt δL/δξ̇.
    let group = (d.group_vel.as_ref().expect("full family carries the group") - &xi).amax();
    let kin = (&d.fibers[0] - &xidot).amax();
    let dq = (&d.fibers[2] - qdot_m).amax();
    // Base-momentum bridge: the immersed equation equals the actual d/dt
    // δL/δξ minus the fiber-transport defect.
    let bridge = (pdot_flow - &d.fibers[1] - transport_defect).amax();
    Ok(group.max(kin).max(dq).max(bridge))
}
