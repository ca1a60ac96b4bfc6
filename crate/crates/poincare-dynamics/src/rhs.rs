//! Right-hand sides of every equation family.
//!
//! Hamiltonian-side families differentiate the field at the current bundle
//! point. Lagrangian-side families first recover velocities from the stored
//! momenta through the fiber-derivative inverse, then evaluate the remaining
//! field gradients at the reconstructed point; wherever an equation
//! references a fiber derivative that is itself a state variable, the state
//! value is used directly, so no derivative is ever re-approximated.

use nalgebra::DVector;

use crate::error::DynError;
use crate::family::EOMFamily;
use crate::field::ScalarField;
use crate::legendre::LegendreMap;
use crate::state::{embed, State, StateDeriv};

/// Evaluate the time derivative of `state` under `family` driven by `field`.
///
/// Lagrangian-side families require `legendre`; Hamiltonian-side families
/// ignore it.
pub fn rhs(
    family: EOMFamily,
    field: &ScalarField,
    state: &State,
    legendre: Option<&LegendreMap>,
) -> Result<StateDeriv, DynError> {
    state.check(family)?;
    assert_eq!(
        field.space(),
        family.field_space(),
        "{family} drives fields on {}, got one on {}",
        family.field_space(),
        field.space()
    );

    let velocities = recover_velocities(family, field, state, legendre)?;
    let point = embed(family, state, &velocities);
    let parts = field.partials(&point);

    let alg = state.alg.clone();
    let ad = |x: &DVector<f64>, y: &DVector<f64>| alg.bracket(x, y);
    let ads = |x: &DVector<f64>, m: &DVector<f64>| alg.ad_star(x, m);
    let fib = |i: usize| &state.fibers[i];

    use EOMFamily::*;
    let deriv = match family {
        ElTg => {
            let (xi, pi, dg) = (&velocities[0], fib(0), &parts[0]);
            StateDeriv {
                group_vel: Some(xi.clone()),
                fibers: vec![dg + ads(xi, pi)],
            }
        }
        EpG => {
            let (xi, pi) = (&velocities[0], fib(0));
            StateDeriv {
                group_vel: None,
                fibers: vec![ads(xi, pi)],
            }
        }
        HamTstarG => {
            let (mu, dg, dmu) = (fib(0), &parts[0], &parts[1]);
            StateDeriv {
                group_vel: Some(dmu.clone()),
                fibers: vec![ads(dmu, mu) - dg],
            }
        }
        LpGstar => {
            let (mu, dmu) = (fib(0), &parts[1]);
            StateDeriv {
                group_vel: None,
                fibers: vec![ads(dmu, mu)],
            }
        }
        ElTtgFull | ElTtgAlgAlgAlg => {
            let (x1, pi2, pi3) = (fib(0), fib(1), fib(2));
            let (x2, x3) = (&velocities[0], &velocities[1]);
            let d1 = &parts[1];
            let mut pi2dot = ads(x1, d1) + ads(x2, pi2) + ads(x3, pi3);
            if family == ElTtgFull {
                pi2dot += &parts[0];
            }
            StateDeriv {
                group_vel: (family == ElTtgFull).then(|| x2.clone()),
                fibers: vec![x3 + ad(x1, x2), pi2dot, d1 + ads(x2, pi3)],
            }
        }
        ElTtgGrpAlgAlg | ElTtgAlgAlg => {
            let (pi2, pi3) = (fib(0), fib(1));
            let (x2, x3) = (&velocities[0], &velocities[1]);
            let mut pi2dot = ads(x2, pi2) + ads(x3, pi3);
            if family == ElTtgGrpAlgAlg {
                pi2dot += &parts[0];
            }
            StateDeriv {
                group_vel: (family == ElTtgGrpAlgAlg).then(|| x2.clone()),
                fibers: vec![pi2dot, ads(x2, pi3)],
            }
        }
        ElTtgGrpAlg | ElTTstarGrpAlg => {
            let (pi, xi, dg) = (fib(0), &velocities[0], &parts[0]);
            StateDeriv {
                group_vel: Some(xi.clone()),
                fibers: vec![dg + ads(xi, pi)],
            }
        }
        ElTtgAlg | ElTTstarAlg => {
            let (pi, xi) = (fib(0), &velocities[0]);
            StateDeriv {
                group_vel: None,
                fibers: vec![ads(xi, pi)],
            }
        }
        El2T2g | Ep2Gg => {
            let (xi, p) = (fib(0), fib(2));
            let xidot = &velocities[0];
            let dxi = &parts[1];
            let mut pdot = ads(xi, p);
            if family == El2T2g {
                pdot += &parts[0];
            }
            StateDeriv {
                group_vel: (family == El2T2g).then(|| xi.clone()),
                fibers: vec![xidot.clone(), dxi - p, pdot],
            }
        }
        HamTstarTg => {
            let (xi, mu, nu) = (fib(0), fib(1), fib(2));
            let (dg, dxi, dmu, dnu) = (&parts[0], &parts[1], &parts[2], &parts[3]);
            StateDeriv {
                group_vel: Some(dmu.clone()),
                fibers: vec![
                    dnu + ad(xi, dmu),
                    ads(dmu, mu) + ads(dnu, nu) - dg - ads(xi, dxi),
                    ads(dmu, nu) - dxi,
                ],
            }
        }
        LpGstarGstar => {
            let (mu, nu) = (fib(0), fib(1));
            let (dmu, dnu) = (&parts[2], &parts[3]);
            StateDeriv {
                group_vel: None,
                fibers: vec![ads(dmu, mu) + ads(dnu, nu), ads(dmu, nu)],
            }
        }
        HamTstarTstarG => {
            let (mu, nu, xi) = (fib(0), fib(1), fib(2));
            let (dg, dmu, dnu, dxi) = (&parts[0], &parts[1], &parts[2], &parts[3]);
            StateDeriv {
                group_vel: Some(dnu.clone()),
                fibers: vec![
                    dxi + ads(dnu, mu),
                    ads(dmu, mu) + ads(dnu, nu) - dg - ads(xi, dxi),
                    ad(xi, dnu) - dmu,
                ],
            }
        }
        LpGstarG => {
            let (nu, xi) = (fib(0), fib(1));
            let (dnu, dxi) = (&parts[2], &parts[3]);
            StateDeriv {
                group_vel: None,
                fibers: vec![ads(dnu, nu) - ads(xi, dxi), ad(xi, dnu)],
            }
        }
        HamTTstarG => {
            let (nu,) = (fib(2),);
            let (dg, dmu, dxi, dnu) = (&parts[0], &parts[1], &parts[2], &parts[3]);
            StateDeriv {
                group_vel: Some(dnu.clone()),
                fibers: vec![-dxi, dmu.clone(), ads(dnu, nu) - dg],
            }
        }
        ElTTstarGFull | ElTTstarDualAlgDual => {
            let (mu, pxi, pnu) = (fib(0), fib(1), fib(2));
            let (xi, nu) = (&velocities[0], &velocities[1]);
            let dmu = &parts[1];
            let mut pxidot = ads(xi, pxi) - ads(pnu, nu) - ads(dmu, mu);
            if family == ElTTstarGFull {
                pxidot += &parts[0];
            }
            StateDeriv {
                group_vel: (family == ElTTstarGFull).then(|| xi.clone()),
                fibers: vec![nu + ads(xi, mu), pxidot, dmu - ad(xi, pnu)],
            }
        }
        ElTTstarGrpAlgDual | ElTTstarAlgDual => {
            let (pxi, pnu) = (fib(0), fib(1));
            let (xi, nu) = (&velocities[0], &velocities[1]);
            let mut pxidot = ads(xi, pxi) - ads(pnu, nu);
            if family == ElTTstarGrpAlgDual {
                pxidot += &parts[0];
            }
            StateDeriv {
                group_vel: (family == ElTTstarGrpAlgDual).then(|| xi.clone()),
                fibers: vec![pxidot, -ad(xi, pnu)],
            }
        }
    };
    Ok(deriv)
}

/// Recover the velocities of a Lagrangian-side family from its momenta;
/// Hamiltonian-side families have none.
pub fn recover_velocities(
    family: EOMFamily,
    field: &ScalarField,
    state: &State,
    legendre: Option<&LegendreMap>,
) -> Result<Vec<DVector<f64>>, DynError> {
    let slots = family.velocity_slots();
    if slots.is_empty() {
        return Ok(Vec::new());
    }
    let map = legendre.ok_or_else(|| DynError::MissingLegendre {
        family: family.token().into(),
    })?;
    let dim = state.alg.dim();
    let zeros: Vec<DVector<f64>> = slots.iter().map(|_| DVector::zeros(dim)).collect();
    let base = embed(family, state, &zeros);
    let momenta: Vec<&DVector<f64>> = family
        .momentum_fibers()
        .iter()
        .map(|&i| &state.fibers[i])
        .collect();
    map.invert(field, &base, slots, &momenta)
}
