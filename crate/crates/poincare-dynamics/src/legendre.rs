//! Inversion of the fiber derivative: recover velocities from momenta.
//!
//! Lagrangian-side equation families keep momenta `πᵢ = δL/δvᵢ` as state and
//! need the map `π ↦ v` at a fixed base point. Quadratic kinetic terms invert
//! exactly; general fields fall back to a damped Newton iteration on the
//! stacked velocity components.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use poincare_bundles::{BundlePoint, SpaceId};
use poincare_lie::fd_step;

use crate::error::DynError;
use crate::family::space_velocity_slots;
use crate::field::{replace_fiber, ScalarField};

/// Convergence tolerance on the sup-norm momentum residual.
pub const LEGENDRE_TOL: f64 = 1e-10;
/// Iteration cap for the damped Newton fallback.
pub const LEGENDRE_MAX_ITER: usize = 50;

type CustomFn =
    dyn Fn(&BundlePoint, &[&DVector<f64>]) -> Vec<DVector<f64>> + Send + Sync;

/// How to invert the fiber derivative of a field.
#[derive(Clone)]
pub enum LegendreMap {
    /// Exact inverse of a fiberwise-quadratic field: `vᵢ = Mᵢ⁻¹ πᵢ`, with
    /// inverses aligned to the velocity slots of `space`.
    Quadratic {
        space: SpaceId,
        inverses: Vec<DMatrix<f64>>,
    },
    /// Damped Newton on the stacked velocity components.
    Newton,
    /// Caller-supplied inverse: receives the base point (velocity slots
    /// zeroed) and the momenta, returns the velocities.
    Custom(Arc<CustomFn>),
}

impl std::fmt::Debug for LegendreMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LegendreMap::Quadratic { space, .. } => write!(f, "LegendreMap::Quadratic({space})"),
            LegendreMap::Newton => write!(f, "LegendreMap::Newton"),
            LegendreMap::Custom(_) => write!(f, "LegendreMap::Custom"),
        }
    }
}

impl LegendreMap {
    /// A custom inverse from a closure.
    pub fn custom(
        f: impl Fn(&BundlePoint, &[&DVector<f64>]) -> Vec<DVector<f64>> + Send + Sync + 'static,
    ) -> Self {
        LegendreMap::Custom(Arc::new(f))
    }

    /// Recover the velocities at `base` (a field-space point whose velocity
    /// slots are zeroed) such that `δfield/δv_slots = momenta`.
    ///
    /// `slots` are field-space slot indices; `momenta` is aligned with them.
    pub fn invert(
        &self,
        field: &ScalarField,
        base: &BundlePoint,
        slots: &[usize],
        momenta: &[&DVector<f64>],
    ) -> Result<Vec<DVector<f64>>, DynError> {
        assert_eq!(slots.len(), momenta.len());
        match self {
            LegendreMap::Custom(f) => Ok(f(base, momenta)),
            LegendreMap::Quadratic { space, inverses } => {
                assert_eq!(
                    *space,
                    field.space(),
                    "quadratic inverse built for {space}, field lives on {}",
                    field.space()
                );
                let all = space_velocity_slots(*space);
                let mut out = Vec::with_capacity(slots.len());
                for (&slot, &pi) in slots.iter().zip(momenta) {
                    let idx = all
                        .iter()
                        .position(|&s| s == slot)
                        .expect("requested slot is a velocity slot of the space");
                    out.push(&inverses[idx] * pi);
                }
                Ok(out)
            }
            LegendreMap::Newton => newton_invert(field, base, slots, momenta),
        }
    }
}

/// Solve `δfield/δv(base + v) = π` by damped Newton on the stacked velocity
/// components, starting from zero.
fn newton_invert(
    field: &ScalarField,
    base: &BundlePoint,
    slots: &[usize],
    momenta: &[&DVector<f64>],
) -> Result<Vec<DVector<f64>>, DynError> {
    let dim = base.alg().dim();
    let n = slots.len() * dim;
    let target = stack(momenta.iter().map(|m| (*m).clone()).collect());

    let residual = |v: &DVector<f64>| -> DVector<f64> {
        let point = with_velocities(base, slots, v);
        let parts = field.partials(&point);
        let current = stack(slots.iter().map(|&s| parts[s].clone()).collect());
        current - &target
    };

    let mut v = DVector::zeros(n);
    let mut r = residual(&v);
    for iteration in 0..LEGENDRE_MAX_ITER {
        if r.amax() <= LEGENDRE_TOL {
            return Ok(unstack(&v, slots.len(), dim));
        }
        // Jacobian of the residual by central differences in v.
        let mut jac = DMatrix::zeros(n, n);
        for c in 0..n {
            let h = fd_step(v[c].abs());
            let mut vp = v.clone();
            let mut vm = v.clone();
            vp[c] += h;
            vm[c] -= h;
            let col = (residual(&vp) - residual(&vm)) / (2.0 * h);
            jac.set_column(c, &col);
        }
        let step = jac
            .lu()
            .solve(&r)
            .ok_or(DynError::LegendreFailed {
                residual: r.amax(),
                iterations: iteration,
            })?;
        // Backtrack until the residual actually decreases.
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let trial = &v - &(&step * lambda);
            let rt = residual(&trial);
            if rt.amax() < r.amax() {
                v = trial;
                r = rt;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            return Err(DynError::LegendreFailed {
                residual: r.amax(),
                iterations: iteration,
            });
        }
    }
    if r.amax() <= LEGENDRE_TOL {
        Ok(unstack(&v, slots.len(), dim))
    } else {
        Err(DynError::LegendreFailed {
            residual: r.amax(),
            iterations: LEGENDRE_MAX_ITER,
        })
    }
}

fn with_velocities(base: &BundlePoint, slots: &[usize], v: &DVector<f64>) -> BundlePoint {
    let dim = base.alg().dim();
    let mut point = base.clone();
    for (i, &slot) in slots.iter().enumerate() {
        let comps = DVector::from_iterator(dim, v.rows(i * dim, dim).iter().copied());
        point = replace_fiber(&point, slot, &comps);
    }
    point
}

fn stack(parts: Vec<DVector<f64>>) -> DVector<f64> {
    let total: usize = parts.iter().map(|p| p.len()).sum();
    let mut out = DVector::zeros(total);
    let mut at = 0;
    for p in parts {
        out.rows_mut(at, p.len()).copy_from(&p);
        at += p.len();
    }
    out
}

fn unstack(v: &DVector<f64>, k: usize, dim: usize) -> Vec<DVector<f64>> {
    (0..k)
        .map(|i| DVector::from_iterator(dim, v.rows(i * dim, dim).iter().copied()))
        .collect()
}
