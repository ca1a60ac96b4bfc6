//! Scalar fields on trivialized bundles with analytic or finite-difference
//! slot gradients.
//!
//! A [`ScalarField`] is a smooth function on one bundle space. Every equation
//! of motion consumes fields through [`ScalarField::partials`], which returns
//! one gradient vector per slot:
//!
//! * group slot — the right-trivialized derivative, component `j` equal to
//!   `d/dt|₀ f(exp(t e_j)·g, …)`;
//! * algebra slot — the fiber derivative `δf/δξ`, a dual vector;
//! * dual slot — the fiber derivative `δf/δμ`, an algebra vector.
//!
//! Analytic gradients are optional; when absent, central differences are
//! used. [`ScalarField::validate_partials`] cross-checks a supplied analytic
//! gradient against finite differences at random points and is called by
//! every constructor that registers one.

use std::sync::Arc;

use nalgebra::DVector;
use poincare_bundles::{random_point, BundlePoint, SlotValue, SpaceId};
use poincare_lie::{fd_step, Algebra, AlgebraVector, GroupElement};

use crate::error::DynError;

type EvalFn = dyn Fn(&BundlePoint) -> f64 + Send + Sync;
type GradFn = dyn Fn(&BundlePoint) -> Vec<DVector<f64>> + Send + Sync;

/// A named scalar function on one bundle space.
#[derive(Clone)]
pub struct ScalarField {
    name: String,
    space: SpaceId,
    eval: Arc<EvalFn>,
    grad: Option<Arc<GradFn>>,
}

impl std::fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ScalarField")
            .field("name", &self.name)
            .field("space", &self.space)
            .field("analytic_grad", &self.grad.is_some())
            .finish()
    }
}

impl ScalarField {
    /// A field evaluated by closure, with finite-difference gradients.
    pub fn new(
        name: impl Into<String>,
        space: SpaceId,
        eval: impl Fn(&BundlePoint) -> f64 + Send + Sync + 'static,
    ) -> Self {
        ScalarField {
            name: name.into(),
            space,
            eval: Arc::new(eval),
            grad: None,
        }
    }

    /// Attach an analytic gradient (one vector per slot, group slot in
    /// right-trivialized form). The closure is trusted here; call
    /// [`ScalarField::validate_partials`] to cross-check it.
    pub fn with_partials(
        mut self,
        grad: impl Fn(&BundlePoint) -> Vec<DVector<f64>> + Send + Sync + 'static,
    ) -> Self {
        self.grad = Some(Arc::new(grad));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn has_analytic_partials(&self) -> bool {
        self.grad.is_some()
    }

    /// Evaluate the field. Panics if the point lives on the wrong space.
    pub fn eval(&self, p: &BundlePoint) -> f64 {
        assert_eq!(
            p.space(),
            self.space,
            "field `{}` lives on {}, point on {}",
            self.name,
            self.space,
            p.space()
        );
        (self.eval)(p)
    }

    /// Slot gradients at `p`: analytic if registered, otherwise central
    /// finite differences.
    pub fn partials(&self, p: &BundlePoint) -> Vec<DVector<f64>> {
        match &self.grad {
            Some(g) => g(p),
            None => self.fd_partials(p),
        }
    }

    /// Finite-difference slot gradients, regardless of any registered
    /// analytic closure.
    pub fn fd_partials(&self, p: &BundlePoint) -> Vec<DVector<f64>> {
        let alg = p.alg().clone();
        let dim = alg.dim();
        let mut out = Vec::with_capacity(p.slots().len());
        for (slot, value) in p.slots().iter().enumerate() {
            let mut comps = DVector::zeros(dim);
            match value {
                SlotValue::Group(g) => {
                    let h = fd_step(g.norm());
                    for j in 0..dim {
                        let dir = &AlgebraVector::basis(&alg, j) * h;
                        let plus = self.eval(&replace_group(p, GroupElement::exp(&dir).mul(g)));
                        let minus =
                            self.eval(&replace_group(p, GroupElement::exp(&(-&dir)).mul(g)));
                        comps[j] = (plus - minus) / (2.0 * h);
                    }
                }
                SlotValue::Vector(x) => {
                    for j in 0..dim {
                        let h = fd_step(x.comps[j].abs());
                        comps[j] = (self.eval(&bump_fiber(p, slot, j, h))
                            - self.eval(&bump_fiber(p, slot, j, -h)))
                            / (2.0 * h);
                    }
                }
                SlotValue::Covector(m) => {
                    for j in 0..dim {
                        let h = fd_step(m.comps[j].abs());
                        comps[j] = (self.eval(&bump_fiber(p, slot, j, h))
                            - self.eval(&bump_fiber(p, slot, j, -h)))
                            / (2.0 * h);
                    }
                }
            }
            out.push(comps);
        }
        out
    }

    /// Cross-check the registered analytic gradient against finite
    /// differences at `n_points` random points. No-op when the field has no
    /// analytic gradient.
    pub fn validate_partials<R: rand::Rng>(
        &self,
        alg: &Algebra,
        rng: &mut R,
        n_points: usize,
        tol: f64,
    ) -> Result<(), DynError> {
        if self.grad.is_none() {
            return Ok(());
        }
        for _ in 0..n_points {
            let p = random_point(self.space, alg, rng, 0.6);
            let analytic = self.partials(&p);
            let fd = self.fd_partials(&p);
            for (slot, (a, f)) in analytic.iter().zip(fd.iter()).enumerate() {
                for j in 0..alg.dim() {
                    let dev = (a[j] - f[j]).abs();
                    if dev > tol * (1.0 + a[j].abs().max(f[j].abs())) {
                        return Err(DynError::PartialsMismatch {
                            field: self.name.clone(),
                            slot,
                            component: j,
                            deviation: dev,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// `p` with its group slot replaced.
fn replace_group(p: &BundlePoint, g: GroupElement) -> BundlePoint {
    let mut slots: Vec<SlotValue> = p.slots().to_vec();
    slots[0] = SlotValue::Group(g);
    BundlePoint::new(p.space(), slots).expect("slot replacement preserves the signature")
}

/// `p` with component `j` of fiber slot `slot` shifted by `h`.
fn bump_fiber(p: &BundlePoint, slot: usize, j: usize, h: f64) -> BundlePoint {
    let mut slots: Vec<SlotValue> = p.slots().to_vec();
    match &mut slots[slot] {
        SlotValue::Vector(x) => x.comps[j] += h,
        SlotValue::Covector(m) => m.comps[j] += h,
        SlotValue::Group(_) => unreachable!("group slots are perturbed multiplicatively"),
    }
    BundlePoint::new(p.space(), slots).expect("slot bump preserves the signature")
}

/// `p` with fiber slot `slot` replaced by the given components.
pub(crate) fn replace_fiber(p: &BundlePoint, slot: usize, comps: &DVector<f64>) -> BundlePoint {
    let mut slots: Vec<SlotValue> = p.slots().to_vec();
    match &mut slots[slot] {
        SlotValue::Vector(x) => x.comps = comps.clone(),
        SlotValue::Covector(m) => m.comps = comps.clone(),
        SlotValue::Group(_) => unreachable!("group slots carry matrices, not components"),
    }
    BundlePoint::new(p.space(), slots).expect("slot replacement preserves the signature")
}

#[cfg(test)]
mod tests {
    use super::*;
    use poincare_lie::algebras::so3;
    use rand::SeedableRng;

    const SEED: u64 = 0xF1E1D0;

    /// FD gradients of a quadratic-in-every-slot field match the analytic ones.
    #[test]
    fn fd_matches_analytic_on_mixed_field() {
        let alg = so3();
        let field = ScalarField::new("probe", SpaceId::TstarTG, |p: &BundlePoint| {
            let g = p.group();
            let trace = g.mat.trace();
            let xi = p.vec(1);
            let mu = p.cov(2);
            let nu = p.cov(3);
            trace + 0.5 * xi.comps.dot(&xi.comps) + mu.comps.dot(&nu.comps)
        })
        .with_partials(|p: &BundlePoint| {
            let alg = p.alg().clone();
            let g = p.group();
            let mut dg = DVector::zeros(alg.dim());
            for j in 0..alg.dim() {
                // d/dt tr(exp(t ê_j) g) = tr(ê_j g)
                dg[j] = (alg.hat(&AlgebraVector::basis(&alg, j).comps) * &g.mat).trace();
            }
            vec![
                dg,
                p.vec(1).comps.clone(),
                p.cov(3).comps.clone(),
                p.cov(2).comps.clone(),
            ]
        });
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(SEED);
        field.validate_partials(&alg, &mut rng, 20, 1e-5).unwrap();
    }

    /// A wrong analytic gradient is rejected by the validation pass.
    #[test]
    fn wrong_partials_are_rejected() {
        let alg = so3();
        let field = ScalarField::new("broken", SpaceId::TG, |p: &BundlePoint| {
            let xi = p.vec(1);
            0.5 * xi.comps.dot(&xi.comps)
        })
        .with_partials(|p: &BundlePoint| {
            let dim = p.alg().dim();
            vec![DVector::zeros(dim), 2.0 * p.vec(1).comps.clone()]
        });
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(SEED);
        assert!(field.validate_partials(&alg, &mut rng, 20, 1e-5).is_err());
    }
}
