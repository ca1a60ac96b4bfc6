//! Probe Hamiltonians for the reduction checks.
//!
//! Two families of scalar fields are built here: fully random polynomial
//! probes with analytic slot gradients, used to exercise Poisson-map and
//! pullback identities, and per-action invariant quadratics, used wherever
//! a check needs a Hamiltonian that a declared symmetry actually preserves.
//! Invariance of the quadratic combinations (pairings of a covector slot
//! with a vector slot, norms under the orthogonal adjoint of `so(3)`, and
//! the velocity-twisted momentum combination) is asserted numerically by
//! the integration tests rather than assumed.

use nalgebra::{DMatrix, DVector};
use poincare_bundles::{BundlePoint, SlotKind, SpaceId};
use poincare_dynamics::ScalarField;
use poincare_lie::Algebra;
use rand::Rng;

use crate::action::ActionId;

/// Slot indices defining the twisted combination `w = ν + ad*_ξ μ`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct TwistedSlots {
    pub mu: usize,
    pub xi: usize,
    pub nu: usize,
}

/// A polynomial scalar field given by named term lists.
#[derive(Debug, Clone, Default)]
pub(crate) struct PolySpec {
    /// `c · ⟨f_i, f_i⟩` terms.
    pub self_quad: Vec<(usize, f64)>,
    /// `⟨f_i, S f_i⟩` terms with a fixed symmetric matrix.
    pub aniso: Vec<(usize, DMatrix<f64>)>,
    /// `c · ⟨f_i, f_j⟩` terms with `i ≠ j`.
    pub cross: Vec<(usize, usize, f64)>,
    /// `⟨b, f_i⟩` terms.
    pub linear: Vec<(usize, DVector<f64>)>,
    /// `c · tr(M · g)` over the group slot.
    pub trace: Option<(DMatrix<f64>, f64)>,
    /// Terms in the twisted combination: `cq · ⟨w, w⟩ + cx · ⟨w, ξ⟩`.
    pub twisted: Option<(TwistedSlots, f64, f64)>,
    /// Constant offset.
    pub constant: f64,
}

fn slot_comps(p: &BundlePoint, i: usize) -> DVector<f64> {
    match p.space().slots()[i].kind {
        SlotKind::Vector => p.vec(i).comps.clone(),
        SlotKind::Covector => p.cov(i).comps.clone(),
        SlotKind::Group => panic!("slot {i} is the group slot"),
    }
}

impl PolySpec {
    /// Build the field with analytic slot gradients.
    pub(crate) fn build(self, name: impl Into<String>, space: SpaceId, alg: &Algebra) -> ScalarField {
        let dim = alg.dim();
        let hats: Vec<DMatrix<f64>> = (0..dim)
            .map(|j| {
                let mut e = DVector::zeros(dim);
                e[j] = 1.0;
                alg.hat(&e)
            })
            .collect();
        let alg_eval = alg.clone();
        let spec_eval = self.clone();
        let eval = move |p: &BundlePoint| -> f64 {
            let mut sum = spec_eval.constant;
            for (i, c) in &spec_eval.self_quad {
                let f = slot_comps(p, *i);
                sum += c * f.dot(&f);
            }
            for (i, s) in &spec_eval.aniso {
                let f = slot_comps(p, *i);
                sum += (s * &f).dot(&f);
            }
            for (i, j, c) in &spec_eval.cross {
                sum += c * slot_comps(p, *i).dot(&slot_comps(p, *j));
            }
            for (i, b) in &spec_eval.linear {
                sum += b.dot(&slot_comps(p, *i));
            }
            if let Some((m, c)) = &spec_eval.trace {
                sum += c * (m * &p.group().mat).trace();
            }
            if let Some((slots, cq, cx)) = &spec_eval.twisted {
                let w = twisted_value(&alg_eval, p, *slots);
                sum += cq * w.dot(&w);
                if *cx != 0.0 {
                    sum += cx * w.dot(&slot_comps(p, slots.xi));
                }
            }
            sum
        };
        let alg_grad = alg.clone();
        let spec_grad = self;
        let grad = move |p: &BundlePoint| -> Vec<DVector<f64>> {
            let dim = alg_grad.dim();
            let nslots = p.space().slot_count();
            let mut out = vec![DVector::zeros(dim); nslots];
            for (i, c) in &spec_grad.self_quad {
                out[*i] += slot_comps(p, *i) * (2.0 * c);
            }
            for (i, s) in &spec_grad.aniso {
                let f = slot_comps(p, *i);
                out[*i] += s * &f + s.transpose() * &f;
            }
            for (i, j, c) in &spec_grad.cross {
                out[*i] += slot_comps(p, *j) * *c;
                out[*j] += slot_comps(p, *i) * *c;
            }
            for (i, b) in &spec_grad.linear {
                out[*i] += b;
            }
            if let Some((m, c)) = &spec_grad.trace {
                for (j, hat) in hats.iter().enumerate() {
                    out[0][j] += c * (m * hat * &p.group().mat).trace();
                }
            }
            if let Some((slots, cq, cx)) = &spec_grad.twisted {
                let w = twisted_value(&alg_grad, p, *slots);
                let xi = slot_comps(p, slots.xi);
                let mu = slot_comps(p, slots.mu);
                // Matrix of μ ↦ ad*_ξ μ.
                let a = alg_grad.ad_matrix(&xi).transpose();
                // Matrix of δξ ↦ ad*_{δξ} μ.
                let mut b = DMatrix::zeros(dim, dim);
                for k in 0..dim {
                    let mut e = DVector::zeros(dim);
                    e[k] = 1.0;
                    b.set_column(k, &alg_grad.ad_star(&e, &mu));
                }
                out[slots.nu] += &w * (2.0 * cq);
                out[slots.mu] += a.transpose() * &w * (2.0 * cq);
                out[slots.xi] += b.transpose() * &w * (2.0 * cq);
                if *cx != 0.0 {
                    out[slots.nu] += &xi * *cx;
                    out[slots.mu] += a.transpose() * &xi * *cx;
                    out[slots.xi] += (&w + b.transpose() * &xi) * *cx;
                }
            }
            out
        };
        ScalarField::new(name, space, eval).with_partials(grad)
    }
}

/// The combination `w = ν + ad*_ξ μ` as raw components.
pub(crate) fn twisted_value(alg: &Algebra, p: &BundlePoint, slots: TwistedSlots) -> DVector<f64> {
    let mu = slot_comps(p, slots.mu);
    let xi = slot_comps(p, slots.xi);
    let nu = slot_comps(p, slots.nu);
    nu + alg.ad_star(&xi, &mu)
}

pub(crate) fn coeff<R: Rng>(rng: &mut R) -> f64 {
    let mag = rng.gen_range(0.3..1.0);
    if rng.gen_bool(0.5) {
        mag
    } else {
        -mag
    }
}

pub(crate) fn random_matrix<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |_, _| rng.gen_range(-0.8..0.8))
}

pub(crate) fn symmetric<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let m = random_matrix(n, rng);
    (&m + &m.transpose()) * 0.5
}

/// Fiber slot indices of a space (everything but the group slot).
fn fiber_slots(space: SpaceId) -> Vec<usize> {
    space
        .slots()
        .iter()
        .enumerate()
        .filter(|(_, sig)| sig.kind != SlotKind::Group)
        .map(|(i, _)| i)
        .collect()
}

/// A dense random polynomial probe with analytic gradients: anisotropic
/// quadratics on every fiber slot, all cross pairings, linear terms, and a
/// trace potential on the group slot.
pub fn probe_field<R: Rng>(
    name: impl Into<String>,
    space: SpaceId,
    alg: &Algebra,
    rng: &mut R,
) -> ScalarField {
    let dim = alg.dim();
    let n = alg.matrix_size();
    let fibers = fiber_slots(space);
    let mut spec = PolySpec {
        constant: coeff(rng),
        trace: Some((random_matrix(n, rng), coeff(rng))),
        ..PolySpec::default()
    };
    for &i in &fibers {
        spec.aniso.push((i, symmetric(dim, rng)));
        spec.linear
            .push((i, DVector::from_fn(dim, |_, _| rng.gen_range(-0.7..0.7))));
    }
    for (a, &i) in fibers.iter().enumerate() {
        for &j in fibers.iter().skip(a + 1) {
            spec.cross.push((i, j, coeff(rng)));
        }
    }
    spec.build(name, space, alg)
}

/// An anisotropic kinetic term on a single fiber slot.
pub(crate) fn kinetic_field<R: Rng>(
    name: impl Into<String>,
    space: SpaceId,
    slot: usize,
    alg: &Algebra,
    rng: &mut R,
) -> ScalarField {
    let mut s = symmetric(alg.dim(), rng);
    // Shift the spectrum to keep the quadratic form positive.
    for k in 0..alg.dim() {
        s[(k, k)] += 1.5;
    }
    PolySpec {
        aniso: vec![(slot, s)],
        ..PolySpec::default()
    }
    .build(name, space, alg)
}

/// A quadratic Hamiltonian invariant under the given action.
///
/// Pairings of covector slots with vector slots are invariant for every
/// algebra; plain norms rely on the orthogonal adjoint representation of
/// `so(3)`, which is the algebra the reduction scenarios run on.  Actions
/// that fix the group slot get a trace potential so the probe is not
/// accidentally invariant under more symmetry than declared.
pub fn invariant_probe<R: Rng>(action: ActionId, alg: &Algebra, rng: &mut R) -> ScalarField {
    let name = format!("invariant-{}", action.token());
    let space = action.space();
    let n = alg.matrix_size();
    match action {
        ActionId::GOnGgstar | ActionId::GmuOnGg2star => {
            // Kinetic energy of the body-frame momentum Ad*_g μ: invariant
            // under the lifted left translation.  Gradients fall back to
            // finite differences; the body transform mixes both slots.
            let s = {
                let mut s = symmetric(alg.dim(), rng);
                for k in 0..alg.dim() {
                    s[(k, k)] += 1.5;
                }
                s
            };
            ScalarField::new(name, space, move |p: &BundlePoint| {
                let m = p.group().coadjoint(p.cov(1));
                (&s * &m.comps).dot(&m.comps)
            })
        }
        ActionId::GOnTstarTG => full_rotation_quad(name, space, alg, rng),
        ActionId::AlgOnTstarTG => PolySpec {
            cross: vec![(2, 3, coeff(rng))],
            self_quad: vec![(3, coeff(rng))],
            trace: Some((random_matrix(n, rng), coeff(rng))),
            ..PolySpec::default()
        }
        .build(name, space, alg),
        ActionId::GAlgOnTstarTG => PolySpec {
            cross: vec![(2, 3, coeff(rng))],
            self_quad: vec![(3, coeff(rng))],
            ..PolySpec::default()
        }
        .build(name, space, alg),
        ActionId::GOnTstarTstarG => full_rotation_quad(name, space, alg, rng),
        ActionId::DualOnTstarTstarG => PolySpec {
            self_quad: vec![(3, coeff(rng))],
            twisted: Some((TwistedSlots { mu: 1, xi: 3, nu: 2 }, coeff(rng), 0.0)),
            trace: Some((random_matrix(n, rng), coeff(rng))),
            ..PolySpec::default()
        }
        .build(name, space, alg),
        ActionId::TstarGOnTstarTstarG => PolySpec {
            self_quad: vec![(3, coeff(rng))],
            twisted: Some((TwistedSlots { mu: 1, xi: 3, nu: 2 }, coeff(rng), coeff(rng))),
            ..PolySpec::default()
        }
        .build(name, space, alg),
        ActionId::GOnTTstarG => full_rotation_quad(name, space, alg, rng),
        ActionId::Alg2OnTTstarG => PolySpec {
            self_quad: vec![(1, coeff(rng)), (3, coeff(rng))],
            cross: vec![(1, 3, coeff(rng))],
            trace: Some((random_matrix(n, rng), coeff(rng))),
            ..PolySpec::default()
        }
        .build(name, space, alg),
        ActionId::Psi => PolySpec {
            self_quad: vec![(2, coeff(rng)), (3, coeff(rng))],
            cross: vec![(2, 3, coeff(rng))],
            trace: Some((random_matrix(n, rng), coeff(rng))),
            ..PolySpec::default()
        }
        .build(name, space, alg),
        ActionId::Phi => PolySpec {
            self_quad: vec![(1, coeff(rng)), (2, coeff(rng))],
            cross: vec![(1, 2, coeff(rng))],
            trace: Some((random_matrix(n, rng), coeff(rng))),
            ..PolySpec::default()
        }
        .build(name, space, alg),
        ActionId::ThetaGAlg2 => PolySpec {
            self_quad: vec![(1, coeff(rng)), (3, coeff(rng))],
            cross: vec![(1, 3, coeff(rng))],
            ..PolySpec::default()
        }
        .build(name, space, alg),
        ActionId::AlphaGAlg1star => PolySpec {
            self_quad: vec![(2, coeff(rng))],
            twisted: Some((TwistedSlots { mu: 1, xi: 2, nu: 3 }, coeff(rng), coeff(rng))),
            ..PolySpec::default()
        }
        .build(name, space, alg),
    }
}

/// All rotation-invariant quadratics of the three fiber slots: three norms
/// and three cross pairings.
fn full_rotation_quad<R: Rng>(
    name: String,
    space: SpaceId,
    alg: &Algebra,
    rng: &mut R,
) -> ScalarField {
    let fibers = fiber_slots(space);
    let mut spec = PolySpec::default();
    for &i in &fibers {
        spec.self_quad.push((i, coeff(rng)));
    }
    for (a, &i) in fibers.iter().enumerate() {
        for &j in fibers.iter().skip(a + 1) {
            spec.cross.push((i, j, coeff(rng)));
        }
    }
    spec.build(name, space, alg)
}
