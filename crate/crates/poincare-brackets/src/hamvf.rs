//! Hamiltonian vector fields for the registered symplectic structures.
//!
//! For each symplectic entry of the form registry there is a closed-form
//! right-invariant generator whose field satisfies `i_X omega = -dh`.  The
//! generator is audited before it is handed back: the interior-product
//! identity is probed against finite differences of the Hamiltonian along a
//! fixed set of random flow directions, and any drift beyond
//! [`HAMVF_RESIDUAL_TOL`] is reported as an error instead of a field.

use poincare_bundles::{
    first_order_path, mul, random_generator, BundlePoint, GenSlot, Generator, SlotValue,
};
use poincare_dynamics::ScalarField;
use poincare_lie::{AlgebraVector, DualVector, GroupElement};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bracket::check_space;
use crate::error::BracketError;
use crate::form::{two_form, FormId};

/// Interior-product residual allowed when generating a Hamiltonian field.
pub const HAMVF_RESIDUAL_TOL: f64 = 1e-6;
/// Number of random probe directions used by the residual audit.
const N_PROBES: usize = 20;
/// Seed for the probe directions, fixed so the audit is deterministic.
const PROBE_SEED: u64 = 0x517c_c1b7_2722_0a95;
/// Step for the finite-difference directional derivatives of the Hamiltonian.
const FD_STEP: f64 = 5e-6;

fn generator_formula(id: FormId, h: &ScalarField, p: &BundlePoint) -> Option<Generator> {
    let alg = p.alg().clone();
    let d = h.partials(p);
    let vecs = |c| GenSlot::Vector(AlgebraVector { alg: alg.clone(), comps: c });
    let covs = |c| GenSlot::Covector(DualVector { alg: alg.clone(), comps: c });
    let slots = match id {
        FormId::OmegaGGstar => vec![vecs(d[1].clone()), covs(-&d[0])],
        FormId::Kks => {
            let zero = nalgebra::DVector::zeros(alg.dim());
            vec![vecs(d[1].clone()), covs(zero)]
        }
        FormId::OmegaTstarTG => {
            let xi = &p.vec(1).comps;
            vec![
                vecs(d[2].clone()),
                vecs(d[3].clone()),
                covs(-(&d[0] + alg.ad_star(xi, &d[1]))),
                covs(-&d[1]),
            ]
        }
        FormId::OmegaTstarTstarG => {
            let mu = &p.cov(1).comps;
            vec![
                vecs(d[2].clone()),
                covs(d[3].clone()),
                covs(alg.ad_star(&d[1], mu) - &d[0]),
                vecs(-&d[1]),
            ]
        }
        FormId::OmegaTTstarG => {
            let mu = &p.cov(1).comps;
            let xi = &p.vec(2).comps;
            let coad_mu = alg.ad_star(&d[3], mu);
            vec![
                vecs(d[3].clone()),
                covs(-(&d[2] + &coad_mu)),
                vecs(&d[1] - alg.bracket(xi, &d[3])),
                covs(-(&d[0] + alg.ad_star(xi, &d[2]) + alg.ad_star(xi, &coad_mu))),
            ]
        }
        _ => return None,
    };
    Some(Generator::new(id.space(), slots).expect("generator slots match the space"))
}

/// Central finite difference of `h` at `p` along the flow direction of `w`.
///
/// Canonical forms flow by left translation of the whole bundle point; the
/// orbit form flows the dual slot along the coadjoint action instead.
fn directional_derivative(id: FormId, h: &ScalarField, p: &BundlePoint, w: &Generator) -> f64 {
    let at = |t: f64| match id {
        FormId::Kks => coadjoint_flow(p, w.vec(0), t),
        _ => mul(&first_order_path(w, t), p),
    };
    (h.eval(&at(FD_STEP)) - h.eval(&at(-FD_STEP))) / (2.0 * FD_STEP)
}

fn coadjoint_flow(p: &BundlePoint, eta: &AlgebraVector, t: f64) -> BundlePoint {
    let alg = p.alg().clone();
    let step = GroupElement::exp(&AlgebraVector {
        alg,
        comps: &eta.comps * t,
    });
    BundlePoint::new(
        p.space(),
        vec![
            SlotValue::Group(p.group().clone()),
            SlotValue::Covector(step.coadjoint(p.cov(1))),
        ],
    )
    .expect("coadjoint flow preserves the slot layout")
}

/// Generate the Hamiltonian vector field of `h` at `p`, as a right-invariant
/// generator, for a symplectic entry of the form registry.
///
/// Entries without a registered formula yield [`BracketError::NoGenerator`].
/// The returned generator has already passed the residual audit
/// `|omega(X_h, w) + dh(w)| <= tol` over [`N_PROBES`] probe directions; a
/// failure yields [`BracketError::Residual`] instead of a silently wrong
/// field.
pub fn hamiltonian_vf(
    id: FormId,
    h: &ScalarField,
    p: &BundlePoint,
) -> Result<Generator, BracketError> {
    let space = id.space();
    check_space("hamiltonian", h.space(), space)?;
    check_space("point", p.space(), space)?;
    let gen = generator_formula(id, h, p).ok_or(BracketError::NoGenerator(id))?;

    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    for _ in 0..N_PROBES {
        let w = random_generator(space, p.alg(), &mut rng, 0.8);
        let omega = two_form(id, p, &gen, &w)?;
        let dh = directional_derivative(id, h, p, &w);
        let residual = (omega + dh).abs();
        let tol = HAMVF_RESIDUAL_TOL * (1.0 + omega.abs().max(dh.abs()));
        if residual > tol {
            return Err(BracketError::Residual {
                form: id,
                residual,
                tol,
            });
        }
    }
    Ok(gen)
}
