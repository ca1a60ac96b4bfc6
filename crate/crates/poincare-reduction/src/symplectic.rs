//! Pullback checks for structure maps and actions.
//!
//! A map between two of the bundle spaces is checked against the frozen
//! form registry: pull a pair of pushed-forward generators into the target
//! two-form at the image point and compare with the source two-form at the
//! base point.  Poisson-type maps are checked on functions instead, by
//! comparing the source bracket of composed probes with the target bracket
//! of the probes themselves.  Everything is sampled at seeded random
//! points, so the reports are reproducible.

use poincare_brackets::{one_form, poisson, two_form, BracketId, FormId};
use poincare_bundles::{random_generator, random_point, BundlePoint, SpaceId};
use poincare_dynamics::ScalarField;
use poincare_lie::Algebra;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::action::{act, sample_acting, ActionId};
use crate::error::ReductionError;
use crate::fields::probe_field;
use crate::maps::{structure_map, StructureMapId};
use crate::pushforward::pushforward;

/// Result of a sampled pullback check.
#[derive(Debug, Clone)]
pub struct SymplecticReport {
    /// Number of sampled (point, generator-pair) probes.
    pub samples: usize,
    /// Largest absolute residual observed.
    pub max_residual: f64,
}

/// What a structure map was checked against.
#[derive(Debug, Clone)]
pub struct MapCheck {
    pub id: StructureMapId,
    /// Human-readable statement of the property that was measured.
    pub property: &'static str,
    pub report: SymplecticReport,
}

/// Which two-form pullback a symplectic-type structure map must satisfy.
fn form_pair(id: StructureMapId) -> Option<(FormId, FormId)> {
    match id {
        StructureMapId::Gamma => Some((FormId::OmegaTstarTstarG, FormId::OmegaTstarTG)),
        StructureMapId::GammaS => Some((FormId::RedTstarTstarG, FormId::RedTstarTG)),
        StructureMapId::SigmaBar => Some((FormId::OmegaTTstarG, FormId::OmegaTstarTG)),
        StructureMapId::OmegaFlat => Some((FormId::OmegaTTstarG, FormId::OmegaTstarTstarG)),
        StructureMapId::OmegaS => Some((FormId::RedTTstarG, FormId::RedTstarTstarG)),
        _ => None,
    }
}

/// Which bracket pullback a Poisson-type structure map must satisfy.
fn bracket_pair(id: StructureMapId) -> Option<(BracketId, BracketId)> {
    match id {
        StructureMapId::GammaP => Some((
            BracketId::PGstarGstarAlg,
            BracketId::PAlgGstarGstar,
        )),
        StructureMapId::OmegaP => Some((
            BracketId::PGstarAlgGstar,
            BracketId::PGstarGstarAlg,
        )),
        _ => None,
    }
}

/// Residual of the two-form pullback of `map` at one sampled probe.
fn pullback_residual<F>(
    map: F,
    src_form: FormId,
    dst_form: FormId,
    p: &BundlePoint,
    a: &poincare_bundles::Generator,
    b: &poincare_bundles::Generator,
) -> Result<f64, ReductionError>
where
    F: Fn(&BundlePoint) -> BundlePoint + Copy,
{
    let q = map(p);
    let pa = pushforward(map, p, a);
    let pb = pushforward(map, p, b);
    let pulled = two_form(dst_form, &q, &pa, &pb)?;
    let base = two_form(src_form, p, a, b)?;
    Ok(pulled - base)
}

/// Check one structure map against its registered property.
pub fn check_structure_map(
    id: StructureMapId,
    alg: &Algebra,
    samples: usize,
    seed: u64,
) -> Result<MapCheck, ReductionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let src = id.source();
    let map = |p: &BundlePoint| structure_map(id, p).expect("source space checked by sampler");
    let mut max = 0.0f64;
    let property;
    match (form_pair(id), bracket_pair(id), id) {
        (Some((sf, df)), _, _) => {
            property = "two-form pullback matches the source form";
            for _ in 0..samples {
                let p = random_point(src, alg, &mut rng, 0.8);
                let a = random_generator(src, alg, &mut rng, 0.8);
                let b = random_generator(src, alg, &mut rng, 0.8);
                max = max.max(pullback_residual(map, sf, df, &p, &a, &b)?.abs());
            }
        }
        (_, Some((sb, db)), _) => {
            property = "bracket of composed probes matches the target bracket";
            for k in 0..samples {
                let p = random_point(src, alg, &mut rng, 0.8);
                let q = map(&p);
                let f = probe_field(format!("f{k}"), q.space(), alg, &mut rng);
                let g = probe_field(format!("g{k}"), q.space(), alg, &mut rng);
                let fc = composed(&f, id);
                let gc = composed(&g, id);
                let lhs = poisson(sb, &fc, &gc, &p)?;
                let rhs = poisson(db, &f, &g, &q)?;
                max = max.max((lhs - rhs).abs());
            }
        }
        (None, None, StructureMapId::Emb1) => {
            property = "the canonical two-form vanishes on the image";
            for _ in 0..samples {
                let p = random_point(src, alg, &mut rng, 0.8);
                let q = map(&p);
                let a = random_generator(src, alg, &mut rng, 0.8);
                let b = random_generator(src, alg, &mut rng, 0.8);
                let pa = pushforward(map, &p, &a);
                let pb = pushforward(map, &p, &b);
                max = max.max(two_form(FormId::OmegaTTstarG, &q, &pa, &pb)?.abs());
            }
        }
        (None, None, StructureMapId::Emb2) => {
            property = "the pullback of the canonical two-form is the base form";
            for _ in 0..samples {
                let p = random_point(src, alg, &mut rng, 0.8);
                max = max.max(
                    pullback_residual(
                        map,
                        FormId::OmegaGGstar,
                        FormId::OmegaTTstarG,
                        &p,
                        &random_generator(src, alg, &mut rng, 0.8),
                        &random_generator(src, alg, &mut rng, 0.8),
                    )?
                    .abs(),
                );
            }
        }
        _ => unreachable!("every structure map has a registered property"),
    }
    Ok(MapCheck {
        id,
        property,
        report: SymplecticReport {
            samples,
            max_residual: max,
        },
    })
}

/// A probe on the target space composed with a structure map, as a field on
/// the source space (finite-difference gradients).
fn composed(f: &ScalarField, id: StructureMapId) -> ScalarField {
    let inner = f.clone();
    ScalarField::new(
        format!("{}*{}", inner.name(), id.token()),
        id.source(),
        move |p: &BundlePoint| inner.eval(&structure_map(id, p).expect("space checked")),
    )
}

/// Check an action against the canonical two-form of its space: residual of
/// the pullback along the diffeomorphism `p ↦ act(elem, p)`.
pub fn check_symplectic_action(
    id: ActionId,
    alg: &Algebra,
    samples: usize,
    seed: u64,
) -> Result<SymplecticReport, ReductionError> {
    let form = canonical_form(id.space());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max = 0.0f64;
    for _ in 0..samples {
        let elem = sample_acting(id, alg, &mut rng, 0.8);
        let p = random_point(id.space(), alg, &mut rng, 0.8);
        let a = random_generator(id.space(), alg, &mut rng, 0.8);
        let b = random_generator(id.space(), alg, &mut rng, 0.8);
        let map = |x: &BundlePoint| act(id, &elem, x).expect("space checked by sampler");
        max = max.max(pullback_residual(map, form, form, &p, &a, &b)?.abs());
    }
    Ok(SymplecticReport {
        samples,
        max_residual: max,
    })
}

/// The canonical two-form of each cotangent-type space.
pub fn canonical_form(space: SpaceId) -> FormId {
    match space {
        SpaceId::TstarG => FormId::OmegaGGstar,
        SpaceId::TstarTG => FormId::OmegaTstarTG,
        SpaceId::TstarTstarG => FormId::OmegaTstarTstarG,
        SpaceId::TTstarG => FormId::OmegaTTstarG,
        other => panic!("no canonical two-form registered on {other}"),
    }
}

/// Expected outcome of [`check_symplectic_action`] for every action: all of
/// them preserve the canonical form except the fiber-momentum translation,
/// whose failure is part of the registry's contract.
pub fn action_form_expectations() -> Vec<(ActionId, bool)> {
    ActionId::ALL
        .iter()
        .map(|id| (*id, !matches!(id, ActionId::Phi)))
        .collect()
}

/// Largest two-form residual of left translation on `T*G` by a *generic*
/// bundle element (nonzero momentum shift).  This translation is not
/// symplectic — only the pure group part is — and the residual scale is
/// used as a negative control.
pub fn bundle_translation_residual(
    alg: &Algebra,
    samples: usize,
    seed: u64,
) -> Result<f64, ReductionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max = 0.0f64;
    for _ in 0..samples {
        let c = random_point(SpaceId::TstarG, alg, &mut rng, 0.9);
        let p = random_point(SpaceId::TstarG, alg, &mut rng, 0.9);
        let a = random_generator(SpaceId::TstarG, alg, &mut rng, 0.9);
        let b = random_generator(SpaceId::TstarG, alg, &mut rng, 0.9);
        let map = |x: &BundlePoint| poincare_bundles::mul(&c, x);
        max = max.max(
            pullback_residual(map, FormId::OmegaGGstar, FormId::OmegaGGstar, &p, &a, &b)?.abs(),
        );
    }
    Ok(max)
}

/// Residual of the one-form pullback along the two-form contraction: the
/// canonical one-form of `T*T*G` pulls back to the first canonical one-form
/// of `TT*G`.
pub fn potential_pullback_residual(
    alg: &Algebra,
    samples: usize,
    seed: u64,
) -> Result<f64, ReductionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let map = |p: &BundlePoint| {
        structure_map(StructureMapId::OmegaFlat, p).expect("space checked by sampler")
    };
    let mut max = 0.0f64;
    for _ in 0..samples {
        let p = random_point(SpaceId::TTstarG, alg, &mut rng, 0.8);
        let a = random_generator(SpaceId::TTstarG, alg, &mut rng, 0.8);
        let q = map(&p);
        let pa = pushforward(map, &p, &a);
        let pulled = one_form(FormId::ThetaTstarTstarG, &q, &pa)?;
        let base = one_form(FormId::Theta1TTstarG, &p, &a)?;
        max = max.max((pulled - base).abs());
    }
    Ok(max)
}
