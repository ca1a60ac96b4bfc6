//! Full-versus-reduced trajectory verification.
//!
//! Each scenario pairs a full equation family on one of the iterated
//! bundles with its reduced counterpart — a smaller family, a Poisson
//! flow generated by one of the registered brackets, an embedded copy, or
//! a two-stage split — and integrates both from matched initial data under
//! a Hamiltonian the declared symmetry actually preserves.  The report
//! records the invariance residual of that precheck together with the
//! largest deviation between the projected full trajectory and the
//! reduced one, so a passing scenario certifies the projection formula,
//! the bracket, and the equations of motion against each other at once.
//!
//! Reduced Poisson flows are integrated coordinate-wise: each evolving
//! slot component is a linear scalar field, its rate is the bracket of the
//! Hamiltonian with that coordinate, and the group slot (when the bracket
//! keeps one) moves multiplicatively exactly as in the full integrator.

use nalgebra::DVector;
use poincare_brackets::{poisson, BracketId};
use poincare_bundles::{random_point, BundlePoint, SlotKind, SlotValue, SpaceId};
use poincare_dynamics::{dexpinv, integrate, EOMFamily, ScalarField, State, Trajectory};
use poincare_lie::{Algebra, AlgebraVector, DualVector, GroupElement};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::action::{act, sample_acting, ActionId};
use crate::error::ReductionError;
use crate::fields::{coeff, invariant_probe, kinetic_field, random_matrix, symmetric, PolySpec, TwistedSlots};
use crate::maps::{structure_map, StructureMapId};

/// Largest Hamiltonian change, over sampled group elements, that still
/// counts as invariant.
pub const INVARIANCE_TOL: f64 = 1e-8;

/// One full-versus-reduced verification pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioId {
    /// Cotangent bundle dynamics against the Lie–Poisson flow on the dual.
    CotangentLiePoisson,
    /// `T*TG` dynamics against the fiber Poisson flow on `(ξ, μ, ν)`.
    TangentCotangentFibers,
    /// `T*TG` dynamics against the group flow on `(g, μ, ν)`.
    TangentCotangentGroupDuals,
    /// `T*TG` dynamics against the coupled Lie–Poisson flow on `(μ, ν)`.
    TangentCotangentDualPair,
    /// `T*T*G` dynamics against the fiber Poisson flow on `(μ, ν, ξ)`.
    DoubleCotangentFibers,
    /// `T*T*G` dynamics against the group flow in the shifted coordinate
    /// `w = ν + ad*_ξ μ`.
    DoubleCotangentGroupMixed,
    /// `T*T*G` dynamics against the mixed Lie–Poisson flow on `(ν, ξ)`.
    DoubleCotangentMixedPair,
    /// `TT*G` dynamics against the fiber Poisson flow on `(μ, ξ, ν)`.
    ProlongedFibers,
    /// `TT*G` dynamics against the group flow on `(g, μ, ν)`.
    ProlongedGroupDuals,
    /// `TT*G` dynamics against the group flow on `(g, ξ, ν)`.
    ProlongedGroupMixed,
    /// `TT*G` dynamics against the dual-pair Poisson flow on `(μ, ν)`.
    ProlongedDualPair,
    /// Cotangent dynamics carried into `TT*G` along the momentum embedding.
    CotangentEmbedding,
    /// Reduction of `T*TG` in two stages against the single-stage flow.
    TwoStageSemidirect,
}

/// How the reduced side of a scenario is generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReducedKind {
    /// A smaller equation family integrated by the standard integrator.
    Family(EOMFamily),
    /// A coordinate-wise Poisson flow of a registered bracket.
    Bracket(BracketId),
    /// A cotangent trajectory compared through the momentum embedding.
    Embedding(EOMFamily),
    /// Stage-wise reduction checked against the one-step reduction.
    TwoStage,
}

impl ScenarioId {
    pub const ALL: [ScenarioId; 13] = [
        ScenarioId::CotangentLiePoisson,
        ScenarioId::TangentCotangentFibers,
        ScenarioId::TangentCotangentGroupDuals,
        ScenarioId::TangentCotangentDualPair,
        ScenarioId::DoubleCotangentFibers,
        ScenarioId::DoubleCotangentGroupMixed,
        ScenarioId::DoubleCotangentMixedPair,
        ScenarioId::ProlongedFibers,
        ScenarioId::ProlongedGroupDuals,
        ScenarioId::ProlongedGroupMixed,
        ScenarioId::ProlongedDualPair,
        ScenarioId::CotangentEmbedding,
        ScenarioId::TwoStageSemidirect,
    ];

    /// Stable identifier: full space, arrow, reduced coordinates.
    pub fn token(&self) -> &'static str {
        match self {
            ScenarioId::CotangentLiePoisson => "TstarG->gstar",
            ScenarioId::TangentCotangentFibers => "TstarTG->xi_mu_nu",
            ScenarioId::TangentCotangentGroupDuals => "TstarTG->G_mu_nu",
            ScenarioId::TangentCotangentDualPair => "TstarTG->mu_nu",
            ScenarioId::DoubleCotangentFibers => "TstarTstarG->mu_nu_xi",
            ScenarioId::DoubleCotangentGroupMixed => "TstarTstarG->G_nu_xi",
            ScenarioId::DoubleCotangentMixedPair => "TstarTstarG->nu_xi",
            ScenarioId::ProlongedFibers => "TTstarG->mu_xi_nu",
            ScenarioId::ProlongedGroupDuals => "TTstarG->G_mu_nu",
            ScenarioId::ProlongedGroupMixed => "TTstarG->G_xi_nu",
            ScenarioId::ProlongedDualPair => "TTstarG->mu_nu",
            ScenarioId::CotangentEmbedding => "TstarG->TTstarG_embed",
            ScenarioId::TwoStageSemidirect => "TstarTG->two_stage",
        }
    }

    pub fn by_token(token: &str) -> Option<ScenarioId> {
        ScenarioId::ALL.iter().copied().find(|s| s.token() == token)
    }

    /// The bundle the full dynamics lives on.
    pub fn space(&self) -> SpaceId {
        self.full_family().field_space()
    }

    /// The unreduced equation family.
    pub fn full_family(&self) -> EOMFamily {
        match self {
            ScenarioId::CotangentLiePoisson => EOMFamily::HamTstarG,
            ScenarioId::TangentCotangentFibers
            | ScenarioId::TangentCotangentGroupDuals
            | ScenarioId::TangentCotangentDualPair
            | ScenarioId::TwoStageSemidirect => EOMFamily::HamTstarTg,
            ScenarioId::DoubleCotangentFibers
            | ScenarioId::DoubleCotangentGroupMixed
            | ScenarioId::DoubleCotangentMixedPair => EOMFamily::HamTstarTstarG,
            ScenarioId::ProlongedFibers
            | ScenarioId::ProlongedGroupDuals
            | ScenarioId::ProlongedGroupMixed
            | ScenarioId::ProlongedDualPair
            | ScenarioId::CotangentEmbedding => EOMFamily::HamTTstarG,
        }
    }

    /// The reduced side of the comparison.
    pub fn reduced(&self) -> ReducedKind {
        match self {
            ScenarioId::CotangentLiePoisson => ReducedKind::Family(EOMFamily::LpGstar),
            ScenarioId::TangentCotangentFibers => ReducedKind::Bracket(BracketId::PAlgGstarGstar),
            ScenarioId::TangentCotangentGroupDuals => ReducedKind::Bracket(BracketId::PGrpGstarGstar),
            ScenarioId::TangentCotangentDualPair => ReducedKind::Family(EOMFamily::LpGstarGstar),
            ScenarioId::DoubleCotangentFibers => ReducedKind::Bracket(BracketId::PGstarGstarAlg),
            ScenarioId::DoubleCotangentGroupMixed => ReducedKind::Bracket(BracketId::PGrpGstarAlg),
            ScenarioId::DoubleCotangentMixedPair => ReducedKind::Family(EOMFamily::LpGstarG),
            ScenarioId::ProlongedFibers => ReducedKind::Bracket(BracketId::PGstarAlgGstar),
            ScenarioId::ProlongedGroupDuals => ReducedKind::Bracket(BracketId::PGrpG1starG3star),
            ScenarioId::ProlongedGroupMixed => ReducedKind::Bracket(BracketId::PGrpG2G3star),
            ScenarioId::ProlongedDualPair => ReducedKind::Bracket(BracketId::PG1starG3star),
            ScenarioId::CotangentEmbedding => ReducedKind::Embedding(EOMFamily::HamTstarG),
            ScenarioId::TwoStageSemidirect => ReducedKind::TwoStage,
        }
    }

    /// The symmetry whose invariance is prechecked, when the scenario uses
    /// a group or translation action (structural scenarios check slot
    /// independence or embedding consistency instead).
    pub fn action(&self) -> Option<ActionId> {
        match self {
            ScenarioId::CotangentLiePoisson | ScenarioId::CotangentEmbedding => None,
            ScenarioId::TangentCotangentFibers => Some(ActionId::GOnTstarTG),
            ScenarioId::TangentCotangentGroupDuals => Some(ActionId::AlgOnTstarTG),
            ScenarioId::TangentCotangentDualPair | ScenarioId::TwoStageSemidirect => {
                Some(ActionId::GAlgOnTstarTG)
            }
            ScenarioId::DoubleCotangentFibers | ScenarioId::DoubleCotangentMixedPair => {
                Some(ActionId::GOnTstarTstarG)
            }
            ScenarioId::DoubleCotangentGroupMixed => Some(ActionId::DualOnTstarTstarG),
            ScenarioId::ProlongedFibers => Some(ActionId::GOnTTstarG),
            ScenarioId::ProlongedGroupDuals => Some(ActionId::Alg2OnTTstarG),
            ScenarioId::ProlongedGroupMixed => Some(ActionId::Psi),
            ScenarioId::ProlongedDualPair => Some(ActionId::ThetaGAlg2),
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            ScenarioId::CotangentLiePoisson => {
                "cotangent flow of a group-independent Hamiltonian drops to the dual"
            }
            ScenarioId::TangentCotangentFibers => {
                "group-invariant flow on T*TG closes on the three fiber slots"
            }
            ScenarioId::TangentCotangentGroupDuals => {
                "velocity-translation symmetry drops T*TG to group and dual slots"
            }
            ScenarioId::TangentCotangentDualPair => {
                "full symmetry drops T*TG to the coupled dual pair"
            }
            ScenarioId::DoubleCotangentFibers => {
                "group-invariant flow on T*T*G closes on the three fiber slots"
            }
            ScenarioId::DoubleCotangentGroupMixed => {
                "momentum-translation symmetry drops T*T*G to the shifted covector and velocity"
            }
            ScenarioId::DoubleCotangentMixedPair => {
                "full symmetry drops T*T*G to the mixed covector-velocity pair"
            }
            ScenarioId::ProlongedFibers => {
                "group-invariant flow on TT*G closes on the three fiber slots"
            }
            ScenarioId::ProlongedGroupDuals => {
                "velocity-translation symmetry drops TT*G to group and covector slots"
            }
            ScenarioId::ProlongedGroupMixed => {
                "momentum-translation symmetry drops TT*G to group, velocity and covector"
            }
            ScenarioId::ProlongedDualPair => {
                "combined symmetry drops TT*G to the covector pair"
            }
            ScenarioId::CotangentEmbedding => {
                "cotangent dynamics ride unchanged inside TT*G along the momentum embedding"
            }
            ScenarioId::TwoStageSemidirect => {
                "reducing T*TG stage by stage agrees with the one-step reduction"
            }
        }
    }
}

/// Step count, step size and seed for one verification run.
#[derive(Debug, Clone, Copy)]
pub struct ScenarioOptions {
    pub steps: usize,
    pub dt: f64,
    pub seed: u64,
}

impl Default for ScenarioOptions {
    fn default() -> Self {
        ScenarioOptions {
            steps: 1000,
            dt: 1e-3,
            seed: 0x5ce9a210,
        }
    }
}

/// Outcome of one verification run.
#[derive(Debug, Clone)]
pub struct ScenarioReport {
    pub id: ScenarioId,
    pub steps: usize,
    pub dt: f64,
    /// Largest Hamiltonian change under the prechecked symmetry (or the
    /// structural consistency residual for scenarios without an action).
    pub invariance_residual: f64,
    /// Supremum over time of the distance between the projected full
    /// trajectory and the reduced trajectory.
    pub max_deviation: f64,
}

/// Group slot (when the reduced system keeps one) plus evolving fibers.
type ReducedPoint = (Option<GroupElement>, Vec<DVector<f64>>);

/// Largest Hamiltonian change over sampled acting elements; errors with
/// the residual when the field fails the declared invariance.
pub fn invariance_residual<R: Rng>(
    field: &ScalarField,
    action: ActionId,
    alg: &Algebra,
    rng: &mut R,
) -> Result<f64, ReductionError> {
    let mut worst = 0.0_f64;
    for _ in 0..3 {
        let p = random_point(field.space(), alg, rng, 0.7);
        let h0 = field.eval(&p);
        for _ in 0..6 {
            let a = sample_acting(action, alg, rng, 0.7);
            let q = act(action, &a, &p)?;
            worst = worst.max((field.eval(&q) - h0).abs());
        }
    }
    if worst > INVARIANCE_TOL {
        return Err(ReductionError::NotInvariant {
            field: field.name().to_string(),
            action: action.token(),
            residual: worst,
            tol: INVARIANCE_TOL,
        });
    }
    Ok(worst)
}

/// Largest gradient along one slot over sampled points; errors when the
/// field actually depends on that slot.  Structural counterpart of
/// [`invariance_residual`] for reductions that drop a slot outright.
fn slot_independence_residual<R: Rng>(
    field: &ScalarField,
    slot: usize,
    label: &'static str,
    alg: &Algebra,
    rng: &mut R,
) -> Result<f64, ReductionError> {
    let mut worst = 0.0_f64;
    for _ in 0..5 {
        let p = random_point(field.space(), alg, rng, 0.7);
        worst = worst.max(field.partials(&p)[slot].amax());
    }
    if worst > INVARIANCE_TOL {
        return Err(ReductionError::NotInvariant {
            field: field.name().to_string(),
            action: label,
            residual: worst,
            tol: INVARIANCE_TOL,
        });
    }
    Ok(worst)
}

/// Assemble a carrier point: `group` in the leading slot, `fibers[j]` in
/// slot `active[j]`, zeros elsewhere.
fn carrier_point(
    space: SpaceId,
    alg: &Algebra,
    group: &GroupElement,
    active: &[usize],
    fibers: &[DVector<f64>],
) -> BundlePoint {
    let slots: Vec<SlotValue> = space
        .slots()
        .iter()
        .enumerate()
        .map(|(i, sig)| {
            let comps = active
                .iter()
                .position(|&a| a == i)
                .map(|j| fibers[j].clone())
                .unwrap_or_else(|| DVector::zeros(alg.dim()));
            match sig.kind {
                SlotKind::Group => SlotValue::Group(group.clone()),
                SlotKind::Vector => SlotValue::Vector(AlgebraVector {
                    alg: alg.clone(),
                    comps,
                }),
                SlotKind::Covector => SlotValue::Covector(DualVector {
                    alg: alg.clone(),
                    comps,
                }),
            }
        })
        .collect();
    BundlePoint::new(space, slots).expect("carrier slots match the space signature")
}

/// One linear coordinate field per component of each active slot, with
/// exact gradients.
fn coordinate_fields(space: SpaceId, alg: &Algebra, active: &[usize]) -> Vec<Vec<ScalarField>> {
    let dim = alg.dim();
    let n_slots = space.slot_count();
    active
        .iter()
        .map(|&slot| {
            (0..dim)
                .map(|k| {
                    let eval = move |p: &BundlePoint| -> f64 {
                        match &p.slots()[slot] {
                            SlotValue::Vector(v) => v.comps[k],
                            SlotValue::Covector(m) => m.comps[k],
                            SlotValue::Group(_) => 0.0,
                        }
                    };
                    let grad = move |p: &BundlePoint| -> Vec<DVector<f64>> {
                        let d = p.alg().dim();
                        let mut out: Vec<DVector<f64>> =
                            (0..n_slots).map(|_| DVector::zeros(d)).collect();
                        out[slot][k] = 1.0;
                        out
                    };
                    ScalarField::new(format!("x_{slot}_{k}"), space, eval).with_partials(grad)
                })
                .collect()
        })
        .collect()
}

/// The reduced Poisson flow of `field` under `bracket`: the listed slots
/// evolve by `ẋ = {H, x}`, and the group slot (when `group_vel` names the
/// Hamiltonian partial that drives it) by the right-trivialized velocity.
struct BracketFlow<'a> {
    bracket: BracketId,
    field: &'a ScalarField,
    active: Vec<usize>,
    group_vel: Option<usize>,
}

fn integrate_bracket_flow(
    flow: &BracketFlow,
    group0: Option<GroupElement>,
    fibers0: Vec<DVector<f64>>,
    alg: &Algebra,
    dt: f64,
    n_steps: usize,
) -> Result<Vec<ReducedPoint>, ReductionError> {
    let space = flow.bracket.space();
    let dim = alg.dim();
    let coords = coordinate_fields(space, alg, &flow.active);
    let frozen = GroupElement::identity(alg);

    let mut out = Vec::with_capacity(n_steps + 1);
    let mut group = group0;
    let mut fibers = fibers0;
    out.push((group.clone(), fibers.clone()));

    for _ in 0..n_steps {
        let (u, dv) = {
            let at_point = |u: &DVector<f64>, dv: &[DVector<f64>]| -> BundlePoint {
                let stage_g = match &group {
                    Some(h) => GroupElement::exp(&AlgebraVector {
                        alg: alg.clone(),
                        comps: u.clone(),
                    })
                    .mul(h),
                    None => frozen.clone(),
                };
                let stage_f: Vec<DVector<f64>> =
                    fibers.iter().zip(dv).map(|(f, d)| f + d).collect();
                carrier_point(space, alg, &stage_g, &flow.active, &stage_f)
            };
            let eval = |u: &DVector<f64>,
                        dv: &[DVector<f64>]|
             -> Result<(DVector<f64>, Vec<DVector<f64>>), ReductionError> {
                let p = at_point(u, dv);
                let gdot = match flow.group_vel {
                    Some(idx) => dexpinv(alg, u, &flow.field.partials(&p)[idx]),
                    None => DVector::zeros(dim),
                };
                let mut fdot = Vec::with_capacity(coords.len());
                for slot_coords in &coords {
                    let mut v = DVector::zeros(dim);
                    for (k, c) in slot_coords.iter().enumerate() {
                        v[k] = poisson(flow.bracket, flow.field, c, &p)?;
                    }
                    fdot.push(v);
                }
                Ok((gdot, fdot))
            };

            let zu = DVector::zeros(dim);
            let zv: Vec<DVector<f64>> = fibers.iter().map(|f| DVector::zeros(f.len())).collect();
            let (k1g, k1) = eval(&zu, &zv)?;
            let u2 = &k1g * (dt / 2.0);
            let v2: Vec<DVector<f64>> = k1.iter().map(|f| f * (dt / 2.0)).collect();
            let (k2g, k2) = eval(&u2, &v2)?;
            let u3 = &k2g * (dt / 2.0);
            let v3: Vec<DVector<f64>> = k2.iter().map(|f| f * (dt / 2.0)).collect();
            let (k3g, k3) = eval(&u3, &v3)?;
            let u4 = &k3g * dt;
            let v4: Vec<DVector<f64>> = k3.iter().map(|f| f * dt).collect();
            let (k4g, k4) = eval(&u4, &v4)?;

            let u = (&k1g + &k2g * 2.0 + &k3g * 2.0 + &k4g) * (dt / 6.0);
            let dv: Vec<DVector<f64>> = (0..fibers.len())
                .map(|i| (&k1[i] + &k2[i] * 2.0 + &k3[i] * 2.0 + &k4[i]) * (dt / 6.0))
                .collect();
            (u, dv)
        };
        if let Some(h) = &group {
            group = Some(
                GroupElement::exp(&AlgebraVector {
                    alg: alg.clone(),
                    comps: u,
                })
                .mul(h),
            );
        }
        fibers = fibers.iter().zip(&dv).map(|(f, d)| f + d).collect();
        out.push((group.clone(), fibers.clone()));
    }
    Ok(out)
}

/// Supremum distance between two reduced points (infinite when only one
/// side carries a group slot).
fn point_distance(a: &ReducedPoint, b: &ReducedPoint) -> f64 {
    let mut m = 0.0_f64;
    match (&a.0, &b.0) {
        (Some(g), Some(h)) => m = m.max((&g.mat - &h.mat).amax()),
        (None, None) => {}
        _ => return f64::INFINITY,
    }
    for (x, y) in a.1.iter().zip(b.1.iter()) {
        m = m.max((x - y).amax());
    }
    m
}

fn trajectory_deviation<P>(full: &Trajectory, reduced: &[ReducedPoint], proj: P) -> f64
where
    P: Fn(&State) -> ReducedPoint,
{
    full.states
        .iter()
        .zip(reduced)
        .map(|(s, r)| point_distance(&proj(s), r))
        .fold(0.0, f64::max)
}

fn family_points(traj: &Trajectory) -> Vec<ReducedPoint> {
    traj.states
        .iter()
        .map(|s| (s.group.clone(), s.fibers.clone()))
        .collect()
}

/// Integrate the full and reduced sides of `id` and report the largest
/// deviation between them, after checking that the Hamiltonian actually
/// has the symmetry the reduction claims.
pub fn verify_reduction(
    id: ScenarioId,
    alg: &Algebra,
    opts: &ScenarioOptions,
) -> Result<ScenarioReport, ReductionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (dt, steps) = (opts.dt, opts.steps);

    let (invariance, deviation) = match id {
        ScenarioId::CotangentLiePoisson => {
            let space = SpaceId::TstarG;
            let field = kinetic_field("cotangent-kinetic", space, 1, alg, &mut rng);
            let p0 = random_point(space, alg, &mut rng, 0.7);
            let g0 = p0.group().clone();
            let mu0 = p0.cov(1).comps.clone();
            let residual = group_independence_residual(&field, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTstarG,
                &field,
                None,
                &State::new(alg, Some(g0), vec![mu0.clone()]),
                dt,
                steps,
            )?;
            let reduced = integrate(
                EOMFamily::LpGstar,
                &field,
                None,
                &State::new(alg, None, vec![mu0]),
                dt,
                steps,
            )?;
            let dev = trajectory_deviation(&full, &family_points(&reduced), |s| {
                (None, vec![s.fibers[0].clone()])
            });
            (residual, dev)
        }

        ScenarioId::TangentCotangentFibers => {
            let action = ActionId::GOnTstarTG;
            let field = invariant_probe(action, alg, &mut rng);
            let p0 = random_point(SpaceId::TstarTG, alg, &mut rng, 0.7);
            let (g0, xi0, mu0, nu0) = (
                p0.group().clone(),
                p0.vec(1).comps.clone(),
                p0.cov(2).comps.clone(),
                p0.cov(3).comps.clone(),
            );
            let residual = invariance_residual(&field, action, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTstarTg,
                &field,
                None,
                &State::new(alg, Some(g0), vec![xi0.clone(), mu0.clone(), nu0.clone()]),
                dt,
                steps,
            )?;
            let flow = BracketFlow {
                bracket: BracketId::PAlgGstarGstar,
                field: &field,
                active: vec![1, 2, 3],
                group_vel: None,
            };
            let reduced = integrate_bracket_flow(&flow, None, vec![xi0, mu0, nu0], alg, dt, steps)?;
            let dev = trajectory_deviation(&full, &reduced, |s| (None, s.fibers.clone()));
            (residual, dev)
        }

        ScenarioId::TangentCotangentGroupDuals => {
            let action = ActionId::AlgOnTstarTG;
            let field = invariant_probe(action, alg, &mut rng);
            let p0 = random_point(SpaceId::TstarTG, alg, &mut rng, 0.7);
            let (g0, xi0, mu0, nu0) = (
                p0.group().clone(),
                p0.vec(1).comps.clone(),
                p0.cov(2).comps.clone(),
                p0.cov(3).comps.clone(),
            );
            let residual = invariance_residual(&field, action, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTstarTg,
                &field,
                None,
                &State::new(
                    alg,
                    Some(g0.clone()),
                    vec![xi0, mu0.clone(), nu0.clone()],
                ),
                dt,
                steps,
            )?;
            let flow = BracketFlow {
                bracket: BracketId::PGrpGstarGstar,
                field: &field,
                active: vec![2, 3],
                group_vel: Some(2),
            };
            let reduced =
                integrate_bracket_flow(&flow, Some(g0), vec![mu0, nu0], alg, dt, steps)?;
            let dev = trajectory_deviation(&full, &reduced, |s| {
                (
                    s.group.clone(),
                    vec![s.fibers[1].clone(), s.fibers[2].clone()],
                )
            });
            (residual, dev)
        }

        ScenarioId::TangentCotangentDualPair => {
            let action = ActionId::GAlgOnTstarTG;
            let field = invariant_probe(action, alg, &mut rng);
            let p0 = random_point(SpaceId::TstarTG, alg, &mut rng, 0.7);
            let (g0, xi0, mu0, nu0) = (
                p0.group().clone(),
                p0.vec(1).comps.clone(),
                p0.cov(2).comps.clone(),
                p0.cov(3).comps.clone(),
            );
            let residual = invariance_residual(&field, action, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTstarTg,
                &field,
                None,
                &State::new(alg, Some(g0), vec![xi0, mu0.clone(), nu0.clone()]),
                dt,
                steps,
            )?;
            let reduced = integrate(
                EOMFamily::LpGstarGstar,
                &field,
                None,
                &State::new(alg, None, vec![mu0, nu0]),
                dt,
                steps,
            )?;
            let dev = trajectory_deviation(&full, &family_points(&reduced), |s| {
                (None, vec![s.fibers[1].clone(), s.fibers[2].clone()])
            });
            (residual, dev)
        }

        ScenarioId::DoubleCotangentFibers => {
            let action = ActionId::GOnTstarTstarG;
            let field = invariant_probe(action, alg, &mut rng);
            let p0 = random_point(SpaceId::TstarTstarG, alg, &mut rng, 0.7);
            let (g0, mu0, nu0, xi0) = (
                p0.group().clone(),
                p0.cov(1).comps.clone(),
                p0.cov(2).comps.clone(),
                p0.vec(3).comps.clone(),
            );
            let residual = invariance_residual(&field, action, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTstarTstarG,
                &field,
                None,
                &State::new(alg, Some(g0), vec![mu0.clone(), nu0.clone(), xi0.clone()]),
                dt,
                steps,
            )?;
            let flow = BracketFlow {
                bracket: BracketId::PGstarGstarAlg,
                field: &field,
                active: vec![1, 2, 3],
                group_vel: None,
            };
            let reduced = integrate_bracket_flow(&flow, None, vec![mu0, nu0, xi0], alg, dt, steps)?;
            let dev = trajectory_deviation(&full, &reduced, |s| (None, s.fibers.clone()));
            (residual, dev)
        }

        ScenarioId::DoubleCotangentGroupMixed => {
            // Shared coefficients: the full Hamiltonian reads the invariant
            // combination w = ν + ad*_ξ μ, the reduced one reads the plain
            // covector slot of the quotient coordinates (g, w, ξ).
            let space = SpaceId::TstarTstarG;
            let c_xi = coeff(&mut rng);
            let c_w = coeff(&mut rng);
            let c_tr = coeff(&mut rng);
            let m = random_matrix(alg.matrix_size(), &mut rng);
            let field = PolySpec {
                self_quad: vec![(3, c_xi)],
                twisted: Some((TwistedSlots { mu: 1, xi: 3, nu: 2 }, c_w, 0.0)),
                trace: Some((m.clone(), c_tr)),
                ..PolySpec::default()
            }
            .build("mixed-quotient-full", space, alg);
            let reduced_field = PolySpec {
                self_quad: vec![(3, c_xi), (2, c_w)],
                trace: Some((m, c_tr)),
                ..PolySpec::default()
            }
            .build("mixed-quotient-reduced", space, alg);

            let p0 = random_point(space, alg, &mut rng, 0.7);
            let (g0, mu0, nu0, xi0) = (
                p0.group().clone(),
                p0.cov(1).comps.clone(),
                p0.cov(2).comps.clone(),
                p0.vec(3).comps.clone(),
            );
            let action = ActionId::DualOnTstarTstarG;
            let residual = invariance_residual(&field, action, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTstarTstarG,
                &field,
                None,
                &State::new(
                    alg,
                    Some(g0.clone()),
                    vec![mu0.clone(), nu0.clone(), xi0.clone()],
                ),
                dt,
                steps,
            )?;
            let w0 = &nu0 + alg.ad_star(&xi0, &mu0);
            let flow = BracketFlow {
                bracket: BracketId::PGrpGstarAlg,
                field: &reduced_field,
                active: vec![2, 3],
                group_vel: Some(2),
            };
            let reduced = integrate_bracket_flow(&flow, Some(g0), vec![w0, xi0], alg, dt, steps)?;
            let alg2 = alg.clone();
            let dev = trajectory_deviation(&full, &reduced, move |s| {
                let w = &s.fibers[1] + alg2.ad_star(&s.fibers[2], &s.fibers[0]);
                (s.group.clone(), vec![w, s.fibers[2].clone()])
            });
            (residual, dev)
        }

        ScenarioId::DoubleCotangentMixedPair => {
            let space = SpaceId::TstarTstarG;
            let field = PolySpec {
                self_quad: vec![(2, coeff(&mut rng)), (3, coeff(&mut rng))],
                cross: vec![(2, 3, coeff(&mut rng))],
                ..PolySpec::default()
            }
            .build("mixed-pair", space, alg);
            let p0 = random_point(space, alg, &mut rng, 0.7);
            let (g0, mu0, nu0, xi0) = (
                p0.group().clone(),
                p0.cov(1).comps.clone(),
                p0.cov(2).comps.clone(),
                p0.vec(3).comps.clone(),
            );
            let action = ActionId::GOnTstarTstarG;
            let residual = invariance_residual(&field, action, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTstarTstarG,
                &field,
                None,
                &State::new(alg, Some(g0), vec![mu0, nu0.clone(), xi0.clone()]),
                dt,
                steps,
            )?;
            let reduced = integrate(
                EOMFamily::LpGstarG,
                &field,
                None,
                &State::new(alg, None, vec![nu0, xi0]),
                dt,
                steps,
            )?;
            let dev = trajectory_deviation(&full, &family_points(&reduced), |s| {
                (None, vec![s.fibers[1].clone(), s.fibers[2].clone()])
            });
            (residual, dev)
        }

        ScenarioId::ProlongedFibers => {
            let action = ActionId::GOnTTstarG;
            let field = invariant_probe(action, alg, &mut rng);
            let p0 = random_point(SpaceId::TTstarG, alg, &mut rng, 0.7);
            let (g0, mu0, xi0, nu0) = (
                p0.group().clone(),
                p0.cov(1).comps.clone(),
                p0.vec(2).comps.clone(),
                p0.cov(3).comps.clone(),
            );
            let residual = invariance_residual(&field, action, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTTstarG,
                &field,
                None,
                &State::new(alg, Some(g0), vec![mu0.clone(), xi0.clone(), nu0.clone()]),
                dt,
                steps,
            )?;
            let flow = BracketFlow {
                bracket: BracketId::PGstarAlgGstar,
                field: &field,
                active: vec![1, 2, 3],
                group_vel: None,
            };
            let reduced = integrate_bracket_flow(&flow, None, vec![mu0, xi0, nu0], alg, dt, steps)?;
            let dev = trajectory_deviation(&full, &reduced, |s| (None, s.fibers.clone()));
            (residual, dev)
        }

        ScenarioId::ProlongedGroupDuals => {
            let action = ActionId::Alg2OnTTstarG;
            let field = invariant_probe(action, alg, &mut rng);
            let p0 = random_point(SpaceId::TTstarG, alg, &mut rng, 0.7);
            let (g0, mu0, xi0, nu0) = (
                p0.group().clone(),
                p0.cov(1).comps.clone(),
                p0.vec(2).comps.clone(),
                p0.cov(3).comps.clone(),
            );
            let residual = invariance_residual(&field, action, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTTstarG,
                &field,
                None,
                &State::new(
                    alg,
                    Some(g0.clone()),
                    vec![mu0.clone(), xi0, nu0.clone()],
                ),
                dt,
                steps,
            )?;
            let flow = BracketFlow {
                bracket: BracketId::PGrpG1starG3star,
                field: &field,
                active: vec![1, 3],
                group_vel: Some(3),
            };
            let reduced =
                integrate_bracket_flow(&flow, Some(g0), vec![mu0, nu0], alg, dt, steps)?;
            let dev = trajectory_deviation(&full, &reduced, |s| {
                (
                    s.group.clone(),
                    vec![s.fibers[0].clone(), s.fibers[2].clone()],
                )
            });
            (residual, dev)
        }

        ScenarioId::ProlongedGroupMixed => {
            let action = ActionId::Psi;
            let field = invariant_probe(action, alg, &mut rng);
            let p0 = random_point(SpaceId::TTstarG, alg, &mut rng, 0.7);
            let (g0, mu0, xi0, nu0) = (
                p0.group().clone(),
                p0.cov(1).comps.clone(),
                p0.vec(2).comps.clone(),
                p0.cov(3).comps.clone(),
            );
            let residual = invariance_residual(&field, action, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTTstarG,
                &field,
                None,
                &State::new(
                    alg,
                    Some(g0.clone()),
                    vec![mu0, xi0.clone(), nu0.clone()],
                ),
                dt,
                steps,
            )?;
            let flow = BracketFlow {
                bracket: BracketId::PGrpG2G3star,
                field: &field,
                active: vec![2, 3],
                group_vel: Some(3),
            };
            let reduced =
                integrate_bracket_flow(&flow, Some(g0), vec![xi0, nu0], alg, dt, steps)?;
            let dev = trajectory_deviation(&full, &reduced, |s| {
                (
                    s.group.clone(),
                    vec![s.fibers[1].clone(), s.fibers[2].clone()],
                )
            });
            (residual, dev)
        }

        ScenarioId::ProlongedDualPair => {
            let action = ActionId::ThetaGAlg2;
            let field = invariant_probe(action, alg, &mut rng);
            let p0 = random_point(SpaceId::TTstarG, alg, &mut rng, 0.7);
            let (g0, mu0, xi0, nu0) = (
                p0.group().clone(),
                p0.cov(1).comps.clone(),
                p0.vec(2).comps.clone(),
                p0.cov(3).comps.clone(),
            );
            let residual = invariance_residual(&field, action, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTTstarG,
                &field,
                None,
                &State::new(alg, Some(g0), vec![mu0.clone(), xi0, nu0.clone()]),
                dt,
                steps,
            )?;
            let flow = BracketFlow {
                bracket: BracketId::PG1starG3star,
                field: &field,
                active: vec![1, 3],
                group_vel: None,
            };
            let reduced = integrate_bracket_flow(&flow, None, vec![mu0, nu0], alg, dt, steps)?;
            let dev = trajectory_deviation(&full, &reduced, |s| {
                (None, vec![s.fibers[0].clone(), s.fibers[2].clone()])
            });
            (residual, dev)
        }

        ScenarioId::CotangentEmbedding => {
            // The same kinetic-plus-potential Hamiltonian written on both
            // spaces; the embedded trajectory must keep the two extra slots
            // at zero and carry the cotangent flow verbatim.
            let s = {
                let mut s = symmetric(alg.dim(), &mut rng);
                for k in 0..alg.dim() {
                    s[(k, k)] += 1.5;
                }
                s
            };
            let m = random_matrix(alg.matrix_size(), &mut rng);
            let c_tr = coeff(&mut rng);
            let h_big = PolySpec {
                aniso: vec![(3, s.clone())],
                trace: Some((m.clone(), c_tr)),
                ..PolySpec::default()
            }
            .build("embedded-kinetic", SpaceId::TTstarG, alg);
            let h_small = PolySpec {
                aniso: vec![(1, s)],
                trace: Some((m, c_tr)),
                ..PolySpec::default()
            }
            .build("cotangent-kinetic", SpaceId::TstarG, alg);

            let mut residual = 0.0_f64;
            for _ in 0..5 {
                let q = random_point(SpaceId::TstarG, alg, &mut rng, 0.7);
                let e = structure_map(StructureMapId::Emb2, &q)?;
                residual = residual.max((h_big.eval(&e) - h_small.eval(&q)).abs());
            }
            if residual > INVARIANCE_TOL {
                return Err(ReductionError::NotInvariant {
                    field: h_big.name().to_string(),
                    action: "momentum embedding consistency",
                    residual,
                    tol: INVARIANCE_TOL,
                });
            }

            let p0 = random_point(SpaceId::TstarG, alg, &mut rng, 0.7);
            let g0 = p0.group().clone();
            let nu0 = p0.cov(1).comps.clone();
            let zero = DVector::zeros(alg.dim());
            let full = integrate(
                EOMFamily::HamTTstarG,
                &h_big,
                None,
                &State::new(
                    alg,
                    Some(g0.clone()),
                    vec![zero.clone(), zero, nu0.clone()],
                ),
                dt,
                steps,
            )?;
            let reduced = integrate(
                EOMFamily::HamTstarG,
                &h_small,
                None,
                &State::new(alg, Some(g0), vec![nu0]),
                dt,
                steps,
            )?;
            let dev = full
                .states
                .iter()
                .zip(reduced.states.iter())
                .map(|(f, r)| {
                    let gf = f.group.as_ref().expect("full state keeps its group slot");
                    let gr = r.group.as_ref().expect("reduced state keeps its group slot");
                    (&gf.mat - &gr.mat)
                        .amax()
                        .max((&f.fibers[2] - &r.fibers[0]).amax())
                        .max(f.fibers[0].amax())
                        .max(f.fibers[1].amax())
                })
                .fold(0.0, f64::max);
            (residual, dev)
        }

        ScenarioId::TwoStageSemidirect => {
            let action = ActionId::GAlgOnTstarTG;
            let field = invariant_probe(action, alg, &mut rng);
            let p0 = random_point(SpaceId::TstarTG, alg, &mut rng, 0.7);
            let (g0, xi0, mu0, nu0) = (
                p0.group().clone(),
                p0.vec(1).comps.clone(),
                p0.cov(2).comps.clone(),
                p0.cov(3).comps.clone(),
            );
            let residual = invariance_residual(&field, action, alg, &mut rng)?;
            let full = integrate(
                EOMFamily::HamTstarTg,
                &field,
                None,
                &State::new(
                    alg,
                    Some(g0.clone()),
                    vec![xi0.clone(), mu0.clone(), nu0.clone()],
                ),
                dt,
                steps,
            )?;

            // One-step reduction: the coupled Lie–Poisson pair.
            let one_stage = integrate(
                EOMFamily::LpGstarGstar,
                &field,
                None,
                &State::new(alg, None, vec![mu0.clone(), nu0.clone()]),
                dt,
                steps,
            )?;
            let one_points = family_points(&one_stage);
            let d1 = trajectory_deviation(&full, &one_points, |s| {
                (None, vec![s.fibers[1].clone(), s.fibers[2].clone()])
            });

            // First stage alone: the velocity slot drops out and the second
            // covector enters the momentum equation as a frozen magnetic
            // term through its own Hamiltonian partial.
            let magnetic = {
                let dim = alg.dim();
                let mut out = Vec::with_capacity(steps + 1);
                let mut g = g0.clone();
                let mut mu = mu0.clone();
                out.push((Some(g.clone()), vec![mu.clone()]));
                let rhs = |g_stage: &GroupElement,
                           mu_stage: &DVector<f64>|
                 -> (DVector<f64>, DVector<f64>) {
                    let p = carrier_point(
                        SpaceId::TstarTG,
                        alg,
                        g_stage,
                        &[2, 3],
                        &[mu_stage.clone(), nu0.clone()],
                    );
                    let d = field.partials(&p);
                    let mudot =
                        alg.ad_star(&d[2], mu_stage) + alg.ad_star(&d[3], &nu0) - &d[0];
                    (d[2].clone(), mudot)
                };
                for _ in 0..steps {
                    let (u, dmu) = {
                        let eval = |u: &DVector<f64>,
                                    dv: &DVector<f64>|
                         -> (DVector<f64>, DVector<f64>) {
                            let stage_g = GroupElement::exp(&AlgebraVector {
                                alg: alg.clone(),
                                comps: u.clone(),
                            })
                            .mul(&g);
                            let (gdot, mudot) = rhs(&stage_g, &(&mu + dv));
                            (dexpinv(alg, u, &gdot), mudot)
                        };
                        let zu = DVector::zeros(dim);
                        let (k1g, k1) = eval(&zu, &zu);
                        let (k2g, k2) = eval(&(&k1g * (dt / 2.0)), &(&k1 * (dt / 2.0)));
                        let (k3g, k3) = eval(&(&k2g * (dt / 2.0)), &(&k2 * (dt / 2.0)));
                        let (k4g, k4) = eval(&(&k3g * dt), &(&k3 * dt));
                        (
                            (&k1g + &k2g * 2.0 + &k3g * 2.0 + &k4g) * (dt / 6.0),
                            (&k1 + &k2 * 2.0 + &k3 * 2.0 + &k4) * (dt / 6.0),
                        )
                    };
                    g = GroupElement::exp(&AlgebraVector {
                        alg: alg.clone(),
                        comps: u,
                    })
                    .mul(&g);
                    mu += dmu;
                    out.push((Some(g.clone()), vec![mu.clone()]));
                }
                out
            };
            let d2 = trajectory_deviation(&full, &magnetic, |s| {
                (s.group.clone(), vec![s.fibers[1].clone()])
            });

            // Second stage: the fiber Poisson flow on (ξ, μ, ν) must land on
            // the same dual pair as the one-step reduction.
            let flow = BracketFlow {
                bracket: BracketId::PAlgGstarGstar,
                field: &field,
                active: vec![1, 2, 3],
                group_vel: None,
            };
            let stage2 = integrate_bracket_flow(&flow, None, vec![xi0, mu0, nu0], alg, dt, steps)?;
            let d3 = stage2
                .iter()
                .zip(&one_points)
                .map(|(b, a)| {
                    (&b.1[1] - &a.1[0])
                        .amax()
                        .max((&b.1[2] - &a.1[1]).amax())
                })
                .fold(0.0, f64::max);

            (residual, d1.max(d2).max(d3))
        }
    };

    Ok(ScenarioReport {
        id,
        steps,
        dt,
        invariance_residual: invariance,
        max_deviation: deviation,
    })
}
