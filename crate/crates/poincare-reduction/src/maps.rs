//! Structure maps between the second-iterated bundles, and the coadjoint
//! representations of the tangent and cotangent groups.
//!
//! The three spaces `T*TG`, `T*T*G`, and `TT*G` are linked by a family of
//! fiber-preserving diffeomorphisms: the canonical flip, its variants that
//! respect the symplectic or Poisson structures, the dualization map, and
//! the flat map of the canonical two-form.  Two embeddings place `T*G`
//! inside `TT*G` as the zero sections of the velocity or momentum slots.
//! All maps act slotwise over a fixed group slot.

use poincare_bundles::{BundlePoint, SlotValue, SpaceId};
use poincare_lie::{AlgebraVector, DualVector};

use crate::action::ActingElement;
use crate::error::ReductionError;
use crate::momentum::MomentumValue;

/// The registered maps between the iterated bundles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureMapId {
    /// Canonical flip `T*T*G → T*TG` interchanging the two momenta and
    /// negating the velocity.
    Gamma,
    /// The flip read as a Poisson map between the reduced bracket spaces.
    GammaP,
    /// The flip variant that matches the reduced symplectic forms.
    GammaS,
    /// Dualization `TT*G → T*TG`: velocity to the velocity slot, the
    /// twisted fiber momentum to the first momentum.
    SigmaBar,
    /// Flat map of the canonical two-form, `TT*G → T*T*G`.
    OmegaFlat,
    /// The flat map read as a Poisson map between the reduced brackets.
    OmegaP,
    /// The flat-map variant that matches the reduced symplectic forms.
    OmegaS,
    /// Zero-velocity embedding `T*G → TT*G` (image is Lagrangian).
    Emb1,
    /// Zero-momentum embedding `T*G → TT*G` (image is symplectic).
    Emb2,
}

impl StructureMapId {
    pub const ALL: [StructureMapId; 9] = [
        StructureMapId::Gamma,
        StructureMapId::GammaP,
        StructureMapId::GammaS,
        StructureMapId::SigmaBar,
        StructureMapId::OmegaFlat,
        StructureMapId::OmegaP,
        StructureMapId::OmegaS,
        StructureMapId::Emb1,
        StructureMapId::Emb2,
    ];

    /// Stable identifier used by the command-line tools.
    pub fn token(&self) -> &'static str {
        match self {
            StructureMapId::Gamma => "GAMMA",
            StructureMapId::GammaP => "gammaP",
            StructureMapId::GammaS => "gammaS",
            StructureMapId::SigmaBar => "sigma_bar",
            StructureMapId::OmegaFlat => "omega_flat",
            StructureMapId::OmegaP => "OMEGA_P",
            StructureMapId::OmegaS => "OMEGA_S",
            StructureMapId::Emb1 => "EMB1",
            StructureMapId::Emb2 => "EMB2",
        }
    }

    pub fn source(&self) -> SpaceId {
        match self {
            StructureMapId::Gamma | StructureMapId::GammaP | StructureMapId::GammaS => {
                SpaceId::TstarTstarG
            }
            StructureMapId::SigmaBar
            | StructureMapId::OmegaFlat
            | StructureMapId::OmegaP
            | StructureMapId::OmegaS => SpaceId::TTstarG,
            StructureMapId::Emb1 | StructureMapId::Emb2 => SpaceId::TstarG,
        }
    }

    pub fn target(&self) -> SpaceId {
        match self {
            StructureMapId::Gamma
            | StructureMapId::GammaP
            | StructureMapId::GammaS
            | StructureMapId::SigmaBar => SpaceId::TstarTG,
            StructureMapId::OmegaFlat | StructureMapId::OmegaP | StructureMapId::OmegaS => {
                SpaceId::TstarTstarG
            }
            StructureMapId::Emb1 | StructureMapId::Emb2 => SpaceId::TTstarG,
        }
    }

    /// Whether the map has an inverse in this registry (the embeddings are
    /// only one-sided).
    pub fn invertible(&self) -> bool {
        !matches!(self, StructureMapId::Emb1 | StructureMapId::Emb2)
    }

    /// One-line description of what the map does.
    pub fn description(&self) -> &'static str {
        match self {
            StructureMapId::Gamma => {
                "swaps the two momenta of T*T*G and negates the velocity, landing in T*TG"
            }
            StructureMapId::GammaP => {
                "the momentum swap read on the reduced Poisson spaces of functions"
            }
            StructureMapId::GammaS => {
                "the momentum swap matched to the reduced symplectic forms"
            }
            StructureMapId::SigmaBar => {
                "dualizes TT*G into T*TG, twisting the fiber momentum by the velocity"
            }
            StructureMapId::OmegaFlat => {
                "contracts tangent vectors into the canonical two-form, TT*G to T*T*G"
            }
            StructureMapId::OmegaP => {
                "the two-form contraction read on the reduced Poisson spaces"
            }
            StructureMapId::OmegaS => {
                "the two-form contraction matched to the reduced symplectic forms"
            }
            StructureMapId::Emb1 => {
                "embeds T*G into TT*G with zero velocity; the image is Lagrangian"
            }
            StructureMapId::Emb2 => {
                "embeds T*G into TT*G with zero momentum; the image is symplectic"
            }
        }
    }
}

fn check_space(
    what: &'static str,
    expected: SpaceId,
    p: &BundlePoint,
) -> Result<(), ReductionError> {
    if p.space() == expected {
        Ok(())
    } else {
        Err(ReductionError::SpaceMismatch {
            what,
            expected,
            got: p.space(),
        })
    }
}

fn point(space: SpaceId, slots: Vec<SlotValue>) -> BundlePoint {
    BundlePoint::new(space, slots).expect("structure-map image is well-formed")
}

/// Apply a structure map to a point of its source space.
pub fn structure_map(id: StructureMapId, p: &BundlePoint) -> Result<BundlePoint, ReductionError> {
    check_space("structure_map", id.source(), p)?;
    let g = SlotValue::Group(p.group().clone());
    Ok(match id {
        StructureMapId::Gamma | StructureMapId::GammaP => {
            // (g, μ, ν, ξ) ↦ (g, -ξ, ν, μ)
            point(
                SpaceId::TstarTG,
                vec![
                    g,
                    SlotValue::Vector(-p.vec(3)),
                    SlotValue::Covector(p.cov(2).clone()),
                    SlotValue::Covector(p.cov(1).clone()),
                ],
            )
        }
        StructureMapId::GammaS => {
            // (g, μ, ν, ξ) ↦ (g, -ξ, μ, ν)
            point(
                SpaceId::TstarTG,
                vec![
                    g,
                    SlotValue::Vector(-p.vec(3)),
                    SlotValue::Covector(p.cov(1).clone()),
                    SlotValue::Covector(p.cov(2).clone()),
                ],
            )
        }
        StructureMapId::SigmaBar => {
            // (g, μ, ξ, ν) ↦ (g, ξ, ν + ad*_ξ μ, μ)
            let twisted = p.cov(3) + &p.vec(2).ad_star(p.cov(1));
            point(
                SpaceId::TstarTG,
                vec![
                    g,
                    SlotValue::Vector(p.vec(2).clone()),
                    SlotValue::Covector(twisted),
                    SlotValue::Covector(p.cov(1).clone()),
                ],
            )
        }
        StructureMapId::OmegaFlat | StructureMapId::OmegaP => {
            // (g, μ, ξ, ν) ↦ (g, μ, ν + ad*_ξ μ, -ξ)
            let twisted = p.cov(3) + &p.vec(2).ad_star(p.cov(1));
            point(
                SpaceId::TstarTstarG,
                vec![
                    g,
                    SlotValue::Covector(p.cov(1).clone()),
                    SlotValue::Covector(twisted),
                    SlotValue::Vector(-p.vec(2)),
                ],
            )
        }
        StructureMapId::OmegaS => {
            // (g, μ, ξ, ν) ↦ (g, ν, μ, -ξ)
            point(
                SpaceId::TstarTstarG,
                vec![
                    g,
                    SlotValue::Covector(p.cov(3).clone()),
                    SlotValue::Covector(p.cov(1).clone()),
                    SlotValue::Vector(-p.vec(2)),
                ],
            )
        }
        StructureMapId::Emb1 => {
            // (g, μ) ↦ (g, μ, 0, 0)
            let alg = p.alg();
            point(
                SpaceId::TTstarG,
                vec![
                    g,
                    SlotValue::Covector(p.cov(1).clone()),
                    SlotValue::Vector(AlgebraVector::zero(alg)),
                    SlotValue::Covector(DualVector::zero(alg)),
                ],
            )
        }
        StructureMapId::Emb2 => {
            // (g, ν) ↦ (g, 0, 0, ν)
            let alg = p.alg();
            point(
                SpaceId::TTstarG,
                vec![
                    g,
                    SlotValue::Covector(DualVector::zero(alg)),
                    SlotValue::Vector(AlgebraVector::zero(alg)),
                    SlotValue::Covector(p.cov(1).clone()),
                ],
            )
        }
    })
}

/// Apply the inverse of an invertible structure map.
pub fn inverse_structure_map(
    id: StructureMapId,
    q: &BundlePoint,
) -> Result<BundlePoint, ReductionError> {
    if !id.invertible() {
        return Err(ReductionError::Config(format!(
            "structure map {} is an embedding and has no inverse",
            id.token()
        )));
    }
    check_space("inverse_structure_map", id.target(), q)?;
    let g = SlotValue::Group(q.group().clone());
    Ok(match id {
        StructureMapId::Gamma | StructureMapId::GammaP => {
            // (g, ζ, n, m) ↦ (g, m, n, -ζ)
            point(
                SpaceId::TstarTstarG,
                vec![
                    g,
                    SlotValue::Covector(q.cov(3).clone()),
                    SlotValue::Covector(q.cov(2).clone()),
                    SlotValue::Vector(-q.vec(1)),
                ],
            )
        }
        StructureMapId::GammaS => {
            // (g, ζ, m, n) ↦ (g, m, n, -ζ)
            point(
                SpaceId::TstarTstarG,
                vec![
                    g,
                    SlotValue::Covector(q.cov(2).clone()),
                    SlotValue::Covector(q.cov(3).clone()),
                    SlotValue::Vector(-q.vec(1)),
                ],
            )
        }
        StructureMapId::SigmaBar => {
            // (g, ξ, w, μ) ↦ (g, μ, ξ, w - ad*_ξ μ)
            let nu = q.cov(2) - &q.vec(1).ad_star(q.cov(3));
            point(
                SpaceId::TTstarG,
                vec![
                    g,
                    SlotValue::Covector(q.cov(3).clone()),
                    SlotValue::Vector(q.vec(1).clone()),
                    SlotValue::Covector(nu),
                ],
            )
        }
        StructureMapId::OmegaFlat | StructureMapId::OmegaP => {
            // (g, μ, w, ζ) ↦ (g, μ, -ζ, w - ad*_{-ζ} μ)
            let xi = -q.vec(3);
            let nu = q.cov(2) - &xi.ad_star(q.cov(1));
            point(
                SpaceId::TTstarG,
                vec![
                    g,
                    SlotValue::Covector(q.cov(1).clone()),
                    SlotValue::Vector(xi),
                    SlotValue::Covector(nu),
                ],
            )
        }
        StructureMapId::OmegaS => {
            // (g, n, m, ζ) ↦ (g, m, -ζ, n)
            point(
                SpaceId::TTstarG,
                vec![
                    g,
                    SlotValue::Covector(q.cov(2).clone()),
                    SlotValue::Vector(-q.vec(3)),
                    SlotValue::Covector(q.cov(1).clone()),
                ],
            )
        }
        StructureMapId::Emb1 | StructureMapId::Emb2 => unreachable!("handled above"),
    })
}

/// Coadjoint representations of the two semidirect structure groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoadjointId {
    /// The tangent group `G ⋉ g` acting on pairs of duals.
    TangentGroup,
    /// The cotangent group `G ⋉ g*` acting on a dual-and-vector pair.
    CotangentGroup,
}

impl CoadjointId {
    pub fn token(&self) -> &'static str {
        match self {
            CoadjointId::TangentGroup => "coad_Gxg",
            CoadjointId::CotangentGroup => "coad_Gxgstar",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            CoadjointId::TangentGroup => {
                "tangent-group coadjoint action on momentum pairs (mu, nu)"
            }
            CoadjointId::CotangentGroup => {
                "cotangent-group coadjoint action on momentum-velocity pairs (nu, xi)"
            }
        }
    }
}

/// Apply a coadjoint representation to a two-component momentum value.
pub fn coadjoint(
    id: CoadjointId,
    elem: &ActingElement,
    value: &MomentumValue,
) -> Result<MomentumValue, ReductionError> {
    if value.comps.len() != 2 {
        return Err(ReductionError::Config(format!(
            "{} acts on two-component momentum values, got {}",
            id.token(),
            value.comps.len()
        )));
    }
    let alg = &value.alg;
    match (id, elem) {
        (CoadjointId::TangentGroup, ActingElement::GroupVector(h, z)) => {
            // (h, ζ) · (μ, ν) = (Ad*_h(μ - ad*_ζ ν), Ad*_h ν)
            let mu = DualVector {
                alg: alg.clone(),
                comps: value.comps[0].clone(),
            };
            let nu = DualVector {
                alg: alg.clone(),
                comps: value.comps[1].clone(),
            };
            let shifted = &mu - &z.ad_star(&nu);
            Ok(MomentumValue {
                alg: alg.clone(),
                comps: vec![h.coadjoint(&shifted).comps, h.coadjoint(&nu).comps],
            })
        }
        (CoadjointId::CotangentGroup, ActingElement::GroupCovector(h, l)) => {
            // (h, λ) · (ν, ξ) = (Ad*_h(ν + ad*_ξ λ), Ad_h ξ)
            let nu = DualVector {
                alg: alg.clone(),
                comps: value.comps[0].clone(),
            };
            let xi = AlgebraVector {
                alg: alg.clone(),
                comps: value.comps[1].clone(),
            };
            let shifted = &nu + &xi.ad_star(l);
            Ok(MomentumValue {
                alg: alg.clone(),
                comps: vec![h.coadjoint(&shifted).comps, h.adjoint(&xi).comps],
            })
        }
        _ => Err(ReductionError::ActingKind {
            action: id.token(),
            expected: match id {
                CoadjointId::TangentGroup => "group-vector",
                CoadjointId::CotangentGroup => "group-covector",
            },
            got: elem.kind(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use poincare_bundles::random_point;
    use poincare_lie::algebras::{se2, so3};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const TOL: f64 = 1e-12;

    #[test]
    fn invertible_maps_round_trip() {
        for alg in [so3(), se2()] {
            let mut rng = ChaCha8Rng::seed_from_u64(31);
            for id in StructureMapId::ALL {
                if !id.invertible() {
                    continue;
                }
                let p = random_point(id.source(), &alg, &mut rng, 0.9);
                let q = structure_map(id, &p).unwrap();
                assert_eq!(q.space(), id.target());
                let back = inverse_structure_map(id, &q).unwrap();
                assert!(
                    p.distance(&back) < TOL,
                    "{} round trip failed on {}",
                    id.token(),
                    alg.name()
                );
            }
        }
    }

    #[test]
    fn embeddings_have_no_inverse() {
        let alg = so3();
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let q = random_point(SpaceId::TTstarG, &alg, &mut rng, 0.9);
        assert!(inverse_structure_map(StructureMapId::Emb1, &q).is_err());
        assert!(inverse_structure_map(StructureMapId::Emb2, &q).is_err());
    }

    #[test]
    fn dualization_twists_by_the_velocity() {
        let alg = so3();
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let p = random_point(SpaceId::TTstarG, &alg, &mut rng, 0.9);
        let q = structure_map(StructureMapId::SigmaBar, &p).unwrap();
        assert_eq!(q.vec(1).comps, p.vec(2).comps);
        assert_eq!(q.cov(3).comps, p.cov(1).comps);
        let twisted = p.cov(3) + &p.vec(2).ad_star(p.cov(1));
        assert!((&q.cov(2).comps - &twisted.comps).amax() < TOL);
    }

    #[test]
    fn flat_map_agrees_with_dualization_after_the_flip() {
        // The flip applied after the flat map reproduces dualization
        // exactly: the two velocity negations cancel.
        let alg = so3();
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let p = random_point(SpaceId::TTstarG, &alg, &mut rng, 0.9);
        let via_flat = structure_map(
            StructureMapId::Gamma,
            &structure_map(StructureMapId::OmegaFlat, &p).unwrap(),
        )
        .unwrap();
        let direct = structure_map(StructureMapId::SigmaBar, &p).unwrap();
        assert!(via_flat.distance(&direct) < TOL);
    }

    #[test]
    fn coadjoint_rejects_wrong_kinds() {
        let alg = so3();
        let value = MomentumValue {
            alg: alg.clone(),
            comps: vec![
                nalgebra::DVector::zeros(3),
                nalgebra::DVector::zeros(3),
            ],
        };
        let bad = ActingElement::Vector(AlgebraVector::zero(&alg));
        assert!(coadjoint(CoadjointId::TangentGroup, &bad, &value).is_err());
    }
}
