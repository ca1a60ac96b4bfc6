//! Momentum maps of the registered actions.
//!
//! Each map sends a bundle point to an element of the dual of the acting
//! group's algebra, stored componentwise.  The defining property, checked in
//! the integration tests, is that pairing the value with an algebra
//! direction reproduces the canonical one-form evaluated on the action's
//! infinitesimal generator.

use nalgebra::DVector;
use poincare_bundles::{BundlePoint, SpaceId};
use poincare_brackets::FormId;
use poincare_lie::Algebra;

use crate::action::{ActingDirection, ActionId};
use crate::error::ReductionError;

/// The registered momentum maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MomentumMapId {
    /// Momentum of left translation on `T*G`: the momentum slot itself.
    JGgstar,
    /// Momentum of the group action on `T*TG`: the first momentum slot.
    JGTstarTG,
    /// Momentum of the velocity translation on `T*TG`: the second momentum.
    JAlgTstarTG,
    /// Momentum of the tangent-group action on `T*TG`: both momenta.
    JGAlgTstarTG,
    /// Momentum of the dual translation on `T*T*G`: the velocity slot.
    JDualTstarTstarG,
    /// Momentum of the cotangent-group action on `T*T*G`.
    JGDualTstarTstarG,
    /// Momentum of the group action on `TT*G`: the twisted fiber momentum.
    JGTTstarG,
    /// Momentum of the velocity translation on `TT*G`: the momentum slot.
    JAlg2TTstarG,
    /// Momentum of the momentum translation on `TT*G`: minus the velocity.
    JDual1TTstarG,
    /// Momentum of the combined translation-and-velocity-shift action.
    JGAlg2TTstarG,
    /// Momentum of the combined translation-and-momentum-shift action.
    JGDual1TTstarG,
    /// Momentum of the velocity translation restricted to an orbit carrier.
    JAlgOrbit,
}

/// Value of a momentum map: one dual component per acting-algebra factor.
#[derive(Debug, Clone)]
pub struct MomentumValue {
    pub alg: Algebra,
    pub comps: Vec<DVector<f64>>,
}

impl MomentumValue {
    /// Pair the value with an algebra direction of the acting group.
    pub fn pairing(&self, dir: &ActingDirection) -> f64 {
        let parts: Vec<&DVector<f64>> = match dir {
            ActingDirection::Vector(z) => vec![&z.comps],
            ActingDirection::Covector(l) => vec![&l.comps],
            ActingDirection::VectorVector(z, x) => vec![&z.comps, &x.comps],
            ActingDirection::VectorCovector(z, l) => vec![&z.comps, &l.comps],
        };
        assert_eq!(
            parts.len(),
            self.comps.len(),
            "momentum value and direction have different factor counts"
        );
        self.comps
            .iter()
            .zip(parts)
            .map(|(c, d)| c.dot(d))
            .sum()
    }

    /// Largest componentwise deviation from another value.
    pub fn distance(&self, other: &MomentumValue) -> f64 {
        assert_eq!(self.comps.len(), other.comps.len(), "momentum factor count");
        self.comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| (a - b).amax())
            .fold(0.0, f64::max)
    }

    pub fn norm(&self) -> f64 {
        self.comps.iter().map(|c| c.norm_squared()).sum::<f64>().sqrt()
    }
}

impl MomentumMapId {
    pub const ALL: [MomentumMapId; 12] = [
        MomentumMapId::JGgstar,
        MomentumMapId::JGTstarTG,
        MomentumMapId::JAlgTstarTG,
        MomentumMapId::JGAlgTstarTG,
        MomentumMapId::JDualTstarTstarG,
        MomentumMapId::JGDualTstarTstarG,
        MomentumMapId::JGTTstarG,
        MomentumMapId::JAlg2TTstarG,
        MomentumMapId::JDual1TTstarG,
        MomentumMapId::JGAlg2TTstarG,
        MomentumMapId::JGDual1TTstarG,
        MomentumMapId::JAlgOrbit,
    ];

    /// Stable identifier used by the command-line tools.
    pub fn token(&self) -> &'static str {
        match self {
            MomentumMapId::JGgstar => "J_Ggstar",
            MomentumMapId::JGTstarTG => "JG_TstarTG",
            MomentumMapId::JAlgTstarTG => "Jg_TstarTG",
            MomentumMapId::JGAlgTstarTG => "JGg_TstarTG",
            MomentumMapId::JDualTstarTstarG => "Jgstar_TstarTstarG",
            MomentumMapId::JGDualTstarTstarG => "JGgstar_TstarTstarG",
            MomentumMapId::JGTTstarG => "JG_TTstarG",
            MomentumMapId::JAlg2TTstarG => "Jg2_TTstarG",
            MomentumMapId::JDual1TTstarG => "Jg1star_TTstarG",
            MomentumMapId::JGAlg2TTstarG => "JGg2_TTstarG",
            MomentumMapId::JGDual1TTstarG => "JGg1star_TTstarG",
            MomentumMapId::JAlgOrbit => "Jg_Omu",
        }
    }

    /// The space whose points the map consumes.
    pub fn space(&self) -> SpaceId {
        match self {
            MomentumMapId::JGgstar => SpaceId::TstarG,
            MomentumMapId::JGTstarTG
            | MomentumMapId::JAlgTstarTG
            | MomentumMapId::JGAlgTstarTG
            | MomentumMapId::JAlgOrbit => SpaceId::TstarTG,
            MomentumMapId::JDualTstarTstarG | MomentumMapId::JGDualTstarTstarG => {
                SpaceId::TstarTstarG
            }
            MomentumMapId::JGTTstarG
            | MomentumMapId::JAlg2TTstarG
            | MomentumMapId::JDual1TTstarG
            | MomentumMapId::JGAlg2TTstarG
            | MomentumMapId::JGDual1TTstarG => SpaceId::TTstarG,
        }
    }

    /// The action this map is the momentum of.
    pub fn action(&self) -> ActionId {
        match self {
            MomentumMapId::JGgstar => ActionId::GOnGgstar,
            MomentumMapId::JGTstarTG => ActionId::GOnTstarTG,
            MomentumMapId::JAlgTstarTG | MomentumMapId::JAlgOrbit => ActionId::AlgOnTstarTG,
            MomentumMapId::JGAlgTstarTG => ActionId::GAlgOnTstarTG,
            MomentumMapId::JDualTstarTstarG => ActionId::DualOnTstarTstarG,
            MomentumMapId::JGDualTstarTstarG => ActionId::TstarGOnTstarTstarG,
            MomentumMapId::JGTTstarG => ActionId::GOnTTstarG,
            MomentumMapId::JAlg2TTstarG => ActionId::Alg2OnTTstarG,
            MomentumMapId::JDual1TTstarG => ActionId::Psi,
            MomentumMapId::JGAlg2TTstarG => ActionId::ThetaGAlg2,
            MomentumMapId::JGDual1TTstarG => ActionId::AlphaGAlg1star,
        }
    }

    /// Canonical one-form whose pairing with the action's generators the map
    /// reproduces.
    pub fn one_form(&self) -> FormId {
        match self.space() {
            SpaceId::TstarG => FormId::ThetaGGstar,
            SpaceId::TstarTG => FormId::ThetaTstarTG,
            SpaceId::TstarTstarG => FormId::ThetaTstarTstarG,
            SpaceId::TTstarG => match self {
                MomentumMapId::JAlg2TTstarG | MomentumMapId::JGAlg2TTstarG => {
                    FormId::Theta2TTstarG
                }
                _ => FormId::Theta1TTstarG,
            },
            _ => unreachable!("momentum maps live on the cotangent-type spaces"),
        }
    }

    /// One-line description of the value.
    pub fn description(&self) -> &'static str {
        match self {
            MomentumMapId::JGgstar => "momentum slot of T*G, conserved by lifted left translation",
            MomentumMapId::JGTstarTG => "first momentum of T*TG, conserved by left translation",
            MomentumMapId::JAlgTstarTG => "second momentum of T*TG, conserved by velocity shifts",
            MomentumMapId::JGAlgTstarTG => "both momenta of T*TG, conserved by the tangent-group action",
            MomentumMapId::JDualTstarTstarG => "velocity slot of T*T*G, conserved by dual shifts",
            MomentumMapId::JGDualTstarTstarG => {
                "second momentum and velocity of T*T*G, conserved by the cotangent-group action"
            }
            MomentumMapId::JGTTstarG => {
                "fiber momentum twisted by the velocity, conserved by left translation of TT*G"
            }
            MomentumMapId::JAlg2TTstarG => "momentum slot of TT*G, conserved by velocity shifts",
            MomentumMapId::JDual1TTstarG => {
                "minus the velocity slot of TT*G, conserved by momentum shifts"
            }
            MomentumMapId::JGAlg2TTstarG => {
                "twisted fiber momentum paired with the momentum slot of TT*G"
            }
            MomentumMapId::JGDual1TTstarG => {
                "twisted fiber momentum paired with minus the velocity of TT*G"
            }
            MomentumMapId::JAlgOrbit => {
                "second momentum of an orbit carrier in T*TG, conserved by velocity shifts"
            }
        }
    }
}

/// Evaluate a momentum map at a point.
pub fn momentum(id: MomentumMapId, p: &BundlePoint) -> Result<MomentumValue, ReductionError> {
    if p.space() != id.space() {
        return Err(ReductionError::SpaceMismatch {
            what: "momentum",
            expected: id.space(),
            got: p.space(),
        });
    }
    let alg = p.alg().clone();
    let comps = match id {
        MomentumMapId::JGgstar => vec![p.cov(1).comps.clone()],
        MomentumMapId::JGTstarTG => vec![p.cov(2).comps.clone()],
        MomentumMapId::JAlgTstarTG | MomentumMapId::JAlgOrbit => vec![p.cov(3).comps.clone()],
        MomentumMapId::JGAlgTstarTG => {
            vec![p.cov(2).comps.clone(), p.cov(3).comps.clone()]
        }
        MomentumMapId::JDualTstarTstarG => vec![p.vec(3).comps.clone()],
        MomentumMapId::JGDualTstarTstarG => {
            vec![p.cov(2).comps.clone(), p.vec(3).comps.clone()]
        }
        MomentumMapId::JGTTstarG => vec![twisted_fiber_momentum(p)],
        MomentumMapId::JAlg2TTstarG => vec![p.cov(1).comps.clone()],
        MomentumMapId::JDual1TTstarG => vec![-&p.vec(2).comps],
        MomentumMapId::JGAlg2TTstarG => {
            vec![twisted_fiber_momentum(p), p.cov(1).comps.clone()]
        }
        MomentumMapId::JGDual1TTstarG => {
            vec![twisted_fiber_momentum(p), -&p.vec(2).comps]
        }
    };
    Ok(MomentumValue { alg, comps })
}

/// The combination `ν + ad*_ξ μ` on `TT*G`, the group-translation momentum.
fn twisted_fiber_momentum(p: &BundlePoint) -> DVector<f64> {
    let twisted = p.cov(3) + &p.vec(2).ad_star(p.cov(1));
    twisted.comps
}
