//! Registry of Poisson brackets on the iterated bundles and their quotients.
//!
//! Each entry binds a bracket formula to the trivialized space whose
//! coordinates it reads.  Brackets obtained by reduction (orbit or
//! fiber-only variants) are evaluated at points of the ambient bundle; the
//! formula simply ignores the coordinates that were quotiented away.
//!
//! Argument order matters for the degenerate entries: the first function is
//! the one in the Hamiltonian slot, so that the flow of `h` on a coordinate
//! function `z` is `z' = poisson(id, h, z, p)`.

use nalgebra::DVector;
use poincare_bundles::{BundlePoint, SpaceId};
use poincare_dynamics::ScalarField;

use crate::error::BracketError;

/// Identifier for one Poisson bracket in the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BracketId {
    /// Canonical bracket on the trivialized cotangent bundle of the group.
    CanGGstar,
    /// Lie-Poisson bracket on the dual of the algebra.
    LpGstar,
    /// Bracket on (xi, mu, nu) with the twist terms of the tangent-group
    /// cotangent bundle.
    PAlgGstarGstar,
    /// Direct-product bracket on (xi, mu, nu); the twist-free part of the
    /// previous entry.
    DpAlgGstarGstar,
    /// Bracket on (g, mu, nu) for group-dependent functions.
    PGrpGstarGstar,
    /// Lie-Poisson bracket on the dual of the semidirect tangent-group
    /// algebra, coordinates (mu, nu).
    LpGstarGstar,
    /// Orbit-reduced bracket: coadjoint orbit in the first dual slot, free
    /// second dual slot.
    POrbitGstar,
    /// Bracket on (mu, nu, xi) of the iterated cotangent bundle.
    PGstarGstarAlg,
    /// Bracket on (g, nu, xi) for group-dependent functions of the iterated
    /// cotangent bundle.
    PGrpGstarAlg,
    /// Lie-Poisson-type bracket on the (nu, xi) fibers of the iterated
    /// cotangent bundle.
    LpGstarAlg,
    /// Bracket on (mu, xi, nu) of the tangent of the cotangent bundle.
    PGstarAlgGstar,
    /// Bracket on (g, mu, nu); degenerate in the first dual slot.
    PGrpG1starG3star,
    /// Bracket on (g, xi, nu); degenerate in the algebra slot.
    PGrpG2G3star,
    /// Fiber bracket on (mu, nu); degenerate in the first dual slot.
    PG1starG3star,
    /// Fiber bracket on (xi, nu); degenerate in the algebra slot.
    PG2G3star,
    /// Orbit-reduced bracket pairing a coadjoint orbit with the second dual
    /// slot.
    POrbitG2star,
}

impl BracketId {
    /// Every registered bracket, in stable listing order.
    pub const ALL: [BracketId; 16] = [
        BracketId::CanGGstar,
        BracketId::LpGstar,
        BracketId::PAlgGstarGstar,
        BracketId::DpAlgGstarGstar,
        BracketId::PGrpGstarGstar,
        BracketId::LpGstarGstar,
        BracketId::POrbitGstar,
        BracketId::PGstarGstarAlg,
        BracketId::PGrpGstarAlg,
        BracketId::LpGstarAlg,
        BracketId::PGstarAlgGstar,
        BracketId::PGrpG1starG3star,
        BracketId::PGrpG2G3star,
        BracketId::PG1starG3star,
        BracketId::PG2G3star,
        BracketId::POrbitG2star,
    ];

    /// Stable text identifier used by the command-line tools.
    pub fn token(self) -> &'static str {
        match self {
            BracketId::CanGGstar => "CAN_Ggstar",
            BracketId::LpGstar => "LP_gstar",
            BracketId::PAlgGstarGstar => "P_g_gstar_gstar",
            BracketId::DpAlgGstarGstar => "DP_g_gstar_gstar",
            BracketId::PGrpGstarGstar => "P_G_gstar_gstar",
            BracketId::LpGstarGstar => "LP_gstar_gstar",
            BracketId::POrbitGstar => "P_Omu_gstar",
            BracketId::PGstarGstarAlg => "P_gstar_gstar_g",
            BracketId::PGrpGstarAlg => "P_G_gstar_g",
            BracketId::LpGstarAlg => "LP_gstar_g",
            BracketId::PGstarAlgGstar => "P_gstar_g_gstar",
            BracketId::PGrpG1starG3star => "P_G_g1star_g3star",
            BracketId::PGrpG2G3star => "P_G_g2_g3star",
            BracketId::PG1starG3star => "P_g1star_g3star",
            BracketId::PG2G3star => "P_g2_g3star",
            BracketId::POrbitG2star => "P_Omu_g2star",
        }
    }

    /// Ambient space whose points and scalar fields the bracket accepts.
    pub fn space(self) -> SpaceId {
        match self {
            BracketId::CanGGstar | BracketId::LpGstar => SpaceId::TstarG,
            BracketId::PAlgGstarGstar
            | BracketId::DpAlgGstarGstar
            | BracketId::PGrpGstarGstar
            | BracketId::LpGstarGstar
            | BracketId::POrbitGstar
            | BracketId::POrbitG2star => SpaceId::TstarTG,
            BracketId::PGstarGstarAlg
            | BracketId::PGrpGstarAlg
            | BracketId::LpGstarAlg => SpaceId::TstarTstarG,
            BracketId::PGstarAlgGstar
            | BracketId::PGrpG1starG3star
            | BracketId::PGrpG2G3star
            | BracketId::PG1starG3star
            | BracketId::PG2G3star => SpaceId::TTstarG,
        }
    }

    /// Coordinates the bracket actually reads, in evaluation order.
    pub fn signature(self) -> &'static str {
        match self {
            BracketId::CanGGstar => "(g, mu)",
            BracketId::LpGstar => "(mu)",
            BracketId::PAlgGstarGstar | BracketId::DpAlgGstarGstar => "(xi, mu, nu)",
            BracketId::PGrpGstarGstar => "(g, mu, nu)",
            BracketId::LpGstarGstar
            | BracketId::POrbitGstar
            | BracketId::POrbitG2star
            | BracketId::PG1starG3star => "(mu, nu)",
            BracketId::PGstarGstarAlg => "(mu, nu, xi)",
            BracketId::PGrpGstarAlg => "(g, nu, xi)",
            BracketId::LpGstarAlg => "(nu, xi)",
            BracketId::PGstarAlgGstar => "(mu, xi, nu)",
            BracketId::PGrpG1starG3star => "(g, mu, nu)",
            BracketId::PGrpG2G3star => "(g, xi, nu)",
            BracketId::PG2G3star => "(xi, nu)",
        }
    }

    /// Short human-readable account of where the bracket lives.
    pub fn description(self) -> &'static str {
        match self {
            BracketId::CanGGstar => {
                "canonical bracket on the trivialized cotangent bundle of the group"
            }
            BracketId::LpGstar => "Lie-Poisson bracket on the dual of the algebra",
            BracketId::PAlgGstarGstar => {
                "fiber bracket of the tangent-group cotangent bundle, with twist terms"
            }
            BracketId::DpAlgGstarGstar => {
                "direct-product part of the tangent-group fiber bracket"
            }
            BracketId::PGrpGstarGstar => {
                "bracket for group-dependent functions of the tangent-group cotangent bundle"
            }
            BracketId::LpGstarGstar => {
                "Lie-Poisson bracket on the dual of the semidirect tangent-group algebra"
            }
            BracketId::POrbitGstar => {
                "orbit bracket: coadjoint orbit in the first dual slot, second slot free"
            }
            BracketId::PGstarGstarAlg => {
                "fiber bracket of the iterated cotangent bundle"
            }
            BracketId::PGrpGstarAlg => {
                "bracket for group-dependent functions of the iterated cotangent bundle"
            }
            BracketId::LpGstarAlg => {
                "Lie-Poisson-type bracket on the dual-times-algebra fiber"
            }
            BracketId::PGstarAlgGstar => {
                "fiber bracket of the tangent of the cotangent bundle"
            }
            BracketId::PGrpG1starG3star => {
                "group-dependent bracket degenerate in the first dual slot"
            }
            BracketId::PGrpG2G3star => {
                "group-dependent bracket degenerate in the algebra slot"
            }
            BracketId::PG1starG3star => {
                "fiber bracket degenerate in the first dual slot"
            }
            BracketId::PG2G3star => "fiber bracket degenerate in the algebra slot",
            BracketId::POrbitG2star => {
                "orbit bracket: coadjoint orbit paired with the second dual slot"
            }
        }
    }
}

pub(crate) fn check_space(
    what: &'static str,
    got: SpaceId,
    expected: SpaceId,
) -> Result<(), BracketError> {
    if got == expected {
        Ok(())
    } else {
        Err(BracketError::SpaceMismatch {
            what,
            expected,
            got,
        })
    }
}

/// Evaluate `{f, k}` at `p` for the given registry entry.
///
/// Group-slot derivatives enter only through the right-trivialized gradient
/// that [`ScalarField::partials`] already produces, so every formula below is
/// an algebraic expression in the partials, the fiber coordinates, the
/// algebra bracket, and its coadjoint companion.
pub fn poisson(
    id: BracketId,
    f: &ScalarField,
    k: &ScalarField,
    p: &BundlePoint,
) -> Result<f64, BracketError> {
    let space = id.space();
    check_space("first function", f.space(), space)?;
    check_space("second function", k.space(), space)?;
    check_space("point", p.space(), space)?;

    let alg = p.alg().clone();
    let df = f.partials(p);
    let dk = k.partials(p);
    let br = |x: &DVector<f64>, y: &DVector<f64>| alg.bracket(x, y);
    let pr = |m: &DVector<f64>, x: &DVector<f64>| alg.pairing(m, x);

    let value = match id {
        BracketId::CanGGstar => {
            let mu = &p.cov(1).comps;
            pr(&dk[0], &df[1]) - pr(&df[0], &dk[1]) + pr(mu, &br(&df[1], &dk[1]))
        }
        BracketId::LpGstar => {
            let mu = &p.cov(1).comps;
            pr(mu, &br(&df[1], &dk[1]))
        }
        BracketId::PAlgGstarGstar => {
            let xi = &p.vec(1).comps;
            let mu = &p.cov(2).comps;
            let nu = &p.cov(3).comps;
            pr(&dk[1], &df[3]) - pr(&df[1], &dk[3])
                + pr(mu, &br(&df[2], &dk[2]))
                + pr(&alg.ad_star(xi, &dk[1]), &df[2])
                - pr(&alg.ad_star(xi, &df[1]), &dk[2])
                + pr(nu, &(br(&df[2], &dk[3]) - br(&dk[2], &df[3])))
        }
        BracketId::DpAlgGstarGstar => {
            let mu = &p.cov(2).comps;
            pr(&dk[1], &df[3]) - pr(&df[1], &dk[3]) + pr(mu, &br(&df[2], &dk[2]))
        }
        BracketId::PGrpGstarGstar => {
            let mu = &p.cov(2).comps;
            let nu = &p.cov(3).comps;
            pr(&dk[0], &df[2]) - pr(&df[0], &dk[2])
                + pr(mu, &br(&df[2], &dk[2]))
                + pr(nu, &(br(&df[2], &dk[3]) - br(&dk[2], &df[3])))
        }
        BracketId::LpGstarGstar | BracketId::POrbitGstar | BracketId::POrbitG2star => {
            let mu = &p.cov(2).comps;
            let nu = &p.cov(3).comps;
            pr(mu, &br(&df[2], &dk[2]))
                + pr(nu, &(br(&df[2], &dk[3]) - br(&dk[2], &df[3])))
        }
        BracketId::PGstarGstarAlg => {
            let mu = &p.cov(1).comps;
            let nu = &p.cov(2).comps;
            let xi = &p.vec(3).comps;
            pr(&df[3], &dk[1]) - pr(&dk[3], &df[1])
                + pr(nu, &br(&df[2], &dk[2]))
                + pr(
                    &(alg.ad_star(&dk[2], &df[3]) - alg.ad_star(&df[2], &dk[3])),
                    xi,
                )
                + pr(mu, &(br(&df[1], &dk[2]) - br(&dk[1], &df[2])))
        }
        BracketId::PGrpGstarAlg => {
            let nu = &p.cov(2).comps;
            let xi = &p.vec(3).comps;
            pr(&dk[0], &df[2]) - pr(&df[0], &dk[2])
                + pr(&df[3], &br(&dk[2], xi))
                - pr(&dk[3], &br(&df[2], xi))
                + pr(nu, &br(&df[2], &dk[2]))
        }
        BracketId::LpGstarAlg => {
            let nu = &p.cov(2).comps;
            let xi = &p.vec(3).comps;
            pr(nu, &br(&df[2], &dk[2]))
                + pr(
                    &(alg.ad_star(&dk[2], &df[3]) - alg.ad_star(&df[2], &dk[3])),
                    xi,
                )
        }
        BracketId::PGstarAlgGstar => {
            let nu = &p.cov(3).comps;
            pr(&dk[2], &df[1]) - pr(&df[2], &dk[1]) + pr(nu, &br(&df[3], &dk[3]))
        }
        BracketId::PGrpG1starG3star | BracketId::PGrpG2G3star => {
            let nu = &p.cov(3).comps;
            pr(&dk[0], &df[3]) - pr(&df[0], &dk[3]) + pr(nu, &br(&df[3], &dk[3]))
        }
        BracketId::PG1starG3star | BracketId::PG2G3star => {
            let nu = &p.cov(3).comps;
            pr(nu, &br(&df[3], &dk[3]))
        }
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn tokens_are_unique_and_stable() {
        let tokens: HashSet<&str> = BracketId::ALL.iter().map(|id| id.token()).collect();
        assert_eq!(tokens.len(), BracketId::ALL.len());
        assert_eq!(BracketId::ALL[0].token(), "CAN_Ggstar");
        assert_eq!(BracketId::ALL[15].token(), "P_Omu_g2star");
    }

    #[test]
    fn every_entry_is_bound_to_a_cotangent_style_space() {
        for id in BracketId::ALL {
            let space = id.space();
            assert!(
                matches!(
                    space,
                    SpaceId::TstarG | SpaceId::TstarTG | SpaceId::TstarTstarG | SpaceId::TTstarG
                ),
                "{:?} bound to {:?}",
                id,
                space
            );
            assert!(!id.description().is_empty());
            assert!(id.signature().starts_with('('));
        }
    }
}
