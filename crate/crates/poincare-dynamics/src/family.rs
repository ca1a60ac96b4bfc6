//! The catalog of equation-of-motion families on the bundle tower.
//!
//! Each family pairs a state signature (optional group slot plus a list of
//! named fiber slots) with the bundle space its scalar field lives on.
//! Hamiltonian-side families evolve bundle coordinates directly; Lagrangian-
//! side families evolve momentum states, recovering velocities through a
//! fiber-derivative inverse. Reduced families evaluate the same full-space
//! field at a canonical embedding — identity in the group slot and zero in
//! every dropped fiber — which is exactly what makes an invariant field's
//! full and reduced right-hand sides agree.

use poincare_bundles::SpaceId;

/// Equation families, full and staged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EOMFamily {
    /// Euler–Lagrange flow on `TG` in momentum form: state `(g; π)`.
    ElTg,
    /// Euler–Poincaré flow on the algebra: state `(π)`.
    EpG,
    /// Hamiltonian flow on `T*G`: state `(g; μ)`.
    HamTstarG,
    /// Lie–Poisson flow on the dual algebra: state `(μ)`.
    LpGstar,
    /// Euler–Lagrange flow on `TTG`: state `(g; ξ₁, π₂, π₃)`.
    ElTtgFull,
    /// `TTG` stage with the group reduced away: state `(ξ₁, π₂, π₃)`.
    ElTtgAlgAlgAlg,
    /// `TTG` stage with the first fiber reduced away: state `(g; π₂, π₃)`.
    ElTtgGrpAlgAlg,
    /// `TTG` stage reduced to base-and-velocity: state `(g; π)`.
    ElTtgGrpAlg,
    /// `TTG` stage on two fiber momenta: state `(π₂, π₃)`.
    ElTtgAlgAlg,
    /// Fully reduced `TTG` stage: state `(π)`.
    ElTtgAlg,
    /// Second-order Euler–Lagrange flow on `T²G`: state `(g; ξ, π₃, p)`.
    El2T2g,
    /// Second-order Euler–Poincaré flow: state `(ξ, π₃, p)`.
    Ep2Gg,
    /// Hamiltonian flow on `T*TG`: state `(g; ξ, μ, ν)`.
    HamTstarTg,
    /// Lie–Poisson flow on the double dual fiber: state `(μ, ν)`.
    LpGstarGstar,
    /// Hamiltonian flow on `T*T*G`: state `(g; μ, ν, ξ)`.
    HamTstarTstarG,
    /// Reduced `T*T*G` flow on `(ν, ξ)`.
    LpGstarG,
    /// Hamiltonian flow on `TT*G`: state `(g; μ, ξ, ν)`.
    HamTTstarG,
    /// Euler–Lagrange flow on `TT*G`: state `(g; μ, p_ξ, p_ν)`.
    ElTTstarGFull,
    /// `TT*G` stage without the dual base point: state `(g; p_ξ, p_ν)`.
    ElTTstarGrpAlgDual,
    /// `TT*G` stage without the group: state `(μ, p_ξ, p_ν)`.
    ElTTstarDualAlgDual,
    /// `TT*G` stage on fiber momenta alone: state `(p_ξ, p_ν)`.
    ElTTstarAlgDual,
    /// `TT*G` stage reduced to base-and-velocity: state `(g; π)`.
    ElTTstarGrpAlg,
    /// Fully reduced `TT*G` stage: state `(π)`.
    ElTTstarAlg,
}

impl EOMFamily {
    pub const ALL: [EOMFamily; 23] = [
        EOMFamily::ElTg,
        EOMFamily::EpG,
        EOMFamily::HamTstarG,
        EOMFamily::LpGstar,
        EOMFamily::ElTtgFull,
        EOMFamily::ElTtgAlgAlgAlg,
        EOMFamily::ElTtgGrpAlgAlg,
        EOMFamily::ElTtgGrpAlg,
        EOMFamily::ElTtgAlgAlg,
        EOMFamily::ElTtgAlg,
        EOMFamily::El2T2g,
        EOMFamily::Ep2Gg,
        EOMFamily::HamTstarTg,
        EOMFamily::LpGstarGstar,
        EOMFamily::HamTstarTstarG,
        EOMFamily::LpGstarG,
        EOMFamily::HamTTstarG,
        EOMFamily::ElTTstarGFull,
        EOMFamily::ElTTstarGrpAlgDual,
        EOMFamily::ElTTstarDualAlgDual,
        EOMFamily::ElTTstarAlgDual,
        EOMFamily::ElTTstarGrpAlg,
        EOMFamily::ElTTstarAlg,
    ];

    /// Stable text token, used by the command line and trajectory sidecars.
    pub fn token(self) -> &'static str {
        match self {
            EOMFamily::ElTg => "EL_TG",
            EOMFamily::EpG => "EP_g",
            EOMFamily::HamTstarG => "HAM_TstarG",
            EOMFamily::LpGstar => "LP_gstar",
            EOMFamily::ElTtgFull => "EL_TTG_full",
            EOMFamily::ElTtgAlgAlgAlg => "EL_TTG_stage_ggg",
            EOMFamily::ElTtgGrpAlgAlg => "EL_TTG_stage_Ggg",
            EOMFamily::ElTtgGrpAlg => "EL_TTG_stage_Gg",
            EOMFamily::ElTtgAlgAlg => "EL_TTG_stage_gg",
            EOMFamily::ElTtgAlg => "EL_TTG_stage_g",
            EOMFamily::El2T2g => "EL2_T2G",
            EOMFamily::Ep2Gg => "EP2_gg",
            EOMFamily::HamTstarTg => "HAM_TstarTG",
            EOMFamily::LpGstarGstar => "LP_gstar_gstar",
            EOMFamily::HamTstarTstarG => "HAM_TstarTstarG",
            EOMFamily::LpGstarG => "LP_gstar_g",
            EOMFamily::HamTTstarG => "HAM_TTstarG",
            EOMFamily::ElTTstarGFull => "EL_TTstarG_full",
            EOMFamily::ElTTstarGrpAlgDual => "EL_TTstarG_stage_Ggg*",
            EOMFamily::ElTTstarDualAlgDual => "EL_TTstarG_stage_g*gg*",
            EOMFamily::ElTTstarAlgDual => "EL_TTstarG_stage_gg*",
            EOMFamily::ElTTstarGrpAlg => "EL_TTstarG_stage_Gg",
            EOMFamily::ElTTstarAlg => "EL_TTstarG_stage_g",
        }
    }

    /// Parse a token; `star` may stand in for `*`.
    pub fn parse(s: &str) -> Option<EOMFamily> {
        let norm = s.trim().replace("star", "*");
        EOMFamily::ALL
            .iter()
            .copied()
            .find(|f| f.token().replace("star", "*") == norm)
    }

    /// The bundle space the family's scalar field lives on.
    pub fn field_space(self) -> SpaceId {
        match self {
            EOMFamily::ElTg | EOMFamily::EpG => SpaceId::TG,
            EOMFamily::HamTstarG | EOMFamily::LpGstar => SpaceId::TstarG,
            EOMFamily::ElTtgFull
            | EOMFamily::ElTtgAlgAlgAlg
            | EOMFamily::ElTtgGrpAlgAlg
            | EOMFamily::ElTtgGrpAlg
            | EOMFamily::ElTtgAlgAlg
            | EOMFamily::ElTtgAlg => SpaceId::TTG,
            EOMFamily::El2T2g | EOMFamily::Ep2Gg => SpaceId::T2G,
            EOMFamily::HamTstarTg | EOMFamily::LpGstarGstar => SpaceId::TstarTG,
            EOMFamily::HamTstarTstarG | EOMFamily::LpGstarG => SpaceId::TstarTstarG,
            EOMFamily::HamTTstarG
            | EOMFamily::ElTTstarGFull
            | EOMFamily::ElTTstarGrpAlgDual
            | EOMFamily::ElTTstarDualAlgDual
            | EOMFamily::ElTTstarAlgDual
            | EOMFamily::ElTTstarGrpAlg
            | EOMFamily::ElTTstarAlg => SpaceId::TTstarG,
        }
    }

    /// Whether the state carries a group slot.
    pub fn has_group(self) -> bool {
        matches!(
            self,
            EOMFamily::ElTg
                | EOMFamily::HamTstarG
                | EOMFamily::ElTtgFull
                | EOMFamily::ElTtgGrpAlgAlg
                | EOMFamily::ElTtgGrpAlg
                | EOMFamily::El2T2g
                | EOMFamily::HamTstarTg
                | EOMFamily::HamTstarTstarG
                | EOMFamily::HamTTstarG
                | EOMFamily::ElTTstarGFull
                | EOMFamily::ElTTstarGrpAlgDual
                | EOMFamily::ElTTstarGrpAlg
        )
    }

    /// Names of the fiber slots of the state, in order.
    pub fn fiber_names(self) -> &'static [&'static str] {
        match self {
            EOMFamily::ElTg
            | EOMFamily::EpG
            | EOMFamily::ElTtgGrpAlg
            | EOMFamily::ElTtgAlg
            | EOMFamily::ElTTstarGrpAlg
            | EOMFamily::ElTTstarAlg => &["pi"],
            EOMFamily::HamTstarG | EOMFamily::LpGstar => &["mu"],
            EOMFamily::ElTtgFull | EOMFamily::ElTtgAlgAlgAlg => &["xi1", "pi2", "pi3"],
            EOMFamily::ElTtgGrpAlgAlg | EOMFamily::ElTtgAlgAlg => &["pi2", "pi3"],
            EOMFamily::El2T2g | EOMFamily::Ep2Gg => &["xi", "pi3", "p"],
            EOMFamily::HamTstarTg => &["xi", "mu", "nu"],
            EOMFamily::LpGstarGstar => &["mu", "nu"],
            EOMFamily::HamTstarTstarG => &["mu", "nu", "xi"],
            EOMFamily::LpGstarG => &["nu", "xi"],
            EOMFamily::HamTTstarG => &["mu", "xi", "nu"],
            EOMFamily::ElTTstarGFull | EOMFamily::ElTTstarDualAlgDual => &["mu", "pxi", "pnu"],
            EOMFamily::ElTTstarGrpAlgDual | EOMFamily::ElTTstarAlgDual => &["pxi", "pnu"],
        }
    }

    /// Whether the family is Lagrangian-side, i.e. needs a fiber-derivative
    /// inverse to recover velocities from momenta.
    pub fn is_lagrangian(self) -> bool {
        !matches!(
            self,
            EOMFamily::HamTstarG
                | EOMFamily::LpGstar
                | EOMFamily::HamTstarTg
                | EOMFamily::LpGstarGstar
                | EOMFamily::HamTstarTstarG
                | EOMFamily::LpGstarG
                | EOMFamily::HamTTstarG
        )
    }

    /// For Lagrangian families: field-space slot indices of the velocities
    /// recovered from momenta.
    pub fn velocity_slots(self) -> &'static [usize] {
        match self {
            EOMFamily::ElTg | EOMFamily::EpG => &[1],
            EOMFamily::ElTtgFull
            | EOMFamily::ElTtgAlgAlgAlg
            | EOMFamily::ElTtgGrpAlgAlg
            | EOMFamily::ElTtgAlgAlg => &[2, 3],
            EOMFamily::ElTtgGrpAlg | EOMFamily::ElTtgAlg => &[2],
            EOMFamily::El2T2g | EOMFamily::Ep2Gg => &[2],
            EOMFamily::ElTTstarGFull
            | EOMFamily::ElTTstarGrpAlgDual
            | EOMFamily::ElTTstarDualAlgDual
            | EOMFamily::ElTTstarAlgDual => &[2, 3],
            EOMFamily::ElTTstarGrpAlg | EOMFamily::ElTTstarAlg => &[2],
            _ => &[],
        }
    }

    /// For Lagrangian families: positions inside the fiber list of the
    /// momenta conjugate to [`EOMFamily::velocity_slots`], in the same
    /// order.
    pub fn momentum_fibers(self) -> &'static [usize] {
        match self {
            EOMFamily::ElTg
            | EOMFamily::EpG
            | EOMFamily::ElTtgGrpAlg
            | EOMFamily::ElTtgAlg
            | EOMFamily::ElTTstarGrpAlg
            | EOMFamily::ElTTstarAlg => &[0],
            EOMFamily::ElTtgFull | EOMFamily::ElTtgAlgAlgAlg => &[1, 2],
            EOMFamily::ElTtgGrpAlgAlg | EOMFamily::ElTtgAlgAlg => &[0, 1],
            EOMFamily::El2T2g | EOMFamily::Ep2Gg => &[1],
            EOMFamily::ElTTstarGFull | EOMFamily::ElTTstarDualAlgDual => &[1, 2],
            EOMFamily::ElTTstarGrpAlgDual | EOMFamily::ElTTstarAlgDual => &[0, 1],
            _ => &[],
        }
    }

    /// One-line description for catalog listings.
    pub fn describe(self) -> &'static str {
        match self {
            EOMFamily::ElTg => "Euler-Lagrange flow on the trivialized tangent bundle, momentum form",
            EOMFamily::EpG => "Euler-Poincare flow on the Lie algebra",
            EOMFamily::HamTstarG => "Hamiltonian flow on the trivialized cotangent bundle",
            EOMFamily::LpGstar => "Lie-Poisson flow on the dual of the Lie algebra",
            EOMFamily::ElTtgFull => "Euler-Lagrange flow on the second tangent bundle",
            EOMFamily::ElTtgAlgAlgAlg => "second tangent bundle stage with the group quotiented",
            EOMFamily::ElTtgGrpAlgAlg => "second tangent bundle stage with the first fiber dropped",
            EOMFamily::ElTtgGrpAlg => "second tangent bundle stage on base and velocity",
            EOMFamily::ElTtgAlgAlg => "second tangent bundle stage on the two fiber momenta",
            EOMFamily::ElTtgAlg => "fully reduced second tangent bundle stage",
            EOMFamily::El2T2g => "second-order Euler-Lagrange flow on holonomic curves",
            EOMFamily::Ep2Gg => "second-order Euler-Poincare flow on the algebra",
            EOMFamily::HamTstarTg => "Hamiltonian flow on the cotangent bundle of the tangent bundle",
            EOMFamily::LpGstarGstar => "Lie-Poisson flow on the double dual fiber",
            EOMFamily::HamTstarTstarG => "Hamiltonian flow on the iterated cotangent bundle",
            EOMFamily::LpGstarG => "reduced iterated cotangent flow on dual-and-algebra variables",
            EOMFamily::HamTTstarG => "Hamiltonian-type flow on the tangent of the cotangent bundle",
            EOMFamily::ElTTstarGFull => "Euler-Lagrange flow on the tangent of the cotangent bundle",
            EOMFamily::ElTTstarGrpAlgDual => "tangent-of-cotangent stage without the dual base",
            EOMFamily::ElTTstarDualAlgDual => "tangent-of-cotangent stage without the group",
            EOMFamily::ElTTstarAlgDual => "tangent-of-cotangent stage on fiber momenta",
            EOMFamily::ElTTstarGrpAlg => "tangent-of-cotangent stage on base and velocity",
            EOMFamily::ElTTstarAlg => "fully reduced tangent-of-cotangent stage",
        }
    }
}

impl std::fmt::Display for EOMFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for EOMFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EOMFamily::parse(s).ok_or_else(|| format!("unknown equation family `{s}`"))
    }
}

/// Velocity slots of a bundle space, used by quadratic kinetic terms:
/// the slots a Lagrangian on that space is fiberwise quadratic in.
pub fn space_velocity_slots(space: SpaceId) -> &'static [usize] {
    match space {
        SpaceId::TG => &[1],
        SpaceId::TTG => &[2, 3],
        SpaceId::T2G => &[2],
        SpaceId::TTstarG => &[2, 3],
        _ => &[],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Tokens round-trip through the parser, with `star` accepted for `*`.
    #[test]
    fn tokens_round_trip() {
        for f in EOMFamily::ALL {
            assert_eq!(EOMFamily::parse(f.token()), Some(f));
            assert_eq!(EOMFamily::parse(&f.token().replace('*', "star")), Some(f));
        }
        assert_eq!(EOMFamily::parse("EL_TTstarG_stage_Gggstar"), Some(EOMFamily::ElTTstarGrpAlgDual));
        assert!(EOMFamily::parse("EL_unknown").is_none());
    }

    /// Momentum bookkeeping is internally consistent for Lagrangian families.
    #[test]
    fn momentum_bookkeeping_is_consistent() {
        for f in EOMFamily::ALL {
            assert_eq!(f.velocity_slots().len(), f.momentum_fibers().len());
            if f.is_lagrangian() {
                assert!(!f.velocity_slots().is_empty(), "{f} lacks velocity slots");
            } else {
                assert!(f.velocity_slots().is_empty());
            }
            for &idx in f.momentum_fibers() {
                assert!(idx < f.fiber_names().len());
            }
        }
    }
}
