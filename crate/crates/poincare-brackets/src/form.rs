//! Registry of one- and two-forms on the iterated bundles.
//!
//! Forms are evaluated on right-invariant vector fields, so each argument is
//! a [`Generator`] on the entry's ambient space and the result depends on the
//! base point only through its fiber coordinates.  Reduced and orbit forms
//! are also evaluated at ambient points: the formula reads the coordinates
//! that survive the quotient and ignores the rest.

use nalgebra::DVector;
use poincare_bundles::{BundlePoint, Generator, SpaceId};

use crate::bracket::check_space;
use crate::error::BracketError;

/// Whether a registry entry is a one-form or a two-form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    One,
    Two,
}

/// Identifier for one differential form in the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormId {
    /// Tautological one-form of the trivialized cotangent bundle.
    ThetaGGstar,
    /// Canonical symplectic form of the trivialized cotangent bundle.
    OmegaGGstar,
    /// Orbit symplectic form on a coadjoint orbit, at ambient dual points.
    Kks,
    /// Tautological one-form of the tangent-group cotangent bundle.
    ThetaTstarTG,
    /// Canonical symplectic form of the tangent-group cotangent bundle.
    OmegaTstarTG,
    /// Reduced symplectic form on orbit x fiber coordinates of the
    /// tangent-group cotangent bundle.
    RedTstarTG,
    /// Orbit two-form on the dual pair (mu, nu).
    OrbitMuNu,
    /// Tautological one-form of the iterated cotangent bundle.
    ThetaTstarTstarG,
    /// Canonical symplectic form of the iterated cotangent bundle.
    OmegaTstarTstarG,
    /// Reduced symplectic form on orbit x fiber coordinates of the iterated
    /// cotangent bundle.
    RedTstarTstarG,
    /// Orbit two-form on the (nu, xi) pair.
    OrbitNuXi,
    /// First potential one-form of the tangent of the cotangent bundle.
    Theta1TTstarG,
    /// Second potential one-form of the tangent of the cotangent bundle.
    Theta2TTstarG,
    /// Symplectic form of the tangent of the cotangent bundle.
    OmegaTTstarG,
    /// Reduced two-form on orbit x dual x algebra coordinates.
    RedTTstarG,
    /// First reduced potential one-form on orbit x dual x algebra
    /// coordinates.
    Chi1,
    /// Second reduced potential one-form on orbit x dual x algebra
    /// coordinates.
    Chi2,
}

impl FormId {
    /// Every registered form, in stable listing order.
    pub const ALL: [FormId; 17] = [
        FormId::ThetaGGstar,
        FormId::OmegaGGstar,
        FormId::Kks,
        FormId::ThetaTstarTG,
        FormId::OmegaTstarTG,
        FormId::RedTstarTG,
        FormId::OrbitMuNu,
        FormId::ThetaTstarTstarG,
        FormId::OmegaTstarTstarG,
        FormId::RedTstarTstarG,
        FormId::OrbitNuXi,
        FormId::Theta1TTstarG,
        FormId::Theta2TTstarG,
        FormId::OmegaTTstarG,
        FormId::RedTTstarG,
        FormId::Chi1,
        FormId::Chi2,
    ];

    /// Stable text identifier used by the command-line tools.
    pub fn token(self) -> &'static str {
        match self {
            FormId::ThetaGGstar => "THETA_Ggstar",
            FormId::OmegaGGstar => "OMEGA_Ggstar",
            FormId::Kks => "KKS",
            FormId::ThetaTstarTG => "THETA_TstarTG",
            FormId::OmegaTstarTG => "OMEGA_TstarTG",
            FormId::RedTstarTG => "RED_TstarTG",
            FormId::OrbitMuNu => "ORBIT_munu",
            FormId::ThetaTstarTstarG => "THETA_TstarTstarG",
            FormId::OmegaTstarTstarG => "OMEGA_TstarTstarG",
            FormId::RedTstarTstarG => "RED_TstarTstarG",
            FormId::OrbitNuXi => "ORBIT_nuxi",
            FormId::Theta1TTstarG => "THETA1",
            FormId::Theta2TTstarG => "THETA2",
            FormId::OmegaTTstarG => "OMEGA_TTstarG",
            FormId::RedTTstarG => "RED_TTstarG_OMEGA",
            FormId::Chi1 => "CHI1",
            FormId::Chi2 => "CHI2",
        }
    }

    /// Ambient space whose points and generators the form accepts.
    pub fn space(self) -> SpaceId {
        match self {
            FormId::ThetaGGstar | FormId::OmegaGGstar | FormId::Kks => SpaceId::TstarG,
            FormId::ThetaTstarTG
            | FormId::OmegaTstarTG
            | FormId::RedTstarTG
            | FormId::OrbitMuNu => SpaceId::TstarTG,
            FormId::ThetaTstarTstarG
            | FormId::OmegaTstarTstarG
            | FormId::RedTstarTstarG
            | FormId::OrbitNuXi => SpaceId::TstarTstarG,
            FormId::Theta1TTstarG
            | FormId::Theta2TTstarG
            | FormId::OmegaTTstarG
            | FormId::RedTTstarG
            | FormId::Chi1
            | FormId::Chi2 => SpaceId::TTstarG,
        }
    }

    /// One-form or two-form.
    pub fn kind(self) -> FormKind {
        match self {
            FormId::ThetaGGstar
            | FormId::ThetaTstarTG
            | FormId::ThetaTstarTstarG
            | FormId::Theta1TTstarG
            | FormId::Theta2TTstarG
            | FormId::Chi1
            | FormId::Chi2 => FormKind::One,
            _ => FormKind::Two,
        }
    }

    /// Whether a Hamiltonian vector-field formula is registered for the form.
    pub fn has_generator(self) -> bool {
        matches!(
            self,
            FormId::OmegaGGstar
                | FormId::OmegaTstarTG
                | FormId::OmegaTstarTstarG
                | FormId::OmegaTTstarG
                | FormId::Kks
        )
    }

    /// Short human-readable account of what the form is.
    pub fn description(self) -> &'static str {
        match self {
            FormId::ThetaGGstar => {
                "tautological one-form of the trivialized cotangent bundle"
            }
            FormId::OmegaGGstar => {
                "canonical symplectic form of the trivialized cotangent bundle"
            }
            FormId::Kks => {
                "orbit symplectic form on a coadjoint orbit, read at ambient dual points"
            }
            FormId::ThetaTstarTG => {
                "tautological one-form of the tangent-group cotangent bundle"
            }
            FormId::OmegaTstarTG => {
                "canonical symplectic form of the tangent-group cotangent bundle"
            }
            FormId::RedTstarTG => {
                "reduced symplectic form on orbit and fiber coordinates of the tangent-group cotangent bundle"
            }
            FormId::OrbitMuNu => "orbit two-form on the dual pair (mu, nu)",
            FormId::ThetaTstarTstarG => {
                "tautological one-form of the iterated cotangent bundle"
            }
            FormId::OmegaTstarTstarG => {
                "canonical symplectic form of the iterated cotangent bundle"
            }
            FormId::RedTstarTstarG => {
                "reduced symplectic form on orbit and fiber coordinates of the iterated cotangent bundle"
            }
            FormId::OrbitNuXi => "orbit two-form on the (nu, xi) pair",
            FormId::Theta1TTstarG => {
                "first potential one-form of the tangent of the cotangent bundle"
            }
            FormId::Theta2TTstarG => {
                "second potential one-form of the tangent of the cotangent bundle"
            }
            FormId::OmegaTTstarG => {
                "symplectic form of the tangent of the cotangent bundle"
            }
            FormId::RedTTstarG => {
                "reduced two-form on orbit, dual, and algebra coordinates"
            }
            FormId::Chi1 => {
                "first reduced potential one-form on orbit, dual, and algebra coordinates"
            }
            FormId::Chi2 => {
                "second reduced potential one-form on orbit, dual, and algebra coordinates"
            }
        }
    }
}

fn check_form_args(
    id: FormId,
    p: &BundlePoint,
    gens: &[&Generator],
) -> Result<(), BracketError> {
    let space = id.space();
    check_space("point", p.space(), space)?;
    for g in gens {
        check_space("vector-field argument", g.space(), space)?;
    }
    Ok(())
}

/// Evaluate a one-form on the right-invariant field of `v` at `p`.
pub fn one_form(id: FormId, p: &BundlePoint, v: &Generator) -> Result<f64, BracketError> {
    if id.kind() != FormKind::One {
        return Err(BracketError::ArityMismatch {
            id,
            expected: 2,
            got: 1,
        });
    }
    check_form_args(id, p, &[v])?;
    let alg = p.alg().clone();
    let br = |x: &DVector<f64>, y: &DVector<f64>| alg.bracket(x, y);
    let pr = |m: &DVector<f64>, x: &DVector<f64>| alg.pairing(m, x);

    let value = match id {
        FormId::ThetaGGstar => pr(&p.cov(1).comps, &v.vec(0).comps),
        FormId::ThetaTstarTG => {
            pr(&p.cov(2).comps, &v.vec(0).comps) + pr(&p.cov(3).comps, &v.vec(1).comps)
        }
        FormId::ThetaTstarTstarG => {
            pr(&p.cov(2).comps, &v.vec(0).comps) + pr(&v.cov(1).comps, &p.vec(3).comps)
        }
        FormId::Theta1TTstarG => {
            let mu = &p.cov(1).comps;
            let xi = &p.vec(2).comps;
            let nu = &p.cov(3).comps;
            pr(nu, &v.vec(0).comps) - pr(&v.cov(1).comps, xi)
                + pr(mu, &br(xi, &v.vec(0).comps))
        }
        FormId::Theta2TTstarG => {
            let mu = &p.cov(1).comps;
            let xi = &p.vec(2).comps;
            let nu = &p.cov(3).comps;
            pr(mu, &v.vec(2).comps) + pr(nu, &v.vec(0).comps)
                + pr(mu, &br(xi, &v.vec(0).comps))
        }
        FormId::Chi1 => {
            pr(&p.cov(3).comps, &v.vec(0).comps) - pr(&v.cov(1).comps, &p.vec(2).comps)
        }
        FormId::Chi2 => {
            pr(&p.cov(3).comps, &v.vec(0).comps) + pr(&p.cov(1).comps, &v.vec(2).comps)
        }
        _ => unreachable!("two-forms are rejected above"),
    };
    Ok(value)
}

/// Evaluate a two-form on the right-invariant fields of `a` and `b` at `p`.
pub fn two_form(
    id: FormId,
    p: &BundlePoint,
    a: &Generator,
    b: &Generator,
) -> Result<f64, BracketError> {
    if id.kind() != FormKind::Two {
        return Err(BracketError::ArityMismatch {
            id,
            expected: 1,
            got: 2,
        });
    }
    check_form_args(id, p, &[a, b])?;
    let alg = p.alg().clone();
    let br = |x: &DVector<f64>, y: &DVector<f64>| alg.bracket(x, y);
    let pr = |m: &DVector<f64>, x: &DVector<f64>| alg.pairing(m, x);

    let value = match id {
        FormId::OmegaGGstar => {
            let mu = &p.cov(1).comps;
            pr(&a.cov(1).comps, &b.vec(0).comps) - pr(&b.cov(1).comps, &a.vec(0).comps)
                + pr(mu, &br(&a.vec(0).comps, &b.vec(0).comps))
        }
        FormId::Kks => {
            let mu = &p.cov(1).comps;
            -pr(mu, &br(&a.vec(0).comps, &b.vec(0).comps))
        }
        FormId::OmegaTstarTG => {
            let mu = &p.cov(2).comps;
            let nu = &p.cov(3).comps;
            pr(&a.cov(2).comps, &b.vec(0).comps) + pr(&a.cov(3).comps, &b.vec(1).comps)
                - pr(&b.cov(2).comps, &a.vec(0).comps)
                - pr(&b.cov(3).comps, &a.vec(1).comps)
                + pr(mu, &br(&a.vec(0).comps, &b.vec(0).comps))
                + pr(
                    nu,
                    &(br(&a.vec(0).comps, &b.vec(1).comps)
                        - br(&b.vec(0).comps, &a.vec(1).comps)),
                )
        }
        FormId::RedTstarTG => {
            let m = &p.cov(2).comps;
            pr(&a.cov(3).comps, &b.vec(1).comps) - pr(&b.cov(3).comps, &a.vec(1).comps)
                - pr(m, &br(&a.vec(0).comps, &b.vec(0).comps))
        }
        FormId::OrbitMuNu => {
            let mu = &p.cov(2).comps;
            let nu = &p.cov(3).comps;
            pr(mu, &br(&b.vec(0).comps, &a.vec(0).comps))
                + pr(
                    nu,
                    &(br(&b.vec(0).comps, &a.vec(1).comps)
                        - br(&a.vec(0).comps, &b.vec(1).comps)),
                )
        }
        FormId::OmegaTstarTstarG => {
            let nu = &p.cov(2).comps;
            let xi = &p.vec(3).comps;
            pr(&a.cov(2).comps, &b.vec(0).comps)
                + pr(
                    &b.cov(1).comps,
                    &(&a.vec(3).comps - br(&a.vec(0).comps, xi)),
                )
                - pr(&b.cov(2).comps, &a.vec(0).comps)
                + pr(
                    &a.cov(1).comps,
                    &(br(&b.vec(0).comps, xi) - &b.vec(3).comps),
                )
                + pr(nu, &br(&a.vec(0).comps, &b.vec(0).comps))
        }
        FormId::RedTstarTstarG => {
            let m = &p.cov(1).comps;
            pr(&b.cov(2).comps, &a.vec(3).comps) - pr(&a.cov(2).comps, &b.vec(3).comps)
                - pr(m, &br(&a.vec(0).comps, &b.vec(0).comps))
        }
        FormId::OrbitNuXi => {
            let nu = &p.cov(2).comps;
            let xi = &p.vec(3).comps;
            pr(nu, &br(&b.vec(0).comps, &a.vec(0).comps))
                + pr(
                    &(alg.ad_star(&a.vec(0).comps, &b.cov(1).comps)
                        - alg.ad_star(&b.vec(0).comps, &a.cov(1).comps)),
                    xi,
                )
        }
        FormId::OmegaTTstarG => {
            let mu = &p.cov(1).comps;
            let xi = &p.vec(2).comps;
            let nu = &p.cov(3).comps;
            pr(&a.cov(3).comps, &b.vec(0).comps) + pr(&a.cov(1).comps, &b.vec(2).comps)
                - pr(&b.cov(1).comps, &a.vec(2).comps)
                - pr(&b.cov(3).comps, &a.vec(0).comps)
                + pr(nu, &br(&a.vec(0).comps, &b.vec(0).comps))
                + pr(
                    mu,
                    &(br(&a.vec(2).comps, &b.vec(0).comps)
                        + br(&a.vec(0).comps, &b.vec(2).comps)
                        + br(xi, &br(&a.vec(0).comps, &b.vec(0).comps))),
                )
        }
        FormId::RedTTstarG => {
            let m = &p.cov(3).comps;
            pr(&a.cov(1).comps, &b.vec(2).comps) - pr(&b.cov(1).comps, &a.vec(2).comps)
                - pr(m, &br(&a.vec(0).comps, &b.vec(0).comps))
        }
        _ => unreachable!("one-forms are rejected above"),
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn tokens_are_unique_and_the_catalog_is_complete() {
        let tokens: HashSet<&str> = FormId::ALL.iter().map(|id| id.token()).collect();
        assert_eq!(tokens.len(), FormId::ALL.len());
        assert_eq!(FormId::ALL.len(), 17);
    }

    #[test]
    fn kinds_partition_the_catalog() {
        let ones = FormId::ALL
            .iter()
            .filter(|id| id.kind() == FormKind::One)
            .count();
        let twos = FormId::ALL
            .iter()
            .filter(|id| id.kind() == FormKind::Two)
            .count();
        assert_eq!(ones, 7);
        assert_eq!(twos, 10);
    }

    #[test]
    fn generators_are_registered_only_for_symplectic_entries() {
        for id in FormId::ALL {
            if id.has_generator() {
                assert_eq!(id.kind(), FormKind::Two);
            }
        }
        assert_eq!(FormId::ALL.iter().filter(|id| id.has_generator()).count(), 5);
    }
}
