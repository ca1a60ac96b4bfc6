//! Group laws of the trivialized spaces.
//!
//! Every law is a semidirect product: group slots multiply in `G`, vector
//! slots add after an `Ad_{g⁻¹}` transport, covector slots add after an
//! `Ad*_{g⁻¹}` transport, and the four-slot spaces carry one extra bracket
//! (or `ad*`) twist coupling two fiber slots.

use crate::point::{BundlePoint, SlotValue};
use crate::space::SpaceId;

fn from_parts(space: SpaceId, slots: Vec<SlotValue>) -> BundlePoint {
    BundlePoint::new(space, slots).expect("internally constructed point is well-formed")
}

/// Product of two points of the same space under the space's group law.
pub fn mul(p: &BundlePoint, q: &BundlePoint) -> BundlePoint {
    assert_eq!(p.space(), q.space(), "mul: space mismatch {} vs {}", p.space(), q.space());
    let space = p.space();
    let g1 = p.group();
    let g2 = q.group();
    let g1inv = g1.inverse();
    let g = SlotValue::Group(g1.mul(g2));
    match space {
        SpaceId::Group => from_parts(space, vec![g]),
        SpaceId::TG => {
            let xi = p.vec(1) + &g1inv.adjoint(q.vec(1));
            from_parts(space, vec![g, SlotValue::Vector(xi)])
        }
        SpaceId::TstarG => {
            let mu = p.cov(1) + &g1inv.coadjoint(q.cov(1));
            from_parts(space, vec![g, SlotValue::Covector(mu)])
        }
        SpaceId::T2G => {
            let xi = p.vec(1) + &g1inv.adjoint(q.vec(1));
            let xidot = p.vec(2) + &g1inv.adjoint(q.vec(2));
            from_parts(space, vec![g, SlotValue::Vector(xi), SlotValue::Vector(xidot)])
        }
        SpaceId::TTG => {
            let y1 = g1inv.adjoint(q.vec(1));
            let y2 = g1inv.adjoint(q.vec(2));
            let y3 = g1inv.adjoint(q.vec(3));
            let xi1 = p.vec(1) + &y1;
            let xi2 = p.vec(2) + &y2;
            let xi3 = &(p.vec(3) + &y3) + &y2.bracket(p.vec(1));
            from_parts(
                space,
                vec![
                    g,
                    SlotValue::Vector(xi1),
                    SlotValue::Vector(xi2),
                    SlotValue::Vector(xi3),
                ],
            )
        }
        SpaceId::TstarTG => {
            let xi = p.vec(1) + &g1inv.adjoint(q.vec(1));
            let twist = g1.adjoint(p.vec(1)).ad_star(q.cov(3));
            let mu = p.cov(2) + &g1inv.coadjoint(&(q.cov(2) + &twist));
            let nu = p.cov(3) + &g1inv.coadjoint(q.cov(3));
            from_parts(
                space,
                vec![
                    g,
                    SlotValue::Vector(xi),
                    SlotValue::Covector(mu),
                    SlotValue::Covector(nu),
                ],
            )
        }
        SpaceId::TstarTstarG => {
            let mu = p.cov(1) + &g1inv.coadjoint(q.cov(1));
            let x2 = g1inv.adjoint(q.vec(3));
            let nu = &(p.cov(2) + &g1inv.coadjoint(q.cov(2))) - &x2.ad_star(p.cov(1));
            let xi = p.vec(3) + &x2;
            from_parts(
                space,
                vec![
                    g,
                    SlotValue::Covector(mu),
                    SlotValue::Covector(nu),
                    SlotValue::Vector(xi),
                ],
            )
        }
        SpaceId::TTstarG => {
            let mu = p.cov(1) + &g1inv.coadjoint(q.cov(1));
            let x2 = g1inv.adjoint(q.vec(2));
            let xi = p.vec(2) + &x2;
            let nu = &(p.cov(3) + &g1inv.coadjoint(q.cov(3))) - &x2.ad_star(p.cov(1));
            from_parts(
                space,
                vec![
                    g,
                    SlotValue::Covector(mu),
                    SlotValue::Vector(xi),
                    SlotValue::Covector(nu),
                ],
            )
        }
    }
}

/// Inverse for the space's group law.
pub fn inverse(p: &BundlePoint) -> BundlePoint {
    let space = p.space();
    let g = p.group();
    let ginv = SlotValue::Group(g.inverse());
    match space {
        SpaceId::Group => from_parts(space, vec![ginv]),
        SpaceId::TG => from_parts(space, vec![ginv, SlotValue::Vector(-&g.adjoint(p.vec(1)))]),
        SpaceId::TstarG => {
            from_parts(space, vec![ginv, SlotValue::Covector(-&g.coadjoint(p.cov(1)))])
        }
        SpaceId::T2G => from_parts(
            space,
            vec![
                ginv,
                SlotValue::Vector(-&g.adjoint(p.vec(1))),
                SlotValue::Vector(-&g.adjoint(p.vec(2))),
            ],
        ),
        SpaceId::TTG => {
            let (x1, x2, x3) = (p.vec(1), p.vec(2), p.vec(3));
            from_parts(
                space,
                vec![
                    ginv,
                    SlotValue::Vector(-&g.adjoint(x1)),
                    SlotValue::Vector(-&g.adjoint(x2)),
                    SlotValue::Vector(g.adjoint(&(&x2.bracket(x1) - x3))),
                ],
            )
        }
        SpaceId::TstarTG => {
            let ad_g_xi = g.adjoint(p.vec(1));
            let m2 = g.coadjoint(p.cov(3));
            let m1 = &ad_g_xi.ad_star(&m2) - &g.coadjoint(p.cov(2));
            from_parts(
                space,
                vec![
                    ginv,
                    SlotValue::Vector(-&ad_g_xi),
                    SlotValue::Covector(m1),
                    SlotValue::Covector(-&m2),
                ],
            )
        }
        SpaceId::TstarTstarG => {
            let (mu, nu, xi) = (p.cov(1), p.cov(2), p.vec(3));
            from_parts(
                space,
                vec![
                    ginv,
                    SlotValue::Covector(-&g.coadjoint(mu)),
                    SlotValue::Covector(-&g.coadjoint(&(nu + &xi.ad_star(mu)))),
                    SlotValue::Vector(-&g.adjoint(xi)),
                ],
            )
        }
        SpaceId::TTstarG => {
            let (mu, xi, nu) = (p.cov(1), p.vec(2), p.cov(3));
            from_parts(
                space,
                vec![
                    ginv,
                    SlotValue::Covector(-&g.coadjoint(mu)),
                    SlotValue::Vector(-&g.adjoint(xi)),
                    SlotValue::Covector(-&g.coadjoint(&(nu + &xi.ad_star(mu)))),
                ],
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use poincare_lie::algebras::so3;
    use poincare_lie::{AlgebraVector, GroupElement};

    #[test]
    fn tangent_law_reduces_to_matrix_product_on_group_slot() {
        let alg = so3();
        let a = GroupElement::exp(&AlgebraVector::from_slice(&alg, &[0.3, -0.1, 0.7]));
        let b = GroupElement::exp(&AlgebraVector::from_slice(&alg, &[-0.4, 0.2, 0.1]));
        let p = BundlePoint::new(
            SpaceId::TG,
            vec![
                SlotValue::Group(a.clone()),
                SlotValue::Vector(AlgebraVector::from_slice(&alg, &[1.0, 2.0, 3.0])),
            ],
        )
        .unwrap();
        let q = BundlePoint::new(
            SpaceId::TG,
            vec![
                SlotValue::Group(b.clone()),
                SlotValue::Vector(AlgebraVector::zero(&alg)),
            ],
        )
        .unwrap();
        let prod = mul(&p, &q);
        assert!((prod.group().mat.clone() - a.mul(&b).mat).norm() < 1e-14);
    }

    #[test]
    #[should_panic(expected = "space mismatch")]
    fn mul_rejects_mixed_spaces() {
        let alg = so3();
        let p = BundlePoint::identity(SpaceId::TG, &alg);
        let q = BundlePoint::identity(SpaceId::TstarG, &alg);
        mul(&p, &q);
    }
}
