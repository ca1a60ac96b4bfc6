//! Lie brackets of generator tuples.
//!
//! Each space's generators form a Lie algebra under the Jacobi–Lie bracket
//! of the corresponding right-invariant fields.  The closed forms below are
//! cross-checked in the integration tests against two finite-difference
//! oracles (field commutators and group commutators).

use crate::space::{GenSlot, Generator, SpaceId};

fn build(space: SpaceId, slots: Vec<GenSlot>) -> Generator {
    Generator::new(space, slots).expect("bracket result is well-formed")
}

/// Jacobi–Lie bracket `[a, b]` of two generators of the same space.
pub fn algebra_bracket(a: &Generator, b: &Generator) -> Generator {
    assert_eq!(a.space(), b.space(), "bracket: space mismatch {} vs {}", a.space(), b.space());
    let space = a.space();
    let (a1, b1) = (a.vec(0), b.vec(0));
    let top = GenSlot::Vector(a1.bracket(b1));
    match space {
        SpaceId::Group => build(space, vec![top]),
        SpaceId::TG => {
            let s = &a1.bracket(b.vec(1)) - &b1.bracket(a.vec(1));
            build(space, vec![top, GenSlot::Vector(s)])
        }
        SpaceId::TstarG => {
            let s = &b1.ad_star(a.cov(1)) - &a1.ad_star(b.cov(1));
            build(space, vec![top, GenSlot::Covector(s)])
        }
        SpaceId::T2G => {
            let s1 = &a1.bracket(b.vec(1)) - &b1.bracket(a.vec(1));
            let s2 = &a1.bracket(b.vec(2)) - &b1.bracket(a.vec(2));
            build(space, vec![top, GenSlot::Vector(s1), GenSlot::Vector(s2)])
        }
        SpaceId::TTG => {
            let (a2, a3, a4) = (a.vec(1), a.vec(2), a.vec(3));
            let (b2, b3, b4) = (b.vec(1), b.vec(2), b.vec(3));
            let s1 = &a1.bracket(b2) - &b1.bracket(a2);
            let s2 = &a1.bracket(b3) - &b1.bracket(a3);
            let s3 = &(&a1.bracket(b4) - &b1.bracket(a4)) + &(&a3.bracket(b2) - &b3.bracket(a2));
            build(
                space,
                vec![top, GenSlot::Vector(s1), GenSlot::Vector(s2), GenSlot::Vector(s3)],
            )
        }
        SpaceId::TstarTG => {
            let (za, l1a, l2a) = (a.vec(1), a.cov(2), a.cov(3));
            let (zb, l1b, l2b) = (b.vec(1), b.cov(2), b.cov(3));
            let s1 = &za.bracket(b1) - &zb.bracket(a1);
            let s2 = &(&b1.ad_star(l1a) - &a1.ad_star(l1b))
                + &(&zb.ad_star(l2a) - &za.ad_star(l2b));
            let s3 = &b1.ad_star(l2a) - &a1.ad_star(l2b);
            build(
                space,
                vec![top, GenSlot::Vector(s1), GenSlot::Covector(s2), GenSlot::Covector(s3)],
            )
        }
        SpaceId::TstarTstarG => {
            let (l1a, l2a, za) = (a.cov(1), a.cov(2), a.vec(3));
            let (l1b, l2b, zb) = (b.cov(1), b.cov(2), b.vec(3));
            let s1 = &b1.ad_star(l1a) - &a1.ad_star(l1b);
            let s2 = &(&b1.ad_star(l2a) - &a1.ad_star(l2b))
                + &(&zb.ad_star(l1a) - &za.ad_star(l1b));
            let s3 = &za.bracket(b1) - &zb.bracket(a1);
            build(
                space,
                vec![top, GenSlot::Covector(s1), GenSlot::Covector(s2), GenSlot::Vector(s3)],
            )
        }
        SpaceId::TTstarG => {
            let (n2a, x3a, n3a) = (a.cov(1), a.vec(2), a.cov(3));
            let (n2b, x3b, n3b) = (b.cov(1), b.vec(2), b.cov(3));
            let s1 = &b1.ad_star(n2a) - &a1.ad_star(n2b);
            let s2 = &x3a.bracket(b1) - &x3b.bracket(a1);
            let s3 = &(&b1.ad_star(n3a) - &a1.ad_star(n3b))
                + &(&x3b.ad_star(n2a) - &x3a.ad_star(n2b));
            build(
                space,
                vec![top, GenSlot::Covector(s1), GenSlot::Vector(s2), GenSlot::Covector(s3)],
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use poincare_lie::algebras::so3;

    #[test]
    fn bracket_is_antisymmetric_on_basis() {
        let alg = so3();
        for space in SpaceId::ALL {
            let basis = Generator::basis(space, &alg);
            for a in &basis {
                for b in &basis {
                    let ab = algebra_bracket(a, b);
                    let ba = algebra_bracket(b, a);
                    assert!(ab.add(&ba).norm() < 1e-14, "{space}");
                }
            }
        }
    }

    #[test]
    fn bracket_satisfies_jacobi_on_basis() {
        let alg = so3();
        for space in SpaceId::ALL {
            let basis = Generator::basis(space, &alg);
            for a in &basis {
                for b in &basis {
                    for c in &basis {
                        let sum = algebra_bracket(&algebra_bracket(a, b), c)
                            .add(&algebra_bracket(&algebra_bracket(b, c), a))
                            .add(&algebra_bracket(&algebra_bracket(c, a), b));
                        assert!(sum.norm() < 1e-13, "{space}");
                    }
                }
            }
        }
    }
}
