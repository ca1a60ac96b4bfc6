//! The generator bracket against two independent finite-difference oracles.
//!
//! Oracle one differentiates the fields themselves: the Jacobi–Lie bracket
//! of two vector fields evaluated at `p` is `DX_b[X_a] - DX_a[X_b]`, with
//! each directional derivative taken along a curve whose velocity is the
//! other field's value.  Oracle two differentiates group commutators
//! `a(s) b(t) a(s)⁻¹ b(t)⁻¹`; for right-invariant fields the mixed second
//! derivative of that curve is the *negative* of the Jacobi–Lie bracket.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use poincare_lie::algebras::{h3, se2, sl2, so3};
use poincare_lie::{Algebra, AlgebraVector};
use poincare_bundles::{
    algebra_bracket, first_order_path, generator_from_value, inverse, mul, random_generator,
    random_point, right_invariant_field, BundlePoint, GenSlot, Generator, SpaceId,
    TangentVector,
};

const SEED: u64 = 0xC0_33_5EED;
const SPREAD: f64 = 0.7;

fn test_algebras() -> Vec<Algebra> {
    vec![so3(), se2(), h3(), sl2()]
}

/// `[X_a, X_b](p)` by differentiating the field formulas along curves.
fn jacobi_lie_fd(a: &Generator, b: &Generator, p: &BundlePoint) -> TangentVector {
    let h = 1e-5;
    let alg = p.alg();
    let space = p.space();
    let deriv = |gen_along: &Generator, field_of: &Generator| -> Vec<f64> {
        let plus = right_invariant_field(field_of, &mul(&first_order_path(gen_along, h), p));
        let minus =
            right_invariant_field(field_of, &mul(&first_order_path(gen_along, -h), p));
        plus.flat()
            .iter()
            .zip(minus.flat())
            .map(|(x, y)| (x - y) / (2.0 * h))
            .collect()
    };
    let d_b_along_a = deriv(a, b);
    let d_a_along_b = deriv(b, a);
    let flat: Vec<f64> =
        d_b_along_a.iter().zip(&d_a_along_b).map(|(x, y)| x - y).collect();
    TangentVector::from_flat(space, alg, &flat)
}

#[test]
fn bracket_matches_field_commutator_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for alg in test_algebras() {
        for space in SpaceId::ALL {
            for _ in 0..3 {
                let p = random_point(space, &alg, &mut rng, SPREAD);
                let a = random_generator(space, &alg, &mut rng, SPREAD);
                let b = random_generator(space, &alg, &mut rng, SPREAD);
                let oracle = generator_from_value(&p, &jacobi_lie_fd(&a, &b, &p));
                let closed = algebra_bracket(&a, &b);
                let err = oracle.distance(&closed);
                assert!(err < 1e-6, "{space} on {}: bracket error {err:.2e}", alg.name());
            }
        }
    }
}

/// Mixed second derivative of the group commutator curve at the identity.
fn group_commutator_fd(a: &Generator, b: &Generator) -> Generator {
    let space = a.space();
    let alg = a.alg();
    let h = 2e-3;
    let corner = |s: f64, t: f64| -> Vec<f64> {
        let pa = first_order_path(a, s);
        let pb = first_order_path(b, t);
        mul(&mul(&mul(&pa, &pb), &inverse(&pa)), &inverse(&pb)).flat()
    };
    let (pp, pm, mp, mm) =
        (corner(h, h), corner(h, -h), corner(-h, h), corner(-h, -h));
    let flat: Vec<f64> = (0..pp.len())
        .map(|i| (pp[i] - pm[i] - mp[i] + mm[i]) / (4.0 * h * h))
        .collect();
    let e = BundlePoint::identity(space, alg);
    generator_from_value(&e, &TangentVector::from_flat(space, alg, &flat))
}

#[test]
fn bracket_is_minus_the_group_commutator_derivative() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for alg in test_algebras() {
        for space in SpaceId::ALL {
            for _ in 0..3 {
                let a = random_generator(space, &alg, &mut rng, SPREAD);
                let b = random_generator(space, &alg, &mut rng, SPREAD);
                let oracle = group_commutator_fd(&a, &b).scale(-1.0);
                let closed = algebra_bracket(&a, &b);
                let err = oracle.distance(&closed);
                assert!(err < 1e-4, "{space} on {}: commutator error {err:.2e}", alg.name());
            }
        }
    }
}

/// Frozen table for the tangent-group algebra over `so(3)`, whose basis
/// bracket is `[e1, e2] = -e3` cyclically: pairs of pure slots land where
/// the semidirect structure dictates.
#[test]
fn tangent_group_bracket_over_so3_matches_frozen_table() {
    let alg = so3();
    let e = |j: usize| AlgebraVector::basis(&alg, j);
    let zero = AlgebraVector::zero(&alg);
    let gen = |top: &AlgebraVector, fiber: &AlgebraVector| {
        Generator::new(
            SpaceId::TG,
            vec![GenSlot::Vector(top.clone()), GenSlot::Vector(fiber.clone())],
        )
        .unwrap()
    };
    // [(e_i, 0), (e_j, 0)] = ([e_i, e_j], 0)
    let cyclic = [(0usize, 1usize, 2usize), (1, 2, 0), (2, 0, 1)];
    for (i, j, k) in cyclic {
        let out = algebra_bracket(&gen(&e(i), &zero), &gen(&e(j), &zero));
        assert!((out.vec(0) + &e(k)).norm() < 1e-14, "top bracket is -e{k}");
        assert!(out.vec(1).norm() < 1e-14);
    }
    // [(e_i, 0), (0, e_j)] = (0, [e_i, e_j])
    for (i, j, k) in cyclic {
        let out = algebra_bracket(&gen(&e(i), &zero), &gen(&zero, &e(j)));
        assert!(out.vec(0).norm() < 1e-14);
        assert!((out.vec(1) + &e(k)).norm() < 1e-14, "fiber bracket is -e{k}");
    }
    // [(0, x), (0, y)] = 0: the fiber is abelian
    let out = algebra_bracket(&gen(&zero, &e(0)), &gen(&zero, &e(1)));
    assert!(out.norm() == 0.0);
}

/// The tangent-group bracket in closed form:
/// `[(x2, x3), (y2, y3)] = (ad_{x2} y2, ad_{x2} y3 - ad_{y2} x3)`.
#[test]
fn tangent_group_bracket_matches_semidirect_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for alg in test_algebras() {
        for _ in 0..5 {
            let a = random_generator(SpaceId::TG, &alg, &mut rng, SPREAD);
            let b = random_generator(SpaceId::TG, &alg, &mut rng, SPREAD);
            let out = algebra_bracket(&a, &b);
            let top = a.vec(0).bracket(b.vec(0));
            let fiber = &a.vec(0).bracket(b.vec(1)) - &b.vec(0).bracket(a.vec(1));
            assert!((out.vec(0) - &top).norm() < 1e-14);
            assert!((out.vec(1) - &fiber).norm() < 1e-14);
        }
    }
}

/// The cotangent-group bracket in closed form:
/// `[(xi, mu), (eta, nu)] = ([xi, eta], ad*_eta mu - ad*_xi nu)`.
#[test]
fn cotangent_group_bracket_matches_semidirect_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    for alg in test_algebras() {
        for _ in 0..5 {
            let a = random_generator(SpaceId::TstarG, &alg, &mut rng, SPREAD);
            let b = random_generator(SpaceId::TstarG, &alg, &mut rng, SPREAD);
            let out = algebra_bracket(&a, &b);
            let top = a.vec(0).bracket(b.vec(0));
            let fiber = &b.vec(0).ad_star(a.cov(1)) - &a.vec(0).ad_star(b.cov(1));
            assert!((out.vec(0) - &top).norm() < 1e-14);
            assert!((out.cov(1) - &fiber).norm() < 1e-14);
        }
    }
}
