//! Energy built from a second-order Lagrangian.

use nalgebra::DVector;
use poincare_bundles::{BundlePoint, SpaceId};

use crate::field::{replace_fiber, ScalarField};
use crate::legendre::LegendreMap;

/// Turn a Lagrangian on the second-order bundle `(g, ξ, ξ̇)` into the
/// matching energy on `T*TG`:
///
/// `H(g, ξ, μ, ν) = ⟨μ, ξ⟩ + ⟨ν, ξ̇(ν)⟩ − L(g, ξ, ξ̇(ν))`,
///
/// where `ξ̇(ν)` inverts `δL/δξ̇ = ν` at fixed `(g, ξ)`. Slot gradients are
/// analytic by the envelope argument: the implicit `ξ̇` dependence drops out
/// against `δL/δξ̇ = ν`, leaving
/// `∂H/∂g = −∂L/∂g`, `∂H/∂ξ = μ − ∂L/∂ξ`, `∂H/∂μ = ξ`, `∂H/∂ν = ξ̇`.
pub fn energy_from_lagrangian(lagrangian: &ScalarField, legendre: &LegendreMap) -> ScalarField {
    assert_eq!(
        lagrangian.space(),
        SpaceId::T2G,
        "energy construction starts from a second-order Lagrangian"
    );
    let name = format!("energy-of-{}", lagrangian.name());

    let solve_xidot = {
        let lagrangian = lagrangian.clone();
        let legendre = legendre.clone();
        move |p: &BundlePoint| -> DVector<f64> {
            let alg = p.alg().clone();
            // Base point (g, ξ, 0) on the second-order bundle.
            let base = BundlePoint::new(
                SpaceId::T2G,
                vec![
                    p.slots()[0].clone(),
                    p.slots()[1].clone(),
                    poincare_bundles::SlotValue::Vector(poincare_lie::AlgebraVector::zero(&alg)),
                ],
            )
            .expect("second-order signature");
            let nu = &p.cov(3).comps;
            legendre
                .invert(&lagrangian, &base, &[2], &[nu])
                .expect("fiber-derivative inversion for the energy")
                .remove(0)
        }
    };

    let eval = {
        let lagrangian = lagrangian.clone();
        let solve = solve_xidot.clone();
        move |p: &BundlePoint| -> f64 {
            let xi = &p.vec(1).comps;
            let mu = &p.cov(2).comps;
            let nu = &p.cov(3).comps;
            let xidot = solve(p);
            let base = BundlePoint::new(
                SpaceId::T2G,
                vec![p.slots()[0].clone(), p.slots()[1].clone(), p.slots()[1].clone()],
            )
            .expect("second-order signature");
            let at = replace_fiber(&base, 2, &xidot);
            mu.dot(xi) + nu.dot(&xidot) - lagrangian.eval(&at)
        }
    };

    let grad = {
        let lagrangian = lagrangian.clone();
        let solve = solve_xidot;
        move |p: &BundlePoint| -> Vec<DVector<f64>> {
            let xi = &p.vec(1).comps;
            let mu = &p.cov(2).comps;
            let xidot = solve(p);
            let base = BundlePoint::new(
                SpaceId::T2G,
                vec![p.slots()[0].clone(), p.slots()[1].clone(), p.slots()[1].clone()],
            )
            .expect("second-order signature");
            let at = replace_fiber(&base, 2, &xidot);
            let lparts = lagrangian.partials(&at);
            vec![-&lparts[0], mu - &lparts[1], xi.clone(), xidot]
        }
    };

    ScalarField::new(name, SpaceId::TstarTG, eval).with_partials(grad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::QuadraticLagrangian;
    use nalgebra::DMatrix;
    use poincare_bundles::random_point;
    use poincare_lie::algebras::so3;
    use rand::SeedableRng;

    /// For `L = ½⟨M ξ̇, ξ̇⟩` the energy is `⟨μ,ξ⟩ + ½⟨ν, M⁻¹ν⟩`.
    #[test]
    fn quadratic_energy_has_closed_form() {
        let alg = so3();
        let m = DMatrix::from_row_slice(3, 3, &[2.0, 0.5, 0.0, 0.5, 1.5, 0.0, 0.0, 0.0, 1.0]);
        let minv = m.clone().try_inverse().unwrap();
        let lag = QuadraticLagrangian::new(SpaceId::T2G, vec![m], None).unwrap();
        let h = energy_from_lagrangian(&lag.field(), &lag.legendre());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xE0);
        for _ in 0..10 {
            let p = random_point(SpaceId::TstarTG, &alg, &mut rng, 0.8);
            let xi = &p.vec(1).comps;
            let mu = &p.cov(2).comps;
            let nu = &p.cov(3).comps;
            let expected = mu.dot(xi) + 0.5 * (&minv * nu).dot(nu);
            assert!((h.eval(&p) - expected).abs() < 1e-12);
        }
    }

    /// The envelope-form gradients of the energy pass the FD cross-check.
    #[test]
    fn energy_partials_validate() {
        let alg = so3();
        let m = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0, 3.0]));
        let lag = QuadraticLagrangian::new(SpaceId::T2G, vec![m], None).unwrap();
        let h = energy_from_lagrangian(&lag.field(), &lag.legendre());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xE1);
        h.validate_partials(&alg, &mut rng, 20, 1e-5).unwrap();
    }
}
