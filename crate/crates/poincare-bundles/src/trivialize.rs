//! Trivialization of raw tangent/cotangent data and its inverse.
//!
//! Raw tangent directions at `g` are matrices in `T_gG`; raw cotangent
//! directions are matrices paired with tangents through the Frobenius inner
//! product `⟨A, V⟩ = tr(Aᵀ V)`.  Trivialization right-translates tangents to
//! the algebra (`ξ = unhat(V g⁻¹)`) and cotangents to the dual
//! (`⟨μ, η⟩ = ⟨A, hat(η) g⟩`), and on the iterated bundles adds the
//! connection-like corrections that decouple the fiber slots.

use nalgebra::{DMatrix, DVector};
use poincare_lie::{Algebra, AlgebraVector, DualVector, GroupElement};

use crate::point::{BundlePoint, SlotValue};
use crate::space::SpaceId;

fn frobenius(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Raw tangent at `g` of the right-translated algebra direction `ξ`.
pub fn vector_to_raw(xi: &AlgebraVector, g: &GroupElement) -> DMatrix<f64> {
    g.right_translate(xi)
}

/// Right-translate a raw tangent at `g` back to the algebra.
pub fn raw_to_vector(alg: &Algebra, v: &DMatrix<f64>, g: &GroupElement) -> AlgebraVector {
    let ginv = g.inverse();
    AlgebraVector { alg: alg.clone(), comps: alg.unhat(&(v * &ginv.mat)) }
}

/// Right-translate a raw cotangent at `g` to the dual algebra:
/// component `j` is `⟨A, hat(e_j) g⟩`.
pub fn raw_to_dual(alg: &Algebra, alpha: &DMatrix<f64>, g: &GroupElement) -> DualVector {
    let basis = alg.basis().expect("cotangent trivialization needs a matrix basis");
    let moved = alpha * g.mat.transpose();
    let comps = DVector::from_iterator(alg.dim(), basis.iter().map(|e| frobenius(&moved, e)));
    DualVector { alg: alg.clone(), comps }
}

/// Represent a dual vector as a raw cotangent matrix at `g` (a right
/// inverse of [`raw_to_dual`]: the result lies in `span(hat) · g⁻ᵀ`).
pub fn dual_to_raw(mu: &DualVector, g: &GroupElement) -> DMatrix<f64> {
    let alg = &mu.alg;
    let basis = alg.basis().expect("cotangent trivialization needs a matrix basis");
    let dim = alg.dim();
    let gram = DMatrix::from_fn(dim, dim, |i, j| frobenius(&basis[i], &basis[j]));
    let coef = gram
        .lu()
        .solve(&mu.comps)
        .expect("basis Gram matrix is invertible for an independent basis");
    let n = alg.matrix_size();
    let mut d = DMatrix::zeros(n, n);
    for (c, e) in coef.iter().zip(basis) {
        d += e * *c;
    }
    let ginv_t = g.inverse().mat.transpose();
    d * ginv_t
}

/// `(g, V_g) ↦ (g, unhat(V_g g⁻¹))`.
pub fn trivialize_tg(g: &GroupElement, v_g: &DMatrix<f64>) -> BundlePoint {
    let xi = raw_to_vector(&g.alg, v_g, g);
    BundlePoint::new(SpaceId::TG, vec![SlotValue::Group(g.clone()), SlotValue::Vector(xi)])
        .expect("trivialized point is well-formed")
}

pub fn untrivialize_tg(p: &BundlePoint) -> DMatrix<f64> {
    assert_eq!(p.space(), SpaceId::TG);
    vector_to_raw(p.vec(1), p.group())
}

/// `(g, α_g) ↦ (g, T*R_g α_g)`.
pub fn trivialize_cotangent(g: &GroupElement, alpha: &DMatrix<f64>) -> BundlePoint {
    let mu = raw_to_dual(&g.alg, alpha, g);
    BundlePoint::new(SpaceId::TstarG, vec![SlotValue::Group(g.clone()), SlotValue::Covector(mu)])
        .expect("trivialized point is well-formed")
}

pub fn untrivialize_cotangent(p: &BundlePoint) -> DMatrix<f64> {
    assert_eq!(p.space(), SpaceId::TstarG);
    dual_to_raw(p.cov(1), p.group())
}

/// Tangent of `TG`: base `(g, ξ₁)`, raw velocity `(V_g, V_ξ)`.
/// The second velocity slot is read as `ξ₃ = V_ξ - [ξ₁, ξ₂]`.
pub fn trivialize_ttg(base: &BundlePoint, v_g: &DMatrix<f64>, v_xi: &AlgebraVector) -> BundlePoint {
    assert_eq!(base.space(), SpaceId::TG);
    let g = base.group();
    let xi1 = base.vec(1);
    let xi2 = raw_to_vector(base.alg(), v_g, g);
    let xi3 = v_xi - &xi1.bracket(&xi2);
    BundlePoint::new(
        SpaceId::TTG,
        vec![
            SlotValue::Group(g.clone()),
            SlotValue::Vector(xi1.clone()),
            SlotValue::Vector(xi2),
            SlotValue::Vector(xi3),
        ],
    )
    .expect("trivialized point is well-formed")
}

pub fn untrivialize_ttg(p: &BundlePoint) -> (DMatrix<f64>, AlgebraVector) {
    assert_eq!(p.space(), SpaceId::TTG);
    let v_g = vector_to_raw(p.vec(2), p.group());
    let v_xi = p.vec(3) + &p.vec(1).bracket(p.vec(2));
    (v_g, v_xi)
}

/// Cotangent of `TG`: base `(g, ξ)`, raw covector `(α_g, α_ξ)`;
/// `μ = T*R_g α_g + ad*_ξ α_ξ`, `ν = α_ξ`.
pub fn trivialize_tstar_tg(
    base: &BundlePoint,
    alpha_g: &DMatrix<f64>,
    alpha_xi: &DualVector,
) -> BundlePoint {
    assert_eq!(base.space(), SpaceId::TG);
    let g = base.group();
    let xi = base.vec(1);
    let mu = &raw_to_dual(base.alg(), alpha_g, g) + &xi.ad_star(alpha_xi);
    BundlePoint::new(
        SpaceId::TstarTG,
        vec![
            SlotValue::Group(g.clone()),
            SlotValue::Vector(xi.clone()),
            SlotValue::Covector(mu),
            SlotValue::Covector(alpha_xi.clone()),
        ],
    )
    .expect("trivialized point is well-formed")
}

pub fn untrivialize_tstar_tg(p: &BundlePoint) -> (DMatrix<f64>, DualVector) {
    assert_eq!(p.space(), SpaceId::TstarTG);
    let (xi, mu, nu) = (p.vec(1), p.cov(2), p.cov(3));
    let alpha_g = dual_to_raw(&(mu - &xi.ad_star(nu)), p.group());
    (alpha_g, nu.clone())
}

/// Cotangent of `T*G`: base `(g, μ)`, raw covector `(α_g, α_μ)` with
/// `α_μ` an algebra vector; `ν = T*R_g α_g - ad*_{α_μ} μ`, `ξ = α_μ`.
pub fn trivialize_tstar_tstar_g(
    base: &BundlePoint,
    alpha_g: &DMatrix<f64>,
    alpha_mu: &AlgebraVector,
) -> BundlePoint {
    assert_eq!(base.space(), SpaceId::TstarG);
    let g = base.group();
    let mu = base.cov(1);
    let nu = &raw_to_dual(base.alg(), alpha_g, g) - &alpha_mu.ad_star(mu);
    BundlePoint::new(
        SpaceId::TstarTstarG,
        vec![
            SlotValue::Group(g.clone()),
            SlotValue::Covector(mu.clone()),
            SlotValue::Covector(nu),
            SlotValue::Vector(alpha_mu.clone()),
        ],
    )
    .expect("trivialized point is well-formed")
}

pub fn untrivialize_tstar_tstar_g(p: &BundlePoint) -> (DMatrix<f64>, AlgebraVector) {
    assert_eq!(p.space(), SpaceId::TstarTstarG);
    let (mu, nu, xi) = (p.cov(1), p.cov(2), p.vec(3));
    let alpha_g = dual_to_raw(&(nu + &xi.ad_star(mu)), p.group());
    (alpha_g, xi.clone())
}

/// Tangent of `T*G`: base `(g, μ)`, raw velocity `(V_g, V_μ)`;
/// `ξ = unhat(V_g g⁻¹)`, `ν = V_μ - ad*_ξ μ`.
pub fn trivialize_t_tstar_g(
    base: &BundlePoint,
    v_g: &DMatrix<f64>,
    v_mu: &DualVector,
) -> BundlePoint {
    assert_eq!(base.space(), SpaceId::TstarG);
    let g = base.group();
    let mu = base.cov(1);
    let xi = raw_to_vector(base.alg(), v_g, g);
    let nu = v_mu - &xi.ad_star(mu);
    BundlePoint::new(
        SpaceId::TTstarG,
        vec![
            SlotValue::Group(g.clone()),
            SlotValue::Covector(mu.clone()),
            SlotValue::Vector(xi),
            SlotValue::Covector(nu),
        ],
    )
    .expect("trivialized point is well-formed")
}

pub fn untrivialize_t_tstar_g(p: &BundlePoint) -> (DMatrix<f64>, DualVector) {
    assert_eq!(p.space(), SpaceId::TTstarG);
    let (mu, xi, nu) = (p.cov(1), p.vec(2), p.cov(3));
    let v_g = vector_to_raw(xi, p.group());
    let v_mu = nu + &xi.ad_star(mu);
    (v_g, v_mu)
}

/// Holonomic immersion of the second-order bundle:
/// `(g, ξ, ξ̇) ↦ (g, ξ, ξ, ξ̇ - [ξ, ξ])` with the bracket term vanishing,
/// i.e. both intermediate velocity slots agree.
pub fn immerse_second_order(p: &BundlePoint) -> BundlePoint {
    assert_eq!(p.space(), SpaceId::T2G);
    let (xi, xidot) = (p.vec(1), p.vec(2));
    BundlePoint::new(
        SpaceId::TTG,
        vec![
            SlotValue::Group(p.group().clone()),
            SlotValue::Vector(xi.clone()),
            SlotValue::Vector(xi.clone()),
            SlotValue::Vector(xidot.clone()),
        ],
    )
    .expect("immersed point is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use poincare_lie::algebras::so3;

    #[test]
    fn frobenius_matches_entrywise_sum() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let b = DMatrix::from_row_slice(2, 2, &[5.0, 6.0, 7.0, 8.0]);
        assert_eq!(frobenius(&a, &b), 5.0 + 12.0 + 21.0 + 32.0);
    }

    #[test]
    fn dual_raw_round_trip_at_generic_group_point() {
        let alg = so3();
        let g = GroupElement::exp(&AlgebraVector::from_slice(&alg, &[0.4, -0.2, 0.9]));
        let mu = DualVector::from_slice(&alg, &[1.5, -0.3, 0.8]);
        let raw = dual_to_raw(&mu, &g);
        let back = raw_to_dual(&alg, &raw, &g);
        assert!((&back - &mu).norm() < 1e-12);
    }
}
