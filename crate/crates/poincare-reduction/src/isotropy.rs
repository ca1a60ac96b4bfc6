//! Isotropy algebras and orbit ranks of the coadjoint-type actions.
//!
//! Every isotropy condition here is linear in the unknown algebra element,
//! so each routine assembles the linear map whose kernel is the isotropy
//! algebra and extracts a basis of that kernel by singular-value
//! decomposition.  Orbit dimensions follow by rank counting.

use nalgebra::{DMatrix, DVector};
use poincare_lie::{Algebra, AlgebraVector, DualVector};

/// Relative singular-value threshold separating kernel from range.
pub const RANK_TOL: f64 = 1e-10;

/// Matrix whose `k`-th column is `ad*_{e_k} μ`; its column space is the
/// tangent space of the coadjoint orbit through `μ`.
pub fn coadjoint_image(alg: &Algebra, mu: &DVector<f64>) -> DMatrix<f64> {
    let dim = alg.dim();
    let m = DualVector {
        alg: alg.clone(),
        comps: mu.clone(),
    };
    let mut out = DMatrix::zeros(dim, dim);
    for k in 0..dim {
        let mut e = AlgebraVector::zero(alg);
        e.comps[k] = 1.0;
        out.set_column(k, &e.ad_star(&m).comps);
    }
    out
}

/// Dimension of the coadjoint orbit through `μ`.
pub fn orbit_rank(alg: &Algebra, mu: &DVector<f64>) -> usize {
    rank(&coadjoint_image(alg, mu))
}

/// Basis of the isotropy algebra of `μ` under the coadjoint action:
/// all `a` with `ad*_a μ = 0`.
pub fn isotropy_mu(alg: &Algebra, mu: &DVector<f64>) -> Vec<DVector<f64>> {
    kernel(&coadjoint_image(alg, mu))
}

/// Basis of the centralizer of `ξ` in the algebra: all `a` with
/// `[a, ξ] = 0`.
pub fn isotropy_xi(alg: &Algebra, xi: &DVector<f64>) -> Vec<DVector<f64>> {
    let dim = alg.dim();
    let x = AlgebraVector {
        alg: alg.clone(),
        comps: xi.clone(),
    };
    let mut m = DMatrix::zeros(dim, dim);
    for k in 0..dim {
        let mut e = AlgebraVector::zero(alg);
        e.comps[k] = 1.0;
        m.set_column(k, &e.bracket(&x).comps);
    }
    kernel(&m)
}

/// Basis of the isotropy algebra of a momentum pair `(μ, ν)` under the
/// tangent-group coadjoint action: stacked vectors `(a, b)` with
/// `ad*_a μ + ad*_b ν = 0` and `ad*_a ν = 0`.
pub fn isotropy_pair_duals(
    alg: &Algebra,
    mu: &DVector<f64>,
    nu: &DVector<f64>,
) -> Vec<DVector<f64>> {
    let dim = alg.dim();
    let c_mu = coadjoint_image(alg, mu);
    let c_nu = coadjoint_image(alg, nu);
    let mut m = DMatrix::zeros(2 * dim, 2 * dim);
    m.view_mut((0, 0), (dim, dim)).copy_from(&c_mu);
    m.view_mut((0, dim), (dim, dim)).copy_from(&c_nu);
    m.view_mut((dim, 0), (dim, dim)).copy_from(&c_nu);
    kernel(&m)
}

/// Basis of the isotropy algebra of a pair `(ν, ξ)` under the
/// cotangent-group coadjoint action: stacked vectors `(a, λ)` with
/// `ad*_ξ λ - ad*_a ν = 0` and `[a, ξ] = 0`.
pub fn isotropy_dual_vector(
    alg: &Algebra,
    nu: &DVector<f64>,
    xi: &DVector<f64>,
) -> Vec<DVector<f64>> {
    let dim = alg.dim();
    let x = AlgebraVector {
        alg: alg.clone(),
        comps: xi.clone(),
    };
    let c_nu = coadjoint_image(alg, nu);
    // ad*_ξ as a matrix acting on λ-components.
    let mut adstar_xi = DMatrix::zeros(dim, dim);
    for k in 0..dim {
        let mut e = DualVector::zero(alg);
        e.comps[k] = 1.0;
        adstar_xi.set_column(k, &x.ad_star(&e).comps);
    }
    let mut bracket_xi = DMatrix::zeros(dim, dim);
    for k in 0..dim {
        let mut e = AlgebraVector::zero(alg);
        e.comps[k] = 1.0;
        bracket_xi.set_column(k, &e.bracket(&x).comps);
    }
    let mut m = DMatrix::zeros(2 * dim, 2 * dim);
    m.view_mut((0, 0), (dim, dim)).copy_from(&(-&c_nu));
    m.view_mut((0, dim), (dim, dim)).copy_from(&adstar_xi);
    m.view_mut((dim, 0), (dim, dim)).copy_from(&bracket_xi);
    kernel(&m)
}

fn rank(m: &DMatrix<f64>) -> usize {
    let svd = m.clone().svd(false, false);
    let smax = svd.singular_values.max();
    if smax == 0.0 {
        return 0;
    }
    svd.singular_values
        .iter()
        .filter(|s| **s > RANK_TOL * smax)
        .count()
}

/// Orthonormal basis of the kernel of `m`.
fn kernel(m: &DMatrix<f64>) -> Vec<DVector<f64>> {
    let n = m.ncols();
    let svd = m.clone().svd(false, true);
    let vt = svd.v_t.expect("svd with right singular vectors");
    let smax = svd.singular_values.max();
    let mut out = Vec::new();
    for i in 0..n {
        let s = if i < svd.singular_values.len() {
            svd.singular_values[i]
        } else {
            0.0
        };
        if smax == 0.0 || s <= RANK_TOL * smax {
            out.push(vt.row(i).transpose());
        }
    }
    out
}
