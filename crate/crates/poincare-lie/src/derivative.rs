//! Finite-difference derivatives along right-invariant directions.

use crate::group::GroupElement;
use crate::vector::{AlgebraVector, DualVector};

/// Central-difference step for a quantity of the given magnitude:
/// `ε_mach^{1/3} · max(1, scale)`, the usual optimum for second-order
/// central differences.
pub fn fd_step(scale: f64) -> f64 {
    f64::EPSILON.cbrt() * scale.max(1.0)
}

/// Right-trivialized derivative of a scalar on the group:
/// component `j` is `d/dt|₀ f(exp(t e_j) · g)`, so the result satisfies
/// `⟨right_derivative(f, g), η⟩ = d/dt|₀ f(exp(t η) g)` for every `η`.
///
/// This is the gradient that feeds every momentum equation; callers with an
/// analytic gradient bypass this function.
pub fn right_derivative<F: Fn(&GroupElement) -> f64>(f: F, g: &GroupElement) -> DualVector {
    let alg = &g.alg;
    let h = fd_step(g.norm());
    let mut comps = nalgebra::DVector::zeros(alg.dim());
    for j in 0..alg.dim() {
        let dir = &AlgebraVector::basis(alg, j) * h;
        let plus = GroupElement::exp(&dir).mul(g);
        let minus = GroupElement::exp(&(-&dir)).mul(g);
        comps[j] = (f(&plus) - f(&minus)) / (2.0 * h);
    }
    DualVector { alg: alg.clone(), comps }
}
