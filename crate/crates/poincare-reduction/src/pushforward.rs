//! Numerical pushforward of maps between the trivialized spaces.
//!
//! The derivative of a map `Φ` at `p` along a generator `A` is obtained by
//! differentiating `t ↦ Φ(mul(path_A(t), p))` in flat coordinates with a
//! Richardson-extrapolated central difference, then reading the resulting
//! tangent vector back as a generator at `Φ(p)`.  The extrapolation knocks
//! the error down to a few units in the twelfth digit for unit-scale data,
//! which is what lets the symplectic checks run at tight tolerances.

use poincare_bundles::{
    first_order_path, generator_from_value, mul, BundlePoint, Generator, TangentVector,
};

/// Base step of the central difference.
pub const PUSHFORWARD_STEP: f64 = 1e-3;

/// Derivative of `map` at `p` along the right-invariant field of `gen`,
/// expressed as a generator at `map(p)`.
pub fn pushforward<F>(map: F, p: &BundlePoint, gen: &Generator) -> Generator
where
    F: Fn(&BundlePoint) -> BundlePoint,
{
    let q = map(p);
    let alg = p.alg().clone();
    let space = q.space();
    let diff = |h: f64| -> Vec<f64> {
        let plus = map(&mul(&first_order_path(gen, h), p)).flat();
        let minus = map(&mul(&first_order_path(gen, -h), p)).flat();
        plus.iter()
            .zip(minus)
            .map(|(a, b)| (a - b) / (2.0 * h))
            .collect()
    };
    let coarse = diff(PUSHFORWARD_STEP);
    let fine = diff(PUSHFORWARD_STEP / 2.0);
    let rich: Vec<f64> = fine
        .iter()
        .zip(coarse)
        .map(|(f, c)| (4.0 * f - c) / 3.0)
        .collect();
    let value = TangentVector::from_flat(space, &alg, &rich);
    generator_from_value(&q, &value)
}
