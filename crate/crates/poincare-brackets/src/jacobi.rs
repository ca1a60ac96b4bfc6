//! Composite bracket fields and the Jacobi cyclic-sum residual.

use poincare_bundles::BundlePoint;
use poincare_dynamics::ScalarField;

use crate::bracket::{check_space, poisson, BracketId};
use crate::error::BracketError;

/// Wrap `{f, k}` as a scalar field on the bracket's ambient space.
///
/// The returned field evaluates the bracket afresh at each point and exposes
/// no analytic partials, so an outer bracket differentiates it by finite
/// differences.  That is exactly what iterated brackets such as the Jacobi
/// sum need.
pub fn bracket_field(
    id: BracketId,
    f: &ScalarField,
    k: &ScalarField,
) -> Result<ScalarField, BracketError> {
    check_space("first function", f.space(), id.space())?;
    check_space("second function", k.space(), id.space())?;
    let name = format!("{{{},{}}}", f.name(), k.name());
    let (f, k) = (f.clone(), k.clone());
    Ok(ScalarField::new(name, id.space(), move |p: &BundlePoint| {
        poisson(id, &f, &k, p).expect("operands were validated against the bracket space")
    }))
}

/// Cyclic sum `{{f,k},h} + {{k,h},f} + {{h,f},k}` at `p`.
///
/// Zero for an exact Poisson structure; numerically it is limited by the
/// finite-difference partials of the inner bracket fields.
pub fn jacobi_residual(
    id: BracketId,
    f: &ScalarField,
    k: &ScalarField,
    h: &ScalarField,
    p: &BundlePoint,
) -> Result<f64, BracketError> {
    let fk = bracket_field(id, f, k)?;
    let kh = bracket_field(id, k, h)?;
    let hf = bracket_field(id, h, f)?;
    Ok(poisson(id, &fk, h, p)? + poisson(id, &kh, f, p)? + poisson(id, &hf, k, p)?)
}
