//! The shipped algebra catalog.
//!
//! Each constructor builds the matrix basis explicitly and derives the
//! structure constants from minus the matrix commutator, so the catalog is
//! correct by construction and revalidated on every call.

use nalgebra::DMatrix;

use crate::algebra::{Algebra, LieAlgebraSpec};

/// Elementary matrix `e_{rc}` of the given size (1 at row `r`, column `c`).
fn elem(n: usize, r: usize, c: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(n, n);
    m[(r, c)] = 1.0;
    m
}

/// The rotation algebra: basis hats act as cross products, and the right
/// bracket is `[a, b] = -(a × b)`.
pub fn so3() -> Algebra {
    let b1 = DMatrix::from_row_slice(3, 3, &[0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0]);
    let b2 = DMatrix::from_row_slice(3, 3, &[0.0, 0.0, 1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0]);
    let b3 = DMatrix::from_row_slice(3, 3, &[0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    LieAlgebraSpec::from_basis("so3", vec![b1, b2, b3]).expect("so3 is valid")
}

/// The 3-dimensional Heisenberg algebra, realized as strictly upper
/// triangular 3×3 matrices. `[e1, e2] = -e3` is the only nonzero bracket.
pub fn h3() -> Algebra {
    let basis = vec![elem(3, 0, 1), elem(3, 1, 2), elem(3, 0, 2)];
    LieAlgebraSpec::from_basis("h3", basis).expect("h3 is valid")
}

/// The Euclidean algebra of the plane (one rotation, two translations),
/// realized in homogeneous 3×3 form.
pub fn se2() -> Algebra {
    let j = DMatrix::from_row_slice(3, 3, &[0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    let basis = vec![j, elem(3, 0, 2), elem(3, 1, 2)];
    LieAlgebraSpec::from_basis("se2", basis).expect("se2 is valid")
}

/// The traceless 2×2 algebra with the standard (h, e, f) basis.
pub fn sl2() -> Algebra {
    let h = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
    let e = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
    let f = DMatrix::from_row_slice(2, 2, &[0.0, 0.0, 1.0, 0.0]);
    LieAlgebraSpec::from_basis("sl2", vec![h, e, f]).expect("sl2 is valid")
}

/// The abelian algebra of dimension `n`, realized as the top row of an
/// `(n+1)×(n+1)` unipotent block so that all products of basis matrices
/// vanish and `exp` is exactly `I + hat(x)`.
pub fn abelian(n: usize) -> Algebra {
    assert!(n >= 1, "abelian algebra needs dimension >= 1");
    let basis: Vec<_> = (0..n).map(|i| elem(n + 1, 0, i + 1)).collect();
    LieAlgebraSpec::from_basis(format!("abelian{n}"), basis).expect("abelian is valid")
}

/// Looks up a shipped algebra by name (`so3`, `h3`, `se2`, `sl2`,
/// `abelian<n>`). Returns `None` for unknown names.
pub fn by_name(name: &str) -> Option<Algebra> {
    match name {
        "so3" => Some(so3()),
        "h3" => Some(h3()),
        "se2" => Some(se2()),
        "sl2" => Some(sl2()),
        _ => name
            .strip_prefix("abelian")
            .and_then(|digits| digits.parse::<usize>().ok())
            .filter(|n| (1..=16).contains(n))
            .map(abelian),
    }
}

/// Names of the shipped algebras, in catalog order (the abelian family is
/// represented by its 3-dimensional member).
pub fn catalog() -> Vec<&'static str> {
    vec!["so3", "h3", "se2", "sl2", "abelian3"]
}
