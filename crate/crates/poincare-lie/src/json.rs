//! JSON persistence for algebra definitions.
//!
//! The on-disk schema is
//!
//! ```json
//! {
//!   "name": "so3",
//!   "dim": 3,
//!   "matrix_size": 3,
//!   "structure": [[[0.0, ...], ...], ...],   // C[k][i][j]
//!   "basis": [[[0.0, ...], ...], ...]        // optional; basis[i][row][col]
//! }
//! ```
//!
//! Loading runs the full validation stack; the error names the first violated
//! identity with its indices.

use std::path::Path;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, LieAlgebraSpec};
use crate::error::LieError;

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraFile {
    name: String,
    dim: usize,
    matrix_size: usize,
    /// `structure[k][i][j]`
    structure: Vec<Vec<Vec<f64>>>,
    /// `basis[i][row][col]`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<Vec<Vec<f64>>>>,
}

fn nested_to_matrix(rows: &[Vec<f64>], label: &str) -> Result<DMatrix<f64>, LieError> {
    let nr = rows.len();
    let nc = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != nc) {
        return Err(LieError::StructureShape { detail: format!("{label} rows have uneven lengths") });
    }
    Ok(DMatrix::from_fn(nr, nc, |i, j| rows[i][j]))
}

fn matrix_to_nested(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect()).collect()
}

/// Parses and validates an algebra from a JSON string.
pub fn from_json_str(text: &str) -> Result<Algebra, LieError> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| LieError::File { path: "<inline>".into(), detail: e.to_string() })?;
    if file.structure.len() != file.dim {
        return Err(LieError::StructureShape {
            detail: format!("'dim' is {} but structure has {} blocks", file.dim, file.structure.len()),
        });
    }
    let structure = file
        .structure
        .iter()
        .enumerate()
        .map(|(k, block)| nested_to_matrix(block, &format!("structure[{k}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let basis = match file.basis {
        None => None,
        Some(bs) => Some(
            bs.iter()
                .enumerate()
                .map(|(i, block)| nested_to_matrix(block, &format!("basis[{i}]")))
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    LieAlgebraSpec::new(file.name, structure, basis, file.matrix_size)
}

/// Loads and validates an algebra from a file.
pub fn load_algebra(path: impl AsRef<Path>) -> Result<Algebra, LieError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| LieError::File {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    from_json_str(&text).map_err(|e| match e {
        LieError::File { detail, .. } => {
            LieError::File { path: path.display().to_string(), detail }
        }
        other => other,
    })
}

/// Serializes an algebra to the JSON schema above.
pub fn to_json_string(alg: &Algebra) -> String {
    let file = AlgebraFile {
        name: alg.name().to_string(),
        dim: alg.dim(),
        matrix_size: alg.matrix_size(),
        structure: alg.structure().iter().map(matrix_to_nested).collect(),
        basis: alg.basis().map(|bs| bs.iter().map(matrix_to_nested).collect()),
    };
    serde_json::to_string_pretty(&file).expect("algebra serialization cannot fail")
}
