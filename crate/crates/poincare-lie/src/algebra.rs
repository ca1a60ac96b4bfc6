//! Lie algebras defined by structure constants, with optional matrix bases.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};

use crate::error::LieError;
use crate::tol;

/// Shared handle to an algebra; everything downstream clones this freely.
pub type Algebra = Arc<LieAlgebraSpec>;

/// A finite-dimensional real Lie algebra given by structure constants
/// `C[k][i][j]` (so `[e_i, e_j] = Σ_k C[k][i][j] e_k`), optionally equipped
/// with a matrix basis realizing the bracket as minus the matrix commutator.
///
/// Construction validates, in order: array shape, antisymmetry, the Jacobi
/// identity, basis shape and linear independence, and the compatibility
/// identity `hat([e_i, e_j]) = -(B_i B_j - B_j B_i)`. The first violated
/// identity is reported with its indices.
#[derive(Debug, Clone)]
pub struct LieAlgebraSpec {
    name: String,
    dim: usize,
    /// `structure[k]` is the matrix `(C_k)_{ij} = C[k][i][j]`.
    structure: Vec<DMatrix<f64>>,
    /// Matrix basis `B_i`, if the algebra carries a realization.
    basis: Option<Vec<DMatrix<f64>>>,
    matrix_size: usize,
    /// Pseudo-inverse of the `matrix_size² × dim` column-stack of the basis;
    /// maps a flattened matrix to its coordinates in the basis.
    unhat_pinv: Option<DMatrix<f64>>,
}

impl LieAlgebraSpec {
    /// Builds and validates an algebra. `structure[k]` holds `C[k][i][j]` in
    /// row `i`, column `j`. `matrix_size` is the side length of the matrix
    /// realization (of the *group* elements), required even when no basis is
    /// supplied so that group-valued data has a well-defined shape.
    pub fn new(
        name: impl Into<String>,
        structure: Vec<DMatrix<f64>>,
        basis: Option<Vec<DMatrix<f64>>>,
        matrix_size: usize,
    ) -> Result<Algebra, LieError> {
        let name = name.into();
        let dim = structure.len();
        for (k, ck) in structure.iter().enumerate() {
            if ck.nrows() != dim || ck.ncols() != dim {
                return Err(LieError::StructureShape {
                    detail: format!(
                        "C[{k}] is {}×{}, expected {dim}×{dim}",
                        ck.nrows(),
                        ck.ncols()
                    ),
                });
            }
        }

        // Antisymmetry: C[k][i][j] = -C[k][j][i].
        for (k, ck) in structure.iter().enumerate() {
            for i in 0..dim {
                for j in 0..=i {
                    let r = (ck[(i, j)] + ck[(j, i)]).abs();
                    if r > tol::STRUCTURE_IDENTITY {
                        return Err(LieError::Antisymmetry { k, i, j, residual: r });
                    }
                }
            }
        }

        let spec = LieAlgebraSpec {
            name,
            dim,
            structure,
            basis: None,
            matrix_size,
            unhat_pinv: None,
        };

        // Jacobi: [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0.
        for i in 0..dim {
            let ei = DVector::from_fn(dim, |r, _| if r == i { 1.0 } else { 0.0 });
            for j in (i + 1)..dim {
                let ej = DVector::from_fn(dim, |r, _| if r == j { 1.0 } else { 0.0 });
                for k in (j + 1)..dim {
                    let ek = DVector::from_fn(dim, |r, _| if r == k { 1.0 } else { 0.0 });
                    let cyc = spec.bracket(&ei, &spec.bracket(&ej, &ek))
                        + spec.bracket(&ej, &spec.bracket(&ek, &ei))
                        + spec.bracket(&ek, &spec.bracket(&ei, &ej));
                    let r = cyc.norm();
                    if r > tol::STRUCTURE_IDENTITY {
                        return Err(LieError::Jacobi { i, j, k, residual: r });
                    }
                }
            }
        }

        let mut spec = spec;
        if let Some(basis) = basis {
            spec.attach_basis(basis)?;
        }
        Ok(Arc::new(spec))
    }

    /// Builds an algebra *from* a matrix basis: the structure constants are
    /// computed as the coordinates of minus the matrix commutators, then the
    /// result is validated as usual.
    pub fn from_basis(
        name: impl Into<String>,
        basis: Vec<DMatrix<f64>>,
    ) -> Result<Algebra, LieError> {
        let name = name.into();
        let dim = basis.len();
        let matrix_size = basis.first().map_or(0, |b| b.nrows());
        let pinv = basis_pinv(&basis, matrix_size, dim)?;

        let mut structure = vec![DMatrix::<f64>::zeros(dim, dim); dim];
        for i in 0..dim {
            for j in 0..dim {
                let comm = &basis[i] * &basis[j] - &basis[j] * &basis[i];
                let coords = project(&pinv, &basis, &(-comm))?;
                for k in 0..dim {
                    structure[k][(i, j)] = coords[k];
                }
            }
        }
        Self::new(name, structure, Some(basis), matrix_size)
    }

    fn attach_basis(&mut self, basis: Vec<DMatrix<f64>>) -> Result<(), LieError> {
        for (index, b) in basis.iter().enumerate() {
            if b.nrows() != self.matrix_size || b.ncols() != self.matrix_size {
                return Err(LieError::BasisShape { index, expected: self.matrix_size });
            }
        }
        if basis.len() != self.dim {
            return Err(LieError::StructureShape {
                detail: format!("basis has {} matrices, dim is {}", basis.len(), self.dim),
            });
        }
        let pinv = basis_pinv(&basis, self.matrix_size, self.dim)?;

        // Compatibility: hat([e_i,e_j]) must equal minus the matrix commutator.
        for i in 0..self.dim {
            for j in 0..self.dim {
                let comm = &basis[i] * &basis[j] - &basis[j] * &basis[i];
                let mut expected = DMatrix::<f64>::zeros(self.matrix_size, self.matrix_size);
                for k in 0..self.dim {
                    expected += &basis[k] * self.structure[k][(i, j)];
                }
                let residual = (expected + comm).norm();
                if residual > tol::STRUCTURE_IDENTITY {
                    return Err(LieError::BasisCompatibility { i, j, residual });
                }
            }
        }

        self.basis = Some(basis);
        self.unhat_pinv = Some(pinv);
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix_size(&self) -> usize {
        self.matrix_size
    }

    pub fn has_basis(&self) -> bool {
        self.basis.is_some()
    }

    /// Structure constant matrices `C_k` with `(C_k)_{ij} = C[k][i][j]`.
    pub fn structure(&self) -> &[DMatrix<f64>] {
        &self.structure
    }

    /// Basis matrices, if the algebra has a realization.
    pub fn basis(&self) -> Option<&[DMatrix<f64>]> {
        self.basis.as_deref()
    }

    /// The bracket on coordinates: `[x, y]_k = xᵀ C_k y`.
    pub fn bracket(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        DVector::from_fn(self.dim, |k, _| (x.transpose() * &self.structure[k] * y)[(0, 0)])
    }

    /// Matrix of `ad_x : y ↦ [x, y]`, i.e. `(ad_x)_{kj} = Σ_i C[k][i][j] x_i`.
    pub fn ad_matrix(&self, x: &DVector<f64>) -> DMatrix<f64> {
        DMatrix::from_fn(self.dim, self.dim, |k, j| {
            (0..self.dim).map(|i| self.structure[k][(i, j)] * x[i]).sum()
        })
    }

    /// Coadjoint contraction: `⟨ad*_x μ, y⟩ = ⟨μ, [x, y]⟩`, so
    /// `ad*_x μ = (ad_x)ᵀ μ` on coordinates.
    pub fn ad_star(&self, x: &DVector<f64>, mu: &DVector<f64>) -> DVector<f64> {
        self.ad_matrix(x).transpose() * mu
    }

    /// Realizes an algebra element as a matrix: `hat(x) = Σ_i x_i B_i`.
    pub fn hat(&self, x: &DVector<f64>) -> DMatrix<f64> {
        let basis = self
            .basis
            .as_ref()
            .unwrap_or_else(|| panic!("algebra '{}' has no matrix basis (hat)", self.name));
        let mut m = DMatrix::<f64>::zeros(self.matrix_size, self.matrix_size);
        for (xi, bi) in x.iter().zip(basis) {
            m += bi * *xi;
        }
        m
    }

    /// Coordinates of a matrix in the basis span. Panics if the residual of
    /// the projection exceeds [`tol::UNHAT_RESIDUAL`] relative to the input —
    /// that means the matrix is not an algebra element, which inside this
    /// workspace is always a logic error rather than a data error.
    pub fn unhat(&self, m: &DMatrix<f64>) -> DVector<f64> {
        self.try_unhat(m).unwrap_or_else(|e| {
            panic!("unhat on algebra '{}' failed: {}", self.name, e)
        })
    }

    /// Fallible projection onto the basis span; used at trust boundaries
    /// (user-supplied matrices).
    pub fn try_unhat(&self, m: &DMatrix<f64>) -> Result<DVector<f64>, LieError> {
        let (pinv, basis) = match (self.unhat_pinv.as_ref(), self.basis.as_ref()) {
            (Some(p), Some(b)) => (p, b),
            _ => {
                return Err(LieError::MissingBasis {
                    name: self.name.clone(),
                    op: "unhat".into(),
                })
            }
        };
        project(pinv, basis, m)
    }

    /// Euclidean pairing of a dual vector with an algebra vector on
    /// coordinates; the dual basis is the coordinate dual basis.
    pub fn pairing(&self, mu: &DVector<f64>, x: &DVector<f64>) -> f64 {
        mu.dot(x)
    }
}

/// Pseudo-inverse of the column-stacked basis, with a rank check.
fn basis_pinv(
    basis: &[DMatrix<f64>],
    matrix_size: usize,
    dim: usize,
) -> Result<DMatrix<f64>, LieError> {
    for (index, b) in basis.iter().enumerate() {
        if b.nrows() != matrix_size || b.ncols() != matrix_size {
            return Err(LieError::BasisShape { index, expected: matrix_size });
        }
    }
    let n2 = matrix_size * matrix_size;
    let mut stacked = DMatrix::<f64>::zeros(n2, dim);
    for (j, b) in basis.iter().enumerate() {
        for (r, v) in b.as_slice().iter().enumerate() {
            stacked[(r, j)] = *v;
        }
    }
    let svd = stacked.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let rank = svd
        .singular_values
        .iter()
        .filter(|s| **s > tol::RANK_CUTOFF * smax.max(1.0))
        .count();
    if rank < dim {
        return Err(LieError::BasisRank { rank, dim });
    }
    svd.pseudo_inverse(tol::RANK_CUTOFF * smax.max(1.0))
        .map_err(|e| LieError::StructureShape { detail: e.to_string() })
}

/// Projects a matrix onto the basis span and checks the residual.
fn project(
    pinv: &DMatrix<f64>,
    basis: &[DMatrix<f64>],
    m: &DMatrix<f64>,
) -> Result<DVector<f64>, LieError> {
    let n = basis[0].nrows();
    let flat = DVector::from_column_slice(m.as_slice());
    let coords = pinv * &flat;
    let mut rebuilt = DMatrix::<f64>::zeros(n, n);
    for (c, b) in coords.iter().zip(basis) {
        rebuilt += b * *c;
    }
    let residual = (rebuilt - m).norm() / m.norm().max(1.0);
    if residual > tol::UNHAT_RESIDUAL {
        return Err(LieError::NotInAlgebra { residual });
    }
    Ok(DVector::from_iterator(coords.len(), coords.iter().copied()))
}
