//! Group elements as invertible matrices, with adjoint and coadjoint actions.

use nalgebra::{DMatrix, DVector};

use crate::algebra::Algebra;
use crate::error::LieError;
use crate::vector::{AlgebraVector, DualVector};

/// An element of the matrix group integrating an algebra.
///
/// Elements are produced by `identity`, `exp`, and products thereof; the
/// struct does not re-verify group membership on every operation.
#[derive(Debug, Clone)]
pub struct GroupElement {
    pub alg: Algebra,
    pub mat: DMatrix<f64>,
}

impl GroupElement {
    pub fn identity(alg: &Algebra) -> Self {
        let n = alg.matrix_size();
        Self { alg: alg.clone(), mat: DMatrix::identity(n, n) }
    }

    /// Wraps an explicit matrix. The caller asserts it lies in the group.
    pub fn from_matrix(alg: &Algebra, mat: DMatrix<f64>) -> Result<Self, LieError> {
        let n = alg.matrix_size();
        if mat.nrows() != n || mat.ncols() != n {
            return Err(LieError::StructureShape {
                detail: format!("group matrix is {}×{}, expected {n}×{n}", mat.nrows(), mat.ncols()),
            });
        }
        Ok(Self { alg: alg.clone(), mat })
    }

    /// Exponential of an algebra element (scaling-and-squaring Padé).
    pub fn exp(xi: &AlgebraVector) -> Self {
        let hat = xi.alg.hat(&xi.comps);
        Self { alg: xi.alg.clone(), mat: hat.exp() }
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement { alg: self.alg.clone(), mat: &self.mat * &other.mat }
    }

    pub fn inverse(&self) -> GroupElement {
        let inv = self
            .mat
            .clone()
            .try_inverse()
            .expect("group element must be invertible");
        GroupElement { alg: self.alg.clone(), mat: inv }
    }

    /// Adjoint action `Ad_g x = unhat(g⁻¹ hat(x) g)` (derivative of the inner
    /// automorphism `h ↦ g⁻¹ h g`, a right representation).
    pub fn adjoint(&self, x: &AlgebraVector) -> AlgebraVector {
        let ginv = self.inverse();
        let m = &ginv.mat * self.alg.hat(&x.comps) * &self.mat;
        AlgebraVector { alg: self.alg.clone(), comps: self.alg.unhat(&m) }
    }

    /// Matrix of `Ad_g` on coordinates (columns are `Ad_g e_j`).
    pub fn adjoint_matrix(&self) -> DMatrix<f64> {
        let dim = self.alg.dim();
        let ginv = self.inverse();
        let mut m = DMatrix::<f64>::zeros(dim, dim);
        for j in 0..dim {
            let mut e = DVector::zeros(dim);
            e[j] = 1.0;
            let col = self.alg.unhat(&(&ginv.mat * self.alg.hat(&e) * &self.mat));
            m.set_column(j, &col);
        }
        m
    }

    /// Coadjoint action defined by `⟨Ad*_g μ, x⟩ = ⟨μ, Ad_{g⁻¹} x⟩`.
    pub fn coadjoint(&self, mu: &DualVector) -> DualVector {
        let adj_inv = self.inverse().adjoint_matrix();
        DualVector { alg: self.alg.clone(), comps: adj_inv.transpose() * &mu.comps }
    }

    /// Right-trivialized tangent `T_e R_g x = hat(x) · g`, as a raw matrix.
    pub fn right_translate(&self, x: &AlgebraVector) -> DMatrix<f64> {
        self.alg.hat(&x.comps) * &self.mat
    }

    pub fn norm(&self) -> f64 {
        self.mat.norm()
    }

    pub fn is_finite(&self) -> bool {
        self.mat.iter().all(|v| v.is_finite())
    }
}
