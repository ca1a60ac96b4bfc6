//! Coordinate vectors in an algebra and its dual.
//!
//! Both types are thin wrappers around a coordinate column and a shared
//! algebra handle. Keeping algebra and dual elements as distinct types makes
//! the variance of every slot in the iterated-bundle code explicit.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DVector;

use crate::algebra::Algebra;

/// An element of the Lie algebra, in coordinates over the chosen basis.
#[derive(Debug, Clone)]
pub struct AlgebraVector {
    pub alg: Algebra,
    pub comps: DVector<f64>,
}

/// An element of the dual space, in coordinates over the dual basis.
#[derive(Debug, Clone)]
pub struct DualVector {
    pub alg: Algebra,
    pub comps: DVector<f64>,
}

impl AlgebraVector {
    pub fn zero(alg: &Algebra) -> Self {
        Self { alg: alg.clone(), comps: DVector::zeros(alg.dim()) }
    }

    pub fn basis(alg: &Algebra, j: usize) -> Self {
        let mut comps = DVector::zeros(alg.dim());
        comps[j] = 1.0;
        Self { alg: alg.clone(), comps }
    }

    pub fn from_slice(alg: &Algebra, comps: &[f64]) -> Self {
        assert_eq!(comps.len(), alg.dim(), "component count must match algebra dim");
        Self { alg: alg.clone(), comps: DVector::from_column_slice(comps) }
    }

    /// The right bracket `[self, other]`.
    pub fn bracket(&self, other: &AlgebraVector) -> AlgebraVector {
        AlgebraVector {
            alg: self.alg.clone(),
            comps: self.alg.bracket(&self.comps, &other.comps),
        }
    }

    /// `ad*_self μ`.
    pub fn ad_star(&self, mu: &DualVector) -> DualVector {
        DualVector {
            alg: self.alg.clone(),
            comps: self.alg.ad_star(&self.comps, &mu.comps),
        }
    }

    pub fn norm(&self) -> f64 {
        self.comps.norm()
    }
}

impl DualVector {
    pub fn zero(alg: &Algebra) -> Self {
        Self { alg: alg.clone(), comps: DVector::zeros(alg.dim()) }
    }

    pub fn basis(alg: &Algebra, j: usize) -> Self {
        let mut comps = DVector::zeros(alg.dim());
        comps[j] = 1.0;
        Self { alg: alg.clone(), comps }
    }

    pub fn from_slice(alg: &Algebra, comps: &[f64]) -> Self {
        assert_eq!(comps.len(), alg.dim(), "component count must match algebra dim");
        Self { alg: alg.clone(), comps: DVector::from_column_slice(comps) }
    }

    /// Natural pairing `⟨self, x⟩`.
    pub fn pairing(&self, x: &AlgebraVector) -> f64 {
        self.alg.pairing(&self.comps, &x.comps)
    }

    pub fn norm(&self) -> f64 {
        self.comps.norm()
    }
}

/// Natural pairing `⟨μ, x⟩` as a free function.
pub fn pairing(mu: &DualVector, x: &AlgebraVector) -> f64 {
    mu.pairing(x)
}

macro_rules! linear_ops {
    ($t:ident) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $t { alg: self.alg.clone(), comps: &self.comps + &rhs.comps }
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $t { alg: self.alg.clone(), comps: &self.comps - &rhs.comps }
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t { alg: self.alg.clone(), comps: -&self.comps }
            }
        }
        impl Mul<f64> for &$t {
            type Output = $t;
            fn mul(self, rhs: f64) -> $t {
                $t { alg: self.alg.clone(), comps: &self.comps * rhs }
            }
        }
    };
}

linear_ops!(AlgebraVector);
linear_ops!(DualVector);
