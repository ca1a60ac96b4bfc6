//! Fiberwise-quadratic Lagrangians with exact fiber-derivative inverses.

use nalgebra::{DMatrix, DVector};
use poincare_bundles::{BundlePoint, SlotKind, SpaceId};

use crate::error::DynError;
use crate::family::space_velocity_slots;
use crate::field::ScalarField;
use crate::legendre::LegendreMap;

/// `L = ½ Σᵢ ⟨Mᵢ vᵢ, vᵢ⟩ − V(base)`, with one symmetric positive-definite
/// kinetic matrix per velocity slot of the space and an optional potential
/// depending on the remaining slots.
#[derive(Debug, Clone)]
pub struct QuadraticLagrangian {
    space: SpaceId,
    mass: Vec<DMatrix<f64>>,
    potential: Option<ScalarField>,
}

impl QuadraticLagrangian {
    /// Build and check the kinetic matrices (symmetry and positive
    /// definiteness via Cholesky).
    pub fn new(
        space: SpaceId,
        mass: Vec<DMatrix<f64>>,
        potential: Option<ScalarField>,
    ) -> Result<Self, DynError> {
        let slots = space_velocity_slots(space);
        assert_eq!(
            mass.len(),
            slots.len(),
            "{space} has {} velocity slots, got {} kinetic matrices",
            slots.len(),
            mass.len()
        );
        if let Some(v) = &potential {
            assert_eq!(v.space(), space, "potential must live on {space}");
        }
        for (i, m) in mass.iter().enumerate() {
            let symmetric = (m - m.transpose()).amax() < 1e-12 * (1.0 + m.amax());
            if !symmetric || m.clone().cholesky().is_none() {
                return Err(DynError::MassNotSpd { slot: slots[i] });
            }
        }
        Ok(QuadraticLagrangian {
            space,
            mass,
            potential,
        })
    }

    /// Isotropic kinetic energy `½ Σ ‖vᵢ‖²` on every velocity slot.
    pub fn isotropic(space: SpaceId, dim: usize) -> Self {
        let mass = space_velocity_slots(space)
            .iter()
            .map(|_| DMatrix::identity(dim, dim))
            .collect();
        QuadraticLagrangian::new(space, mass, None).expect("identity matrices are SPD")
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn mass(&self) -> &[DMatrix<f64>] {
        &self.mass
    }

    /// The Lagrangian as a scalar field with analytic slot gradients.
    pub fn field(&self) -> ScalarField {
        let space = self.space;
        let slots: Vec<usize> = space_velocity_slots(space).to_vec();
        let mass = self.mass.clone();
        let potential = self.potential.clone();
        let name = match &potential {
            Some(v) => format!("quadratic-{}", v.name()),
            None => "quadratic".to_string(),
        };

        let eval = {
            let slots = slots.clone();
            let mass = mass.clone();
            let potential = potential.clone();
            move |p: &BundlePoint| {
                let mut l = 0.0;
                for (m, &slot) in mass.iter().zip(&slots) {
                    let v = slot_comps(p, slot);
                    l += 0.5 * (m * v).dot(v);
                }
                if let Some(pot) = &potential {
                    l -= pot.eval(p);
                }
                l
            }
        };

        let grad = move |p: &BundlePoint| {
            let dim = p.alg().dim();
            let mut out: Vec<DVector<f64>> = match &potential {
                Some(pot) => pot.partials(p).into_iter().map(|d| -d).collect(),
                None => (0..p.slots().len()).map(|_| DVector::zeros(dim)).collect(),
            };
            for (m, &slot) in mass.iter().zip(&slots) {
                out[slot] += m * slot_comps(p, slot);
            }
            out
        };

        ScalarField::new(name, space, eval).with_partials(grad)
    }

    /// The exact fiber-derivative inverse `vᵢ = Mᵢ⁻¹ πᵢ`.
    pub fn legendre(&self) -> LegendreMap {
        let inverses = self
            .mass
            .iter()
            .map(|m| {
                m.clone()
                    .try_inverse()
                    .expect("SPD matrices are invertible")
            })
            .collect();
        LegendreMap::Quadratic {
            space: self.space,
            inverses,
        }
    }
}

/// Components of a fiber slot, whichever side of the pairing it lives on.
pub(crate) fn slot_comps(p: &BundlePoint, slot: usize) -> &DVector<f64> {
    match p.space().slots()[slot].kind {
        SlotKind::Vector => &p.vec(slot).comps,
        SlotKind::Covector => &p.cov(slot).comps,
        SlotKind::Group => unreachable!("velocity slots are fiber slots"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use poincare_lie::algebras::so3;
    use rand::SeedableRng;

    /// The analytic gradient of the quadratic field passes the FD check.
    #[test]
    fn quadratic_partials_validate() {
        let alg = so3();
        let mass = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0, 3.0]));
        let lag = QuadraticLagrangian::new(SpaceId::TTG, vec![mass.clone(), mass], None).unwrap();
        let field = lag.field();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0_4AD);
        field.validate_partials(&alg, &mut rng, 20, 1e-5).unwrap();
    }

    /// Non-SPD kinetic matrices are rejected.
    #[test]
    fn indefinite_mass_is_rejected() {
        let mass = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, -2.0, 3.0]));
        assert!(matches!(
            QuadraticLagrangian::new(SpaceId::TG, vec![mass], None),
            Err(DynError::MassNotSpd { slot: 1 })
        ));
    }
}
