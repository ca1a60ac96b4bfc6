//! Right-invariant vector fields on the trivialized spaces.
//!
//! The field generated by `A` evaluates at `p` to the velocity of
//! `t ↦ mul(path_A(t), p)` at `t = 0`, where `path_A` is any curve through
//! the identity with initial velocity `A`.  Group slots receive the raw
//! matrix `hat(a)·g`; vector slots pick up `-ad` transport terms and
//! covector slots `+ad*` transport terms, plus one twist on the four-slot
//! spaces.

use nalgebra::DMatrix;
use poincare_lie::{Algebra, AlgebraVector, DualVector, GroupElement};

use crate::point::{BundlePoint, SlotValue};
use crate::space::{GenSlot, Generator, SlotKind, SpaceId};

/// One slot of a tangent value: a raw matrix over the group slot, vectors
/// and covectors over the fiber slots.
#[derive(Debug, Clone)]
pub enum ValueSlot {
    Matrix(DMatrix<f64>),
    Vector(AlgebraVector),
    Covector(DualVector),
}

/// A tangent vector to a trivialized space, stored slotwise in coordinates.
#[derive(Debug, Clone)]
pub struct TangentVector {
    space: SpaceId,
    slots: Vec<ValueSlot>,
}

impl TangentVector {
    pub fn new(space: SpaceId, slots: Vec<ValueSlot>) -> Self {
        assert_eq!(slots.len(), space.slot_count(), "tangent slot count for {space}");
        for (i, (slot, sig)) in slots.iter().zip(space.slots()).enumerate() {
            let ok = matches!(
                (slot, sig.kind),
                (ValueSlot::Matrix(_), SlotKind::Group)
                    | (ValueSlot::Vector(_), SlotKind::Vector)
                    | (ValueSlot::Covector(_), SlotKind::Covector)
            );
            assert!(ok, "tangent slot {i} of {space} has the wrong kind");
        }
        TangentVector { space, slots }
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn slots(&self) -> &[ValueSlot] {
        &self.slots
    }

    pub fn mat(&self, i: usize) -> &DMatrix<f64> {
        match &self.slots[i] {
            ValueSlot::Matrix(m) => m,
            _ => panic!("tangent slot {i} of {} is not a matrix", self.space),
        }
    }

    pub fn vec(&self, i: usize) -> &AlgebraVector {
        match &self.slots[i] {
            ValueSlot::Vector(x) => x,
            _ => panic!("tangent slot {i} of {} is not a vector", self.space),
        }
    }

    pub fn cov(&self, i: usize) -> &DualVector {
        match &self.slots[i] {
            ValueSlot::Covector(m) => m,
            _ => panic!("tangent slot {i} of {} is not a covector", self.space),
        }
    }

    /// Coordinates in the same layout as [`BundlePoint::flat`].
    pub fn flat(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for slot in &self.slots {
            match slot {
                ValueSlot::Matrix(m) => {
                    for r in 0..m.nrows() {
                        for c in 0..m.ncols() {
                            out.push(m[(r, c)]);
                        }
                    }
                }
                ValueSlot::Vector(x) => out.extend(x.comps.iter()),
                ValueSlot::Covector(m) => out.extend(m.comps.iter()),
            }
        }
        out
    }

    /// Rebuild from flat coordinates (inverse of [`TangentVector::flat`]).
    pub fn from_flat(space: SpaceId, alg: &Algebra, flat: &[f64]) -> Self {
        let n = alg.matrix_size();
        let dim = alg.dim();
        let mut at = 0usize;
        let mut slots = Vec::with_capacity(space.slot_count());
        for sig in space.slots() {
            match sig.kind {
                SlotKind::Group => {
                    let m = DMatrix::from_row_slice(n, n, &flat[at..at + n * n]);
                    at += n * n;
                    slots.push(ValueSlot::Matrix(m));
                }
                SlotKind::Vector => {
                    slots.push(ValueSlot::Vector(AlgebraVector::from_slice(
                        alg,
                        &flat[at..at + dim],
                    )));
                    at += dim;
                }
                SlotKind::Covector => {
                    slots.push(ValueSlot::Covector(DualVector::from_slice(
                        alg,
                        &flat[at..at + dim],
                    )));
                    at += dim;
                }
            }
        }
        assert_eq!(at, flat.len(), "flat tangent length for {space}");
        TangentVector { space, slots }
    }

    pub fn distance(&self, other: &TangentVector) -> f64 {
        assert_eq!(self.space, other.space, "tangent space mismatch");
        self.flat()
            .iter()
            .zip(other.flat())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn norm(&self) -> f64 {
        self.flat().iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Value at `p` of the right-invariant field generated by `gen`.
pub fn right_invariant_field(gen: &Generator, p: &BundlePoint) -> TangentVector {
    assert_eq!(gen.space(), p.space(), "field/point space mismatch");
    let space = p.space();
    let g = p.group();
    let a1 = gen.vec(0);
    let vg = ValueSlot::Matrix(g.right_translate(a1));
    match space {
        SpaceId::Group => TangentVector::new(space, vec![vg]),
        SpaceId::TG => {
            let v = gen.vec(1) - &a1.bracket(p.vec(1));
            TangentVector::new(space, vec![vg, ValueSlot::Vector(v)])
        }
        SpaceId::TstarG => {
            let v = gen.cov(1) + &a1.ad_star(p.cov(1));
            TangentVector::new(space, vec![vg, ValueSlot::Covector(v)])
        }
        SpaceId::T2G => {
            let v1 = gen.vec(1) - &a1.bracket(p.vec(1));
            let v2 = gen.vec(2) - &a1.bracket(p.vec(2));
            TangentVector::new(space, vec![vg, ValueSlot::Vector(v1), ValueSlot::Vector(v2)])
        }
        SpaceId::TTG => {
            let (a2, a3, a4) = (gen.vec(1), gen.vec(2), gen.vec(3));
            let (z1, z2, z3) = (p.vec(1), p.vec(2), p.vec(3));
            let v1 = a2 - &a1.bracket(z1);
            let v2 = a3 - &a1.bracket(z2);
            let v3 = &(a4 - &a1.bracket(z3)) + &z2.bracket(a2);
            TangentVector::new(
                space,
                vec![
                    vg,
                    ValueSlot::Vector(v1),
                    ValueSlot::Vector(v2),
                    ValueSlot::Vector(v3),
                ],
            )
        }
        SpaceId::TstarTG => {
            let (zeta, l1, l2) = (gen.vec(1), gen.cov(2), gen.cov(3));
            let (xi, mu, nu) = (p.vec(1), p.cov(2), p.cov(3));
            let v_xi = zeta + &xi.bracket(a1);
            let v_mu = &(l1 + &a1.ad_star(mu)) + &zeta.ad_star(nu);
            let v_nu = l2 + &a1.ad_star(nu);
            TangentVector::new(
                space,
                vec![
                    vg,
                    ValueSlot::Vector(v_xi),
                    ValueSlot::Covector(v_mu),
                    ValueSlot::Covector(v_nu),
                ],
            )
        }
        SpaceId::TstarTstarG => {
            let (l1, l2, zeta) = (gen.cov(1), gen.cov(2), gen.vec(3));
            let (mu, nu, xi) = (p.cov(1), p.cov(2), p.vec(3));
            let v_mu = l1 + &a1.ad_star(mu);
            let v_nu = &(l2 + &a1.ad_star(nu)) - &xi.ad_star(l1);
            let v_xi = zeta + &xi.bracket(a1);
            TangentVector::new(
                space,
                vec![
                    vg,
                    ValueSlot::Covector(v_mu),
                    ValueSlot::Covector(v_nu),
                    ValueSlot::Vector(v_xi),
                ],
            )
        }
        SpaceId::TTstarG => {
            let (n2, x3, n3) = (gen.cov(1), gen.vec(2), gen.cov(3));
            let (mu, xi, nu) = (p.cov(1), p.vec(2), p.cov(3));
            let v_mu = n2 + &a1.ad_star(mu);
            let v_xi = x3 + &xi.bracket(a1);
            let v_nu = &(n3 + &a1.ad_star(nu)) - &xi.ad_star(n2);
            TangentVector::new(
                space,
                vec![
                    vg,
                    ValueSlot::Covector(v_mu),
                    ValueSlot::Vector(v_xi),
                    ValueSlot::Covector(v_nu),
                ],
            )
        }
    }
}

/// Invert [`right_invariant_field`] at `p`: read the generator whose field
/// value at `p` equals `value`.  The inversion is slotwise triangular, so it
/// is exact up to the `unhat` of the group slot.
pub fn generator_from_value(p: &BundlePoint, value: &TangentVector) -> Generator {
    assert_eq!(p.space(), value.space(), "point/value space mismatch");
    let space = p.space();
    let g = p.group();
    let alg = p.alg();
    let ginv = g.inverse();
    let a1 = AlgebraVector {
        alg: alg.clone(),
        comps: alg.unhat(&(value.mat(0) * &ginv.mat)),
    };
    match space {
        SpaceId::Group => Generator::new(space, vec![GenSlot::Vector(a1)]).unwrap(),
        SpaceId::TG => {
            let b = value.vec(1) + &a1.bracket(p.vec(1));
            Generator::new(space, vec![GenSlot::Vector(a1), GenSlot::Vector(b)]).unwrap()
        }
        SpaceId::TstarG => {
            let b = value.cov(1) - &a1.ad_star(p.cov(1));
            Generator::new(space, vec![GenSlot::Vector(a1), GenSlot::Covector(b)]).unwrap()
        }
        SpaceId::T2G => {
            let b1 = value.vec(1) + &a1.bracket(p.vec(1));
            let b2 = value.vec(2) + &a1.bracket(p.vec(2));
            Generator::new(
                space,
                vec![GenSlot::Vector(a1), GenSlot::Vector(b1), GenSlot::Vector(b2)],
            )
            .unwrap()
        }
        SpaceId::TTG => {
            let (z1, z2, z3) = (p.vec(1), p.vec(2), p.vec(3));
            let a2 = value.vec(1) + &a1.bracket(z1);
            let a3 = value.vec(2) + &a1.bracket(z2);
            let a4 = &(value.vec(3) + &a1.bracket(z3)) - &z2.bracket(&a2);
            Generator::new(
                space,
                vec![
                    GenSlot::Vector(a1),
                    GenSlot::Vector(a2),
                    GenSlot::Vector(a3),
                    GenSlot::Vector(a4),
                ],
            )
            .unwrap()
        }
        SpaceId::TstarTG => {
            let (xi, mu, nu) = (p.vec(1), p.cov(2), p.cov(3));
            let zeta = value.vec(1) - &xi.bracket(&a1);
            let l2 = value.cov(3) - &a1.ad_star(nu);
            let l1 = &(value.cov(2) - &a1.ad_star(mu)) - &zeta.ad_star(nu);
            Generator::new(
                space,
                vec![
                    GenSlot::Vector(a1),
                    GenSlot::Vector(zeta),
                    GenSlot::Covector(l1),
                    GenSlot::Covector(l2),
                ],
            )
            .unwrap()
        }
        SpaceId::TstarTstarG => {
            let (mu, nu, xi) = (p.cov(1), p.cov(2), p.vec(3));
            let l1 = value.cov(1) - &a1.ad_star(mu);
            let l2 = &(value.cov(2) - &a1.ad_star(nu)) + &xi.ad_star(&l1);
            let zeta = value.vec(3) - &xi.bracket(&a1);
            Generator::new(
                space,
                vec![
                    GenSlot::Vector(a1),
                    GenSlot::Covector(l1),
                    GenSlot::Covector(l2),
                    GenSlot::Vector(zeta),
                ],
            )
            .unwrap()
        }
        SpaceId::TTstarG => {
            let (mu, xi, nu) = (p.cov(1), p.vec(2), p.cov(3));
            let n2 = value.cov(1) - &a1.ad_star(mu);
            let x3 = value.vec(2) - &xi.bracket(&a1);
            let n3 = &(value.cov(3) - &a1.ad_star(nu)) + &xi.ad_star(&n2);
            Generator::new(
                space,
                vec![
                    GenSlot::Vector(a1),
                    GenSlot::Covector(n2),
                    GenSlot::Vector(x3),
                    GenSlot::Covector(n3),
                ],
            )
            .unwrap()
        }
    }
}

/// A curve through the identity with initial velocity `gen`: the group slot
/// moves along `exp(t·hat(a))`, fiber slots move linearly.  Only the first
/// derivative at `t = 0` is meaningful.
pub fn first_order_path(gen: &Generator, t: f64) -> BundlePoint {
    let space = gen.space();
    let mut slots = Vec::with_capacity(space.slot_count());
    slots.push(SlotValue::Group(GroupElement::exp(&(gen.vec(0) * t))));
    for (i, sig) in space.slots().iter().enumerate().skip(1) {
        match sig.kind {
            SlotKind::Vector => slots.push(SlotValue::Vector(gen.vec(i) * t)),
            SlotKind::Covector => slots.push(SlotValue::Covector(gen.cov(i) * t)),
            SlotKind::Group => unreachable!(),
        }
    }
    BundlePoint::new(space, slots).expect("path point is well-formed")
}
