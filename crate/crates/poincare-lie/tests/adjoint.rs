//! Oracle tests for the adjoint/coadjoint calculus.
//!
//! The oracle computes conjugation directly on matrices with a test-local
//! Taylor exponential and coordinate reads, then checks the crate's `Ad`,
//! `Ad*`, their composition laws, and the derivative relation between the
//! group-level coadjoint action and `ad*`.

use nalgebra::{DMatrix, DVector};
use poincare_lie::{algebras, Algebra, AlgebraVector, DualVector, GroupElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0xAD_5EED;

/// Plain Taylor-series exponential; adequate for the small generators used
/// here and entirely independent of the crate's `exp`.
fn taylor_exp(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    let mut sum = DMatrix::<f64>::identity(n, n);
    let mut term = DMatrix::<f64>::identity(n, n);
    for k in 1..40 {
        term = &term * m / (k as f64);
        sum += &term;
    }
    sum
}

fn random_vec(rng: &mut ChaCha8Rng, dim: usize) -> DVector<f64> {
    DVector::from_fn(dim, |_, _| rng.gen_range(-0.8..0.8))
}

fn random_group(rng: &mut ChaCha8Rng, alg: &Algebra) -> GroupElement {
    let a = AlgebraVector { alg: alg.clone(), comps: random_vec(rng, alg.dim()) };
    let b = AlgebraVector { alg: alg.clone(), comps: random_vec(rng, alg.dim()) };
    GroupElement::exp(&a).mul(&GroupElement::exp(&b))
}

/// `Ad_g x` computed by the oracle: `g⁻¹ hat(x) g`, coordinates recovered by
/// least squares against the basis (solved with normal equations here).
fn oracle_adjoint(alg: &Algebra, g: &DMatrix<f64>, x: &DVector<f64>) -> DVector<f64> {
    let basis = alg.basis().expect("catalog algebras have bases");
    let hat: DMatrix<f64> = basis
        .iter()
        .zip(x.iter())
        .fold(DMatrix::zeros(g.nrows(), g.ncols()), |acc, (b, c)| acc + b * *c);
    let conj = g.clone().try_inverse().unwrap() * hat * g;
    // Normal equations over the flattened basis.
    let dim = alg.dim();
    let mut gram = DMatrix::<f64>::zeros(dim, dim);
    let mut rhs = DVector::<f64>::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            gram[(i, j)] = basis[i].dot(&basis[j]);
        }
        rhs[i] = basis[i].dot(&conj);
    }
    gram.lu().solve(&rhs).expect("basis Gram matrix is invertible")
}

#[test]
fn adjoint_matches_conjugation_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for alg in [algebras::so3(), algebras::se2(), algebras::sl2(), algebras::h3()] {
        for _ in 0..10 {
            let g = random_group(&mut rng, &alg);
            let x = AlgebraVector { alg: alg.clone(), comps: random_vec(&mut rng, alg.dim()) };
            let ours = g.adjoint(&x);
            let oracle = oracle_adjoint(&alg, &g.mat, &x.comps);
            assert!(
                (ours.comps.clone() - oracle).norm() < 1e-10,
                "{}: Ad disagrees with conjugation",
                alg.name()
            );
        }
    }
}

#[test]
fn adjoint_is_a_right_representation() {
    // Ad_{hg} = Ad_g ∘ Ad_h, the fingerprint of the inner automorphism
    // h ↦ g⁻¹ h g.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for alg in [algebras::so3(), algebras::sl2()] {
        for _ in 0..10 {
            let a = random_group(&mut rng, &alg);
            let b = random_group(&mut rng, &alg);
            let x = AlgebraVector { alg: alg.clone(), comps: random_vec(&mut rng, alg.dim()) };
            let lhs = b.mul(&a).adjoint(&x);
            let rhs = a.adjoint(&b.adjoint(&x));
            assert!((lhs.comps - rhs.comps).norm() < 1e-10, "{}", alg.name());
        }
    }
}

#[test]
fn coadjoint_is_dual_to_adjoint() {
    // ⟨Ad*_g μ, x⟩ = ⟨μ, Ad_{g⁻¹} x⟩, checked against the conjugation oracle.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for alg in [algebras::so3(), algebras::se2(), algebras::sl2()] {
        for _ in 0..10 {
            let g = random_group(&mut rng, &alg);
            let mu = DualVector { alg: alg.clone(), comps: random_vec(&mut rng, alg.dim()) };
            let x = AlgebraVector { alg: alg.clone(), comps: random_vec(&mut rng, alg.dim()) };
            let lhs = g.coadjoint(&mu).pairing(&x);
            let ginv = g.mat.clone().try_inverse().unwrap();
            let rhs = mu.comps.dot(&oracle_adjoint(&alg, &ginv, &x.comps));
            assert!((lhs - rhs).abs() < 1e-10, "{}", alg.name());
        }
    }
}

#[test]
fn coadjoint_composes_like_adjoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let alg = algebras::so3();
    for _ in 0..10 {
        let a = random_group(&mut rng, &alg);
        let b = random_group(&mut rng, &alg);
        let mu = DualVector { alg: alg.clone(), comps: random_vec(&mut rng, alg.dim()) };
        let lhs = b.mul(&a).coadjoint(&mu);
        let rhs = a.coadjoint(&b.coadjoint(&mu));
        assert!((lhs.comps - rhs.comps).norm() < 1e-10);
    }
}

#[test]
fn coadjoint_derivative_is_minus_ad_star() {
    // d/dt|₀ Ad*_{exp(t ξ)} μ = -ad*_ξ μ.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    for alg in [algebras::so3(), algebras::se2(), algebras::sl2(), algebras::h3()] {
        for _ in 0..8 {
            let xi = AlgebraVector { alg: alg.clone(), comps: random_vec(&mut rng, alg.dim()) };
            let mu = DualVector { alg: alg.clone(), comps: random_vec(&mut rng, alg.dim()) };
            let h = 1e-6;
            let plus = GroupElement::exp(&(&xi * h)).coadjoint(&mu);
            let minus = GroupElement::exp(&(&xi * (-h))).coadjoint(&mu);
            let fd = &(&plus - &minus) * (1.0 / (2.0 * h));
            let expected = -&xi.ad_star(&mu);
            assert!(
                (&fd - &expected).norm() < 1e-8,
                "{}: coadjoint derivative vs -ad*",
                alg.name()
            );
        }
    }
}

#[test]
fn ad_star_pairing_identity_brute_force() {
    // ⟨ad*_ξ μ, η⟩ = ⟨μ, [ξ, η]⟩ over all basis pairs plus random vectors.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    for alg in [algebras::so3(), algebras::se2(), algebras::sl2()] {
        let dim = alg.dim();
        for i in 0..dim {
            for j in 0..dim {
                let xi = AlgebraVector::basis(&alg, i);
                let eta = AlgebraVector::basis(&alg, j);
                let mu = DualVector { alg: alg.clone(), comps: random_vec(&mut rng, dim) };
                let lhs = xi.ad_star(&mu).pairing(&eta);
                let rhs = mu.pairing(&xi.bracket(&eta));
                assert!((lhs - rhs).abs() < 1e-13, "{} ({i},{j})", alg.name());
            }
        }
    }
}

#[test]
fn adjoint_preserves_the_bracket() {
    // Ad_g [x, y] = [Ad_g x, Ad_g y].
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    for alg in [algebras::so3(), algebras::sl2()] {
        for _ in 0..10 {
            let g = random_group(&mut rng, &alg);
            let x = AlgebraVector { alg: alg.clone(), comps: random_vec(&mut rng, alg.dim()) };
            let y = AlgebraVector { alg: alg.clone(), comps: random_vec(&mut rng, alg.dim()) };
            let lhs = g.adjoint(&x.bracket(&y));
            let rhs = g.adjoint(&x).bracket(&g.adjoint(&y));
            assert!((lhs.comps - rhs.comps).norm() < 1e-10, "{}", alg.name());
        }
    }
}

#[test]
fn taylor_exp_agrees_with_crate_exp() {
    // Sanity tie between the two exponentials used across this file.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let alg = algebras::so3();
    for _ in 0..5 {
        let xi = AlgebraVector { alg: alg.clone(), comps: random_vec(&mut rng, 3) };
        let ours = GroupElement::exp(&xi);
        let oracle = taylor_exp(&alg.hat(&xi.comps));
        assert!((ours.mat - oracle).norm() < 1e-12);
    }
}
