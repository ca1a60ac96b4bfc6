//! File-level loading, persistence round-trips, and the diagnostic quality of
//! load-time validation: every rejected file must name the first violated
//! identity and its indices.

use poincare_lie::json::{from_json_str, load_algebra, to_json_string};
use poincare_lie::{algebras, LieError};

#[test]
fn roundtrip_through_disk() {
    let dir = tempfile::tempdir().unwrap();
    for alg in [algebras::so3(), algebras::h3(), algebras::se2(), algebras::sl2()] {
        let path = dir.path().join(format!("{}.json", alg.name()));
        std::fs::write(&path, to_json_string(&alg)).unwrap();
        let reloaded = load_algebra(&path).unwrap();
        assert_eq!(reloaded.name(), alg.name());
        assert_eq!(reloaded.dim(), alg.dim());
        assert_eq!(reloaded.matrix_size(), alg.matrix_size());
        for (a, b) in reloaded.structure().iter().zip(alg.structure()) {
            assert!((a - b).norm() < 1e-15);
        }
    }
}

#[test]
fn missing_file_is_a_file_error() {
    let err = load_algebra("/nonexistent/algebra.json").unwrap_err();
    assert!(matches!(err, LieError::File { .. }));
}

/// so3 structure constants as plain JSON arrays; the canvas for corruption.
fn so3_json(mutate: impl Fn(&mut serde_json::Value)) -> String {
    let mut value: serde_json::Value =
        serde_json::from_str(&to_json_string(&algebras::so3())).unwrap();
    mutate(&mut value);
    value.to_string()
}

#[test]
fn antisymmetry_violation_names_indices() {
    let text = so3_json(|v| {
        // C[2][0][1] = -1 stays, C[2][1][0] = 1 → bump the first to break the pair.
        v["structure"][2][0][1] = serde_json::json!(-1.0 + 1e-6);
    });
    let err = from_json_str(&text).unwrap_err();
    match err {
        LieError::Antisymmetry { k, i, j, residual } => {
            assert_eq!(k, 2);
            assert_eq!((i, j).max((j, i)), (1, 0));
            assert!(residual > 9e-7);
        }
        other => panic!("expected antisymmetry error, got {other}"),
    }
}

#[test]
fn jacobi_violation_names_triple() {
    // Fully antisymmetric but non-Jacobi: [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=0
    // leaves a residual of e3 in the cyclic sum.
    let text = r#"{
        "name": "nonjacobi", "dim": 3, "matrix_size": 3,
        "structure": [
            [[0,0,1],[0,0,0],[-1,0,0]],
            [[0,0,0],[0,0,0],[0,0,0]],
            [[0,1,0],[-1,0,0],[0,0,0]]
        ]
    }"#;
    let err = from_json_str(text).unwrap_err();
    match err {
        LieError::Jacobi { i, j, k, residual } => {
            assert_eq!((i, j, k), (0, 1, 2));
            assert!(residual > 0.1);
        }
        other => panic!("expected Jacobi error, got {other}"),
    }
    // The message itself must carry the indices.
    let msg = from_json_str(text).unwrap_err().to_string();
    assert!(msg.contains("(0,1,2)"), "{msg}");
}

#[test]
fn incompatible_basis_is_rejected() {
    // Scaling the basis by 2 scales commutators by 4 but hat([.,.]) by 2.
    let text = so3_json(|v| {
        let basis = v["basis"].as_array_mut().unwrap();
        for mat in basis {
            for row in mat.as_array_mut().unwrap() {
                for entry in row.as_array_mut().unwrap() {
                    let x = entry.as_f64().unwrap();
                    *entry = serde_json::json!(2.0 * x);
                }
            }
        }
    });
    let err = from_json_str(&text).unwrap_err();
    assert!(matches!(err, LieError::BasisCompatibility { .. }), "{err}");
}

#[test]
fn dependent_basis_is_rejected() {
    let text = so3_json(|v| {
        let b0 = v["basis"][0].clone();
        v["basis"][1] = b0; // duplicate basis matrix
    });
    let err = from_json_str(&text).unwrap_err();
    // Reported as rank deficiency or as incompatibility at the duplicated
    // pair, whichever the validation stack reaches first.
    assert!(
        matches!(err, LieError::BasisRank { .. } | LieError::BasisCompatibility { .. }),
        "{err}"
    );
}

#[test]
fn structureless_basis_json_loads_without_basis() {
    // Dropping the basis is allowed: algebra-level ops stay available.
    let text = so3_json(|v| {
        v.as_object_mut().unwrap().remove("basis");
    });
    let alg = from_json_str(&text).unwrap();
    assert!(!alg.has_basis());
    let err = alg.try_unhat(&nalgebra::DMatrix::zeros(3, 3)).unwrap_err();
    assert!(matches!(err, LieError::MissingBasis { .. }));
}
