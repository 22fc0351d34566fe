//! Structure-constant validation, PIM, and projectivity behavior on small
//! hand-built algebras.

use algebra_core::{
    algebra_from_json, algebra_to_json, content_hash, is_projective, pims, radical, simple_tops,
    to_sparse, Algebra, AlgebraError, AlgebraRef, ModuleRep,
};
use gf_core::Field;

fn truncated(p: u16) -> AlgebraRef {
    let f = Field::new(p, 1).unwrap();
    let dim = p as usize;
    let mut mult = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let mut row = vec![0u16; dim];
            if i + j < dim {
                row[i + j] = 1;
            }
            mult.push(to_sparse(&row));
        }
    }
    let mut unit = vec![0u16; dim];
    unit[0] = 1;
    let mut eps = vec![0u16; dim];
    eps[0] = 1;
    Algebra::build(
        f,
        (0..dim).map(|i| format!("t{i}")).collect(),
        mult,
        unit,
        Some(eps),
    )
    .unwrap()
}

fn matrix_algebra_2x2() -> AlgebraRef {
    let f = Field::new(3, 1).unwrap();
    let idx = |i: usize, j: usize| i * 2 + j;
    let mut mult = vec![vec![0u16; 4]; 16];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    if j == k {
                        mult[idx(i, j) * 4 + idx(k, l)][idx(i, l)] = 1;
                    }
                }
            }
        }
    }
    Algebra::build(
        f,
        vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()],
        mult.iter().map(|r| to_sparse(r)).collect(),
        vec![1, 0, 0, 1],
        None,
    )
    .unwrap()
}

#[test]
fn truncated_polynomial_algebra_is_local() {
    let a = truncated(3);
    assert_eq!(a.dim(), 3);
    let r = radical(&a).unwrap();
    assert!(r.is_local);
}

#[test]
fn corrupted_structure_constants_fail_associativity() {
    // alter one entry of the k[t]/(t^3) table: t^2 * t = 1 while t * t^2 = 0,
    // so (t t) t != t (t t^2)
    let f = Field::new(3, 1).unwrap();
    let dim = 3;
    let mut mult = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let mut row = vec![0u16; dim];
            if i + j < dim {
                row[i + j] = 1;
            }
            mult.push(to_sparse(&row));
        }
    }
    mult[2 * dim + 1] = vec![(0, 1)];
    let err = Algebra::build(
        f,
        vec!["1".into(), "t".into(), "t2".into()],
        mult,
        vec![1, 0, 0],
        None,
    )
    .unwrap_err();
    assert!(matches!(err, AlgebraError::NotAssociative(_)));
}

#[test]
fn semisimple_matrix_algebra() {
    let a = matrix_algebra_2x2();
    let rad = radical(&a).unwrap();
    assert_eq!(rad.basis.rows(), 0);
    let simples = simple_tops(&a, &rad, 11).unwrap();
    assert_eq!(simples.len(), 1);
    assert_eq!(simples[0].module.dim, 2);
    assert_eq!(simples[0].multiplicity, 2);
    let p = pims(&a, &rad, 11).unwrap();
    assert_eq!(p.modules.len(), 1);
    assert_eq!(p.modules[0].dim, 2);
}

#[test]
fn pims_of_truncated_tensor_matrix_algebra() {
    // k[x]/(x^3) (x) M_2(F_3): one simple of dim 2, PIM of dim 6
    let a = Algebra::tensor_product(&truncated(3), &matrix_algebra_2x2()).unwrap();
    let rad = radical(&a).unwrap();
    assert_eq!(rad.basis.rows(), 8);
    let p = pims(&a, &rad, 13).unwrap();
    assert_eq!(p.modules.len(), 1);
    assert_eq!(p.modules[0].dim, 6);
    assert_eq!(p.simples[0].multiplicity, 2);
    // regular module is projective; the simple is not
    let reg = ModuleRep::regular(&a);
    assert!(is_projective(&a, &rad, Some(&p), &reg).unwrap());
    assert!(!is_projective(&a, &rad, Some(&p), &p.simples[0].module).unwrap());
}

#[test]
fn json_round_trip_and_content_hash() {
    let a = truncated(5);
    let j = algebra_to_json(&a);
    let s = serde_json::to_string(&j).unwrap();
    let back = algebra_from_json(&serde_json::from_str(&s).unwrap()).unwrap();
    assert_eq!(content_hash(&a), content_hash(&back));
    assert_eq!(back.dim(), 5);
}

#[test]
fn non_multiplicative_map_rejected() {
    let a = truncated(3);
    let b = truncated(3);
    let f = a.field().clone();
    // send t -> t^2: kills multiplicativity since (t^2)^2 = t^4 = 0 != image of t^2
    let mut m = gf_core::Matrix::zeros(f, 3, 3);
    m.set(0, 0, 1);
    m.set(2, 1, 1);
    m.set(2, 2, 1);
    let err = algebra_core::AlgebraMap::new(a, b, m).unwrap_err();
    assert!(matches!(err, AlgebraError::NotAlgebraMap(_, _)));
}

#[test]
fn inconsistent_system_has_no_solution() {
    let f = Field::new(3, 1).unwrap();
    let a = gf_core::Matrix::from_rows(f.clone(), vec![vec![1, 0], vec![1, 0]]);
    let b = gf_core::Matrix::col_vec(f, &[1, 2]);
    assert!(matches!(
        gf_core::solve_linear(&a, &b),
        Err(gf_core::GfError::NoSolution)
    ));
}

#[test]
fn resolution_depth_budget() {
    let a = truncated(3);
    let rad = radical(&a).unwrap();
    let p = pims(&a, &rad, 1).unwrap();
    let k = ModuleRep::trivial(&a);
    match algebra_core::minimal_resolution(&a, &rad, &p, &k, 13) {
        Err(AlgebraError::DepthBudgetExceeded(13, 12)) => {}
        Err(other) => panic!("unexpected error {other}"),
        Ok(_) => panic!("depth budget not enforced"),
    }
}

#[test]
fn radical_filtration_of_truncated_ring() {
    let a = truncated(5);
    let rad = radical(&a).unwrap();
    let reg = ModuleRep::regular(&a);
    assert_eq!(reg.radical_filtration(&rad.basis), vec![5, 4, 3, 2, 1, 0]);
}
