//! Duals, smash products, truncated symmetric algebras, and the double of
//! the first Frobenius kernel of the additive group.

use algebra_core::{radical, to_sparse, Algebra, ModuleRep};
use gf_core::{Field, Matrix};
use hopf_core::{
    check_hopf, drinfeld_double, dual_hopf, hopf_smash, hopf_structures_equal,
    inclusions_are_hopf_maps, trivial_action, truncated_symmetric, HopfAlgebra, HopfRef,
    ModuleAlgebraAction,
};

/// O(G_a(1)) = k[x]/(x^p), x primitive.
fn coordinate_ring_ga1(p: u16) -> HopfRef {
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
    let algebra = Algebra::build(
        f.clone(),
        (0..dim).map(|i| format!("x{i}")).collect(),
        mult,
        unit,
        Some(eps.clone()),
    )
    .unwrap();
    // binomial comultiplication
    let mut binom = vec![vec![0u16; dim + 1]; dim + 1];
    for n in 0..=dim {
        binom[n][0] = 1;
        for k in 1..=n {
            let a = binom[n - 1][k - 1];
            let b = if k <= n - 1 { binom[n - 1][k] } else { 0 };
            binom[n][k] = f.add(a, b);
        }
    }
    let comult = (0..dim)
        .map(|n| {
            (0..=n)
                .filter(|&k| binom[n][k] != 0)
                .map(|k| (k as u32, (n - k) as u32, binom[n][k]))
                .collect()
        })
        .collect();
    let mut antipode = Matrix::zeros(f.clone(), dim, dim);
    for n in 0..dim {
        let sign = if n % 2 == 0 { 1 } else { f.neg(1) };
        antipode.set(n, n, sign);
    }
    HopfAlgebra::new(algebra, comult, eps, antipode).unwrap()
}

#[test]
fn dual_of_ga1_coordinate_ring_is_divided_powers() {
    let og = coordinate_ring_ga1(3);
    let kg = dual_hopf(&og).unwrap();
    assert_eq!(kg.dim(), 3);
    // u = dual of x is primitive with u^3 = 0; u^2 = 2 (x^2)^* under
    // divided-power multiplication
    let prim = kg.primitives();
    assert_eq!(prim.rows(), 1);
    assert_eq!(prim.row(0), &[0, 1, 0]);
    let u = kg.algebra.basis_vector(1);
    let u2 = kg.algebra.multiply(&u, &u);
    assert_eq!(u2, vec![0, 0, 2]);
    let u3 = kg.algebra.multiply(&u2, &u);
    assert!(u3.iter().all(|&c| c == 0));
    // counit of the dual is evaluation at the unit
    assert_eq!(kg.counit, og.algebra.unit().to_vec());
}

#[test]
fn double_dual_is_the_identity() {
    for p in [2u16, 3, 5] {
        let og = coordinate_ring_ga1(p);
        let kg = dual_hopf(&og).unwrap();
        let back = dual_hopf(&kg).unwrap();
        assert!(hopf_structures_equal(&og, &back));
    }
}

#[test]
fn trivial_smash_is_componentwise() {
    let og = coordinate_ring_ga1(3);
    let kg = dual_hopf(&og).unwrap();
    let act = ModuleAlgebraAction::new(kg.clone(), og.algebra.clone(), trivial_action(&kg, &og.algebra))
        .unwrap();
    let smash = hopf_core::smash_product(&act).unwrap();
    assert_eq!(smash.dim(), 9);
    assert!(smash.is_commutative());
    // componentwise product: (x#1)(x#u) = x^2 # u
    let mut xe = vec![0u16; 9];
    xe[1 * 3] = 1; // x # 1
    let mut xu = vec![0u16; 9];
    xu[1 * 3 + 1] = 1; // x # u
    let prod = smash.multiply(&xe, &xu);
    let mut expect = vec![0u16; 9];
    expect[2 * 3 + 1] = 1; // x^2 # u
    assert_eq!(prod, expect);
}

#[test]
fn drinfeld_double_of_ga1() {
    for p in [2u16, 3, 5] {
        let og = coordinate_ring_ga1(p);
        let kg = dual_hopf(&og).unwrap();
        // abelian group: adjoint action is trivial
        let adjoint = hopf_core::conjugation_action(&og);
        for (m, e) in adjoint.iter().zip(&kg.counit) {
            let expect = Matrix::identity(og.algebra.field().clone(), og.dim()).scale(*e);
            assert_eq!(m, &expect, "adjoint action of an abelian group is trivial");
        }
        let act = ModuleAlgebraAction::new(kg.clone(), og.algebra.clone(), adjoint).unwrap();
        let d = drinfeld_double(&og, &kg, &act).unwrap();
        assert_eq!(d.dim(), (p * p) as usize);
        assert!(d.algebra.is_commutative());
        assert!(d.is_cocommutative().is_ok());
        assert!(check_hopf(&d).all_pass());
        assert!(inclusions_are_hopf_maps(&d, &og, &kg));
        // the double of a unipotent group is local
        let rad = radical(&d.algebra).unwrap();
        assert!(rad.is_local);
    }
}

#[test]
fn truncated_symmetric_dimensions_and_bosonization() {
    // S_1(k xi) # kG_a(1): Hopf of dim p^2, cocommutative
    let p = 3u16;
    let og = coordinate_ring_ga1(p);
    let kg = dual_hopf(&og).unwrap();
    // one-dimensional trivial kG-module
    let f = og.algebra.field().clone();
    let v_action: Vec<Matrix> = kg
        .counit
        .iter()
        .map(|&e| Matrix::identity(f.clone(), 1).scale(e))
        .collect();
    let ts = truncated_symmetric(&kg, &v_action, 1).unwrap();
    assert_eq!(ts.hopf.dim(), p as usize);
    assert!(check_hopf(&ts.hopf).all_pass());
    let sigma = hopf_smash(&ts.action, &ts.hopf, &kg).unwrap();
    assert_eq!(sigma.dim(), (p * p) as usize);
    assert!(sigma.is_cocommutative().is_ok());
    // dim S_r(V) = p^(r dim V)
    let v2: Vec<Matrix> = kg
        .counit
        .iter()
        .map(|&e| Matrix::identity(f.clone(), 2).scale(e))
        .collect();
    let ts2 = truncated_symmetric(&kg, &v2, 1).unwrap();
    assert_eq!(ts2.hopf.dim(), (p * p) as usize);
    let ts2r2 = truncated_symmetric(&kg, &v_action, 2).unwrap();
    assert_eq!(ts2r2.hopf.dim(), (p * p) as usize);
}

#[test]
fn tensor_of_modules_via_double() {
    // over D(G_a(1)) at p = 3: k[u]/(u^3) with x acting 0, tensored against
    // its x-side analog, has dimension 9
    let og = coordinate_ring_ga1(3);
    let kg = dual_hopf(&og).unwrap();
    let act = ModuleAlgebraAction::new(
        kg.clone(),
        og.algebra.clone(),
        trivial_action(&kg, &og.algebra),
    )
    .unwrap();
    let d = drinfeld_double(&og, &kg, &act).unwrap();
    let reg = ModuleRep::regular(&d.algebra);
    let k = ModuleRep::trivial(&d.algebra);
    let t = hopf_core::tensor_module(&d, &reg, &k);
    assert_eq!(t.dim, reg.dim);
    t.validate().unwrap();
}

#[test]
fn bosonization_of_the_trivial_module_returns_the_group_algebra() {
    let og = coordinate_ring_ga1(3);
    let kg = dual_hopf(&og).unwrap();
    let ts = truncated_symmetric(&kg, &[], 1).unwrap();
    assert_eq!(ts.hopf.dim(), 1);
    let sigma = hopf_smash(&ts.action, &ts.hopf, &kg).unwrap();
    assert_eq!(sigma.dim(), kg.dim());
    // same multiplication table as kG under the boundary identification
    for i in 0..kg.dim() {
        for j in 0..kg.dim() {
            assert_eq!(
                sigma.algebra.product_basis(i, j),
                kg.algebra.product_basis(i, j)
            );
        }
    }
}
