use hopf_core::{check_hopf, drinfeld_double};
use scheme_catalog::{build_bundle, GroupName};

#[test]
fn ga1_bundle() {
    let b = build_bundle(GroupName::Ga, 3, 1).unwrap();
    assert_eq!(b.kg.dim(), 3);
    assert_eq!(b.og.dim(), 3);
    assert_eq!(b.lie_dim(), 1);
}

#[test]
fn borel_bundle_and_double() {
    let b = build_bundle(GroupName::Borel2, 3, 1).unwrap();
    assert_eq!(b.kg.dim(), 9);
    assert_eq!(b.lie_dim(), 2);
    // nontrivial adjoint action: h acting on b-coefficient is nonzero
    let d = drinfeld_double(&b.og, &b.kg, &b.adjoint).unwrap();
    assert_eq!(d.dim(), 81);
    assert!(!d.algebra.is_commutative());
    assert!(check_hopf(&d).all_pass());
}

#[test]
fn sl2_bundle() {
    let b = build_bundle(GroupName::Sl2, 3, 1).unwrap();
    assert_eq!(b.kg.dim(), 27);
    assert_eq!(b.lie_dim(), 3);
}

#[test]
fn sigma_and_quasilog_on_borel() {
    let b = build_bundle(GroupName::Borel2, 3, 1).unwrap();
    let sigma = scheme_catalog::build_sigma(&b).unwrap();
    assert_eq!(sigma.hopf.dim(), 81);
    let a0 = scheme_catalog::quasilog_map(&b, &sigma).unwrap();
    assert!(a0.is_bijective());
    let d = scheme_catalog::build_double(&b).unwrap();
    let al = scheme_catalog::build_al_iso(&b, &sigma, &a0, &d).unwrap();
    assert!(al.is_bijective());
    assert!(al.preserves_augmentation());
    // negative control: a(l) is not a coalgebra map on the Borel entry
    assert!(!scheme_catalog::is_coalgebra_map(&sigma.hopf, &d, &al));
}

#[test]
fn one_param_counts() {
    // SL2 at p = 3: 8 = p^2 - 1 nonzero nilpotents, 4 = p + 1 up to scalar
    let b = build_bundle(GroupName::Sl2, 3, 1).unwrap();
    let all = scheme_catalog::enumerate_one_param(&b, 1, false).unwrap();
    assert_eq!(all.len(), 8);
    let lines = scheme_catalog::enumerate_one_param(&b, 1, true).unwrap();
    assert_eq!(lines.len(), 4);
    // Ga_1: two subgroups over F_3, one up to scalar
    let bg = build_bundle(GroupName::Ga, 3, 1).unwrap();
    assert_eq!(scheme_catalog::enumerate_one_param(&bg, 1, false).unwrap().len(), 2);
    assert_eq!(scheme_catalog::enumerate_one_param(&bg, 1, true).unwrap().len(), 1);
    // Borel: nilpotent cone of the 2-dim Borel subalgebra is the e-line
    let bb = build_bundle(GroupName::Borel2, 3, 1).unwrap();
    let cone = scheme_catalog::enumerate_one_param(&bb, 1, false).unwrap();
    assert_eq!(cone.len(), 2);
    for psi in &cone {
        if let scheme_catalog::PsiData::Nilpotent(v) = &psi.data {
            assert_eq!(v[1], 0, "h-component of a nilpotent element must vanish");
        }
    }
}

#[test]
fn d_psi_on_borel_is_local_and_compatible() {
    let b = build_bundle(GroupName::Borel2, 3, 1).unwrap();
    let sigma = scheme_catalog::build_sigma(&b).unwrap();
    let a0 = scheme_catalog::quasilog_map(&b, &sigma).unwrap();
    let d = scheme_catalog::build_double(&b).unwrap();
    let psis = scheme_catalog::enumerate_one_param(&b, 1, true).unwrap();
    assert_eq!(psis.len(), 1);
    let dpsi = scheme_catalog::build_d_psi(&b, &psis[0], &d, &a0).unwrap();
    assert_eq!(dpsi.double.dim(), 27);
    assert!(dpsi.radical.is_local);
    assert_eq!(dpsi.generators.len(), 3);
}

#[test]
fn unsupported_entries_rejected() {
    assert!(matches!(
        build_bundle(GroupName::Sl2, 2, 1),
        Err(scheme_catalog::CatalogError::UnsupportedCatalogEntry(_, _, _))
    ));
    assert!(matches!(
        build_bundle(GroupName::Ga, 7, 1),
        Err(scheme_catalog::CatalogError::UnsupportedCatalogEntry(_, _, _))
    ));
    assert!(matches!(
        build_bundle(GroupName::Sl2, 3, 2),
        Err(scheme_catalog::CatalogError::UnsupportedCatalogEntry(_, _, _))
    ));
}

#[test]
fn restriction_square_commutes_on_modules() {
    // restricting along the inclusion then along a(l)_psi agrees with
    // restricting along a(l) then along the Sigma-side inclusion
    let b = build_bundle(GroupName::Borel2, 3, 1).unwrap();
    let sigma = scheme_catalog::build_sigma(&b).unwrap();
    let a0 = scheme_catalog::quasilog_map(&b, &sigma).unwrap();
    let d = scheme_catalog::build_double(&b).unwrap();
    let al = scheme_catalog::build_al_iso(&b, &sigma, &a0, &d).unwrap();
    let psis = scheme_catalog::enumerate_one_param(&b, 1, true).unwrap();
    let dpsi = scheme_catalog::build_d_psi(&b, &psis[0], &d, &a0).unwrap();
    let m = algebra_core::ModuleRep::regular(&d.algebra);
    // route 1: D-module -> D_psi-module -> kSigma_psi-module
    let r1 = m.restrict_along(&dpsi.inclusion).restrict_along(&dpsi.al);
    // route 2: D-module -> kSigma-module -> kSigma_psi-module
    let iota_sigma = algebra_core::AlgebraMap::new_unchecked(
        dpsi.sigma.algebra.clone(),
        sigma.hopf.algebra.clone(),
        gf_core::Matrix::identity(b.field.clone(), sigma.trunc.hopf.dim())
            .kronecker(&psis[0].hopf_map.matrix),
    );
    let r2 = m.restrict_along(&al).restrict_along(&iota_sigma);
    for (x, y) in r1.action.iter().zip(&r2.action) {
        assert_eq!(x, y);
    }
}
