//! Representation-theoretic facts about catalog group algebras.

use algebra_core::{pims, radical, simple_tops, ModuleRep};
use scheme_catalog::{build_bundle, build_sigma, GroupName};

#[test]
fn simples_of_the_sl2_group_algebra() {
    // restricted simple dimensions 1, 2, 3 at p = 3, found by randomized
    // splitting of the regular module
    let b = build_bundle(GroupName::Sl2, 3, 1).unwrap();
    let rad = radical(&b.kg.algebra).unwrap();
    let simples = simple_tops(&b.kg.algebra, &rad, 0x51).unwrap();
    let mut dims: Vec<usize> = simples.iter().map(|s| s.module.dim).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 2, 3]);
    // dim A/rad = sum of (dim S_i)^2 / endo over the split simples
    assert_eq!(rad.basis.rows(), 27 - (1 + 4 + 9));
}

#[test]
fn borel_group_algebra_has_p_characters() {
    let b = build_bundle(GroupName::Borel2, 3, 1).unwrap();
    let rad = radical(&b.kg.algebra).unwrap();
    let simples = simple_tops(&b.kg.algebra, &rad, 0x52).unwrap();
    assert_eq!(simples.len(), 3);
    assert!(simples.iter().all(|s| s.module.dim == 1));
    let p = pims(&b.kg.algebra, &rad, 0x52).unwrap();
    assert!(p.modules.iter().all(|m| m.dim == 3));
}

#[test]
fn sigma_of_unipotent_group_is_unipotent() {
    // kSigma(U_(1), 1) is local
    let b = build_bundle(GroupName::U2, 3, 1).unwrap();
    let sigma = build_sigma(&b).unwrap();
    let rad = radical(&sigma.hopf.algebra).unwrap();
    assert!(rad.is_local);
    // while kSigma of the Borel is not local (three simples)
    let bb = build_bundle(GroupName::Borel2, 3, 1).unwrap();
    let sb = build_sigma(&bb).unwrap();
    let rb = radical(&sb.hopf.algebra).unwrap();
    assert!(!rb.is_local);
}

#[test]
fn regular_module_restricts_projectively_along_inclusions() {
    // the double is free over each D_psi, so regular restrictions stay
    // projective (local fast path)
    let b = build_bundle(GroupName::Borel2, 3, 1).unwrap();
    let sigma = build_sigma(&b).unwrap();
    let a0 = scheme_catalog::quasilog_map(&b, &sigma).unwrap();
    let d = scheme_catalog::build_double(&b).unwrap();
    let psis = scheme_catalog::enumerate_one_param(&b, 1, true).unwrap();
    let dpsi = scheme_catalog::build_d_psi(&b, &psis[0], &d, &a0).unwrap();
    let reg = ModuleRep::regular(&d.algebra);
    let restricted = reg.restrict_along(&dpsi.inclusion);
    let rad_m = restricted.radical_submodule(&dpsi.radical.basis);
    let top = restricted.dim - rad_m.rows();
    assert_eq!(restricted.dim, dpsi.double.dim() * top);
}
