//! Pi-point construction and rejection paths, and the Jordan types of
//! restrictions through explicit coefficient choices.

use algebra_core::ModuleRep;
use scheme_catalog::GroupName;
use support_lab::{
    make_pi_point, pi_support, restrict_jordan, SupportError, SupportSession,
};

#[test]
fn zero_coefficients_rejected() {
    let s = SupportSession::new(GroupName::Ga, 3, 1, 1).unwrap();
    let err = make_pi_point(&s.dpsis[0], 0, &[0, 0]).unwrap_err();
    assert!(matches!(err, SupportError::ZeroCoefficients));
}

#[test]
fn flat_certificates_on_the_double_of_ga1() {
    let s = SupportSession::new(GroupName::Ga, 3, 1, 1).unwrap();
    let dpsi = &s.dpsis[0];
    // both generator directions and their sum are flat
    for lambda in [[1u16, 0], [0, 1], [1, 1]] {
        let pp = make_pi_point(dpsi, 0, &lambda).unwrap();
        assert!(pp.flat_certificate.is_free_over_truncated(3));
        assert_eq!(pp.flat_certificate.parts, vec![3, 3, 3]);
    }
}

#[test]
fn restriction_jordan_types_of_the_u_side_module() {
    // over D(G_a(1)) at p = 3: k[u]/(u^3) with x acting 0 restricts with
    // type [3] along mu != 0 directions and [1,1,1] along the x axis
    let s = SupportSession::new(GroupName::Ga, 3, 1, 1).unwrap();
    let dpsi = &s.dpsis[0];
    let g_side = {
        // build via the projection D -> kG
        let d = &s.double.algebra;
        let f = d.field().clone();
        let o_aug = s.bundle.og.algebra.augmentation().unwrap().to_vec();
        let kg = &s.bundle.kg.algebra;
        let mut proj = gf_core::Matrix::zeros(f.clone(), kg.dim(), d.dim());
        for i in 0..s.bundle.og.dim() {
            if o_aug[i] == 0 {
                continue;
            }
            for j in 0..kg.dim() {
                proj.set(j, i * kg.dim() + j, o_aug[i]);
            }
        }
        let map = algebra_core::AlgebraMap::new(d.clone(), kg.clone(), proj).unwrap();
        ModuleRep::regular(kg).restrict_along(&map)
    };
    let restricted = g_side.restrict_along(&dpsi.inclusion);
    // generator order is echelon order on the primitives of kSigma
    let jt_a = restrict_jordan(dpsi, &[1, 0], &restricted).unwrap();
    let jt_b = restrict_jordan(dpsi, &[0, 1], &restricted).unwrap();
    let mut types = vec![jt_a.parts, jt_b.parts];
    types.sort();
    assert_eq!(types, vec![vec![1, 1, 1], vec![3]]);
    let jt_mixed = restrict_jordan(dpsi, &[1, 1], &restricted).unwrap();
    assert_eq!(jt_mixed.parts, vec![3]);
}

#[test]
fn cloud_monotonicity_under_direct_sum() {
    let s = SupportSession::new(GroupName::Ga, 3, 1, 2).unwrap();
    let k = ModuleRep::trivial(&s.double.algebra);
    let reg = ModuleRep::regular(&s.double.algebra);
    let sum = k.direct_sum(&reg);
    let cloud_sum = pi_support(&s, &sum).unwrap();
    let cloud_k = pi_support(&s, &k).unwrap();
    let cloud_reg = pi_support(&s, &reg).unwrap();
    assert_eq!(cloud_sum, cloud_k.union(&cloud_reg));
}

#[test]
fn dual_stability_of_clouds() {
    let s = SupportSession::new(GroupName::Ga, 3, 1, 2).unwrap();
    // witness syzygy1 and its dual have equal clouds
    let omega = s
        .witnesses
        .iter()
        .find(|w| w.name == "syzygy1")
        .unwrap()
        .module
        .clone();
    let dual = hopf_core::dual_module(&s.double, &omega);
    let c1 = pi_support(&s, &omega).unwrap();
    let c2 = pi_support(&s, &dual).unwrap();
    assert_eq!(c1.points, c2.points);
}

#[test]
fn closed_set_realization_by_carlson_products() {
    // over the double of G_a(1): the empty product is the unit module with
    // full support; a product of two cocycles with disjoint zero loci is
    // projective (empty cloud)
    let s = SupportSession::new(GroupName::Ga, 3, 1, 1).unwrap();
    let local = &s.dpsis[0];
    let trunc = support_lab::ext_truncation(&local.double.algebra, 4, &[]).unwrap();
    let full = support_lab::realize_closed_set(&local.double, &trunc.omega2, &[]).unwrap();
    assert_eq!(full.dim, 1);
    let cloud_full = support_lab::pi_support_local(&s, 0, &full).unwrap();
    assert_eq!(cloud_full.len(), 4);
    // find two degree-2 cocycles with disjoint single-point loci
    let mut single_point = Vec::new();
    for zeta in &trunc.deg2 {
        let lz = support_lab::carlson_module(&trunc.omega2, zeta).unwrap();
        let cloud = support_lab::pi_support_local(&s, 0, &lz).unwrap();
        if cloud.len() == 1 {
            single_point.push((zeta.clone(), cloud));
        }
    }
    let disjoint = single_point
        .iter()
        .enumerate()
        .flat_map(|(i, a)| single_point.iter().skip(i + 1).map(move |b| (a, b)))
        .find(|(a, b)| a.1.intersect(&b.1).is_empty());
    if let Some(((za, _), (zb, _))) = disjoint {
        let prod =
            support_lab::realize_closed_set(&local.double, &trunc.omega2, &[za.clone(), zb.clone()])
                .unwrap();
        let cloud = support_lab::pi_support_local(&s, 0, &prod).unwrap();
        assert!(cloud.is_empty(), "disjoint loci must intersect to nothing");
    }
    // one cocycle: support of the product equals the Carlson cloud
    let (z0, c0) = &single_point[0];
    let one = support_lab::realize_closed_set(&local.double, &trunc.omega2, &[z0.clone()]).unwrap();
    let cloud_one = support_lab::pi_support_local(&s, 0, &one).unwrap();
    assert_eq!(&cloud_one.points, &c0.points);
}

#[test]
fn zero_cocycle_rejected() {
    let s = SupportSession::new(GroupName::Ga, 3, 1, 1).unwrap();
    let trunc = support_lab::ext_truncation(&s.dpsis[0].double.algebra, 4, &[]).unwrap();
    let zero = vec![0u16; trunc.omega2.dim];
    assert!(matches!(
        support_lab::carlson_module(&trunc.omega2, &zero),
        Err(SupportError::ZeroCocycle)
    ));
}
