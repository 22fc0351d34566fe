//! Support computations over the double of G_a(1) at p = 3: the supporting
//! examples behind the pi-support and Ext-comparison checks.

use algebra_core::ModuleRep;
use scheme_catalog::GroupName;
use support_lab::{pi_support, support_reconstruct, SupportSession};

fn session_e1() -> SupportSession {
    SupportSession::new(GroupName::Ga, 3, 1, 1).unwrap()
}

#[test]
fn full_cloud_of_trivial_module_is_p_plus_one() {
    let s = session_e1();
    let k = ModuleRep::trivial(&s.double.algebra);
    let cloud = pi_support(&s, &k).unwrap();
    assert_eq!(cloud.len(), 4, "P^1(F_3) has p + 1 = 4 points");
}

#[test]
fn regular_module_has_empty_cloud() {
    let s = session_e1();
    let reg = ModuleRep::regular(&s.double.algebra);
    let cloud = pi_support(&s, &reg).unwrap();
    assert!(cloud.is_empty());
}

#[test]
fn u_side_module_is_single_class() {
    // k[u]/(u^3) with x acting as zero: the [1:0] locus
    let s = session_e1();
    let d = &s.double.algebra;
    let f = d.field().clone();
    // basis of D(G_a(1)) is x^i # delta_j with index 3 i + j; delta_j acts by
    // the divided-power regular action of kG_a(1), x acts by zero
    let action: Vec<gf_core::Matrix> = (0..9)
        .map(|idx| {
            let (i, j) = (idx / 3, idx % 3);
            gf_core::Matrix::from_fn(f.clone(), 3, 3, |r, c| {
                if i != 0 || r != c + j {
                    return 0;
                }
                // delta_j . delta_c = binom(j + c, j) delta_{j+c}
                let mut n = 1u64;
                let mut den = 1u64;
                for t in 0..j {
                    n *= (r - t) as u64;
                    den *= (t + 1) as u64;
                }
                ((n / den) % 3) as u16
            })
        })
        .collect();
    let m = ModuleRep::new(d.clone(), action).unwrap();
    let cloud = pi_support(&s, &m).unwrap();
    assert_eq!(cloud.len(), 1);
    let rec = support_reconstruct(&s, &m).unwrap();
    assert_eq!(cloud, rec);
}
