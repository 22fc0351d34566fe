//! The local subalgebra family: `D_psi = O(G_K) # K G_a(s)` with its Hopf
//! structure, the inclusion into `D_K`, the local `kSigma_psi`, the
//! isomorphism `a(l)_psi`, and the transported primitive generators used by
//! the pi-point sweep.

use std::sync::Arc;

use algebra_core::{radical, AlgebraMap, RadicalData};
use gf_core::Matrix;
use hopf_core::{
    hopf_base_change, hopf_smash, HopfRef, ModuleAlgebraAction, TruncatedSymmetric,
};

use crate::bundle::GroupSchemeBundle;
use crate::error::CatalogError;
use crate::one_param::OneParamSubgroup;

pub struct DPsi {
    pub psi: Arc<OneParamSubgroup>,
    /// `D_psi` with its verified Hopf structure (it is a Hopf subalgebra).
    pub double: HopfRef,
    /// `iota_psi = id_O (x) psi : D_psi -> D_K`, verified injective.
    pub inclusion: AlgebraMap,
    /// `kSigma_psi = S_r(g*_K) # K G_a(s)`, cocommutative.
    pub sigma: HopfRef,
    pub sigma_trunc: TruncatedSymmetric,
    /// `a(l)_psi : kSigma_psi -> D_psi`.
    pub al: AlgebraMap,
    /// Transported primitive generators `w_i = a(l)_psi(Prim basis)`,
    /// rows in `D_psi` coordinates, canonical (echelon) order.
    pub generators: Vec<Vec<u16>>,
    pub radical: RadicalData,
}

/// Build the local algebra `D_psi` for an enumerated one-parameter subgroup,
/// certifying: locality, the inclusion into `D_K`, the square
/// `iota . a(l)_psi = a(l)_K . iota_Sigma` on every basis element, and
/// p-nilpotence of the transported generators.
pub fn build_d_psi(
    bundle: &GroupSchemeBundle,
    psi: &Arc<OneParamSubgroup>,
    double_k: &HopfRef,
    a0: &AlgebraMap,
) -> Result<DPsi, CatalogError> {
    let field = psi.field.clone();
    let og_k = hopf_base_change(&bundle.og, &field);
    let kgas = &psi.kgas;
    let s_small = kgas.dim();
    // action of K G_a(s) on O(G_K): restrict the adjoint action along psi
    let adjoint_k: Vec<Matrix> = bundle
        .adjoint
        .matrices
        .iter()
        .map(|m| m.embed(&field))
        .collect();
    let action_mats: Vec<Matrix> = (0..s_small)
        .map(|i| {
            let img = psi.hopf_map.apply_basis(i);
            let mut acc = Matrix::zeros(field.clone(), og_k.dim(), og_k.dim());
            for (m, &c) in img.iter().enumerate() {
                if c != 0 {
                    acc = acc.add(&adjoint_k[m].scale(c));
                }
            }
            acc
        })
        .collect();
    let action = ModuleAlgebraAction::new(kgas.clone(), og_k.algebra.clone(), action_mats)?;
    let double = hopf_smash(&action, &og_k, kgas)?;
    // inclusion iota = id_O (x) psi
    let incl_matrix = Matrix::identity(field.clone(), og_k.dim()).kronecker(&psi.hopf_map.matrix);
    let inclusion = AlgebraMap::new(
        double.algebra.clone(),
        double_k.algebra.clone(),
        incl_matrix,
    )?;
    if !inclusion.is_injective() {
        return Err(CatalogError::NotHopfMap(usize::MAX));
    }
    // kSigma_psi: coadjoint restricted along psi
    let coad_k: Vec<Matrix> = bundle.coadjoint.iter().map(|m| m.embed(&field)).collect();
    let coad_psi: Vec<Matrix> = (0..s_small)
        .map(|i| {
            let img = psi.hopf_map.apply_basis(i);
            let mut acc = Matrix::zeros(field.clone(), bundle.lie_dim(), bundle.lie_dim());
            for (m, &c) in img.iter().enumerate() {
                if c != 0 {
                    acc = acc.add(&coad_k[m].scale(c));
                }
            }
            acc
        })
        .collect();
    let sigma_trunc = hopf_core::truncated_symmetric(kgas, &coad_psi, bundle.r)?;
    let sigma = hopf_smash(&sigma_trunc.action, &sigma_trunc.hopf, kgas)?;
    sigma
        .is_cocommutative()
        .map_err(hopf_core::HopfError::NotCocommutative)?;
    // a(l)_psi = (a_0)_K (x) id
    let a0_k = a0.matrix.embed(&field);
    let al_matrix = a0_k.kronecker(&Matrix::identity(field.clone(), s_small));
    let al = AlgebraMap::new(sigma.algebra.clone(), double.algebra.clone(), al_matrix)?;
    if !al.is_bijective() || !al.preserves_augmentation() {
        return Err(CatalogError::BadSeed);
    }
    // compatibility square: iota_D . a(l)_psi = a(l)_K . iota_Sigma
    let a0k_full = a0.matrix.embed(&field);
    let al_k = a0k_full.kronecker(&Matrix::identity(field.clone(), bundle.kg.dim()));
    let iota_sigma = Matrix::identity(field.clone(), sigma_trunc.hopf.dim())
        .kronecker(&psi.hopf_map.matrix);
    let lhs = inclusion.matrix.mul(&al.matrix);
    let rhs = al_k.mul(&iota_sigma);
    if lhs != rhs {
        for col in 0..lhs.cols() {
            if (0..lhs.rows()).any(|r| lhs.get(r, col) != rhs.get(r, col)) {
                return Err(CatalogError::DiagramFailure(col));
            }
        }
    }
    // locality
    let rad = radical(&double.algebra)?;
    if !rad.is_local {
        return Err(CatalogError::NotLocal);
    }
    // transported primitive generators
    let prim = sigma.primitives();
    let mut generators = Vec::with_capacity(prim.rows());
    for i in 0..prim.rows() {
        generators.push(al.apply(prim.row(i)));
    }
    Ok(DPsi {
        psi: psi.clone(),
        double,
        inclusion,
        sigma,
        sigma_trunc,
        al,
        generators,
        radical: rad,
    })
}
