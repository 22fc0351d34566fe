//! Bundle JSON: all Hopf blocks plus adjoint matrices, Lie data, and the
//! quasi-logarithm seed.

use gf_core::{Matrix, MatrixJson};
use hopf_core::{hopf_from_json, hopf_to_json, HopfJson, ModuleAlgebraAction};
use serde::{Deserialize, Serialize};

use crate::bundle::{build_bundle, GroupSchemeBundle};
use crate::error::CatalogError;
use crate::groups::GroupName;

#[derive(Serialize, Deserialize)]
pub struct BundleJson {
    pub name: String,
    pub p: u16,
    pub r: usize,
    pub kg: HopfJson,
    pub og: HopfJson,
    pub adjoint: Vec<MatrixJson>,
    pub lie_labels: Vec<String>,
    pub lie_basis: MatrixJson,
    pub coadjoint: Vec<MatrixJson>,
    pub quasilog_seed: MatrixJson,
}

pub fn bundle_to_json(b: &GroupSchemeBundle) -> BundleJson {
    BundleJson {
        name: b.name.as_str().into(),
        p: b.p,
        r: b.r,
        kg: hopf_to_json(&b.kg),
        og: hopf_to_json(&b.og),
        adjoint: b.adjoint.matrices.iter().map(Matrix::to_json).collect(),
        lie_labels: b.lie_labels.clone(),
        lie_basis: b.lie_basis.to_json(),
        coadjoint: b.coadjoint.iter().map(Matrix::to_json).collect(),
        quasilog_seed: b.quasilog_seed.to_json(),
    }
}

/// Rebuild a bundle from its JSON. The stored blocks are cross-checked
/// against a fresh catalog construction, so a tampered file is rejected.
pub fn bundle_from_json(j: &BundleJson) -> Result<GroupSchemeBundle, CatalogError> {
    let name = GroupName::parse(&j.name).ok_or_else(|| {
        CatalogError::UnsupportedCatalogEntry(j.name.clone(), j.p, j.r)
    })?;
    let fresh = build_bundle(name, j.p, j.r)?;
    let stored_kg = hopf_from_json(&j.kg)?;
    let stored_og = hopf_from_json(&j.og)?;
    if !hopf_core::hopf_structures_equal(&fresh.kg, &stored_kg)
        || !hopf_core::hopf_structures_equal(&fresh.og, &stored_og)
    {
        return Err(CatalogError::UnsupportedCatalogEntry(
            format!("{} (stored Hopf blocks differ from catalog)", j.name),
            j.p,
            j.r,
        ));
    }
    let stored_adj: Result<Vec<Matrix>, _> = j.adjoint.iter().map(Matrix::from_json).collect();
    let stored_adj = stored_adj.map_err(algebra_core::AlgebraError::from)?;
    let _ = ModuleAlgebraAction::new(
        fresh.kg.clone(),
        fresh.og.algebra.clone(),
        stored_adj.clone(),
    )?;
    if stored_adj != fresh.adjoint.matrices {
        return Err(CatalogError::UnsupportedCatalogEntry(
            format!("{} (stored adjoint differs from catalog)", j.name),
            j.p,
            j.r,
        ));
    }
    Ok(fresh)
}
