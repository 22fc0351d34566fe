//! Concrete group-scheme data for a fixed catalog: coordinate rings, group
//! algebras, adjoint actions, Lie bases, quasi-logarithms, one-parameter
//! subgroups, and the local subalgebra family attached to them.

mod bundle;
mod dpsi;
mod error;
mod groups;
mod json;
mod one_param;
mod sigma;

pub use bundle::{build_bundle, GroupSchemeBundle};
pub use dpsi::{build_d_psi, DPsi};
pub use error::CatalogError;
pub use groups::{build_presentation, tangent_functional, GroupName, MonomialRing};
pub use json::{bundle_from_json, bundle_to_json, BundleJson};
pub use one_param::{
    additive_group_hopf, enumerate_one_param, is_hopf_map, OneParamSubgroup, PsiData,
};
pub use sigma::{build_al_iso, build_sigma, is_coalgebra_map, quasilog_map, SigmaData};

use hopf_core::HopfRef;

/// The Drinfeld double of a bundle.
pub fn build_double(bundle: &GroupSchemeBundle) -> Result<HopfRef, CatalogError> {
    Ok(hopf_core::drinfeld_double(
        &bundle.og,
        &bundle.kg,
        &bundle.adjoint,
    )?)
}
