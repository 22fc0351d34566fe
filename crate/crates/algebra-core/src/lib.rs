//! Finite-dimensional associative algebras presented by structure constants:
//! validation, modules, radicals, simple tops, projective indecomposables,
//! projectivity tests, and minimal projective resolutions — all exact.

mod algebra;
mod error;
mod idempotents;
mod json;
mod maps;
mod meataxe;
mod module;
mod projective;
mod radical;
mod resolution;

pub use algebra::{to_dense, to_sparse, Algebra, AlgebraRef, MultSource, SmashMult, SparseVec};
pub use error::{AlgebraError, TripleWitness};
pub use idempotents::{isotypic_multiplicities, lift_idempotent, pims, simple_tops, Pims, SimpleBlock};
pub use json::{
    algebra_from_json, algebra_to_json, content_hash, is_eager, module_from_json, module_to_json,
    AlgebraJson, ModuleJson,
};
pub use maps::AlgebraMap;
pub use meataxe::{composition_factors, find_proper_submodule, hom_basis, modules_isomorphic, split_semisimple};
pub use module::{coords_in_basis, solve_vec, spin, ModuleRep};
pub use projective::is_projective;
pub use radical::{dedupe_simples, nilpotency_index, radical, radical_seeded, RadicalData, DEFAULT_RADICAL_SEED};
pub use resolution::{minimal_resolution, projective_cover, projective_module, CoverStep, ResolutionData, DEPTH_CAP};
