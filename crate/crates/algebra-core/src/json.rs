//! JSON schemas and content hashing for algebras and modules.
//!
//! Algebra: `{field, labels, mult (sparse [i,j,k,coeff]), unit, augmentation}`;
//! module: `{algebra (content hash), dim, action (matrices)}`. The content
//! hash is SHA-256 of the canonical serialization.

use gf_core::{Field, FieldSpec, Matrix, MatrixJson};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{Algebra, AlgebraRef, MultSource};
use crate::error::AlgebraError;
use crate::module::ModuleRep;

#[derive(Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    /// Sparse multiplication triples `[i, j, k, coeff-digits]`.
    pub mult: Vec<(u32, u32, u32, Vec<u16>)>,
    pub unit: Vec<Vec<u16>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<Vec<Vec<u16>>>,
}

#[derive(Serialize, Deserialize)]
pub struct ModuleJson {
    /// Content hash of the algebra this module lives over.
    pub algebra: String,
    pub dim: usize,
    pub action: Vec<MatrixJson>,
}

pub fn algebra_to_json(a: &Algebra) -> AlgebraJson {
    let f = a.field();
    let n = a.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.product_basis(i, j) {
                mult.push((i as u32, j as u32, k, f.to_digits(c)));
            }
        }
    }
    AlgebraJson {
        field: f.spec().clone(),
        labels: a.labels().to_vec(),
        mult,
        unit: a.unit().iter().map(|&c| f.to_digits(c)).collect(),
        augmentation: a
            .augmentation()
            .map(|eps| eps.iter().map(|&c| f.to_digits(c)).collect()),
    }
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<AlgebraRef, AlgebraError> {
    let field = Field::from_spec(&j.field)?;
    let n = j.labels.len();
    let mut rows: Vec<Vec<(u32, u16)>> = vec![Vec::new(); n * n];
    for (i, jj, k, digs) in &j.mult {
        let c = field.from_digits(digs);
        if (*i as usize) >= n || (*jj as usize) >= n || (*k as usize) >= n {
            return Err(AlgebraError::BadJson("mult index out of range".into()));
        }
        rows[*i as usize * n + *jj as usize].push((*k, c));
    }
    for r in rows.iter_mut() {
        r.sort_unstable_by_key(|&(k, _)| k);
    }
    let unit: Vec<u16> = j.unit.iter().map(|d| field.from_digits(d)).collect();
    let augmentation = j
        .augmentation
        .as_ref()
        .map(|eps| eps.iter().map(|d| field.from_digits(d)).collect());
    Algebra::build(field, j.labels.clone(), rows, unit, augmentation)
}

/// SHA-256 hex of the canonical algebra serialization.
pub fn content_hash(a: &Algebra) -> String {
    if let Some(h) = a.hash.get() {
        return h.clone();
    }
    let json = serde_json::to_string(&algebra_to_json(a)).expect("serialization cannot fail");
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    let h = format!("{:x}", hasher.finalize());
    let _ = a.hash.set(h.clone());
    h
}

pub fn module_to_json(m: &ModuleRep) -> ModuleJson {
    ModuleJson {
        algebra: content_hash(&m.algebra),
        dim: m.dim,
        action: m.action.iter().map(|a| a.to_json()).collect(),
    }
}

/// Rebuild a module over a known algebra, verifying the stored content hash.
pub fn module_from_json(j: &ModuleJson, algebra: &AlgebraRef) -> Result<ModuleRep, AlgebraError> {
    if content_hash(algebra) != j.algebra {
        return Err(AlgebraError::BadJson(
            "module references a different algebra (content hash mismatch)".into(),
        ));
    }
    let action = j
        .action
        .iter()
        .map(Matrix::from_json)
        .collect::<Result<Vec<_>, _>>()?;
    ModuleRep::new(algebra.clone(), action)
}

/// True when the multiplication table is materialized (serializing a lazy
/// smash product of large dimension materializes rows on the fly).
pub fn is_eager(a: &Algebra) -> bool {
    matches!(a.mult, MultSource::Table(_))
}
