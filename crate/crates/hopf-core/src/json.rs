//! Hopf JSON = algebra JSON + comultiplication/counit/antipode blocks.

use algebra_core::{algebra_from_json, algebra_to_json, AlgebraJson};
use gf_core::{Matrix, MatrixJson};
use serde::{Deserialize, Serialize};

use crate::error::HopfError;
use crate::hopf::{check_hopf, ComultRow, HopfAlgebra, HopfRef};

#[derive(Serialize, Deserialize)]
pub struct HopfJson {
    pub algebra: AlgebraJson,
    /// Sparse comultiplication triples `[k, i, j, coeff-digits]`.
    pub comult: Vec<(u32, u32, u32, Vec<u16>)>,
    pub counit: Vec<Vec<u16>>,
    pub antipode: MatrixJson,
}

pub fn hopf_to_json(h: &HopfAlgebra) -> HopfJson {
    let f = h.algebra.field();
    let mut comult = Vec::new();
    for (k, row) in h.comult.iter().enumerate() {
        for &(i, j, c) in row {
            comult.push((k as u32, i, j, f.to_digits(c)));
        }
    }
    HopfJson {
        algebra: algebra_to_json(&h.algebra),
        comult,
        counit: h.counit.iter().map(|&c| f.to_digits(c)).collect(),
        antipode: h.antipode.to_json(),
    }
}

pub fn hopf_from_json(j: &HopfJson) -> Result<HopfRef, HopfError> {
    let algebra = algebra_from_json(&j.algebra)?;
    let f = algebra.field().clone();
    let n = algebra.dim();
    let mut comult: Vec<ComultRow> = vec![Vec::new(); n];
    for (k, i, jj, digs) in &j.comult {
        comult[*k as usize].push((*i, *jj, f.from_digits(digs)));
    }
    for row in comult.iter_mut() {
        row.sort_unstable_by_key(|&(i, j, _)| (i, j));
    }
    let counit: Vec<u16> = j.counit.iter().map(|d| f.from_digits(d)).collect();
    let antipode =
        Matrix::from_json(&j.antipode).map_err(algebra_core::AlgebraError::from)?;
    let h = HopfAlgebra {
        algebra,
        comult,
        counit,
        antipode,
    };
    match check_hopf(&h).first_error() {
        None => Ok(std::sync::Arc::new(h)),
        Some(e) => Err(e),
    }
}

/// Base change of a Hopf algebra along the prime-subfield embedding: all
/// structure constants keep their codes.
pub fn hopf_base_change(h: &HopfRef, target: &gf_core::FieldRef) -> HopfRef {
    if **target == **h.algebra.field() {
        return h.clone();
    }
    HopfAlgebra::new_unchecked(
        h.algebra.base_change(target),
        h.comult.clone(),
        h.counit.clone(),
        h.antipode.embed(target),
    )
}
