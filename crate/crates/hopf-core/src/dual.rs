//! Dualization: the Hopf algebra structure on `H*` with multiplication dual
//! to comultiplication and vice versa, under the dual basis pairing.

use algebra_core::{Algebra, SparseVec};
use gf_core::Matrix;

use crate::error::HopfError;
use crate::hopf::{normalize_row, ComultRow, HopfAlgebra, HopfRef};

/// Dual Hopf algebra on the dual basis. The counit of the dual is
/// evaluation at the unit, and the dual's augmentation is set from it so
/// radical fast paths apply.
pub fn dual_hopf(h: &HopfAlgebra) -> Result<HopfRef, HopfError> {
    let f = h.algebra.field().clone();
    let n = h.dim();
    // multiplication of H*: (mu_i mu_j)_k = coefficient of (i,j) in Delta(b_k)
    let mut mult: Vec<SparseVec> = vec![Vec::new(); n * n];
    for k in 0..n {
        for &(i, j, c) in &h.comult[k] {
            mult[i as usize * n + j as usize].push((k as u32, c));
        }
    }
    for row in mult.iter_mut() {
        row.sort_unstable_by_key(|&(k, _)| k);
    }
    // unit of H* = counit of H; counit of H* = evaluation at 1
    let unit = h.counit.clone();
    let counit: Vec<u16> = h.algebra.unit().to_vec();
    // comultiplication of H*: Delta(mu_k) = sum_{i,j} (b_i b_j)_k mu_i (x) mu_j
    let mut comult: Vec<ComultRow> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for &(k, c) in &h.algebra.product_basis(i, j) {
                comult[k as usize].push((i as u32, j as u32, c));
            }
        }
    }
    for row in comult.iter_mut() {
        normalize_row(&f, row);
    }
    let antipode = h.antipode.transpose();
    let labels: Vec<String> = h
        .algebra
        .labels()
        .iter()
        .map(|l| format!("{l}^"))
        .collect();
    let algebra = Algebra::build(f, labels, mult, unit, Some(counit.clone()))?;
    HopfAlgebra::new(algebra, comult, counit, antipode)
}

/// Entrywise equality of two Hopf structures (same dimension and field);
/// used to confirm that double dualization is the identity under the
/// canonical pairing.
pub fn hopf_structures_equal(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    if a.dim() != b.dim() {
        return false;
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            if a.algebra.product_basis(i, j) != b.algebra.product_basis(i, j) {
                return false;
            }
        }
    }
    if a.algebra.unit() != b.algebra.unit() || a.counit != b.counit {
        return false;
    }
    if a.antipode != b.antipode {
        return false;
    }
    for k in 0..n {
        let mut x = a.comult[k].clone();
        let mut y = b.comult[k].clone();
        normalize_row(a.algebra.field(), &mut x);
        normalize_row(b.algebra.field(), &mut y);
        if x != y {
            return false;
        }
    }
    true
}

/// The canonical evaluation pairing `<mu_i, b_j> = delta_ij` as a matrix
/// (identity on dual bases); kept explicit so callers can assert against it.
pub fn canonical_pairing(h: &HopfAlgebra) -> Matrix {
    Matrix::identity(h.algebra.field().clone(), h.dim())
}
