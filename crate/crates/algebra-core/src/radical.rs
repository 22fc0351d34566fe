//! Jacobson radical computation: nilpotent-augmentation-ideal fast path,
//! smash-product fast path, and a generic fallback through randomized
//! splitting of the regular module.

use gf_core::{Matrix, SplitMix64};

use crate::algebra::{Algebra, AlgebraRef, MultSource};
use crate::error::AlgebraError;
use crate::meataxe::{composition_factors, modules_isomorphic};
use crate::module::ModuleRep;

/// The Jacobson radical as a subspace, with its nilpotency index and a
/// locality flag (radical of codimension one).
#[derive(Clone, Debug)]
pub struct RadicalData {
    /// Rows form a reduced-echelon basis of rad(A).
    pub basis: Matrix,
    pub nilpotency_index: usize,
    pub is_local: bool,
}

/// Cap on subspace-power iterations when certifying nilpotency.
const NILPOTENCY_CAP: usize = 64;

pub const DEFAULT_RADICAL_SEED: u64 = 0x5EED_0001;

pub fn radical(a: &AlgebraRef) -> Result<RadicalData, AlgebraError> {
    radical_seeded(a, DEFAULT_RADICAL_SEED)
}

pub fn radical_seeded(a: &AlgebraRef, seed: u64) -> Result<RadicalData, AlgebraError> {
    // fast path: augmentation ideal nilpotent
    if let Some(eps) = a.augmentation() {
        let f = a.field().clone();
        let row = Matrix::row_vec(f, eps);
        let ker = row.kernel_basis();
        if let Some(index) = nilpotency_index(a, &ker) {
            return Ok(finish(a, ker, index));
        }
    }
    // fast path: smash product O # H with O local augmented;
    // rad = m (x) H + O (x) rad(H), verified nilpotent modulo top of H
    if let Some(r) = smash_radical(a, seed)? {
        return Ok(r);
    }
    // generic: simples of the regular module, radical = joint annihilator
    let mut rng = SplitMix64::new(seed);
    let reg = ModuleRep::regular(a);
    let factors = composition_factors(&reg, &mut rng)?;
    let simples = dedupe_simples(factors, &mut rng);
    let rad = joint_annihilator(a, &simples);
    match nilpotency_index(a, &rad) {
        Some(index) => Ok(finish(a, rad, index)),
        None => Err(AlgebraError::RadicalNotComputable(
            "joint annihilator of computed simples is not nilpotent".into(),
        )),
    }
}

fn finish(a: &AlgebraRef, basis: Matrix, index: usize) -> RadicalData {
    let is_local = basis.rows() + 1 == a.dim();
    RadicalData {
        basis,
        nilpotency_index: index,
        is_local,
    }
}

fn smash_radical(a: &AlgebraRef, seed: u64) -> Result<Option<RadicalData>, AlgebraError> {
    let MultSource::Smash(s) = &a.mult else {
        return Ok(None);
    };
    let Some(a_aug) = &s.a_aug else {
        return Ok(None);
    };
    let f = a.field().clone();
    let h_alg = Algebra::build(
        f.clone(),
        (0..s.h_dim).map(|i| format!("h{i}")).collect(),
        s.h_mult.clone(),
        s.h_unit.clone(),
        s.h_aug.clone(),
    )?;
    let rad_h = radical_seeded(&h_alg, seed)?;
    let m_basis = Matrix::row_vec(f.clone(), a_aug).kernel_basis();
    let mut rows: Vec<Vec<u16>> = Vec::new();
    for mi in 0..m_basis.rows() {
        for h in 0..s.h_dim {
            let mut v = vec![0u16; a.dim()];
            for (ai, &c) in m_basis.row(mi).iter().enumerate() {
                if c != 0 {
                    v[ai * s.h_dim + h] = c;
                }
            }
            rows.push(v);
        }
    }
    for ai in 0..s.a_dim {
        for ri in 0..rad_h.basis.rows() {
            let mut v = vec![0u16; a.dim()];
            for (h, &c) in rad_h.basis.row(ri).iter().enumerate() {
                if c != 0 {
                    v[ai * s.h_dim + h] = c;
                }
            }
            rows.push(v);
        }
    }
    if rows.is_empty() {
        return Ok(Some(finish(a, Matrix::zeros(f, 0, a.dim()), 1)));
    }
    let cand = Matrix::from_rows(f, rows);
    let (ech, piv) = cand.rref();
    let basis = ech.row_slice(0, piv.len());
    match nilpotency_index(a, &basis) {
        Some(index) => Ok(Some(finish(a, basis, index))),
        None => Ok(None),
    }
}

/// Nilpotency index of an ideal given by a spanning `basis`: the smallest
/// `n` with `I^n = 0`, or `None` when the power chain stabilizes nonzero.
pub fn nilpotency_index(a: &AlgebraRef, basis: &Matrix) -> Option<usize> {
    if basis.rows() == 0 {
        return Some(1);
    }
    let f = a.field().clone();
    let mut current = basis.clone();
    let mut k = 1usize;
    while k <= NILPOTENCY_CAP {
        let mut rows: Vec<Vec<u16>> = Vec::new();
        for i in 0..basis.rows() {
            for j in 0..current.rows() {
                let prod = a.multiply(basis.row(i), current.row(j));
                if prod.iter().any(|&x| x != 0) {
                    rows.push(prod);
                }
            }
        }
        if rows.is_empty() {
            return Some(k + 1);
        }
        let m = Matrix::from_rows(f.clone(), rows);
        let (ech, piv) = m.rref();
        let next = ech.row_slice(0, piv.len());
        if next == current {
            return None; // stabilized nonzero
        }
        current = next;
        k += 1;
    }
    None
}

/// Deduplicate a list of simple modules up to isomorphism, sorted by
/// dimension (ties keep first-found order).
pub fn dedupe_simples(factors: Vec<ModuleRep>, rng: &mut SplitMix64) -> Vec<ModuleRep> {
    let mut out: Vec<ModuleRep> = Vec::new();
    for s in factors {
        if !out.iter().any(|t| modules_isomorphic(t, &s, rng)) {
            out.push(s);
        }
    }
    out.sort_by_key(|s| s.dim);
    out
}

/// Kernel of `A -> prod End(S_i)`.
fn joint_annihilator(a: &AlgebraRef, simples: &[ModuleRep]) -> Matrix {
    let f = a.field().clone();
    let n = a.dim();
    let total: usize = simples.iter().map(|s| s.dim * s.dim).sum();
    let mut m = Matrix::zeros(f, total, n);
    for b in 0..n {
        let mut off = 0;
        for s in simples {
            let act = &s.action[b];
            for i in 0..s.dim {
                for j in 0..s.dim {
                    m.set(off + i * s.dim + j, b, act.get(i, j));
                }
            }
            off += s.dim * s.dim;
        }
    }
    m.kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::to_sparse;
    use gf_core::Field;

    pub(crate) fn truncated(p: u16) -> AlgebraRef {
        let f = Field::new(p, 1).unwrap();
        let dim = p as usize;
        let mut mult = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let mut row = vec![0u16; dim];
                if i + j < dim {
                    row[i + j] = 1;
                }
                mult.push(to_sparse(&row));
            }
        }
        let mut unit = vec![0u16; dim];
        unit[0] = 1;
        let mut eps = vec![0u16; dim];
        eps[0] = 1;
        Algebra::build(
            f,
            (0..dim).map(|i| format!("t{i}")).collect(),
            mult,
            unit,
            Some(eps),
        )
        .unwrap()
    }

    #[test]
    fn truncated_polynomial_radical() {
        let a = truncated(3);
        let r = radical(&a).unwrap();
        assert_eq!(r.basis.rows(), 2);
        assert_eq!(r.nilpotency_index, 3);
        assert!(r.is_local);
    }

    #[test]
    fn matrix_algebra_is_semisimple() {
        let f = Field::new(3, 1).unwrap();
        let idx = |i: usize, j: usize| i * 2 + j;
        let mut mult = vec![vec![0u16; 4]; 16];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        if j == k {
                            mult[idx(i, j) * 4 + idx(k, l)][idx(i, l)] = 1;
                        }
                    }
                }
            }
        }
        let a = Algebra::build(
            f,
            vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()],
            mult.iter().map(|r| to_sparse(r)).collect(),
            vec![1, 0, 0, 1],
            None,
        )
        .unwrap();
        let r = radical(&a).unwrap();
        assert_eq!(r.basis.rows(), 0);
        assert!(!r.is_local);
    }

    #[test]
    fn radical_elements_are_idempotent_free() {
        let a = truncated(5);
        let r = radical(&a).unwrap();
        let mut rng = SplitMix64::new(77);
        for _ in 0..50 {
            // random element of rad
            let mut v = vec![0u16; a.dim()];
            for bi in 0..r.basis.rows() {
                let c = rng.below(5) as u16;
                for (x, &b) in v.iter_mut().zip(r.basis.row(bi)) {
                    let f = a.field();
                    *x = f.add(*x, f.mul(c, b));
                }
            }
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            let sq = a.multiply(&v, &v);
            assert_ne!(sq, v, "nonzero idempotent found inside the radical");
        }
    }
}
