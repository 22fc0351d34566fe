use std::sync::{Arc, OnceLock};

use gf_core::{FieldRef, Matrix, SplitMix64};

use crate::error::{AlgebraError, TripleWitness};

/// Sparse row of structure constants: `b_i b_j = sum_k c (b_k)` stored as
/// `(k, c)` pairs with strictly increasing `k`.
pub type SparseVec = Vec<(u32, u16)>;

/// Dimension above which associativity and unit checks switch from
/// exhaustive basis triples to seeded random triples.
pub const EXHAUSTIVE_LIMIT: usize = 200;

/// Dimension up to which smash products materialize their full
/// multiplication table; larger products compute rows on demand.
pub const EAGER_LIMIT: usize = 256;

const RANDOM_TRIPLES: usize = 2000;

/// Multiplication data: either a materialized table or the factored form of
/// a smash product `A # H`, whose rows are computed on demand.
#[derive(Clone)]
pub enum MultSource {
    Table(Vec<SparseVec>),
    Smash(Arc<SmashMult>),
}

/// Factored multiplication of `A # H`:
/// `(a_i # h_j)(a_k # h_l) = sum a_i (h_j(1) . a_k) # h_j(2) h_l`.
/// Basis index of `a_i # h_j` is `i * h_dim + j` (left factor major).
pub struct SmashMult {
    pub a_dim: usize,
    pub h_dim: usize,
    pub a_mult: Vec<SparseVec>,
    pub h_mult: Vec<SparseVec>,
    /// One `a_dim x a_dim` action matrix per `H`-basis element.
    pub action: Vec<Matrix>,
    /// `Delta(h_j) = sum (s, t, c)` sparse.
    pub h_comult: Vec<Vec<(u32, u32, u16)>>,
    pub a_unit: Vec<u16>,
    pub h_unit: Vec<u16>,
    /// Factor augmentations, when both factors are augmented.
    pub a_aug: Option<Vec<u16>>,
    pub h_aug: Option<Vec<u16>>,
}

/// A finite-dimensional associative algebra presented by structure constants,
/// with optional augmentation (an algebra map to the base field).
pub struct Algebra {
    pub(crate) field: FieldRef,
    pub(crate) dim: usize,
    pub(crate) labels: Vec<String>,
    pub(crate) unit: Vec<u16>,
    pub(crate) augmentation: Option<Vec<u16>>,
    pub(crate) mult: MultSource,
    pub(crate) hash: OnceLock<String>,
}

pub type AlgebraRef = Arc<Algebra>;

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {}, over {:?})", self.dim, self.field)
    }
}

impl Algebra {
    /// Build and validate an algebra from an explicit sparse multiplication
    /// table. Associativity and unit laws are checked exhaustively up to
    /// dimension 200 and on seeded random triples beyond that.
    pub fn build(
        field: FieldRef,
        labels: Vec<String>,
        mult: Vec<SparseVec>,
        unit: Vec<u16>,
        augmentation: Option<Vec<u16>>,
    ) -> Result<AlgebraRef, AlgebraError> {
        let dim = labels.len();
        if mult.len() != dim * dim || unit.len() != dim {
            return Err(AlgebraError::Shape(format!(
                "dim {}, mult rows {}, unit len {}",
                dim,
                mult.len(),
                unit.len()
            )));
        }
        let alg = Algebra {
            field,
            dim,
            labels,
            unit,
            augmentation,
            mult: MultSource::Table(mult),
            hash: OnceLock::new(),
        };
        alg.validate()?;
        Ok(Arc::new(alg))
    }

    /// Wrap a factored smash-product multiplication. The table is
    /// materialized for small dimensions; validation policy is as in `build`.
    pub fn from_smash(
        field: FieldRef,
        labels: Vec<String>,
        smash: SmashMult,
        unit: Vec<u16>,
        augmentation: Option<Vec<u16>>,
    ) -> Result<AlgebraRef, AlgebraError> {
        let dim = labels.len();
        assert_eq!(dim, smash.a_dim * smash.h_dim);
        let mult = if dim <= EAGER_LIMIT {
            let mut table = Vec::with_capacity(dim * dim);
            for i in 0..dim {
                for j in 0..dim {
                    table.push(smash_row(&field, &smash, i, j));
                }
            }
            MultSource::Table(table)
        } else {
            MultSource::Smash(Arc::new(smash))
        };
        let alg = Algebra {
            field,
            dim,
            labels,
            unit,
            augmentation,
            mult,
            hash: OnceLock::new(),
        };
        alg.validate()?;
        Ok(Arc::new(alg))
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn unit(&self) -> &[u16] {
        &self.unit
    }
    pub fn augmentation(&self) -> Option<&[u16]> {
        self.augmentation.as_deref()
    }

    /// Sparse product of two basis elements.
    pub fn product_basis(&self, i: usize, j: usize) -> SparseVec {
        match &self.mult {
            MultSource::Table(t) => t[i * self.dim + j].clone(),
            MultSource::Smash(s) => smash_row(&self.field, s, i, j),
        }
    }

    /// Product of two coefficient vectors.
    pub fn multiply(&self, x: &[u16], y: &[u16]) -> Vec<u16> {
        let f = &self.field;
        let mut out = vec![0u16; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul(xi, yj);
                for &(k, v) in &self.product_basis(i, j) {
                    out[k as usize] = f.add(out[k as usize], f.mul(c, v));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` (columns indexed by basis).
    pub fn left_mult_matrix(&self, x: &[u16]) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::zeros(self.field.clone(), self.dim, self.dim);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for j in 0..self.dim {
                for &(k, v) in &self.product_basis(i, j) {
                    let cur = m.get(k as usize, j);
                    m.set(k as usize, j, f.add(cur, f.mul(xi, v)));
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `x`.
    pub fn right_mult_matrix(&self, x: &[u16]) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::zeros(self.field.clone(), self.dim, self.dim);
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for i in 0..self.dim {
                for &(k, v) in &self.product_basis(i, j) {
                    let cur = m.get(k as usize, i);
                    m.set(k as usize, i, f.add(cur, f.mul(xj, v)));
                }
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u16> {
        let mut v = vec![0u16; self.dim];
        v[i] = 1;
        v
    }

    /// Evaluate the augmentation on a coefficient vector.
    pub fn augment(&self, x: &[u16]) -> Option<u16> {
        let eps = self.augmentation.as_ref()?;
        let f = &self.field;
        let mut acc = 0;
        for (&c, &e) in x.iter().zip(eps) {
            if c != 0 && e != 0 {
                acc = f.add(acc, f.mul(c, e));
            }
        }
        Some(acc)
    }

    pub fn power(&self, x: &[u16], n: usize) -> Vec<u16> {
        let mut acc = self.unit.clone();
        for _ in 0..n {
            acc = self.multiply(&acc, x);
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.product_basis(i, j) != self.product_basis(j, i) {
                    return false;
                }
            }
        }
        true
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let f = &self.field;
        // unit laws
        for i in 0..self.dim {
            let b = self.basis_vector(i);
            if self.multiply(&self.unit, &b) != b || self.multiply(&b, &self.unit) != b {
                return Err(AlgebraError::BadUnit(i));
            }
        }
        // augmentation multiplicative, eps(1) = 1
        if let Some(eps) = &self.augmentation {
            if self.augment(&self.unit) != Some(1) {
                return Err(AlgebraError::AugmentationNotMultiplicative(usize::MAX, 0));
            }
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let mut prod_eps = 0u16;
                    for &(k, v) in &self.product_basis(i, j) {
                        prod_eps = f.add(prod_eps, f.mul(v, eps[k as usize]));
                    }
                    if prod_eps != f.mul(eps[i], eps[j]) {
                        return Err(AlgebraError::AugmentationNotMultiplicative(i, j));
                    }
                }
            }
        }
        // associativity
        if self.dim <= EXHAUSTIVE_LIMIT {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let pij = self.product_basis(i, j);
                    for k in 0..self.dim {
                        if !self.assoc_triple(&pij, i, j, k) {
                            return Err(AlgebraError::NotAssociative(TripleWitness { i, j, k }));
                        }
                    }
                }
            }
        } else {
            let mut rng = SplitMix64::new(0xA550C1A7E);
            for _ in 0..RANDOM_TRIPLES {
                let i = rng.below(self.dim as u64) as usize;
                let j = rng.below(self.dim as u64) as usize;
                let k = rng.below(self.dim as u64) as usize;
                let pij = self.product_basis(i, j);
                if !self.assoc_triple(&pij, i, j, k) {
                    return Err(AlgebraError::NotAssociative(TripleWitness { i, j, k }));
                }
            }
        }
        Ok(())
    }

    /// Check `(b_i b_j) b_k == b_i (b_j b_k)` given the sparse row for `b_i b_j`.
    fn assoc_triple(&self, pij: &SparseVec, _i: usize, j: usize, k: usize) -> bool {
        let f = &self.field;
        let mut lhs = vec![0u16; self.dim];
        for &(m, c) in pij {
            for &(t, v) in &self.product_basis(m as usize, k) {
                lhs[t as usize] = f.add(lhs[t as usize], f.mul(c, v));
            }
        }
        let pjk = self.product_basis(j, k);
        let mut rhs = vec![0u16; self.dim];
        for &(m, c) in &pjk {
            for &(t, v) in &self.product_basis(_i, m as usize) {
                rhs[t as usize] = f.add(rhs[t as usize], f.mul(c, v));
            }
        }
        lhs == rhs
    }

    /// Base change along the prime-subfield embedding. Structure constants
    /// of prime-field elements keep their codes in every extension.
    pub fn base_change(self: &Arc<Self>, target: &FieldRef) -> AlgebraRef {
        if **target == **self.field() {
            return self.clone();
        }
        assert!(target.extends(&self.field));
        let mult = match &self.mult {
            MultSource::Table(t) => MultSource::Table(t.clone()),
            MultSource::Smash(s) => MultSource::Smash(Arc::new(SmashMult {
                a_dim: s.a_dim,
                h_dim: s.h_dim,
                a_mult: s.a_mult.clone(),
                h_mult: s.h_mult.clone(),
                action: s.action.iter().map(|m| m.embed(target)).collect(),
                h_comult: s.h_comult.clone(),
                a_unit: s.a_unit.clone(),
                h_unit: s.h_unit.clone(),
                a_aug: s.a_aug.clone(),
                h_aug: s.h_aug.clone(),
            })),
        };
        Arc::new(Algebra {
            field: target.clone(),
            dim: self.dim,
            labels: self.labels.clone(),
            unit: self.unit.clone(),
            augmentation: self.augmentation.clone(),
            mult,
            hash: OnceLock::new(),
        })
    }

    /// Tensor product of algebras with componentwise multiplication,
    /// under the lexicographic (left major) basis order.
    pub fn tensor_product(a: &Algebra, b: &Algebra) -> Result<AlgebraRef, AlgebraError> {
        assert_eq!(**a.field(), **b.field());
        let f = a.field().clone();
        let dim = a.dim * b.dim;
        let mut labels = Vec::with_capacity(dim);
        for la in &a.labels {
            for lb in &b.labels {
                labels.push(format!("{la}*{lb}"));
            }
        }
        let mut mult = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            let (ia, ib) = (i / b.dim, i % b.dim);
            for j in 0..dim {
                let (ja, jb) = (j / b.dim, j % b.dim);
                let pa = a.product_basis(ia, ja);
                let pb = b.product_basis(ib, jb);
                let mut row = Vec::with_capacity(pa.len() * pb.len());
                for &(ka, ca) in &pa {
                    for &(kb, cb) in &pb {
                        row.push((ka * b.dim as u32 + kb, f.mul(ca, cb)));
                    }
                }
                row.sort_unstable_by_key(|&(k, _)| k);
                mult.push(row);
            }
        }
        let mut unit = vec![0u16; dim];
        for (ia, &ua) in a.unit.iter().enumerate() {
            for (ib, &ub) in b.unit.iter().enumerate() {
                unit[ia * b.dim + ib] = f.mul(ua, ub);
            }
        }
        let augmentation = match (&a.augmentation, &b.augmentation) {
            (Some(ea), Some(eb)) => {
                let mut eps = vec![0u16; dim];
                for (ia, &xa) in ea.iter().enumerate() {
                    for (ib, &xb) in eb.iter().enumerate() {
                        eps[ia * b.dim + ib] = f.mul(xa, xb);
                    }
                }
                Some(eps)
            }
            _ => None,
        };
        Algebra::build(f, labels, mult, unit, augmentation)
    }
}

/// Compute one row of a smash-product multiplication table.
fn smash_row(field: &FieldRef, s: &SmashMult, left: usize, right: usize) -> SparseVec {
    let f = field;
    let (i, j) = (left / s.h_dim, left % s.h_dim);
    let (k, l) = (right / s.h_dim, right % s.h_dim);
    let mut dense = vec![0u16; s.a_dim * s.h_dim];
    for &(hs, ht, c) in &s.h_comult[j] {
        // v = h_s . a_k  (column k of the action matrix)
        let act = &s.action[hs as usize];
        // w = a_i * v in A
        let mut w = vec![0u16; s.a_dim];
        for m in 0..s.a_dim {
            let vm = act.get(m, k);
            if vm == 0 {
                continue;
            }
            for &(t, av) in &s.a_mult[i * s.a_dim + m] {
                w[t as usize] = f.add(w[t as usize], f.mul(vm, av));
            }
        }
        // u = h_t * h_l in H
        for &(hu, hv) in &s.h_mult[ht as usize * s.h_dim + l] {
            let chv = f.mul(c, hv);
            if chv == 0 {
                continue;
            }
            for (m, &wm) in w.iter().enumerate() {
                if wm != 0 {
                    let idx = m * s.h_dim + hu as usize;
                    dense[idx] = f.add(dense[idx], f.mul(wm, chv));
                }
            }
        }
    }
    dense
        .into_iter()
        .enumerate()
        .filter(|&(_, v)| v != 0)
        .map(|(k, v)| (k as u32, v))
        .collect()
}

/// Convert a dense coefficient vector into a sparse row.
pub fn to_sparse(v: &[u16]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(k, &c)| (k as u32, c))
        .collect()
}

/// Expand a sparse row into a dense vector.
pub fn to_dense(v: &SparseVec, dim: usize) -> Vec<u16> {
    let mut out = vec![0u16; dim];
    for &(k, c) in v {
        out[k as usize] = c;
    }
    out
}
