use std::sync::Arc;

use gf_core::{solve_linear, Matrix};

use crate::algebra::AlgebraRef;
use crate::error::AlgebraError;

/// A finite-dimensional left module, given by one action matrix per algebra
/// basis element.
#[derive(Clone)]
pub struct ModuleRep {
    pub algebra: AlgebraRef,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl std::fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModuleRep(dim {} over {:?})", self.dim, self.algebra)
    }
}

/// Pair limit for exhaustive action validation; beyond it a seeded random
/// sample of basis pairs is checked instead.
const ACTION_CHECK_BUDGET: usize = 200_000_000;

impl ModuleRep {
    pub fn new(algebra: AlgebraRef, action: Vec<Matrix>) -> Result<ModuleRep, AlgebraError> {
        let dim = action.first().map_or(0, |m| m.rows());
        let m = ModuleRep {
            algebra,
            dim,
            action,
        };
        m.validate()?;
        Ok(m)
    }

    /// Construct without validation (for internal constructions whose
    /// correctness is structural).
    pub fn new_unchecked(algebra: AlgebraRef, action: Vec<Matrix>) -> ModuleRep {
        let dim = action.first().map_or(0, |m| m.rows());
        ModuleRep {
            algebra,
            dim,
            action,
        }
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.algebra.dim();
        if self.action.len() != n {
            return Err(AlgebraError::Shape(format!(
                "expected {} action matrices, got {}",
                n,
                self.action.len()
            )));
        }
        for m in &self.action {
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err(AlgebraError::Shape("action matrix shape".into()));
            }
        }
        // rho(unit) = id
        if !self.act_element(self.algebra.unit()).is_identity() && self.dim > 0 {
            return Err(AlgebraError::BadUnit(usize::MAX));
        }
        // rho(b_i) rho(b_j) = sum c_ij^k rho(b_k)
        let cost = n * n * self.dim.pow(3).max(1);
        if cost <= ACTION_CHECK_BUDGET {
            for i in 0..n {
                for j in 0..n {
                    if !self.check_pair(i, j) {
                        return Err(AlgebraError::BadModuleAction(i, j));
                    }
                }
            }
        } else {
            let mut rng = gf_core::SplitMix64::new(0x0AC710);
            for _ in 0..512 {
                let i = rng.below(n as u64) as usize;
                let j = rng.below(n as u64) as usize;
                if !self.check_pair(i, j) {
                    return Err(AlgebraError::BadModuleAction(i, j));
                }
            }
        }
        Ok(())
    }

    fn check_pair(&self, i: usize, j: usize) -> bool {
        let f = self.algebra.field();
        let lhs = self.action[i].mul(&self.action[j]);
        let mut rhs = Matrix::zeros(f.clone(), self.dim, self.dim);
        for &(k, c) in &self.algebra.product_basis(i, j) {
            rhs = rhs.add(&self.action[k as usize].scale(c));
        }
        lhs == rhs
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act_element(&self, x: &[u16]) -> Matrix {
        let f = self.algebra.field();
        let mut m = Matrix::zeros(f.clone(), self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.action[i].scale(c));
            }
        }
        m
    }

    /// The zero module.
    pub fn zero(algebra: &AlgebraRef) -> ModuleRep {
        let f = algebra.field();
        let action = (0..algebra.dim())
            .map(|_| Matrix::zeros(f.clone(), 0, 0))
            .collect();
        ModuleRep {
            algebra: algebra.clone(),
            dim: 0,
            action,
        }
    }

    /// The regular module `A` acting on itself on the left.
    pub fn regular(algebra: &AlgebraRef) -> ModuleRep {
        let action = (0..algebra.dim())
            .map(|i| algebra.left_mult_matrix(&algebra.basis_vector(i)))
            .collect();
        ModuleRep {
            algebra: algebra.clone(),
            dim: algebra.dim(),
            action,
        }
    }

    /// The one-dimensional module given by the augmentation.
    pub fn trivial(algebra: &AlgebraRef) -> ModuleRep {
        let eps = algebra
            .augmentation()
            .expect("trivial module requires an augmentation");
        let f = algebra.field();
        let action = eps
            .iter()
            .map(|&c| {
                let mut m = Matrix::zeros(f.clone(), 1, 1);
                m.set(0, 0, c);
                m
            })
            .collect();
        ModuleRep {
            algebra: algebra.clone(),
            dim: 1,
            action,
        }
    }

    /// One-dimensional module from an arbitrary character (algebra map to k),
    /// given as its value on each basis element.
    pub fn character(algebra: &AlgebraRef, chi: &[u16]) -> ModuleRep {
        let f = algebra.field();
        let action = chi
            .iter()
            .map(|&c| {
                let mut m = Matrix::zeros(f.clone(), 1, 1);
                m.set(0, 0, c);
                m
            })
            .collect();
        ModuleRep {
            algebra: algebra.clone(),
            dim: 1,
            action,
        }
    }

    /// Free module `A^r`, components acted on by left multiplication.
    pub fn free(algebra: &AlgebraRef, r: usize) -> ModuleRep {
        let n = algebra.dim();
        let f = algebra.field();
        let reg = ModuleRep::regular(algebra);
        let action = (0..n)
            .map(|i| {
                let block = &reg.action[i];
                let mut m = Matrix::zeros(f.clone(), n * r, n * r);
                for c in 0..r {
                    for a in 0..n {
                        for b in 0..n {
                            let v = block.get(a, b);
                            if v != 0 {
                                m.set(c * n + a, c * n + b, v);
                            }
                        }
                    }
                }
                m
            })
            .collect();
        ModuleRep {
            algebra: algebra.clone(),
            dim: n * r,
            action,
        }
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> ModuleRep {
        assert!(Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra.dim() == other.algebra.dim());
        let f = self.algebra.field();
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(f.clone(), self.dim + other.dim, self.dim + other.dim);
                for i in 0..a.rows() {
                    for j in 0..a.cols() {
                        let v = a.get(i, j);
                        if v != 0 {
                            m.set(i, j, v);
                        }
                    }
                }
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        let v = b.get(i, j);
                        if v != 0 {
                            m.set(self.dim + i, self.dim + j, v);
                        }
                    }
                }
                m
            })
            .collect();
        ModuleRep {
            algebra: self.algebra.clone(),
            dim: self.dim + other.dim,
            action,
        }
    }

    /// Submodule spanned by the rows of `basis` (must be A-stable; rows are
    /// brought to reduced echelon form first). Returns the module together
    /// with the echelonized basis (rows = new basis in ambient coordinates).
    pub fn submodule(&self, basis: &Matrix) -> (ModuleRep, Matrix) {
        let (ech, pivots) = basis.rref();
        let r = pivots.len();
        let ech = ech.row_slice(0, r);
        let f = self.algebra.field();
        let action = self
            .action
            .iter()
            .map(|am| {
                // rows of ech * am^T give images of basis vectors
                let img = ech.mul(&am.transpose());
                // express each image row in the echelon basis: because ech is
                // reduced, coordinates are read off at pivot columns
                let mut coords = Matrix::zeros(f.clone(), r, r);
                for i in 0..r {
                    let mut rem = img.row(i).to_vec();
                    for (bi, &pc) in pivots.iter().enumerate() {
                        let c = rem[pc];
                        if c != 0 {
                            coords.set(i, bi, c);
                            for (x, &e) in rem.iter_mut().zip(ech.row(bi)) {
                                *x = f.sub(*x, f.mul(c, e));
                            }
                        }
                    }
                    assert!(rem.iter().all(|&x| x == 0), "basis not A-stable");
                }
                // coords rows are images of basis vectors: action matrix is transpose
                coords.transpose()
            })
            .collect();
        (
            ModuleRep {
                algebra: self.algebra.clone(),
                dim: r,
                action,
            },
            ech,
        )
    }

    /// Quotient by the A-stable row space of `sub` (echelonized internally).
    /// Returns the quotient module and the projection matrix (quotient basis
    /// = ambient basis vectors at non-pivot coordinates).
    pub fn quotient(&self, sub: &Matrix) -> (ModuleRep, Matrix) {
        let (ech, pivots) = sub.rref();
        let r = pivots.len();
        let ech = ech.row_slice(0, r);
        let f = self.algebra.field();
        let mut is_pivot = vec![false; self.dim];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.dim).filter(|&c| !is_pivot[c]).collect();
        let qdim = free.len();
        // projection: e_c -> e_c for free c; pivot coords rewritten via echelon rows
        let mut proj = Matrix::zeros(f.clone(), qdim, self.dim);
        for (qi, &c) in free.iter().enumerate() {
            proj.set(qi, c, 1);
        }
        for (bi, &pc) in pivots.iter().enumerate() {
            // e_pc = -(sum over free coords of ech row bi) modulo the submodule
            for (qi, &c) in free.iter().enumerate() {
                let v = ech.get(bi, c);
                if v != 0 {
                    proj.set(qi, pc, f.neg(v));
                }
            }
        }
        let action = self
            .action
            .iter()
            .map(|am| {
                // quotient action: proj . am . include(free coords)
                let mut inc = Matrix::zeros(f.clone(), self.dim, qdim);
                for (qi, &c) in free.iter().enumerate() {
                    inc.set(c, qi, 1);
                }
                proj.mul(&am.mul(&inc))
            })
            .collect();
        (
            ModuleRep {
                algebra: self.algebra.clone(),
                dim: qdim,
                action,
            },
            proj,
        )
    }

    /// Row-space of `rad . M` for a given radical basis (rows).
    pub fn radical_submodule(&self, rad_basis: &Matrix) -> Matrix {
        let f = self.algebra.field();
        let mut rows: Vec<Vec<u16>> = Vec::new();
        for ri in 0..rad_basis.rows() {
            let act = self.act_element(rad_basis.row(ri));
            for j in 0..self.dim {
                let mut col = Vec::with_capacity(self.dim);
                for i in 0..self.dim {
                    col.push(act.get(i, j));
                }
                if col.iter().any(|&x| x != 0) {
                    rows.push(col);
                }
            }
        }
        if rows.is_empty() {
            return Matrix::zeros(f.clone(), 0, self.dim);
        }
        let m = Matrix::from_rows(f.clone(), rows);
        let (ech, piv) = m.rref();
        ech.row_slice(0, piv.len())
    }

    /// Radical filtration: dimensions of `M, rad M, rad^2 M, ...` down to
    /// zero (strictly decreasing until it stabilizes at the socle of the
    /// filtration).
    pub fn radical_filtration(&self, rad_basis: &Matrix) -> Vec<usize> {
        let mut dims = vec![self.dim];
        let mut current = self.clone();
        loop {
            let sub = current.radical_submodule(rad_basis);
            if sub.rows() == 0 {
                dims.push(0);
                break;
            }
            if sub.rows() == *dims.last().unwrap() {
                break;
            }
            dims.push(sub.rows());
            let (next, _) = current.submodule(&sub);
            current = next;
        }
        dims
    }

    /// Base change along the prime-subfield embedding.
    pub fn base_change(&self, target_algebra: &AlgebraRef) -> ModuleRep {
        let tf = target_algebra.field();
        ModuleRep {
            algebra: target_algebra.clone(),
            dim: self.dim,
            action: self.action.iter().map(|m| m.embed(tf)).collect(),
        }
    }

    /// dim_k Hom_A(self, other): solve the intertwiner equations
    /// `T rho_M(b_i) = rho_N(b_i) T` for all basis elements.
    pub fn hom_dim(&self, other: &ModuleRep) -> usize {
        let f = self.algebra.field();
        let n = self.algebra.dim();
        let (dm, dn) = (self.dim, other.dim);
        if dm == 0 || dn == 0 {
            return 0;
        }
        // unknowns: T (dn x dm), flattened row-major
        let mut rows: Vec<Vec<u16>> = Vec::new();
        for b in 0..n {
            let rm = &self.action[b];
            let rn = &other.action[b];
            // (T rm - rn T)[i][j] = sum_k T[i][k] rm[k][j] - sum_k rn[i][k] T[k][j]
            for i in 0..dn {
                for j in 0..dm {
                    let mut row = vec![0u16; dn * dm];
                    for k in 0..dm {
                        let v = rm.get(k, j);
                        if v != 0 {
                            row[i * dm + k] = f.add(row[i * dm + k], v);
                        }
                    }
                    for k in 0..dn {
                        let v = rn.get(i, k);
                        if v != 0 {
                            row[k * dm + j] = f.sub(row[k * dm + j], v);
                        }
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
        if rows.is_empty() {
            return dn * dm;
        }
        let m = Matrix::from_rows(f.clone(), rows);
        m.nullity()
    }

    /// Restrict along a verified algebra map `g: B -> A` to get a B-module.
    pub fn restrict_along(&self, map: &crate::maps::AlgebraMap) -> ModuleRep {
        assert_eq!(map.target.dim(), self.algebra.dim());
        let action = (0..map.source.dim())
            .map(|i| {
                let img = map.apply_basis(i);
                self.act_element(&img)
            })
            .collect();
        ModuleRep {
            algebra: map.source.clone(),
            dim: self.dim,
            action,
        }
    }
}

/// Smallest A-stable row space containing the given rows ("spin-up").
pub fn spin(module: &ModuleRep, seeds: &Matrix) -> Matrix {
    let f = module.algebra.field().clone();
    let dim = module.dim;
    // maintain reduced echelon rows
    let mut basis: Vec<Vec<u16>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut queue: Vec<Vec<u16>> = (0..seeds.rows()).map(|i| seeds.row(i).to_vec()).collect();
    let reduce = |v: &mut Vec<u16>, basis: &[Vec<u16>], pivots: &[usize], f: &gf_core::FieldRef| {
        for (b, &p) in basis.iter().zip(pivots) {
            let c = v[p];
            if c != 0 {
                for (x, &e) in v.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(c, e));
                }
            }
        }
    };
    while let Some(mut v) = queue.pop() {
        reduce(&mut v, &basis, &pivots, &f);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            continue;
        };
        let inv = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // back-substitute into existing rows
        for (b, _) in basis.iter_mut().zip(&pivots) {
            let c = b[p];
            if c != 0 {
                for (x, &e) in b.iter_mut().zip(&v) {
                    *x = f.sub(*x, f.mul(c, e));
                }
            }
        }
        // enqueue images under all basis actions
        for am in &module.action {
            let img = am.apply(&v);
            if img.iter().any(|&x| x != 0) {
                queue.push(img);
            }
        }
        basis.push(v);
        pivots.push(p);
        if basis.len() == dim {
            break;
        }
    }
    if basis.is_empty() {
        return Matrix::zeros(f.clone(), 0, dim);
    }
    // sort rows by pivot for a canonical reduced form
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by_key(|&i| pivots[i]);
    let rows: Vec<Vec<u16>> = idx.into_iter().map(|i| basis[i].clone()).collect();
    Matrix::from_rows(f, rows)
}

/// Express rows of `vectors` in the reduced-echelon `basis` (rows); panics if
/// not in the span. Returns the coordinate matrix.
pub fn coords_in_basis(vectors: &Matrix, basis: &Matrix, pivots: &[usize]) -> Matrix {
    let f = vectors.field().clone();
    let mut out = Matrix::zeros(f.clone(), vectors.rows(), basis.rows());
    for i in 0..vectors.rows() {
        let mut rem = vectors.row(i).to_vec();
        for (bi, &p) in pivots.iter().enumerate() {
            let c = rem[p];
            if c != 0 {
                out.set(i, bi, c);
                for (x, &e) in rem.iter_mut().zip(basis.row(bi)) {
                    *x = f.sub(*x, f.mul(c, e));
                }
            }
        }
        assert!(rem.iter().all(|&x| x == 0), "vector not in span of basis");
    }
    out
}

/// Solve in module terms: find any `x` with `M x = b`; None if inconsistent.
pub fn solve_vec(m: &Matrix, b: &[u16]) -> Option<Vec<u16>> {
    let bm = Matrix::col_vec(m.field().clone(), b);
    match solve_linear(m, &bm) {
        Ok(sol) => {
            let mut out = Vec::with_capacity(m.cols());
            for i in 0..m.cols() {
                out.push(sol.particular.get(i, 0));
            }
            Some(out)
        }
        Err(_) => None,
    }
}

