//! Verified algebra maps and restriction of modules along them.

use gf_core::{Matrix, SplitMix64};

use crate::algebra::AlgebraRef;
use crate::error::AlgebraError;

/// Pairs above which multiplicativity is spot-checked on seeded random pairs
/// instead of exhaustively.
const EXHAUSTIVE_PAIRS: usize = 60_000;
const RANDOM_PAIRS: usize = 4000;

/// An algebra map `f : source -> target`, stored as the matrix whose column
/// `i` is `f(b_i)`. Verification checks the unit and multiplicativity
/// (exhaustive on basis pairs up to a budget, seeded random beyond).
#[derive(Clone)]
pub struct AlgebraMap {
    pub source: AlgebraRef,
    pub target: AlgebraRef,
    pub matrix: Matrix,
}

impl std::fmt::Debug for AlgebraMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "AlgebraMap({} -> {})",
            self.source.dim(),
            self.target.dim()
        )
    }
}

impl AlgebraMap {
    pub fn new(
        source: AlgebraRef,
        target: AlgebraRef,
        matrix: Matrix,
    ) -> Result<AlgebraMap, AlgebraError> {
        let m = AlgebraMap {
            source,
            target,
            matrix,
        };
        m.verify()?;
        Ok(m)
    }

    pub fn new_unchecked(source: AlgebraRef, target: AlgebraRef, matrix: Matrix) -> AlgebraMap {
        AlgebraMap {
            source,
            target,
            matrix,
        }
    }

    pub fn verify(&self) -> Result<(), AlgebraError> {
        let n = self.source.dim();
        if self.matrix.cols() != n || self.matrix.rows() != self.target.dim() {
            return Err(AlgebraError::Shape("algebra map matrix shape".into()));
        }
        if self.apply(self.source.unit()) != self.target.unit() {
            return Err(AlgebraError::NotAlgebraMap(usize::MAX, usize::MAX));
        }
        let check = |i: usize, j: usize| -> bool {
            let fi = self.apply_basis(i);
            let fj = self.apply_basis(j);
            let lhs = self.target.multiply(&fi, &fj);
            let mut rhs = vec![0u16; self.target.dim()];
            let f = self.target.field();
            for &(k, c) in &self.source.product_basis(i, j) {
                let fk = self.apply_basis(k as usize);
                for (x, &v) in rhs.iter_mut().zip(&fk) {
                    *x = f.add(*x, f.mul(c, v));
                }
            }
            lhs == rhs
        };
        let target_eager = crate::json::is_eager(&self.target);
        if n * n <= EXHAUSTIVE_PAIRS && (target_eager || n * n <= 4096) {
            for i in 0..n {
                for j in 0..n {
                    if !check(i, j) {
                        return Err(AlgebraError::NotAlgebraMap(i, j));
                    }
                }
            }
        } else {
            let mut rng = SplitMix64::new(0xA19E_B8A);
            for _ in 0..RANDOM_PAIRS {
                let i = rng.below(n as u64) as usize;
                let j = rng.below(n as u64) as usize;
                if !check(i, j) {
                    return Err(AlgebraError::NotAlgebraMap(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, x: &[u16]) -> Vec<u16> {
        self.matrix.apply(x)
    }

    pub fn apply_basis(&self, i: usize) -> Vec<u16> {
        let mut out = Vec::with_capacity(self.matrix.rows());
        for r in 0..self.matrix.rows() {
            out.push(self.matrix.get(r, i));
        }
        out
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && self.matrix.rank() == self.source.dim()
    }

    /// Whether the map intertwines the augmentations.
    pub fn preserves_augmentation(&self) -> bool {
        match (self.source.augmentation(), self.target.augmentation()) {
            (Some(_), Some(_)) => (0..self.source.dim()).all(|i| {
                let img = self.apply_basis(i);
                self.target.augment(&img) == self.source.augment(&self.source.basis_vector(i))
            }),
            _ => false,
        }
    }

    /// Compose `self` after `g` (so `self.compose(g) = self . g`).
    pub fn compose(&self, g: &AlgebraMap) -> AlgebraMap {
        assert_eq!(g.target.dim(), self.source.dim());
        AlgebraMap {
            source: g.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&g.matrix),
        }
    }
}
