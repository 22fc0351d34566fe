use serde::{Deserialize, Serialize};

use crate::error::GfError;
use crate::matrix::Matrix;

/// Jordan type of a nilpotent operator: the weakly decreasing partition of
/// block sizes. On a `K[t]/(t^p)`-module the operator is projective (free)
/// exactly when every part equals `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanType {
    pub parts: Vec<usize>,
    pub ambient_dim: usize,
}

impl JordanType {
    /// All parts equal to `p`.
    pub fn is_free_over_truncated(&self, p: usize) -> bool {
        self.parts.iter().all(|&x| x == p)
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Jordan type of a nilpotent matrix `N` from the rank sequence:
/// `#{parts >= k} = rank(N^{k-1}) - rank(N^k)`.
///
/// `p_bound`, when nonzero, asserts `N^p = 0` up front so every part is
/// at most `p`.
pub fn jordan_type(n: &Matrix, p_bound: usize) -> Result<JordanType, GfError> {
    assert_eq!(n.rows(), n.cols(), "operator must be square");
    let dim = n.rows();
    if dim == 0 {
        return Ok(JordanType {
            parts: vec![],
            ambient_dim: 0,
        });
    }
    let mut ranks = vec![dim];
    let mut power = n.clone();
    let limit = if p_bound > 0 { p_bound } else { dim };
    loop {
        let r = power.rank();
        ranks.push(r);
        if r == 0 {
            break;
        }
        if ranks.len() > limit {
            return Err(GfError::NotNilpotent(limit));
        }
        power = power.mul(n);
    }
    let mut parts = Vec::new();
    for k in 1..ranks.len() {
        let count = ranks[k - 1] - ranks[k];
        // count = number of parts >= k; emit the difference against k+1
        let next = if k < ranks.len() - 1 {
            ranks[k] - ranks[k + 1]
        } else {
            0
        };
        for _ in 0..count.saturating_sub(next) {
            parts.push(k);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert_eq!(parts.iter().sum::<usize>(), dim);
    Ok(JordanType {
        parts,
        ambient_dim: dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::prng::SplitMix64;

    #[test]
    fn zero_operator() {
        let f = Field::new(3, 1).unwrap();
        let z = Matrix::zeros(f, 3, 3);
        let jt = jordan_type(&z, 3).unwrap();
        assert_eq!(jt.parts, vec![1, 1, 1]);
    }

    #[test]
    fn single_block() {
        let f = Field::new(3, 1).unwrap();
        let n = Matrix::from_fn(f, 3, 3, |i, j| u16::from(j == i + 1));
        let jt = jordan_type(&n, 3).unwrap();
        assert_eq!(jt.parts, vec![3]);
        assert!(jt.is_free_over_truncated(3));
    }

    #[test]
    fn truncated_polynomial_ring_multiplication() {
        // N = x + y on k[x,y]/(x^3,y^3) over F_3: ranks 6, 3, 0 give [3,3,3].
        // Basis x^i y^j ordered lexicographically, index 3*i + j.
        let f = Field::new(3, 1).unwrap();
        let mut n = Matrix::zeros(f, 9, 9);
        for i in 0..3usize {
            for j in 0..3usize {
                let from = 3 * i + j;
                if i + 1 < 3 {
                    n.set(3 * (i + 1) + j, from, 1);
                }
                if j + 1 < 3 {
                    n.set(3 * i + (j + 1), from, 1);
                }
            }
        }
        assert_eq!(n.rank(), 6);
        assert_eq!(n.pow(2).rank(), 3);
        assert!(n.pow(3).is_zero());
        let jt = jordan_type(&n, 3).unwrap();
        assert_eq!(jt.parts, vec![3, 3, 3]);
    }

    #[test]
    fn not_nilpotent_detected() {
        let f = Field::new(3, 1).unwrap();
        let id = Matrix::identity(f, 4);
        assert!(matches!(
            jordan_type(&id, 0),
            Err(GfError::NotNilpotent(_))
        ));
    }

    #[test]
    fn conjugation_invariance() {
        let f = Field::new(5, 1).unwrap();
        let mut rng = SplitMix64::new(17);
        // block diag with parts [3, 2]
        let mut n = Matrix::zeros(f.clone(), 5, 5);
        n.set(0, 1, 1);
        n.set(1, 2, 1);
        n.set(3, 4, 1);
        let base = jordan_type(&n, 5).unwrap();
        assert_eq!(base.parts, vec![3, 2]);
        let mut checked = 0;
        while checked < 10 {
            let p = Matrix::from_fn(f.clone(), 5, 5, |_, _| rng.below(5) as u16);
            let Some(pinv) = p.inverse() else { continue };
            let conj = p.mul(&n).mul(&pinv);
            assert_eq!(jordan_type(&conj, 5).unwrap(), base);
            checked += 1;
        }
    }

    #[test]
    fn parts_sum_to_dimension_random_strictly_upper() {
        let f = Field::new(3, 1).unwrap();
        let mut rng = SplitMix64::new(23);
        for _ in 0..30 {
            let n = Matrix::from_fn(f.clone(), 6, 6, |i, j| {
                if j > i {
                    rng.below(3) as u16
                } else {
                    0
                }
            });
            let jt = jordan_type(&n, 0).unwrap();
            assert_eq!(jt.total(), 6);
        }
    }
}
