//! Projectivity testing through projective covers of tops.

use crate::algebra::AlgebraRef;
use crate::error::AlgebraError;
use crate::idempotents::{isotypic_multiplicities, Pims};
use crate::module::ModuleRep;
use crate::radical::RadicalData;

/// A module is projective exactly when the projective cover of its top has
/// the same dimension (the cover surjection is then an isomorphism).
///
/// Local fast path: `dim M = dim A * dim top(M)`.
pub fn is_projective(
    a: &AlgebraRef,
    rad: &RadicalData,
    pims: Option<&Pims>,
    m: &ModuleRep,
) -> Result<bool, AlgebraError> {
    if m.dim == 0 {
        return Ok(true);
    }
    let rad_m = m.radical_submodule(&rad.basis);
    let top_dim = m.dim - rad_m.rows();
    if rad.is_local {
        return Ok(m.dim == a.dim() * top_dim);
    }
    let pims = pims.ok_or_else(|| {
        AlgebraError::RadicalNotComputable("projectivity over a non-local algebra needs PIMs".into())
    })?;
    let (top, _) = m.quotient(&rad_m);
    let mults = isotypic_multiplicities(&pims.simples, &top);
    // the cover of top(M) is a sum of PIMs with these multiplicities
    let cover_dim: usize = mults
        .iter()
        .zip(&pims.modules)
        .map(|(&c, p)| c * p.dim)
        .sum();
    // sanity: multiplicities must account for all of top(M)
    let top_accounted: usize = mults
        .iter()
        .zip(&pims.simples)
        .map(|(&c, s)| c * s.module.dim)
        .sum();
    if top_accounted != top.dim {
        return Err(AlgebraError::DecompositionFailed(top.dim, 0));
    }
    Ok(cover_dim == m.dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{to_sparse, Algebra};
    use crate::radical::radical;
    use gf_core::{Field, Matrix};

    fn truncated(p: u16) -> AlgebraRef {
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
    fn regular_is_projective_trivial_is_not() {
        let a = truncated(3);
        let rad = radical(&a).unwrap();
        let reg = ModuleRep::regular(&a);
        assert!(is_projective(&a, &rad, None, &reg).unwrap());
        let k = ModuleRep::trivial(&a);
        assert!(!is_projective(&a, &rad, None, &k).unwrap());
    }

    #[test]
    fn tensor_factor_module_not_projective() {
        // over k[x,u]/(x^3,u^3), the module k[u]/(u^3) with x acting as zero
        // has dim 3 != 9 * 1
        let a3 = truncated(3);
        let aa = Algebra::tensor_product(&a3, &a3).unwrap();
        let rad = radical(&aa).unwrap();
        let f = aa.field().clone();
        // action: basis of k[u]/(u^3) is 1, u, u^2; x_i u^j -> 0 unless i = 0
        let action: Vec<Matrix> = (0..9)
            .map(|idx| {
                let (i, j) = (idx / 3, idx % 3);
                Matrix::from_fn(f.clone(), 3, 3, |r, c| {
                    u16::from(i == 0 && r == c + j && r < 3)
                })
            })
            .collect();
        let m = ModuleRep::new(aa.clone(), action).unwrap();
        assert!(!is_projective(&aa, &rad, None, &m).unwrap());
    }
}
