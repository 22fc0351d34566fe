//! The infinitesimal group scheme `Sigma(G, r)` with group algebra
//! `S_r(g*) # kG`, the induced quasi-logarithm algebra map
//! `a_0 : S_r(g*) -> O(G)`, and the augmented-algebra isomorphism
//! `a(l) = a_0 (x) id : kSigma -> D`.

use algebra_core::AlgebraMap;
use gf_core::Matrix;
use hopf_core::{hopf_smash, HopfRef, TruncatedSymmetric};

use crate::bundle::GroupSchemeBundle;
use crate::error::CatalogError;

pub struct SigmaData {
    /// `S_r(g*)` with its Hopf structure and extended `kG`-action.
    pub trunc: TruncatedSymmetric,
    /// `kSigma = S_r(g*) # kG`, cocommutative.
    pub hopf: HopfRef,
}

/// Build `kSigma(G, r)` by bosonizing the truncated symmetric algebra of the
/// coadjoint representation. Cocommutativity is asserted; `dim kSigma` must
/// equal `dim O(G) * dim kG` and is compared against the double separately.
pub fn build_sigma(bundle: &GroupSchemeBundle) -> Result<SigmaData, CatalogError> {
    let trunc = hopf_core::truncated_symmetric(&bundle.kg, &bundle.coadjoint, bundle.r)?;
    let hopf = hopf_smash(&trunc.action, &trunc.hopf, &bundle.kg)?;
    hopf.is_cocommutative()
        .map_err(hopf_core::HopfError::NotCocommutative)?;
    // dim S_r(g*) must equal dim O(G) (monomial count p^{r dim g})
    if trunc.hopf.dim() != bundle.og.dim() {
        return Err(CatalogError::BadSeed);
    }
    Ok(SigmaData { trunc, hopf })
}

/// The quasi-logarithm algebra map `a_0 : S_r(g*) -> O(G)`: the seed on
/// degree-one generators, extended multiplicatively over the monomial basis.
/// Verified to be a bijective, `kG`-equivariant algebra map.
pub fn quasilog_map(
    bundle: &GroupSchemeBundle,
    sigma: &SigmaData,
) -> Result<AlgebraMap, CatalogError> {
    let f = bundle.field.clone();
    let s_alg = &sigma.trunc.hopf.algebra;
    let o_alg = &bundle.og.algebra;
    let n_s = s_alg.dim();
    let n_o = o_alg.dim();
    let gdim = bundle.lie_dim();
    let mut matrix = Matrix::zeros(f.clone(), n_o, n_s);
    for (m, exps) in sigma.trunc.exponents.iter().enumerate() {
        let mut img = o_alg.unit().to_vec();
        for (i, &e) in exps.iter().enumerate() {
            let mut seed_i = vec![0u16; n_o];
            for rix in 0..n_o {
                seed_i[rix] = bundle.quasilog_seed.get(rix, i);
            }
            for _ in 0..e {
                img = o_alg.multiply(&img, &seed_i);
            }
        }
        for (rix, &v) in img.iter().enumerate() {
            matrix.set(rix, m, v);
        }
    }
    let _ = gdim;
    let map = AlgebraMap::new(s_alg.clone(), o_alg.clone(), matrix)?;
    if !map.is_bijective() {
        return Err(CatalogError::BadSeed);
    }
    if !map.preserves_augmentation() {
        return Err(CatalogError::BadSeed);
    }
    // kG-equivariance: adjoint[mu] . a0 = a0 . action_S[mu] for every basis mu
    for (mu, adj) in bundle.adjoint.matrices.iter().enumerate() {
        let lhs = adj.mul(&map.matrix);
        let rhs = map.matrix.mul(&sigma.trunc.action.matrices[mu]);
        if lhs != rhs {
            return Err(CatalogError::EquivarianceFailure(mu, usize::MAX));
        }
    }
    Ok(map)
}

/// `a(l) = a_0 (x) id_{kG} : kSigma -> D`, a bijective augmented-algebra
/// map. It is intentionally *not* required to be a coalgebra map.
pub fn build_al_iso(
    bundle: &GroupSchemeBundle,
    sigma: &SigmaData,
    a0: &AlgebraMap,
    double: &HopfRef,
) -> Result<AlgebraMap, CatalogError> {
    let n_kg = bundle.kg.dim();
    let matrix = a0
        .matrix
        .kronecker(&Matrix::identity(bundle.field.clone(), n_kg));
    let map = AlgebraMap::new(sigma.hopf.algebra.clone(), double.algebra.clone(), matrix)?;
    if !map.is_bijective() || !map.preserves_augmentation() {
        return Err(CatalogError::BadSeed);
    }
    Ok(map)
}

/// Whether a verified algebra map between Hopf algebras also intertwines
/// the coalgebra layers (used as a negative control: `a(l)` fails this on
/// the Borel catalog entry).
pub fn is_coalgebra_map(source: &HopfRef, target: &HopfRef, map: &AlgebraMap) -> bool {
    crate::one_param::is_hopf_map(source, target, map)
}
