use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum CatalogError {
    #[error("unsupported catalog entry: group {0}, p = {1}, r = {2}")]
    UnsupportedCatalogEntry(String, u16, usize),
    #[error("quasi-logarithm seed is not ad-equivariant (kG basis {0}, seed {1})")]
    EquivarianceFailure(usize, usize),
    #[error("quasi-logarithm seed does not split the cotangent projection")]
    BadSeed,
    #[error("constructed local algebra is not local")]
    NotLocal,
    #[error("compatibility square fails at basis element {0}")]
    DiagramFailure(usize),
    #[error("map is not a Hopf algebra map (basis element {0})")]
    NotHopfMap(usize),
    #[error(transparent)]
    Hopf(#[from] hopf_core::HopfError),
    #[error(transparent)]
    Algebra(#[from] algebra_core::AlgebraError),
    #[error(transparent)]
    Gf(#[from] gf_core::GfError),
}
