use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum SupportError {
    #[error("coefficient vector must be nonzero")]
    ZeroCoefficients,
    #[error("alpha(t)^p != 0: the generator list is not p-nilpotent")]
    NotNilpotentP,
    #[error("alpha is not flat: Jordan type on the regular module is {0:?}")]
    NotFlat(Vec<usize>),
    #[error("cocycle is zero")]
    ZeroCocycle,
    #[error("Ext truncation is inconclusive: {0}")]
    TruncationInconclusive(String),
    #[error("resolution depth budget exceeded")]
    DepthBudgetExceeded,
    #[error(transparent)]
    Catalog(#[from] scheme_catalog::CatalogError),
    #[error(transparent)]
    Hopf(#[from] hopf_core::HopfError),
    #[error(transparent)]
    Algebra(#[from] algebra_core::AlgebraError),
    #[error(transparent)]
    Gf(#[from] gf_core::GfError),
}
