use thiserror::Error;

/// Witness for a failed structure check: the offending basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error("multiplication is not associative at basis triple ({},{},{})", .0.i, .0.j, .0.k)]
    NotAssociative(TripleWitness),
    #[error("unit laws fail at basis element {0}")]
    BadUnit(usize),
    #[error("augmentation is not multiplicative at basis pair ({0},{1})")]
    AugmentationNotMultiplicative(usize, usize),
    #[error("radical not computable: {0}")]
    RadicalNotComputable(String),
    #[error("module decomposition failed after {0} randomized attempts (seed {1})")]
    DecompositionFailed(usize, u64),
    #[error("idempotent lifting diverged")]
    LiftDiverged,
    #[error("resolution depth budget exceeded (requested {0}, cap {1})")]
    DepthBudgetExceeded(usize, usize),
    #[error("map is not an algebra map: fails at basis pair ({0},{1})")]
    NotAlgebraMap(usize, usize),
    #[error("module action violates the relation at basis pair ({0},{1})")]
    BadModuleAction(usize, usize),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("invalid serialized form: {0}")]
    BadJson(String),
    #[error(transparent)]
    Gf(#[from] gf_core::GfError),
}
