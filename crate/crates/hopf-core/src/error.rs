use thiserror::Error;

/// Which Hopf axiom failed, with a witness basis index where applicable.
#[derive(Debug, Clone, Error)]
pub enum HopfError {
    #[error("coassociativity fails at basis element {0}")]
    Coassociativity(usize),
    #[error("counit axiom fails at basis element {0}")]
    Counit(usize),
    #[error("comultiplication is not an algebra map at basis pair ({0},{1})")]
    ComultNotMultiplicative(usize, usize),
    #[error("counit is not an algebra map at basis pair ({0},{1})")]
    CounitNotMultiplicative(usize, usize),
    #[error("antipode axiom fails at basis element {0}")]
    Antipode(usize),
    #[error("algebra carries no Hopf structure")]
    NoHopfStructure,
    #[error("action is not a module-algebra action (witness h={0}, a={1}, b={2})")]
    ActionNotModuleAlgebra(usize, usize, usize),
    #[error("algebra is not generated by its primitive elements")]
    NotGeneratedByPrimitives,
    #[error("Hopf axioms fail on the constructed product: {0}")]
    HopfAxiomFailure(String),
    #[error("coalgebra is not cocommutative (witness basis element {0})")]
    NotCocommutative(usize),
    #[error(transparent)]
    Algebra(#[from] algebra_core::AlgebraError),
}
