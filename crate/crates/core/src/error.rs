use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power in the supported range 2..=64")]
    NotAPrimePower(u64),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u16),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("singular matrix where an invertible one is required")]
    SingularMatrix,
    #[error("dimension {0} too large (supported maximum {1})")]
    DimensionTooLarge(usize, usize),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("invalid element id {0}")]
    InvalidElement(usize),
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("subset is not an order ideal")]
    NotAnIdeal,
    #[error("poset size {0} exceeds isomorphism search cap {1}")]
    SizeCapExceeded(usize, usize),
    #[error("subgroup does not contain all scalar matrices")]
    NotScalarSaturated,
    #[error("subgroup is not irreducible")]
    NotIrreducible,
    #[error("not a nested subgroup pair")]
    NotASubgroupPair,
    #[error("matrix is not cyclic")]
    NotCyclic,
    #[error("operation requires the {0} flavor")]
    WrongFlavor(String),
    #[error("witness not found: {0}")]
    WitnessNotFound(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
