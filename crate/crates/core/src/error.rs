use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Variants fall in two groups: input validation (the caller handed us
/// something that violates a contract) and [`Error::Inconsistency`], which
/// means two independent computations disagreed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("operands belong to different groups ({left} vs {right})")]
    MixedGroups { left: String, right: String },
    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    #[error("{divisor} does not divide {modulus}")]
    NotADivisor { divisor: usize, modulus: usize },
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: usize, modulus: usize },
    #[error("residue {value} out of range for modulus {modulus}")]
    ResidueOutOfRange { value: usize, modulus: usize },
    #[error("connection set contains the identity")]
    IdentityInSet,
    #[error("connection set is not inverse-closed: missing inverse of element {0}")]
    NotInverseClosed(usize),
    #[error("{0}")]
    BadClosure(String),
    #[error("R contains 0")]
    ZeroInR,
    #[error("connection set is empty")]
    EmptyConnectionSet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not antipodal")]
    NotAntipodal,
    #[error("invalid intersection array: {0}")]
    InvalidArray(String),
    #[error("set is not contained in the ambient subgroup")]
    NotASubset,
    #[error("forbidden subgroup is not contained in the ambient subgroup")]
    NotASubgroupChain,
    #[error("search space too large: {0}")]
    TooLarge(String),
    #[error("unsupported n = {0}: expected a power of two with 8 <= n <= 64")]
    UnsupportedN(usize),
    #[error("structural violation: {0}")]
    StructuralViolation(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// True for errors caused by bad input rather than a broken invariant.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Inconsistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
