use thiserror::Error;

/// Everything that can go wrong in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed cycle notation at byte {pos}: {msg}")]
    Malformed { pos: usize, msg: String },

    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("image list is not a bijection of 1..={0}")]
    NotBijection(usize),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("enumeration of {size} elements exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("element does not centralize the block of {d}-cycles")]
    NotInBlockCentralizer { d: usize },

    #[error("element does not permute the cycles of the block of {d}-cycles")]
    NotCyclePermuting { d: usize },

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("element is not an involution inverting sigma: {0}")]
    NotInvertingInvolution(String),

    #[error("no rotation conjugates the first reflection onto the second")]
    NoReflectionConjugator,

    #[error("orbit power residues disagree within one orbit of the cycles action: {0:?}")]
    ResidueDiscrepancy(Vec<usize>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("decision procedure and conjugator search disagree: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
