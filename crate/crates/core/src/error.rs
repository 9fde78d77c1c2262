use thiserror::Error;

use crate::poly::RatPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial has no factorization")]
    ConstantPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("modulus polynomial is reducible")]
    ReducibleModulus,
    #[error("defining polynomial is reducible over the rationals (factor {factor})")]
    ReducibleDefiningPolynomial { factor: RatPoly },
    #[error("no usable prime after {attempts} candidates: {reasons}")]
    PrimeSearchExhausted { attempts: usize, reasons: String },
    #[error("recombination exceeded the cap of {cap} subsets")]
    SubsetCapExceeded { cap: u64 },
    #[error("no squarefree shifted norm among the first {cap} shift values")]
    ShiftCapExceeded { cap: usize },
    #[error("polynomial is reducible (factor {factor})")]
    Reducible { factor: String },
    #[error("enumeration of {count} polynomials exceeds the cap of {cap}")]
    EnumerationCap { count: String, cap: u64 },
    #[error("towers of extensions are not supported")]
    UnsupportedTower,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Stable machine-readable identifier, used by the JSON output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotInvertible(_) => "not-invertible",
            Error::DivisionByZero => "division-by-zero",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::ConstantPolynomial => "constant-polynomial",
            Error::NotSquarefree => "not-squarefree",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::CharacteristicTwo => "characteristic-two",
            Error::ReducibleModulus => "reducible-modulus",
            Error::ReducibleDefiningPolynomial { .. } => "reducible-defining-polynomial",
            Error::PrimeSearchExhausted { .. } => "prime-search-exhausted",
            Error::SubsetCapExceeded { .. } => "subset-cap-exceeded",
            Error::ShiftCapExceeded { .. } => "shift-cap-exceeded",
            Error::Reducible { .. } => "reducible",
            Error::EnumerationCap { .. } => "enumeration-cap",
            Error::UnsupportedTower => "unsupported-tower",
            Error::Inconsistent(_) => "internal-inconsistency",
        }
    }
}
