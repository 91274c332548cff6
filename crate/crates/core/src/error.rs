use thiserror::Error;

/// Every failure the engine can report.
///
/// The `Display` form starts with the variant name so that front ends can
/// surface a stable, greppable error identifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotDecreasing: parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<i64>),
    #[error("NegativePart: signature parts {0:?} must be nonnegative")]
    NegativePart(Vec<i64>),
    #[error("ParseSignature: cannot parse {0:?}")]
    ParseSignature(String),

    #[error("RankTooSmall: signature of length {len} does not fit rank {rank}")]
    RankTooSmall { len: usize, rank: usize },
    #[error("RankMismatch: expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("RankConstraint: {0}")]
    RankConstraint(String),
    #[error("OddRankForSp: Sp({0}) needs an even rank")]
    OddRankForSp(usize),
    #[error("OddRank: Sp({0}) needs an even rank")]
    OddRank(usize),
    #[error("RankTooLarge: rank {rank} exceeds the supported limit {limit}")]
    RankTooLarge { rank: usize, limit: usize },

    #[error("SignatureTooLong: length {len} must be < {rank}/2 for the SO({rank}) character")]
    SignatureTooLong { len: usize, rank: usize },
    #[error("DivisionNotExact: {0}")]
    DivisionNotExact(String),
    #[error("NegativeMultiplicity: {0}")]
    NegativeMultiplicity(String),
    #[error("NotDominant: leading weight {0:?} is not a valid highest weight")]
    NotDominant(Vec<i32>),

    #[error("OutsideStableRange: 2*length({len}) must be < k = {rank}")]
    OutsideStableRange { len: usize, rank: usize },

    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("NotHomogeneous: polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("BadSignature: {0}")]
    BadSignature(String),
    #[error("ParsePolynomial: {0}")]
    ParsePolynomial(String),

    #[error("NoStabilization: no stable decomposition found for k in {start}..={cap}")]
    NoStabilization { start: usize, cap: usize },
    #[error("EmptyFactors: at least one factor is required")]
    EmptyFactors,
}

impl Error {
    /// The bare variant name, e.g. `"OutsideStableRange"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotDecreasing(_) => "NotDecreasing",
            Error::NegativePart(_) => "NegativePart",
            Error::ParseSignature(_) => "ParseSignature",
            Error::RankTooSmall { .. } => "RankTooSmall",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::RankConstraint(_) => "RankConstraint",
            Error::OddRankForSp(_) => "OddRankForSp",
            Error::OddRank(_) => "OddRank",
            Error::RankTooLarge { .. } => "RankTooLarge",
            Error::SignatureTooLong { .. } => "SignatureTooLong",
            Error::DivisionNotExact(_) => "DivisionNotExact",
            Error::NegativeMultiplicity(_) => "NegativeMultiplicity",
            Error::NotDominant(_) => "NotDominant",
            Error::OutsideStableRange { .. } => "OutsideStableRange",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::BadSignature(_) => "BadSignature",
            Error::ParsePolynomial(_) => "ParsePolynomial",
            Error::NoStabilization { .. } => "NoStabilization",
            Error::EmptyFactors => "EmptyFactors",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
