use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the engine can report. Variant names double as the
/// stable error names printed by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("zero denominator in rational coefficient")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("prime {prime} is not congruent to 1 modulo {conductor}")]
    BadPrime { prime: u64, conductor: u32 },
    #[error("a coefficient denominator is divisible by {prime}")]
    DenominatorCollision { prime: u64 },

    #[error("no generators supplied")]
    NoGenerators,
    #[error("group closure exceeded {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("generator {index} is not invertible")]
    NotInvertible { index: usize },
    #[error("conductor mismatch: expected {expected}, found {found}")]
    ConductorMismatch { expected: u32, found: u32 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("quotient of order {order} is not cyclic")]
    QuotientNotCyclic { order: usize },
    #[error("group is not contained in the special linear group")]
    NotSpecialLinear,
    #[error("group contains a non-diagonal element")]
    NotDiagonal,
    #[error("subset is not closed under multiplication")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("matrix not found in the ambient group")]
    ElementNotFound,

    #[error("no prime found below {bound}")]
    NoPrimeFound { bound: u64 },
    #[error("modular character computation failed: {0}")]
    ModularSplitting(String),
    #[error("eigenvalue multiplicity {value} out of range [0, {degree}] at class {class}")]
    LiftOutOfRange {
        class: usize,
        value: u64,
        degree: u32,
    },
    #[error("multiplicity is not a nonnegative integer: {value}")]
    NonIntegerMultiplicity { value: String },
    #[error("no character row matches: {context}")]
    RowNotFound { context: String },

    #[error("not a permutation of 0..{size}")]
    InvalidPermutation { size: usize },
    #[error("quiver has no Nakayama permutation")]
    MissingNakayama,
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("irreducible character {character} of the subgroup is not extendible")]
    NotExtendible { character: usize },
    #[error("covering map violates {violations} regular-covering conditions")]
    NotRegularCovering { violations: usize },
    #[error("target of the first covering differs from the source of the second")]
    TargetSourceMismatch,

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("preset `{preset}` does not accept parameter {value}")]
    InvalidParameter { preset: String, value: i64 },
    #[error("unknown subgroup rule `{0}`")]
    UnknownSubgroup(String),
    #[error("{failed} acceptance criteria failed")]
    CheckFailed { failed: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable identifier of the error class.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::DivisionByZero => "DivisionByZero",
            Error::BadPrime { .. } => "BadPrime",
            Error::DenominatorCollision { .. } => "DenominatorCollision",
            Error::NoGenerators => "NoGenerators",
            Error::GroupTooLarge { .. } => "GroupTooLarge",
            Error::NotInvertible { .. } => "NotInvertible",
            Error::ConductorMismatch { .. } => "ConductorMismatch",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::QuotientNotCyclic { .. } => "QuotientNotCyclic",
            Error::NotSpecialLinear => "NotSpecialLinear",
            Error::NotDiagonal => "NotDiagonal",
            Error::NotSubgroup => "NotSubgroup",
            Error::NotNormal => "NotNormal",
            Error::ElementNotFound => "ElementNotFound",
            Error::NoPrimeFound { .. } => "NoPrimeFound",
            Error::ModularSplitting(_) => "ModularSplitting",
            Error::LiftOutOfRange { .. } => "LiftOutOfRange",
            Error::NonIntegerMultiplicity { .. } => "NonIntegerMultiplicity",
            Error::RowNotFound { .. } => "RowNotFound",
            Error::InvalidPermutation { .. } => "InvalidPermutation",
            Error::MissingNakayama => "MissingNakayama",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::NotExtendible { .. } => "NotExtendible",
            Error::NotRegularCovering { .. } => "NotRegularCovering",
            Error::TargetSourceMismatch => "TargetSourceMismatch",
            Error::UnknownPreset(_) => "UnknownPreset",
            Error::InvalidParameter { .. } => "InvalidParameter",
            Error::UnknownSubgroup(_) => "UnknownSubgroup",
            Error::CheckFailed { .. } => "CheckFailed",
            Error::Io(_) => "IoError",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
