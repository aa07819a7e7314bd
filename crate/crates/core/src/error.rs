use thiserror::Error;

/// Errors raised across the number tower, the real carriers and the engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("input must be strictly positive: {0}")]
    NonPositive(String),

    #[error("negative input: {0}")]
    Negative(String),

    #[error("{input} ends in a tail of nines; use the normalized form {normalized}")]
    NinesTail { input: String, normalized: String },

    #[error("invalid digit {0}")]
    InvalidDigit(u8),

    #[error("cannot parse {kind} from {text:?}")]
    Parse { kind: &'static str, text: String },

    /// The enclosure still contains zero at the precision cap.
    #[error("sign of the value is unknown up to precision {cap}")]
    SignUnknown { cap: u32 },

    /// The two magnitudes cannot be separated up to the cap, so their
    /// difference is zero to within `10^-cap`.
    #[error("difference is zero within precision {cap}")]
    ZeroWithinCap { cap: u32 },

    #[error("precision cap {cap} exceeded")]
    CapExceeded { cap: u32 },

    #[error("oracle answered inconsistently: {0}")]
    OracleInconsistent(String),

    #[error("no upper bound found below {0}; set looks unbounded")]
    Unbounded(String),

    #[error("iteration cap {cap} reached without a witness; instance looks non-Archimedean")]
    NonArchimedean { cap: u64 },

    #[error("enclosure law violated: {0}")]
    EnclosureLaw(String),

    #[error("series truncation fell short of the requested width: {0}")]
    PrecisionShortfall(String),

    #[error("audit failed: {0}")]
    AuditFailed(String),
}

pub type Result<T, E = RealError> = std::result::Result<T, E>;
