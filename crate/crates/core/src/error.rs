use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series logarithm needs constant term 1, found {0}")]
    NonUnitConstantTerm(String),

    #[error("series exponential needs constant term 0, found {0}")]
    NonZeroConstantTerm(String),

    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },

    #[error("singular Jack system at shape {shape}: {detail}")]
    SingularJackSystem { shape: String, detail: String },

    #[error("coefficient at {key} is not a polynomial in alpha: {value}")]
    NonPolynomialCoefficient { key: String, value: String },

    #[error("coefficient at {key} has non-integer b-coefficients: {value}")]
    NonIntegralCoefficient { key: String, value: String },

    #[error("route mismatch in {what}: {left} != {right}")]
    RouteMismatch {
        what: String,
        left: String,
        right: String,
    },

    #[error("insufficient truncation: need {needed} edges, table has {available}")]
    InsufficientTruncation { needed: u32, available: u32 },

    #[error("{what} = {value} exceeds the enumeration bound {bound}")]
    OutOfRange { what: String, value: u32, bound: u32 },

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("labelled count {count} for {key} is not divisible by {divisor}")]
    NonIntegralNormalization {
        key: String,
        count: u64,
        divisor: u64,
    },

    #[error("normalization calibration failed: {0}")]
    Calibration(String),
}
