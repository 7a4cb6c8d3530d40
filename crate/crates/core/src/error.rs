use thiserror::Error;

/// Every failure the pipeline can report.
///
/// Variants carry the offending pixel or byte index wherever one exists so
/// that callers (and the CLI) can point at the exact location.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("MalformedHeader: {0}")]
    MalformedHeader(String),
    #[error("TruncatedData: expected {expected} samples, found {found}")]
    TruncatedData { expected: usize, found: usize },
    #[error("UnsupportedMaxval: {0} (must be 1..=255)")]
    UnsupportedMaxval(u32),
    #[error("InvalidSample: sample {index} has value {value}, above maxval {maxval}")]
    InvalidSample { index: usize, value: u32, maxval: u32 },
    #[error("InvalidDimensions: {width}x{height} with {len} pixels")]
    InvalidDimensions {
        width: usize,
        height: usize,
        len: usize,
    },
    #[error("NotBinary: pixel {index} has value {value}")]
    NotBinary { index: usize, value: u8 },
    #[error("PayloadTooLarge: {what} {value} exceeds 65535")]
    PayloadTooLarge { what: &'static str, value: usize },
    #[error("InvalidPayload: {0}")]
    InvalidPayload(String),
    #[error("CapacityExceeded: need {needed} cover pixels, cover has {available}")]
    CapacityExceeded { needed: usize, available: usize },
    #[error("OutOfBand: pixel {index} has value {value}, outside [0,12] and [243,255]")]
    OutOfBand { index: usize, value: u8 },
    #[error("BandViolation: pixel {index} has value {value}, outside [0,12] and [243,255]")]
    BandViolation { index: usize, value: u8 },
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("InconsistentPair: pair {index} is {pair1:?} / {pair2:?}")]
    InconsistentPair {
        index: usize,
        pair1: (u8, u8),
        pair2: (u8, u8),
    },
    #[error("BadHeader: {0}")]
    BadHeader(String),
    #[error("BodyOverrun: header declares {declared} body bytes ({needed} pixels), image has {available} pixels")]
    BodyOverrun {
        declared: usize,
        needed: usize,
        available: usize,
    },
}

impl Error {
    /// True for errors that describe bad image or payload content rather than
    /// bad files or bad usage. The CLI maps these to exit code 1.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NotBinary { .. }
                | Error::PayloadTooLarge { .. }
                | Error::CapacityExceeded { .. }
                | Error::OutOfBand { .. }
                | Error::BandViolation { .. }
                | Error::DimensionMismatch(_)
                | Error::InconsistentPair { .. }
                | Error::BadHeader(_)
                | Error::BodyOverrun { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
