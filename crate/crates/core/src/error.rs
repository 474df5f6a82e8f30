use thiserror::Error;

/// Errors produced by the lamination toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed angle `{token}`: {reason}")]
    ParseAngle { token: String, reason: &'static str },

    #[error("malformed chord `{token}`: {reason}")]
    ParseChord { token: String, reason: String },

    #[error("{op} is undefined for chord {chord}: {reason}")]
    UnsupportedChord {
        op: &'static str,
        chord: String,
        reason: &'static str,
    },

    #[error("length {0} lies outside [0, 1/2]")]
    LengthOutOfRange(String),

    #[error("chord {0} is not short (its length is at least 1/6)")]
    NotShort(String),

    #[error("seed {seed} is not a legal pair: {reason}")]
    IllegalSeed { seed: String, reason: String },

    #[error("no obstacle-avoiding sibling assignment exists for pullbacks of {0}")]
    NoPullback(String),

    #[error("ambiguous pullback of {chord}: {reason}")]
    AmbiguousPullback { chord: String, reason: &'static str },

    #[error("image of gap {0} is not a gap")]
    DegenerateGapImage(String),

    #[error("vertex images of gap {0} do not move positively around the image gap")]
    OrientationReversed(String),

    #[error("no central gap or central diameter found")]
    NoCentralGap,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("invalid render style: {0}")]
    InvalidStyle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
