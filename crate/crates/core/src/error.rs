use core::fmt;

/// Errors reported by the evaluation and verification routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    Domain(&'static str),
    /// The operation was called with a parameter combination it does not accept.
    Usage(&'static str),
    /// The sample has no spread, so a Jensen quotient is `0/0`.
    Degenerate,
    /// The denominator functional of a convex pair is not positive.
    InvalidPair(&'static str),
    /// A moment report is internally inconsistent.
    InvalidReport(&'static str),
    /// A bracketing solver found the same sign at both ends of its bracket.
    NoSignChange { lo: f64, hi: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
            Error::Degenerate => f.write_str("degenerate sample: all points coincide"),
            Error::InvalidPair(msg) => write!(f, "invalid convex pair: {msg}"),
            Error::InvalidReport(msg) => write!(f, "invalid moment report: {msg}"),
            Error::NoSignChange { lo, hi } => {
                write!(f, "no sign change of the comparison across [{lo}, {hi}]")
            }
        }
    }
}

impl core::error::Error for Error {}
