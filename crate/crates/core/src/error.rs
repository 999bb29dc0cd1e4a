use alloc::string::String;
use core::fmt;

/// Failures surfaced by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// Denominator vanishes at the evaluation point.
    Pole,
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// `jet_log` needs constant term 1.
    LogDomain,
    /// An X-word ran past the truncation window.
    WindowExhausted {
        window: i64,
    },
    /// Degeneration precondition `Y_i = 1 mod ħ` failed.
    NotUnipotent {
        index: usize,
    },
    Parse(String),
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Pole => write!(f, "pole at evaluation point"),
            Error::ShapeMismatch { op, left, right } => write!(
                f,
                "shape mismatch in {op}: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::LogDomain => write!(f, "jet_log requires constant term 1"),
            Error::WindowExhausted { window } => {
                write!(f, "truncation window exhausted (window {window})")
            }
            Error::NotUnipotent { index } => {
                write!(f, "Y_{index} is not congruent to 1 mod h")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
