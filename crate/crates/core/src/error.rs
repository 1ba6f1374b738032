use core::fmt;

/// Everything that can go wrong when building or combining the crate's values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Partition components must be positive.
    ZeroComponent { index: usize },
    /// Partition components must be non-increasing.
    NotNonIncreasing { index: usize },
    /// `(row, column)` is not a box of the Young diagram (1-based).
    InvalidCorner { row: usize, column: usize },
    /// A bead does not fit in the requested number of abacus rows.
    BeadOutOfGrid { bead: usize, capacity: usize },
    /// Abacus grid dimensions are inconsistent.
    GridShape { runners: usize, rows: usize, cells: usize },
    /// `s` and `t` share a common factor.
    NotCoprime { s: usize, t: usize },
    /// A numeric parameter is outside the range an operation accepts.
    InvalidParameter { name: &'static str, value: usize, expected: &'static str },
    /// A subset of a gap set is not downward closed.
    NotAnIdeal { missing: usize, above: usize },
    /// A subset of a gap set contains a non-gap.
    NotAGap { value: usize },
    /// The core handed to reconstruction still has a hook of length `s`.
    NotACore { s: usize },
    /// A quotient must have exactly `s` parts.
    QuotientLength { s: usize, parts: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroComponent { index } => {
                write!(f, "partition component {index} is zero; components must be positive")
            }
            Error::NotNonIncreasing { index } => {
                write!(f, "partition components increase at position {index}")
            }
            Error::InvalidCorner { row, column } => {
                write!(f, "({row},{column}) is not a box of the Young diagram")
            }
            Error::BeadOutOfGrid { bead, capacity } => {
                write!(f, "bead {bead} does not fit in an abacus of {capacity} positions")
            }
            Error::GridShape { runners, rows, cells } => {
                write!(f, "{cells} cells do not form a {rows}x{runners} abacus")
            }
            Error::NotCoprime { s, t } => write!(f, "s={s} and t={t} are not coprime"),
            Error::InvalidParameter { name, value, expected } => {
                write!(f, "{name}={value} is invalid: expected {expected}")
            }
            Error::NotAnIdeal { missing, above } => {
                write!(f, "not a lower ideal: {above} is present but {missing} is not")
            }
            Error::NotAGap { value } => write!(f, "{value} is not a gap of the semigroup"),
            Error::NotACore { s } => write!(f, "core partition has a hook of length {s}"),
            Error::QuotientLength { s, parts } => {
                write!(f, "an {s}-quotient needs {s} parts, got {parts}")
            }
        }
    }
}

impl core::error::Error for Error {}
