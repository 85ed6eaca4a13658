use core::fmt;

use crate::label::Label;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two matrices that must share a width (or a label list and a matrix) do not.
    Dimension {
        expected: usize,
        found: usize,
    },
    /// A zero column.
    Loop(Label),
    /// An element whose deletion lowers the rank.
    Coloop(Label),
    DuplicateLabel(Label),
    UnknownLabel(Label),
    /// A Γ label that is already an element of the ground set.
    GammaCollision(Label),
    /// An operation that needs a non-empty set (or a non-empty remainder) got none.
    Empty,
    /// The set handed to the Γ-extension is dependent.
    Dependent,
    /// An exhaustive routine was asked to run above its configured bound.
    Size {
        size: usize,
        limit: usize,
    },
    UnknownFixture(alloc::string::String),
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Loop(l) => write!(f, "element {l} is a loop (zero column)"),
            Error::Coloop(l) => write!(f, "element {l} is a coloop"),
            Error::DuplicateLabel(l) => write!(f, "duplicate label {l}"),
            Error::UnknownLabel(l) => write!(f, "unknown label {l}"),
            Error::GammaCollision(l) => write!(f, "gamma label {l} collides with the ground set"),
            Error::Empty => f.write_str("empty set where a non-empty one is required"),
            Error::Dependent => f.write_str("set is dependent"),
            Error::Size { size, limit } => {
                write!(
                    f,
                    "instance of size {size} exceeds the exhaustive bound {limit}"
                )
            }
            Error::UnknownFixture(name) => write!(f, "unknown catalog fixture {name:?}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
