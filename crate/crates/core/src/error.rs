use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Census and densities need at least three vertices.
    GraphTooSmall {
        n: usize,
    },
    /// A real argument is outside the domain of the function.
    Domain {
        what: &'static str,
        value: f64,
        range: &'static str,
    },
    /// Coordinates or parameters must be finite.
    NonFinite {
        what: &'static str,
    },
    InvalidGraph(String),
    InvalidGraphon(String),
    InvalidParams(String),
    /// An iterative refinement hit its iteration cap.
    NoConvergence {
        cap: usize,
    },
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64, range: &'static str) -> Self {
        Error::Domain { what, value, range }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GraphTooSmall { n } => {
                write!(
                    f,
                    "graph too small for triple census (n = {n}, need n >= 3)"
                )
            }
            Error::Domain { what, value, range } => {
                write!(f, "{what} = {value} is outside the valid range {range}")
            }
            Error::NonFinite { what } => write!(f, "{what} must be finite"),
            Error::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
            Error::InvalidGraphon(msg) => write!(f, "invalid step graphon: {msg}"),
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::NoConvergence { cap } => {
                write!(
                    f,
                    "refinement did not converge within the iteration cap of {cap}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
