use thiserror::Error;

/// Why a point list failed the general-position check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// Two entries share coordinates.
    Duplicate(usize, usize),
    /// Three entries lie on one line.
    Collinear(usize, usize, usize),
    /// Fewer points than the operation needs.
    TooFew(usize),
}

impl std::fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Degeneracy::Duplicate(i, j) => write!(f, "points {i} and {j} coincide"),
            Degeneracy::Collinear(i, j, k) => write!(f, "points {i}, {j}, {k} are collinear"),
            Degeneracy::TooFew(n) => write!(f, "{n} points is too few"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("general position violated: {0}")]
    Degenerate(Degeneracy),

    #[error("coordinate ({0}, {1}) exceeds the supported magnitude 2^20")]
    CoordinateTooLarge(i64, i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} = {value} out of range {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("truncated record at byte offset {offset}: need {need} more bytes")]
    Truncated { offset: usize, need: usize },

    #[error("set {index}: {source}")]
    InSet {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid half-period: {0}")]
    InvalidHalfPeriod(String),

    #[error("inconsistent labeling: {0}")]
    Labeling(String),

    #[error("element {0} never enters the center")]
    NeverEnters(usize),

    #[error("confined transpositions present ({count}, first at step {first})")]
    Confined { count: usize, first: usize },

    #[error("inconsistent scenario: {0}")]
    Scenario(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<Degeneracy> for Error {
    fn from(d: Degeneracy) -> Self {
        Error::Degenerate(d)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_range(what: &'static str, value: i64, lo: i64, hi: i64) -> Result<()> {
    if value < lo || value > hi {
        Err(Error::OutOfRange {
            what,
            value,
            lo,
            hi,
        })
    } else {
        Ok(())
    }
}
