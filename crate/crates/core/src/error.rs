use thiserror::Error;

/// Errors raised by graph construction, ranking and the analytic routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,
    #[error("missing color for node {0}")]
    MissingColor(usize),
    #[error("no color given for node {0:?}")]
    MissingLabelColor(String),
    #[error("HRI undefined: graph has a single color")]
    HriUndefined,
    #[error("insufficient tail points: need at least 3 with k >= {k_min}, found {found}")]
    InsufficientTail { k_min: u64, found: usize },
    #[error("degenerate tail: all tail points have the same k or CCDF value")]
    DegenerateTail,
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("graph has no edges; the HITS matrix is zero")]
    ZeroMatrix,
    #[error("rejection cap reached: {0} consecutive homophily rejections")]
    RejectionCap(u64),
    #[error("undefined probability at alpha={alpha}, rho={rho}, r={r}")]
    UndefinedProbability { alpha: f64, rho: f64, r: f64 },
    #[error("fixed-point iteration did not converge in {0} iterations")]
    NoConvergence(usize),
    #[error("empty order")]
    EmptyOrder,
    #[error("x={0} is not on the curve grid")]
    OffGrid(f64),
    #[error("curves have mismatched grids")]
    MismatchedGrids,
    #[error("empty degree class for color {0}")]
    EmptyDegreeClass(char),
    #[error("zero total indegree for color {0}")]
    ZeroIndegree(char),
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
