use thiserror::Error;

/// Errors raised by the library.
///
/// Vertex labels carried in errors are 1-based, as they appear in input files.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("invalid family size: {0}")]
    FamilySize(String),

    #[error("unknown graph spec {0:?}")]
    UnknownFamily(String),

    #[error("tree enumeration supports 1 <= n <= {max}, got {n}")]
    EnumerationRange { n: usize, max: usize },

    #[error("matrix is not square or has inconsistent dimensions")]
    Dimension,

    #[error(
        "jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("eigenpair residual {residual:e} exceeds tolerance {bound:e}")]
    Residual { residual: f64, bound: f64 },

    #[error("tau must lie in (0, 1], got {0}")]
    TauOutOfRange(f64),

    #[error("weighting does not match the edge set: {0}")]
    Weighting(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("no closed form for Sigma in scope: {0}")]
    NoFormula(String),

    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleSize(usize),

    #[error("Gram matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositiveSemidefinite(f64),

    #[error("structural and spectral classification disagree: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
