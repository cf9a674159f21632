use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop on node {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {u}-{v} has nonpositive weight {weight}")]
    NonPositiveWeight { u: usize, v: usize, weight: f64 },

    #[error("node index {index} out of range for a graph with {n} nodes")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("centrality entry {index} is not strictly positive ({value})")]
    NonPositiveCentrality { index: usize, value: f64 },

    #[error("graph is disconnected ({components} components); use the largest component explicitly")]
    Disconnected { components: usize },

    #[error("node {0} has zero degree")]
    ZeroDegree(usize),

    #[error("bipartition is trivial: one side is empty")]
    TrivialCut,

    #[error("operation needs at least {needed} nodes, graph has {n}")]
    TooSmall { needed: usize, n: usize },

    #[error("eigensolver did not converge after {iterations} iterations (last residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("ratio undefined: first eigenvector component {index} is {value:e}")]
    VanishingComponent { index: usize, value: f64 },

    #[error("diffusion is unstable: {0}")]
    Unstable(String),

    #[error("invalid benchmark spec: {0}")]
    InvalidSpec(String),

    #[error("benchmark generation failed: {0}")]
    Generation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for failures of the numerical machinery rather than of the input data.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::VanishingComponent { .. } | Error::Unstable(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
