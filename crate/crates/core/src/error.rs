use thiserror::Error;

pub type Result<T> = std::result::Result<T, FadeError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FadeError {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A problem, grid or study was configured inconsistently.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// A series or quadrature failed to reach its tolerance.
    #[error("numerical failure: {0}")]
    Numerical(String),
    /// Caller handed over data with the wrong shape.
    #[error("contract violation: {0}")]
    Contract(String),
    /// Factorization or solve of the collocation system failed.
    #[error("linear solver failure: {0}")]
    Solver(String),
    /// A manufactured case does not close its own equation.
    #[error("manufactured case construction failed: {0}")]
    Construction(String),
    /// A cell of a refinement study failed.
    #[error("study cell {cell} failed: {source}")]
    Study {
        cell: String,
        source: Box<FadeError>,
    },
}
