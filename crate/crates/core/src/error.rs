use thiserror::Error;

/// Errors produced by case loading, model fitting, and optimization.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid case data: {0}")]
    InvalidCase(String),

    #[error("network is disconnected: bus {0} is unreachable from the slack bus")]
    DisconnectedNetwork(usize),

    #[error("reduced susceptance matrix is singular")]
    SingularSusceptance,

    #[error("aggregate output is zero or negative; distribution factors are undefined")]
    ZeroAggregateOutput,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("empty dataset: {0}")]
    EmptyDataset(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("mixture fitting failed: {0}")]
    FitFailed(String),

    #[error("rejection sampler acceptance rate fell below {rate:.2e} ({accepted} accepted of {proposed} proposals)")]
    SamplerStalled {
        rate: f64,
        accepted: usize,
        proposed: usize,
    },

    #[error("unknown solver backend `{0}` (available: highs)")]
    UnknownBackend(String),

    #[error("solver failure: {0}")]
    SolverFailure(String),

    #[error("model is infeasible: {0}")]
    Infeasible(String),

    #[error("dispatch interval {interval} is infeasible even with load shedding")]
    DispatchInfeasible { interval: usize },

    #[error("self-dispatch infeasible: {0}")]
    SelfDispatchInfeasible(String),

    #[error("benders did not converge: gap {gap:.3e} after {iters} iterations")]
    NotConverged { gap: f64, iters: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
