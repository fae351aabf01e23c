use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Input within the math domain but outside the supported desk-scale regime.
    #[error("unsupported size: {0}")]
    Unsupported(String),
    /// Bad configuration data (cost-model file, preset file, unknown model name).
    #[error("configuration error: {0}")]
    Config(String),
    /// A linear-space quantity would overflow f64; use the log-space variant.
    #[error("overflow: {0}")]
    Overflow(String),
    /// The optimizer found no feasible parameter point.
    #[error("infeasible: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
