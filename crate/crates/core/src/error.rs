use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("outside the domain: {0}")]
    Domain(String),

    /// The shooting bracket for `F(0)` does not straddle the root.
    /// Blow-up locations are `None` when no blow-up was observed before the
    /// integration cap.
    #[error(
        "bracket [{lo}, {hi}] does not straddle F(0): blow-up at {lo_blowup:?} and {hi_blowup:?}"
    )]
    BracketNotStraddling {
        lo: f64,
        hi: f64,
        lo_blowup: Option<f64>,
        hi_blowup: Option<f64>,
    },

    #[error("integration exceeded {0} steps")]
    MaxStepsExceeded(usize),

    #[error("step size underflow at x = {0}")]
    StepUnderflow(f64),

    #[error("blow-up location is not decreasing in F(0): {0}")]
    NonMonotone(String),

    #[error("zero tangent vector")]
    ZeroVector,

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid solution cache: {0}")]
    InvalidCache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
