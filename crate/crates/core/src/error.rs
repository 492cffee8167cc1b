use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The curvature radius is not strictly positive somewhere.
    #[error("curve is not strictly convex: min rho = {min_rho} at theta = {theta}")]
    NotConvex { min_rho: f64, theta: f64 },

    #[error("parameters violate cone condition {condition}: {params}")]
    Cone {
        condition: &'static str,
        params: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The two routes to the same quantity disagree beyond tolerance.
    #[error("internal consistency failure in {what}: {lhs} vs {rhs}")]
    Inconsistent { what: &'static str, lhs: f64, rhs: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
