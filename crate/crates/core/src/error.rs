use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `|v| ≥ c` for a finite speed of light, or a non-finite velocity.
    #[error("velocity {v} is not admissible for c = {c}")]
    VelocityOutOfRange { v: f64, c: f64 },

    /// The Darboux chart `t = p/f, q = -e/f` needs `f ≠ 0`.
    #[error("degenerate orbit: the central moment f must be nonzero")]
    DegenerateOrbit,

    /// The interval `-dq² + c²dt²` has no finite form at `c = ∞`.
    #[error("operation is undefined in the Galilean regime (c = inf)")]
    GalileanRegime,

    #[error("invalid c grid: {0}")]
    InvalidGrid(String),

    #[error("invalid parameter: {0}")]
    InvalidParams(String),
}
