use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    /// `n` is prime, so `Z_n` has no non-zero non-units and the graph is empty.
    #[error("n = {n} is prime: the cozero-divisor graph has no vertices")]
    EmptyGraph { n: u64 },

    #[error("graph on {vertices} vertices exceeds the vertex cap of {cap}")]
    VertexCap { vertices: u64, cap: u64 },

    #[error("matrix is not symmetric: |a[{row}][{col}] - a[{col}][{row}]| = {gap:e}")]
    NotSymmetric { row: usize, col: usize, gap: f64 },

    #[error("matrix has invalid shape: {0}")]
    Shape(String),

    #[error("eigensolver did not converge after {sweeps} sweeps (residual {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("exact characteristic polynomial limited to dimension {max}, got {dim}; use the numeric solver")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("polynomial has non-real roots")]
    NonRealRoots,

    #[error("root {root} fails the residual check ({residual:e} > {bound:e})")]
    RootResidual { root: f64, residual: f64, bound: f64 },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
