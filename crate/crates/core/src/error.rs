use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{function} is undefined at x = {x}")]
    Domain { function: &'static str, x: f64 },

    #[error("could not certify zero #{rank} of J_{order}: {reason}")]
    ZeroCertification {
        order: u32,
        rank: u32,
        reason: &'static str,
    },

    #[error("invalid mode index: {0}")]
    InvalidMode(String),

    #[error("a {rows}x{cols} matrix exceeds the limit of {limit} entries")]
    SizeGuard {
        rows: usize,
        cols: usize,
        limit: usize,
    },

    #[error("could not allocate a {rows}x{cols} matrix")]
    Allocation { rows: usize, cols: usize },

    #[error("(N = {cut}, n = {n}, {chirality}) is not an element of the kernel")]
    NotInKernel {
        cut: i64,
        n: u32,
        chirality: &'static str,
    },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("singular value decomposition of a {rows}x{cols} block did not converge")]
    SvdNoConvergence { rows: usize, cols: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
