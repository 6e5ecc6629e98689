//! Numerical tolerances and default run parameters.
//!
//! Each constant is the contract the corresponding routine is tested against.

/// Absolute accuracy of `digamma` / `trigamma`.
pub const POLYGAMMA_ABS: f64 = 1e-12;

/// Arguments below this are shifted upward before the asymptotic expansion.
pub const POLYGAMMA_ASYMPTOTIC_MIN: f64 = 10.0;

/// Absolute accuracy of `bessel_j` for `x <= 200`, `n <= 64`, and of `bessel_i` on `[0, 1]`.
pub const BESSEL_ABS: f64 = 1e-12;

/// Residual allowed in the three-term recurrences of J and I.
pub const BESSEL_RECURRENCE: f64 = 1e-10;

/// `bessel_j` switches to the Hankel expansion for `x >= max(this, n^2)`.
pub const HANKEL_MIN_ARG: f64 = 25.0;

/// Maximum width of a certified sign-change bracket around a Bessel zero.
pub const ZERO_BRACKET_WIDTH: f64 = 1e-10;

/// Scan step used to isolate consecutive zeros. Consecutive zeros of
/// `J_n`, `n >= 0`, are more than 3 apart, so a step of 0.5 never straddles two.
pub const ZERO_SCAN_STEP: f64 = 0.5;

/// Default Gauss-Legendre order for radial integrals.
pub const QUADRATURE_ORDER: usize = 200;

/// Agreement required between closed-form disc elements and quadrature.
pub const ORACLE_AGREEMENT: f64 = 1e-8;

/// Pointwise residual allowed for eigenmodes and deficiency spinors.
pub const SPINOR_RESIDUAL: f64 = 1e-8;

/// Pointwise residual allowed for the harmonic kernel functions.
pub const KERNEL_RESIDUAL: f64 = 1e-10;

/// Slack in the nesting monotonicity of singular values.
pub const NESTING_SLACK: f64 = 1e-10;

/// Largest dense matrix (in entries) the assemblers will allocate.
pub const MAX_MATRIX_ENTRIES: usize = 1 << 28;

/// Witness protocol: the squared witness norm must stay below this.
pub const XI_NORM_SQ_CEILING: f64 = 1.01;

/// Witness protocol: the pairings at the last grid point must fall below this.
pub const PAIRING_CEILING: f64 = 0.1;

/// Witness protocol: a tail larger than this fraction of its quantity raises a warning.
pub const TAIL_WARNING_FRACTION: f64 = 0.1;

/// Default truncation: `L = max(TRUNCATION_FACTOR * m, TRUNCATION_FLOOR)`.
pub const TRUNCATION_FACTOR: u64 = 10;
pub const TRUNCATION_FLOOR: usize = 1000;

pub const DEFAULT_SWEEP_SIZES: [usize; 4] = [64, 256, 1024, 4096];
pub const DEFAULT_THRESHOLDS: [f64; 4] = [0.01, 0.05, 0.1, 0.25];

/// Angular orders kept by the disc sweep (`size = 2 * orders * k_max`).
pub const DISC_SWEEP_ORDERS: u32 = 2;
