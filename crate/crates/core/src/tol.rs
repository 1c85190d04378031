//! Numerical tolerances shared across the crate.
//!
//! All values are relative; the scale they multiply is noted per constant.

/// Symmetry of `L(x)` and `P(x, y)` matrices, relative to the matrix norm.
pub const EPS_SYM: f64 = 1e-10;
/// Singularity threshold: `|λ| ≤ EPS_INV · ‖x‖`.
pub const EPS_INV: f64 = 1e-10;
/// Cone classification threshold, scaled by `max(1, ‖x‖)`.
pub const EPS_CONE: f64 = 1e-9;
/// Eigenvalue merging threshold, scaled by `max(1, ‖x‖)`.
pub const EPS_GROUP: f64 = 1e-8;
/// Idempotency test `‖e² − e‖ ≤ EPS_IDEMPOTENT · max(1, ‖e‖)`.
pub const EPS_IDEMPOTENT: f64 = 1e-8;
/// Peirce-space membership, scaled by `max(1, ‖x‖)`.
pub const EPS_SUBSPACE: f64 = 1e-8;
/// Agreement of the two action routes.
pub const EPS_ACTION: f64 = 1e-7;
/// `embed ∘ represent` round trip.
pub const EPS_ROUNDTRIP: f64 = 1e-7;
/// Column drop tolerance of the pivoted Gram–Schmidt basis builder.
pub const DROP_TOL: f64 = 1e-10;
/// Jacobi sweep budget before `ConvergenceFailure`.
pub const MAX_SWEEPS: usize = 64;
/// Samples whose relevant inverses exceed this condition number are resampled.
pub const CONDITION_GUARD: f64 = 1e8;
