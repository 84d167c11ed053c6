//! Learning sparse combinatorial graph Laplacians (CGLs) from sample
//! covariance matrices under a Gaussian Markov random field model.
//!
//! The estimator minimizes a log-determinant objective regularized by the
//! weakly-convex minimax concave (MC) penalty, solved with a primal-dual
//! splitting iteration whose step sizes can be validated for provable
//! convergence. The optimization variable is the vector of nonnegative
//! upper-triangular edge weights; the Laplacian structure (symmetry, zero
//! row sums, nonpositive off-diagonals) then holds by construction.
//!
//! Module map:
//!
//! * [`graph`] — edge-indexed weight vectors, the linear operator mapping
//!   weights to Laplacians, its adjoint, and structural validation.
//! * [`prox`] — penalty functions, the smooth-part gradient, and the
//!   proximity operators used by the solver.
//! * [`solver`] — the primal-dual splitting iteration, parameter
//!   admissibility checks, and per-run diagnostics.
//! * [`presets`] — named parameter presets for the benchmark graph families.
//! * [`synthetic`] — benchmark graph generation, GMRF sampling, and sample
//!   covariance computation.
//! * [`metrics`] — relative error and support F-score.

pub mod eig;
pub mod error;
pub mod graph;
pub mod metrics;
pub mod presets;
pub mod prox;
pub mod solver;
pub mod synthetic;

pub use error::Error;
pub use graph::{edge_index, laplacian, laplacian_adjoint, operator_norm, validate_cgl, WeightVector};
pub use metrics::{evaluate, relative_error, EvalResult};
pub use presets::Preset;
pub use prox::PenaltyParams;
pub use solver::{solve, validate_params, Admissibility, SolveReport, SolverParams};
pub use synthetic::{GraphFamily, GraphSpec};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Dense column-major matrix of `f64`, the working representation for
/// covariance matrices, Laplacians, and dual variables.
pub type Matrix = nalgebra::DMatrix<f64>;

/// Dense vector of `f64`, the working representation for weight vectors.
pub type Vector = nalgebra::DVector<f64>;
