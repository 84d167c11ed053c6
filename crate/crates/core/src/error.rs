//! Error type shared by all core modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("weight vector for {n} nodes must have length {expected}, got {actual}")]
    WeightLength {
        n: usize,
        expected: usize,
        actual: usize,
    },

    #[error("node pair ({p}, {q}) invalid for n = {n}: require p < q < n (0-based)")]
    InvalidEdgePair { p: usize, q: usize, n: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix asymmetry {asymmetry:.3e} exceeds tolerance {tol:.3e}")]
    NotSymmetric { asymmetry: f64, tol: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("length mismatch between vectors: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("parameter `{name}` must be {constraint}, got {value}")]
    InvalidParameter {
        name: &'static str,
        constraint: &'static str,
        value: f64,
    },

    #[error("symmetric eigendecomposition failed to converge for a {n}x{n} matrix")]
    EigenFailed { n: usize },

    #[error("Laplacian is disconnected: {zero_eigenvalues} eigenvalues below threshold")]
    Disconnected { zero_eigenvalues: usize },

    #[error("failed to sample a connected graph after {attempts} attempts")]
    PersistentDisconnection { attempts: usize },

    #[error("non-finite value in solver iterate at iteration {iter}")]
    NonFiniteIterate { iter: usize },

    #[error("ground-truth Laplacian must be nonzero")]
    ZeroTruth,

    #[error("edge list parse error at line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
