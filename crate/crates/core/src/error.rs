use crate::bits::BinaryVector;
use crate::params::TypeParams;
use std::fmt;

/// Which structural bound a measured (rank, kernel) report broke.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// rank outside `[γ+2δ, min(β+δ+κ, γ+2δ+C(δ,2))]`.
    RankRange,
    /// kernel dimension outside the set allowed for the code's `s`.
    KernelSet,
    /// `r̄ > C(k̄,2)` or `r̄ = 0` for a nonlinear code.
    PairCeiling,
    /// odd `k̄` with `r̄ < 2`.
    OddDeficiency,
    /// exactly one of `r̄`, `k̄` is zero.
    Linearity,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bound::RankRange => "rank range",
            Bound::KernelSet => "kernel dimension set",
            Bound::PairCeiling => "rank excess ceiling C(k_bar,2)",
            Bound::OddDeficiency => "odd kernel deficiency needs rank excess >= 2",
            Bound::Linearity => "rank excess and kernel deficiency vanish together",
        })
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: expected ({},{}), found ({},{})", .expected.0, .expected.1, .found.0, .found.1)]
    ShapeMismatch { expected: (usize, usize), found: (usize, usize) },

    #[error("symbol {value} at position {position} is not in Z{modulus}")]
    InvalidSymbol { position: usize, value: u8, modulus: u8 },

    #[error("binary vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("ambient space is empty (alpha + beta = 0)")]
    EmptyAmbient,

    #[error("generating set spans only the zero code")]
    DegenerateCode,

    #[error("infeasible type {params}: {reason}")]
    InfeasibleType { params: TypeParams, reason: String },

    #[error("{what} {value} is not feasible for type {params}; allowed: {allowed}")]
    OutOfRange { what: &'static str, value: usize, params: TypeParams, allowed: String },

    #[error("pair (rank {rank}, kernel {kernel}) is not feasible for type {params}: {reason}")]
    InfeasiblePair { rank: usize, kernel: usize, params: TypeParams, reason: String },

    #[error("enumeration guard exceeded: {what} needs {needed}, limit {limit}")]
    GuardExceeded { what: &'static str, needed: usize, limit: usize },

    #[error("coset cover violated ({reason}); witness {witness}")]
    CoverViolation { reason: String, witness: BinaryVector },

    #[error("bound violated: {bound}: {detail}")]
    BoundViolation { bound: Bound, detail: String },

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
