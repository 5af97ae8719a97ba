//! Exact computation of toric-domain invariants: moment-region geometry,
//! Reeb action spectra of ellipsoid boundaries, Conley-Zehnder and Maslov
//! index arithmetic, and status-flagged symplectic capacity chains.
//!
//! All geometric quantities are arbitrary-precision rationals; results that
//! can only be approximated (n-th roots, Monte Carlo volumes) are explicitly
//! flagged as such. The `capspec` binary exposes the library through a small
//! deterministic CLI emitting CSV or JSON.

pub mod capacity;
pub mod cli;
pub mod index;
pub mod parse;
pub mod rational;
pub mod spectrum;
pub mod toric;

pub use rational::Rational;
pub use toric::ToricRegion;

/// Crate-wide error type. The CLI maps these onto its exit-code taxonomy.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed textual input (rational literals, JSON domain specs).
    #[error("parse error: {0}")]
    Parse(String),
    /// A precondition on operation arguments was violated.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// Two Reeb orbits share an action where a unique one is required.
    #[error("degenerate spectrum: perturb a")]
    DegenerateSpectrum,
    /// The inclusion test is not defined for this pair of regions.
    #[error("unsupported inclusion query")]
    UnsupportedInclusion,
    /// The symplectic path cannot be evaluated exactly over the rationals.
    #[error("unsupported block")]
    UnsupportedBlock,
    /// The symmetric block is singular.
    #[error("degenerate S")]
    DegenerateBlock,
    /// The path closes up into a loop, where the index formula is undefined.
    #[error("loop path: exp(T J0 S) = Id")]
    LoopPath,
    /// Volume requested for a region of infinite volume.
    #[error("infinite volume")]
    InfiniteVolume,
    /// The diagonal ray is unbounded inside the region.
    #[error("unbounded diagonal")]
    UnboundedDiagonal,
    /// The standing hypothesis `m a_1 < a_next` of the normal index fails.
    #[error("hypothesis m a_1 < a_next fails")]
    NormalHypothesis,
    /// The requested query is outside the supported fragment.
    #[error("unsupported query: {0}")]
    Unsupported(String),
    /// A state the implementation promises is unreachable.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
