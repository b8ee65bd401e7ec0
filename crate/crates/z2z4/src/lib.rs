//! Z2Z4-additive codes: construction, analysis and exhaustive verification.
//!
//! A Z2Z4-additive code is an additive subgroup of `Z2^alpha x Z4^beta`: the
//! first `alpha` coordinates are binary, the remaining `beta` are quaternary.
//! Such a code has a type `(alpha, beta; gamma, delta; kappa)` and maps onto a
//! (generally nonlinear) binary code of length `alpha + 2*beta` through the
//! Gray map.
//!
//! The crate provides:
//!
//! * [`MixedVector`] / [`BinaryVector`]: packed vectors with the mixed
//!   weight, the Gray map, the Z2Z4 inner product and the simultaneous
//!   cyclic shift.
//! * [`Z2Z4Code`]: codes presented by generators or by a parity check
//!   matrix, with canonical reduction, type computation, duals, punctures
//!   and enumeration.
//! * [`construct`]: cyclic simplex and Hamming codes, the perfect code
//!   `C_{r,t}` for `2 <= r <= t <= 2r`, the cyclic representative at
//!   `(alpha, beta) = (3, 6)`, duals of perfect codes and parity extensions.
//! * [`verify`]: decision procedures (cyclicity, 1-perfectness by two
//!   independent methods, Gray-image linearity) and exhaustive searches
//!   (cyclic arrangements, the weight-8 closure search showing the cyclic
//!   1-perfect code at binary length 15 is unique up to coordinate
//!   arrangement).
//!
//! The searches in [`verify`] are data parallel. With the default `parallel`
//! feature they run on a rayon pool; without it they fall back to sequential
//! loops. Partitioning is deterministic and merging is order independent, so
//! a report is byte for byte identical no matter how many workers ran it.

pub mod code;
pub mod construct;
mod exec;
pub mod report;
pub mod suite;
pub mod textio;
pub mod vector;
pub mod verify;
mod z4linalg;

pub use code::{
    reduce, span, CodeType, MixedMatrix, ReducedForm, WeightDistribution, Z2Z4Code,
    DEFAULT_ENUMERATION_CAP,
};
pub use report::{AuditReport, Verdict, Witness};
pub use vector::{BinaryVector, MixedVector};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two vectors (or a vector and a code) with different shapes were mixed.
    #[error("shape mismatch: ({0}, {1}) vs ({2}, {3})")]
    ShapeMismatch(usize, usize, usize, usize),
    /// A symbol outside {0,1} (binary part) or {0..3} (quaternary part).
    #[error("symbol {0} out of range for the {1} part")]
    SymbolOutOfRange(u8, &'static str),
    /// Text input could not be parsed; `line` is 1-indexed.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// An enumeration would produce more codewords than the cap allows.
    #[error("enumeration of 2^{size_log2} codewords exceeds cap {cap}")]
    CapExceeded { size_log2: u32, cap: u64 },
    /// A type tuple violating the constraints of a Z2Z4-additive code.
    #[error("invalid code type: {0}")]
    InvalidType(String),
    /// Construction parameters outside the supported range.
    #[error("parameters out of range: {0}")]
    ParamRange(String),
    /// The sphere and column perfectness checks returned different verdicts.
    /// This indicates a bug; the two methods are equivalent.
    #[error("perfectness methods disagree: sphere={sphere}, columns={columns}")]
    MethodsDisagree { sphere: bool, columns: bool },
}

pub type Result<T> = std::result::Result<T, Error>;
