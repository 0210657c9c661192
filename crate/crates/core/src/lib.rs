//! Exact arithmetic for sequences of symmetric functions and the difference
//! operators `Δ^λ_m f_n = f_n − (f_{n−m} + λ)` acting on them.
//!
//! The crate is organised bottom-up:
//!
//! * [`partition`]: partitions, componentwise sums, strip tests.
//! * [`schur`]: integer Schur expansions, Pieri and Jacobi–Trudi products.
//! * [`polytope`]: the staircase polytope whose lattice points index the
//!   Schur expansion of `h_{n+α_1} ⋯ h_{n+α_k}`, its face filters, and the
//!   centre decomposition for an extra factor `s_β`.
//! * [`sequence`]: sequence families, difference operators and vanishing
//!   searches.
//! * [`verify`]: checkers that turn the vanishing statements for double,
//!   triple and fourfold products into reports with evidence.

pub mod error;
pub mod partition;
pub mod polytope;
pub mod schur;
pub mod sequence;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use polytope::{Face, PartialMatrix};
pub use schur::SchurExpansion;
pub use sequence::{DiffOp, SequenceFamily};
pub use verify::{ClaimReport, Verdict};
