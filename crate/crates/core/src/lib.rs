//! Exact machinery for equal entries in totally positive matrices.
//!
//! Everything is computed over arbitrary-precision rationals; no decision
//! procedure in this crate touches floating point.
//!
//! * [`exact`]: rational matrices, minors, compounds, Hadamard powers and the
//!   TP / TN / TP_k / TNS decision procedures.
//! * [`config`]: entry configurations, multiplicities and the diagonal audit of
//!   the k smallest (largest) entries.
//! * [`cycles`]: orthogonal cycles, their weight function, positivity, the
//!   exact LP deciding whether a positive collection exists, and pattern
//!   obstructions to TP₂ completion.
//! * [`bruhat`]: Bruhat order on permutations and on classes `A(R,S)`.
//! * [`geometry`]: point-line arrangements, projective normalization and the
//!   incidence-to-TP-matrix pipeline.
//! * [`tns`]: filling a mask without an all-ones 2×2 block into a totally
//!   nonsingular matrix.
//! * [`equal_minors`]: equal 2×2 minors of 2×n TP matrices and realization of
//!   outerplanar graphs.
//! * [`cli`]: the batch command surface used by the `totpos` binary.

pub mod bruhat;
pub mod cli;
pub mod config;
pub mod cycles;
pub mod equal_minors;
mod error;
pub mod exact;
pub mod geometry;
pub mod tns;

pub use error::{Error, Result};
pub use exact::{ExactMatrix, MatrixClass, Rational};
