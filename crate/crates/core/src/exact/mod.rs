//! Exact rational matrices and total-positivity decision procedures.

mod classify;
mod det;
mod generate;
mod matrix;
mod ops;
mod rational;

pub use classify::{classify, classify_exhaustive, is_tp, Classification, MatrixClass, MinorWitness};
pub use det::{determinant, minor};
pub use generate::random_tp;
pub use matrix::{rational_from_json, rational_to_json, ExactMatrix};
pub use ops::{eventual_tp_exponent, hadamard_power, kth_compound};
pub use rational::{format_rational, frac, int, parse_rational, Rational};

