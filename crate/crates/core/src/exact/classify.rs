use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;

use super::det::{bareiss, minor_unchecked};
use super::matrix::ExactMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Matrix classes decided by [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixClass {
    /// Every minor positive.
    Tp,
    /// Every minor nonnegative.
    Tn,
    /// Every minor of order at most `k` positive.
    Tpk(usize),
    /// Entries and 2×2 minors positive.
    Tp2,
    /// Every minor nonzero.
    Tns,
}

impl MatrixClass {
    /// Largest minor order the class constrains on an `m × n` matrix.
    fn max_order(self, m: usize, n: usize) -> Result<usize> {
        let full = m.min(n);
        match self {
            MatrixClass::Tpk(k) if k == 0 || k > full => Err(Error::input(format!(
                "TP_k needs 1 <= k <= {full} for a {m}x{n} matrix, got k = {k}"
            ))),
            MatrixClass::Tpk(k) => Ok(k),
            MatrixClass::Tp2 => Ok(full.min(2)),
            _ => Ok(full),
        }
    }
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixClass::Tp => write!(f, "tp"),
            MatrixClass::Tn => write!(f, "tn"),
            MatrixClass::Tpk(k) => write!(f, "tpk:{k}"),
            MatrixClass::Tp2 => write!(f, "tp2"),
            MatrixClass::Tns => write!(f, "tns"),
        }
    }
}

impl FromStr for MatrixClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "tp" => Ok(MatrixClass::Tp),
            "tn" => Ok(MatrixClass::Tn),
            "tp2" => Ok(MatrixClass::Tp2),
            "tns" => Ok(MatrixClass::Tns),
            other => match other.strip_prefix("tpk:").map(str::parse::<usize>) {
                Some(Ok(k)) => Ok(MatrixClass::Tpk(k)),
                _ => Err(Error::input(format!(
                    "unknown matrix class {s:?}; expected tp, tn, tp2, tpk:<k> or tns"
                ))),
            },
        }
    }
}

/// A minor that violates class membership. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Rational,
}

impl MinorWitness {
    fn at(a: &ExactMatrix, rows: Vec<usize>, cols: Vec<usize>) -> Self {
        let value = minor_unchecked(a, &rows, &cols);
        Self { rows, cols, value }
    }
}

/// Verdict of [`classify`]: membership plus a failing minor when not a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub member: bool,
    pub witness: Option<MinorWitness>,
}

impl Classification {
    fn from_witness(witness: Option<MinorWitness>) -> Self {
        Self { member: witness.is_none(), witness }
    }
}

/// Decides whether `a` lies in `cls`.
///
/// TP, TP₂ and TP_k use the contiguous-minor certificate: a matrix has all
/// minors of order `≤ k` positive iff all its minors with consecutive rows and
/// consecutive columns of order `≤ k` are. These minors are produced by
/// Dodgson condensation, so the cost is polynomial. The witness is the first
/// failing contiguous minor by (order, first row, first column).
///
/// TN and TNS enumerate every minor; the witness is the least failing minor
/// by (order, rows, cols) in lexicographic order. This is exponential and is
/// intended for matrices up to about 10×10.
pub fn classify(a: &ExactMatrix, cls: MatrixClass) -> Result<Classification> {
    let order = cls.max_order(a.rows(), a.cols())?;
    let witness = match cls {
        MatrixClass::Tp | MatrixClass::Tp2 | MatrixClass::Tpk(_) => contiguous_failure(a, order),
        MatrixClass::Tn => exhaustive_failure(a, order, |s| s >= 0),
        MatrixClass::Tns => exhaustive_failure(a, order, |s| s != 0),
    };
    Ok(Classification::from_witness(witness))
}

/// Same verdict as [`classify`], but every class is decided by enumerating all
/// minors. Used to cross-check the contiguous certificate.
pub fn classify_exhaustive(a: &ExactMatrix, cls: MatrixClass) -> Result<Classification> {
    let order = cls.max_order(a.rows(), a.cols())?;
    let witness = match cls {
        MatrixClass::Tn => exhaustive_failure(a, order, |s| s >= 0),
        MatrixClass::Tns => exhaustive_failure(a, order, |s| s != 0),
        _ => exhaustive_failure(a, order, |s| s > 0),
    };
    Ok(Classification::from_witness(witness))
}

/// Shorthand for `classify(a, Tp).member`.
pub fn is_tp(a: &ExactMatrix) -> bool {
    contiguous_failure(a, a.rows().min(a.cols())).is_none()
}

/// First nonpositive contiguous minor of order `≤ max_order`, if any.
fn contiguous_failure(a: &ExactMatrix, max_order: usize) -> Option<MinorWitness> {
    let (m, n) = (a.rows(), a.cols());
    let ints = a.integer_rows();
    let mut prev: Vec<Vec<BigInt>> = vec![vec![BigInt::one(); n + 1]; m + 1];
    let mut cur = ints;
    for k in 1..=max_order {
        // `cur` holds the contiguous minors of order k, indexed by top-left corner.
        for (r, row) in cur.iter().enumerate() {
            if let Some(c) = row.iter().position(|v| !v.is_positive()) {
                return Some(MinorWitness::at(a, (r..r + k).collect(), (c..c + k).collect()));
            }
        }
        if k == max_order {
            break;
        }
        let next: Vec<Vec<BigInt>> = (0..m - k)
            .map(|r| {
                (0..n - k)
                    .map(|c| {
                        let cross = &cur[r][c] * &cur[r + 1][c + 1] - &cur[r][c + 1] * &cur[r + 1][c];
                        cross / &prev[r + 1][c + 1]
                    })
                    .collect()
            })
            .collect();
        prev = std::mem::replace(&mut cur, next);
    }
    None
}

/// Least minor (by order, then rows, then cols) whose sign fails `ok`.
fn exhaustive_failure(
    a: &ExactMatrix,
    max_order: usize,
    ok: impl Fn(i8) -> bool + Sync,
) -> Option<MinorWitness> {
    let ints = a.integer_rows();
    for k in 1..=max_order {
        let row_sets: Vec<Vec<usize>> = (0..a.rows()).combinations(k).collect();
        let col_sets: Vec<Vec<usize>> = (0..a.cols()).combinations(k).collect();
        let hit = row_sets
            .par_iter()
            .flat_map_iter(|rs| col_sets.iter().map(move |cs| (rs, cs)))
            .find_first(|(rs, cs)| {
                let sub = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| ints[r][c].clone()).collect())
                    .collect();
                !ok(super::det::sign_of(&bareiss(sub)))
            });
        if let Some((rs, cs)) = hit {
            return Some(MinorWitness::at(a, rs.clone(), cs.clone()));
        }
    }
    None
}

pub(crate) fn all_entries_positive(a: &ExactMatrix) -> bool {
    a.entries().iter().all(Signed::is_positive)
}
