use itertools::Itertools;
use num_traits::Pow;
use rayon::prelude::*;

use super::classify::{all_entries_positive, classify, is_tp, MatrixClass};
use super::det::minor_unchecked;
use super::matrix::ExactMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Matrix of all `k × k` minors, row and column index sets in lexicographic
/// order.
pub fn kth_compound(a: &ExactMatrix, k: usize) -> Result<ExactMatrix> {
    let full = a.rows().min(a.cols());
    if k == 0 || k > full {
        return Err(Error::input(format!("compound order must be in 1..={full}, got {k}")));
    }
    let row_sets: Vec<Vec<usize>> = (0..a.rows()).combinations(k).collect();
    let col_sets: Vec<Vec<usize>> = (0..a.cols()).combinations(k).collect();
    let entries: Vec<Rational> = row_sets
        .par_iter()
        .flat_map_iter(|rs| col_sets.iter().map(move |cs| minor_unchecked(a, rs, cs)))
        .collect();
    ExactMatrix::new(row_sets.len(), col_sets.len(), entries)
}

/// Entrywise `t`-th power. `t = 0` gives the all-ones matrix.
pub fn hadamard_power(a: &ExactMatrix, t: u32) -> ExactMatrix {
    a.map(|v| Pow::pow(v, t))
}

/// Smallest `t` in the schedule `1, 2, 4, …` with `t ≤ cap` such that the
/// Hadamard power `A^(t)` is TP.
///
/// Requires `A` to be TP₂, since otherwise no Hadamard power is TP. Running
/// past `cap` is reported as [`Error::Exhausted`]; it does not show that `A`
/// is not eventually TP.
pub fn eventual_tp_exponent(a: &ExactMatrix, cap: u32) -> Result<u32> {
    if cap == 0 {
        return Err(Error::input("exponent cap must be positive"));
    }
    if !all_entries_positive(a) {
        return Err(Error::precondition("matrix has a nonpositive entry"));
    }
    if let Some(w) = classify(a, MatrixClass::Tp2)?.witness {
        return Err(Error::precondition(format!(
            "matrix is not TP2: 2x2 minor on rows {:?}, cols {:?} equals {}",
            w.rows, w.cols, w.value
        )));
    }
    let mut t: u32 = 1;
    while t <= cap {
        if is_tp(&hadamard_power(a, t)) {
            return Ok(t);
        }
        log::debug!("Hadamard power {t} is not TP");
        t = match t.checked_mul(2) {
            Some(next) => next,
            None => break,
        };
    }
    Err(Error::Exhausted(format!("no Hadamard power up to {cap} in the doubling schedule is TP")))
}
