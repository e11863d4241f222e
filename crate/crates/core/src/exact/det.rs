use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::ExactMatrix;
use super::rational::{common_denominator, Rational};
use crate::error::{Error, Result};

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. Consumes its argument as scratch space.
pub(crate) fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Exact determinant of the submatrix on `rows × cols` after clearing each
/// selected row's denominators.
pub(crate) fn minor_unchecked(a: &ExactMatrix, rows: &[usize], cols: &[usize]) -> Rational {
    let mut scale = BigInt::one();
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|&r| {
            let cells: Vec<&Rational> = cols.iter().map(|&c| a.get(r, c)).collect();
            let lcd = common_denominator(cells.iter().copied());
            let row = cells.iter().map(|v| v.numer() * (&lcd / v.denom())).collect();
            scale *= lcd;
            row
        })
        .collect();
    Rational::new(bareiss(ints), scale)
}

fn check_index_set(set: &[usize], bound: usize, what: &str) -> Result<()> {
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::input(format!("{what} indices must be strictly increasing")));
    }
    if let Some(&bad) = set.iter().find(|&&i| i >= bound) {
        return Err(Error::input(format!("{what} index {bad} out of range (size {bound})")));
    }
    Ok(())
}

/// Determinant of the submatrix selected by `rows` and `cols` (0-based,
/// strictly increasing, equal nonzero length).
pub fn minor(a: &ExactMatrix, rows: &[usize], cols: &[usize]) -> Result<Rational> {
    if rows.is_empty() || rows.len() != cols.len() {
        return Err(Error::input(format!(
            "minor needs equal nonempty index sets, got {} rows and {} cols",
            rows.len(),
            cols.len()
        )));
    }
    check_index_set(rows, a.rows(), "row")?;
    check_index_set(cols, a.cols(), "column")?;
    Ok(minor_unchecked(a, rows, cols))
}

/// Determinant of a square matrix.
pub fn determinant(a: &ExactMatrix) -> Result<Rational> {
    if a.rows() != a.cols() {
        return Err(Error::input("determinant of a non-square matrix"));
    }
    let all: Vec<usize> = (0..a.rows()).collect();
    Ok(minor_unchecked(a, &all, &all))
}

pub(crate) fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}
