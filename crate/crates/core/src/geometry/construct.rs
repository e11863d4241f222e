use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::arrangement::{vertical_distance_matrix, Arrangement};
use crate::error::{Error, Result};
use crate::exact::{eventual_tp_exponent, ExactMatrix, Rational};

/// Output of [`exp_matrix_tp`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TpConstruction {
    /// `t^(hadamard · e_ij)`; TP, and equal to 1 exactly at the incidences.
    pub matrix: ExactMatrix,
    /// Integer exponents `e_ij`, zero exactly at the incidences.
    pub exponents: ExactMatrix,
    /// Scale `K` applied to the vertical distances before rounding.
    pub scale: Rational,
    /// Hadamard exponent found by the doubling search.
    pub hadamard: u32,
    pub base: Rational,
    pub point_order: Vec<usize>,
    pub line_order: Vec<usize>,
}

/// Rounds `K·a` away from zero; zero stays zero.
fn round_away(v: &Rational) -> BigInt {
    if v.is_positive() {
        v.ceil().to_integer()
    } else if v.is_negative() {
        v.floor().to_integer()
    } else {
        BigInt::zero()
    }
}

/// Integer exponents `E = round_away(K·A)` for the smallest `K` in `1, 2, 4, …`
/// such that every adjacent second difference of `E` is at least 1, which
/// makes every second difference positive. When `K·A` is already integral the
/// rounding is exact, so this is the plain rescaling of `A`.
fn integer_exponents(a: &ExactMatrix) -> (Rational, Vec<Vec<BigInt>>) {
    let mut k = Rational::one();
    loop {
        let e: Vec<Vec<BigInt>> = (0..a.rows())
            .map(|i| a.row(i).iter().map(|v| round_away(&(v * &k))).collect())
            .collect();
        let ok = (0..a.rows().saturating_sub(1)).all(|i| {
            (0..a.cols().saturating_sub(1))
                .all(|j| &e[i + 1][j + 1] - &e[i + 1][j] - &e[i][j + 1] + &e[i][j] >= BigInt::one())
        });
        if ok {
            return (k, e);
        }
        k *= Rational::from_integer(2.into());
    }
}

fn power(base: &Rational, exp: &BigInt) -> Result<Rational> {
    let e = u32::try_from(exp.abs())
        .map_err(|_| Error::Exhausted(format!("exponent {exp} is too large to materialize")))?;
    let p = num_traits::Pow::pow(base, e);
    Ok(if exp.is_negative() { p.recip() } else { p })
}

/// Builds a TP matrix whose entries equal 1 exactly at the incidences of a
/// general-position arrangement.
///
/// With `A` the vertical-distance matrix, the integer exponents `E` have the
/// same sign pattern as `A` and positive second differences, so
/// `B = [t^(e_ij)]` is TP₂ for any `t > 1`; the doubling search of
/// [`eventual_tp_exponent`] then finds a Hadamard power of `B` that is TP.
pub fn exp_matrix_tp(arr: &Arrangement, t: &Rational, cap: u32) -> Result<TpConstruction> {
    if *t <= Rational::one() {
        return Err(Error::input("the base t must exceed 1"));
    }
    let dist = vertical_distance_matrix(arr)?;
    let (scale, e) = integer_exponents(&dist.matrix);
    let rows = dist.matrix.rows();
    let cols = dist.matrix.cols();
    let b_entries = e.iter().flatten().map(|v| power(t, v)).collect::<Result<Vec<_>>>()?;
    let b = ExactMatrix::new(rows, cols, b_entries)?;
    log::debug!(
        "exponent scale {scale}, max |e| = {}",
        e.iter().flatten().map(Signed::abs).max().unwrap_or_default()
    );
    let hadamard = eventual_tp_exponent(&b, cap)?;
    let matrix = if hadamard == 1 { b } else { crate::exact::hadamard_power(&b, hadamard) };
    let exponents = ExactMatrix::new(
        rows,
        cols,
        e.into_iter().flatten().map(Rational::from_integer).collect(),
    )?;
    Ok(TpConstruction {
        matrix,
        exponents,
        scale,
        hadamard,
        base: t.clone(),
        point_order: dist.point_order,
        line_order: dist.line_order,
    })
}
