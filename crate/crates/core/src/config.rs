//! Entry configurations, multiplicities and the diagonal audit of extreme
//! entries.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{is_tp, ExactMatrix, Rational};

/// A 0-1 matrix, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryConfiguration {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BinaryConfiguration {
    pub fn new(rows: usize, cols: usize, bits: Vec<bool>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::input("configuration dimensions must be positive"));
        }
        if bits.len() != rows * cols {
            return Err(Error::input(format!(
                "expected {} bits for a {rows}x{cols} configuration, got {}",
                rows * cols,
                bits.len()
            )));
        }
        Ok(Self { rows, cols, bits })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| false)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == j)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(rows > 0 && cols > 0, "configuration dimensions must be positive");
        let bits = (0..rows * cols).map(|p| f(p / cols, p % cols)).collect();
        Self { rows, cols, bits }
    }

    /// Builds an `rows × cols` configuration with ones at the given 0-based
    /// positions.
    pub fn from_positions(
        rows: usize,
        cols: usize,
        ones: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut out = Self::new(rows, cols, vec![false; rows * cols])?;
        for (i, j) in ones {
            if i >= rows || j >= cols {
                return Err(Error::input(format!("position ({i},{j}) outside {rows}x{cols}")));
            }
            out.bits[i * cols + j] = true;
        }
        Ok(out)
    }

    /// Low bit of `mask` is position (0,0), then row-major.
    pub fn from_mask(rows: usize, cols: usize, mask: u64) -> Self {
        Self::from_fn(rows, cols, |i, j| mask >> (i * cols + j) & 1 == 1)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Positions of the ones in row-major order.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let cols = self.cols;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(p, _)| (p / cols, p % cols))
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows).map(|i| (0..self.cols).filter(|&j| self.get(i, j)).count()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols).map(|j| (0..self.rows).filter(|&i| self.get(i, j)).count()).collect()
    }

    /// Parses `m` lines of `n` characters from `{0,1}`. Blank lines are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let Some(first) = lines.first() else {
            return Err(Error::input("empty configuration"));
        };
        let cols = first.len();
        let mut bits = Vec::with_capacity(lines.len() * cols);
        for (r, line) in lines.iter().enumerate() {
            if line.len() != cols {
                return Err(Error::input(format!(
                    "configuration line {} has {} characters, expected {cols}",
                    r + 1,
                    line.len()
                )));
            }
            for ch in line.chars() {
                match ch {
                    '0' => bits.push(false),
                    '1' => bits.push(true),
                    other => {
                        return Err(Error::input(format!(
                            "unexpected character {other:?} in configuration line {}",
                            r + 1
                        )))
                    }
                }
            }
        }
        Self::new(lines.len(), cols, bits)
    }
}

impl fmt::Display for BinaryConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Positions where `a` equals `x` exactly.
pub fn configuration(a: &ExactMatrix, x: &Rational) -> BinaryConfiguration {
    BinaryConfiguration::from_fn(a.rows(), a.cols(), |i, j| a.get(i, j) == x)
}

/// Number of occurrences of `x` in `a`.
pub fn multiplicity(a: &ExactMatrix, x: &Rational) -> usize {
    a.entries().iter().filter(|v| *v == x).count()
}

/// Distinct entry values in increasing order.
pub fn distinct_values(a: &ExactMatrix) -> Vec<Rational> {
    a.entries().iter().cloned().collect::<BTreeSet<_>>().into_iter().collect()
}

/// The `k`-th smallest (or largest) distinct value, `k ≥ 1`.
pub fn kth_smallest_value(a: &ExactMatrix, k: usize, largest: bool) -> Result<Rational> {
    let mut values = distinct_values(a);
    if k == 0 || k > values.len() {
        return Err(Error::input(format!(
            "asked for rank {k} but the matrix has {} distinct values",
            values.len()
        )));
    }
    if largest {
        values.reverse();
    }
    Ok(values.swap_remove(k - 1))
}

/// Row pair and column pair (0-based) selecting four ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AllOnesBlock {
    pub rows: [usize; 2],
    pub cols: [usize; 2],
}

/// First all-ones 2×2 submatrix in (row pair, column pair) lexicographic order.
pub fn has_all_ones_2x2(m: &BinaryConfiguration) -> Option<AllOnesBlock> {
    for r1 in 0..m.rows() {
        for r2 in r1 + 1..m.rows() {
            let shared: Vec<usize> = (0..m.cols()).filter(|&j| m.get(r1, j) && m.get(r2, j)).collect();
            if shared.len() >= 2 {
                return Some(AllOnesBlock { rows: [r1, r2], cols: [shared[0], shared[1]] });
            }
        }
    }
    None
}

/// Per-diagonal counts of the entries taking one of the `k` smallest (or
/// largest) distinct values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryRankReport {
    pub k: usize,
    pub largest: bool,
    /// The ranked values, smallest first (largest first when `largest`).
    pub values: Vec<Rational>,
    /// Offset `c` to count. For smallest entries the diagonal `c` holds the
    /// 1-based positions with `i = c + j`; for largest entries the
    /// anti-diagonal `c` holds those with `i + j = c + n + 1`.
    pub per_diagonal: BTreeMap<i64, usize>,
    pub total: usize,
    /// `2^k − 1`, saturating.
    pub per_diagonal_bound: u64,
    /// `(2^k − 1)(2n − 1)`, saturating.
    pub total_bound: u64,
}

impl EntryRankReport {
    pub fn diagonals_within_bound(&self) -> bool {
        self.per_diagonal.values().all(|&c| c as u64 <= self.per_diagonal_bound)
    }

    pub fn total_within_bound(&self) -> bool {
        self.total as u64 <= self.total_bound
    }
}

/// Diagonal audit of the `k` smallest (anti-diagonal audit of the `k` largest)
/// distinct values of a square TP matrix. If the matrix has fewer than `k`
/// distinct values, all of them are used.
pub fn smallest_k_audit(a: &ExactMatrix, k: usize, largest: bool) -> Result<EntryRankReport> {
    if a.rows() != a.cols() {
        return Err(Error::input("the diagonal audit needs a square matrix"));
    }
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    if !is_tp(a) {
        return Err(Error::precondition("the diagonal audit needs a TP matrix"));
    }
    let n = a.rows();
    let mut values = distinct_values(a);
    if largest {
        values.reverse();
    }
    values.truncate(k);
    let chosen: BTreeSet<&Rational> = values.iter().collect();
    let n_i = n as i64;
    let mut per_diagonal: BTreeMap<i64, usize> = (1 - n_i..n_i).map(|c| (c, 0)).collect();
    let mut total = 0;
    for i in 0..n {
        for j in 0..n {
            if chosen.contains(a.get(i, j)) {
                let (i1, j1) = (i as i64 + 1, j as i64 + 1);
                let offset = if largest { i1 + j1 - (n_i + 1) } else { i1 - j1 };
                *per_diagonal.get_mut(&offset).expect("offset in range") += 1;
                total += 1;
            }
        }
    }
    let per_diagonal_bound = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    let total_bound = per_diagonal_bound.saturating_mul(2 * n as u64 - 1);
    Ok(EntryRankReport { k, largest, values, per_diagonal, total, per_diagonal_bound, total_bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, random_tp};

    fn example() -> ExactMatrix {
        ExactMatrix::from_i64(&[[1, 2, 3], [5, 2, 4], [2, 7, 2]])
    }

    #[test]
    fn configuration_and_multiplicity() {
        let a = example();
        let c = configuration(&a, &int(2));
        assert_eq!(c.ones().collect::<Vec<_>>(), vec![(0, 1), (1, 1), (2, 0), (2, 2)]);
        assert_eq!(c.weight(), 4);
        assert_eq!(multiplicity(&a, &int(2)), 4);
        assert_eq!(multiplicity(&a, &int(8)), 0);
        assert_eq!(multiplicity(&a, &int(7)), 1);
        let j = ExactMatrix::from_i64(&[[1, 1], [1, 1]]);
        assert_eq!(configuration(&j, &int(1)).weight(), 4);
    }

    #[test]
    fn ranks() {
        let a = example();
        assert_eq!(kth_smallest_value(&a, 1, false).unwrap(), int(1));
        assert_eq!(kth_smallest_value(&a, 2, false).unwrap(), int(2));
        assert_eq!(kth_smallest_value(&a, 3, false).unwrap(), int(3));
        assert_eq!(kth_smallest_value(&a, 1, true).unwrap(), int(7));
        let c = ExactMatrix::from_i64(&[[4, 4], [4, 4]]);
        assert_eq!(kth_smallest_value(&c, 1, false).unwrap(), int(4));
        assert!(kth_smallest_value(&c, 2, false).is_err());
    }

    #[test]
    fn all_ones_blocks() {
        let j = BinaryConfiguration::from_fn(2, 2, |_, _| true);
        assert_eq!(has_all_ones_2x2(&j), Some(AllOnesBlock { rows: [0, 1], cols: [0, 1] }));
        assert_eq!(has_all_ones_2x2(&BinaryConfiguration::identity(4)), None);
        let cyc = BinaryConfiguration::parse_text("0101\n0011\n1100\n1010\n").unwrap();
        assert_eq!(has_all_ones_2x2(&cyc), None);
    }

    #[test]
    fn text_format_round_trip() {
        let cyc = BinaryConfiguration::parse_text("0101\n0011\n").unwrap();
        assert_eq!(cyc.to_string(), "0101\n0011\n");
        assert!(BinaryConfiguration::parse_text("01\n1").is_err());
        assert!(BinaryConfiguration::parse_text("02").is_err());
    }

    #[test]
    fn audit_of_small_tp_matrices() {
        let a = ExactMatrix::from_i64(&[[2, 1], [1, 3]]);
        let r = smallest_k_audit(&a, 1, false).unwrap();
        assert!(r.per_diagonal.values().all(|&c| c <= 1));
        assert_eq!(r.per_diagonal.get(&1), Some(&1));
        assert_eq!(r.per_diagonal.get(&-1), Some(&1));

        let b = random_tp(5, 5, 3);
        let r = smallest_k_audit(&b, 2, false).unwrap();
        assert!(r.per_diagonal.values().all(|&c| c <= 3));
        assert_eq!(r.total, r.per_diagonal.values().sum::<usize>());

        let r = smallest_k_audit(&b, 25, true).unwrap();
        assert!(r.total_within_bound());
        assert!(smallest_k_audit(&ExactMatrix::from_i64(&[[1, 2], [2, 1]]), 1, false).is_err());
    }
}
