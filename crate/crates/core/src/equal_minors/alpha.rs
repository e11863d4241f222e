use std::collections::BTreeSet;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{is_tp, ExactMatrix, Rational};

/// Column pairs `(i, j)`, `1 ≤ i < j ≤ n`, whose 2×2 minor equals `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaSet {
    pub alpha: Rational,
    pub pairs: BTreeSet<(usize, usize)>,
}

impl AlphaSet {
    pub fn new(alpha: Rational, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::input("alpha must be positive"));
        }
        let pairs: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i == 0 || i >= j) {
            return Err(Error::input(format!("pair ({i},{j}) is not of the form 1 <= i < j")));
        }
        Ok(Self { alpha, pairs })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i.min(j), i.max(j)))
    }
}

fn minor2(a: &ExactMatrix, i: usize, j: usize) -> Rational {
    a.get(0, i) * a.get(1, j) - a.get(0, j) * a.get(1, i)
}

/// All column pairs of the 2×n TP matrix `a` with 2×2 minor `alpha`.
pub fn alpha_set(a: &ExactMatrix, alpha: &Rational) -> Result<AlphaSet> {
    if a.rows() != 2 {
        return Err(Error::input(format!("alpha sets need a 2-row matrix, got {} rows", a.rows())));
    }
    if !is_tp(a) {
        return Err(Error::precondition("alpha sets are defined for TP matrices"));
    }
    let n = a.cols();
    let pairs = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| minor2(a, i, j) == *alpha)
        .map(|(i, j)| (i + 1, j + 1));
    AlphaSet::new(alpha.clone(), pairs)
}

/// A quadruple `i < j < k < w` (1-based) whose four pairs of one pattern all
/// lie in an alpha set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuadrupleViolation {
    /// 1 for `{(i,j),(i,k),(j,w),(k,w)}`, 2 for `{(i,k),(i,w),(j,k),(j,w)}`.
    pub pattern: u8,
    pub quadruple: [usize; 4],
}

/// Every quadruple violating one of the two patterns that no alpha set of a
/// TP matrix can contain.
pub fn forbidden_quadruples(s: &AlphaSet, n: usize) -> Vec<QuadrupleViolation> {
    let has = |a: usize, b: usize| s.pairs.contains(&(a, b));
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for w in k + 1..=n {
                    if has(i, j) && has(i, k) && has(j, w) && has(k, w) {
                        out.push(QuadrupleViolation { pattern: 1, quadruple: [i, j, k, w] });
                    }
                    if has(i, k) && has(i, w) && has(j, k) && has(j, w) {
                        out.push(QuadrupleViolation { pattern: 2, quadruple: [i, j, k, w] });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn base_matrices() {
        let counts: Vec<usize> = [
            ExactMatrix::from_i64(&[[1, 2, 1], [6, 18, 12]]),
            ExactMatrix::from_i64(&[[1, 2, 3, 1], [6, 18, 30, 12]]),
            ExactMatrix::from_i64(&[[1, 2, 3, 4, 1], [6, 18, 30, 42, 12]]),
        ]
        .iter()
        .map(|a| alpha_set(a, &int(6)).unwrap().len())
        .collect();
        assert_eq!(counts, vec![3, 5, 7]);
        let a = ExactMatrix::from_i64(&[[1, 2, 1], [6, 18, 12]]);
        let s = alpha_set(&a, &int(6)).unwrap();
        assert_eq!(s.pairs.into_iter().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn two_by_six_certificate() {
        let a = ExactMatrix::from_i64(&[[8, 34, 9, 14, 20, 6], [4, 24, 8, 14, 24, 10]]);
        let s = alpha_set(&a, &int(56)).unwrap();
        let expect = [(1, 2), (1, 4), (1, 6), (2, 3), (3, 5), (4, 5), (4, 6), (5, 6)];
        assert_eq!(s.pairs.into_iter().collect::<Vec<_>>(), expect.to_vec());
    }

    #[test]
    fn quadruples() {
        let s = AlphaSet::new(int(1), [(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(
            forbidden_quadruples(&s, 4),
            vec![QuadrupleViolation { pattern: 1, quadruple: [1, 2, 3, 4] }]
        );
        let k4 = AlphaSet::new(int(1), [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let patterns: BTreeSet<u8> = forbidden_quadruples(&k4, 4).iter().map(|v| v.pattern).collect();
        assert_eq!(patterns, BTreeSet::from([1, 2]));
        assert!(AlphaSet::new(int(0), []).is_err());
        assert!(alpha_set(&ExactMatrix::from_i64(&[[1, 2], [2, 1]]), &int(1)).is_err());
    }
}
