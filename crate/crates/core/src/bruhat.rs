//! Bruhat order on permutations and on classes `A(R,S)` of 0-1 matrices,
//! and its link with positivity of orthogonal cycles.

use std::fmt;
use std::str::FromStr;

use crate::config::BinaryConfiguration;
use crate::cycles::{collection_is_positive, CycleCollection, OrthogonalCycle};
use crate::error::{Error, Result};

/// Permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i]` is the image of `i + 1`, in `1..=n`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::input(format!("{images:?} is not a permutation of 1..={n}")));
            }
        }
        if n == 0 {
            return Err(Error::input("empty permutation"));
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 0-based row `i` as a 0-based column.
    pub fn at(&self, i: usize) -> usize {
        self.images[i] - 1
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// `"3412"` for `n ≤ 9`; comma- or space-separated images otherwise.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Vec<&str> = if s.contains([',', ' ']) {
            s.split([',', ' ']).filter(|t| !t.is_empty()).collect()
        } else {
            s.split("").filter(|t| !t.is_empty()).collect()
        };
        let images = parts
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| Error::input(format!("bad permutation {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

/// Row-sum and column-sum vectors of a class `A(R,S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSClass {
    pub r: Vec<usize>,
    pub s: Vec<usize>,
}

impl RSClass {
    pub fn new(r: Vec<usize>, s: Vec<usize>) -> Result<Self> {
        if r.iter().sum::<usize>() != s.iter().sum::<usize>() {
            return Err(Error::input("row and column sums of an A(R,S) class must agree"));
        }
        Ok(Self { r, s })
    }

    pub fn of(m: &BinaryConfiguration) -> Self {
        Self { r: m.row_sums(), s: m.col_sums() }
    }

    pub fn contains(&self, m: &BinaryConfiguration) -> bool {
        m.row_sums() == self.r && m.col_sums() == self.s
    }
}

/// Ones at `(i, p(i))`.
pub fn permutation_matrix(p: &Permutation) -> BinaryConfiguration {
    BinaryConfiguration::from_fn(p.len(), p.len(), |i, j| p.at(i) == j)
}

/// `counts[i][j]` = ones in rows `< i` and columns `< j`, for `i ≤ m`, `j ≤ n`.
fn prefix_counts(m: &BinaryConfiguration) -> Vec<Vec<usize>> {
    let mut c = vec![vec![0; m.cols() + 1]; m.rows() + 1];
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            c[i + 1][j + 1] = c[i][j + 1] + c[i + 1][j] - c[i][j] + usize::from(m.get(i, j));
        }
    }
    c
}

/// `counts[i][j]` = ones in rows `≥ i` and columns `≥ j`, for `i ≤ m`, `j ≤ n`.
fn corner_counts(m: &BinaryConfiguration) -> Vec<Vec<usize>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut c = vec![vec![0; cols + 1]; rows + 1];
    for i in (0..rows).rev() {
        for j in (0..cols).rev() {
            c[i][j] = c[i + 1][j] + c[i][j + 1] - c[i + 1][j + 1] + usize::from(m.get(i, j));
        }
    }
    c
}

fn dominates(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    a.iter().flatten().zip(b.iter().flatten()).all(|(x, y)| x >= y)
}

/// `p ≤ q` in Bruhat order: every leading rectangle of `M(p)` holds at least
/// as many ones as the same rectangle of `M(q)`.
pub fn bruhat_leq_perm(p: &Permutation, q: &Permutation) -> Result<bool> {
    if p.len() != q.len() {
        return Err(Error::input("permutations of different sizes are incomparable"));
    }
    Ok(dominates(
        &prefix_counts(&permutation_matrix(p)),
        &prefix_counts(&permutation_matrix(q)),
    ))
}

/// `a1 ≤ a2` in the Bruhat order of `A(R,S)`: every trailing corner
/// (rows after `i`, columns after `j`) of `a1` holds at least as many ones as
/// that of `a2`.
pub fn bruhat_leq_ars(a1: &BinaryConfiguration, a2: &BinaryConfiguration, cls: &RSClass) -> Result<bool> {
    for (name, a) in [("first", a1), ("second", a2)] {
        if !cls.contains(a) {
            return Err(Error::input(format!("the {name} matrix is not in the given A(R,S) class")));
        }
    }
    Ok(dominates(&corner_counts(a1), &corner_counts(a2)))
}

fn check_two_regular(c: &OrthogonalCycle) -> Result<usize> {
    let n = c.rows();
    let pos = c.positions();
    if c.cols() != n || pos.len() != 2 * n {
        return Err(Error::input(format!(
            "cycle on a {}x{} frame with {} positions is not two-regular",
            c.rows(),
            c.cols(),
            pos.len()
        )));
    }
    let mut row_hits = vec![0; n];
    let mut col_hits = vec![0; n];
    for &(i, j) in pos {
        row_hits[i] += 1;
        col_hits[j] += 1;
    }
    if row_hits.iter().chain(&col_hits).any(|&h| h != 2) {
        return Err(Error::input("cycle must visit every row and column exactly twice"));
    }
    let mut sorted = pos.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != pos.len() {
        return Err(Error::input("cycle positions must be distinct"));
    }
    Ok(n)
}

/// Orients a two-regular cycle so that `p_0` is the left one of the two
/// positions in the first row and `p_1` the right one. Rotations keep the
/// parity classes, so this is a reversal at most followed by a rotation.
pub fn normalize_cycle(c: &OrthogonalCycle) -> Result<OrthogonalCycle> {
    check_two_regular(c)?;
    let oriented = {
        let pos = c.positions();
        let s = pos.iter().position(|p| p.0 == 0).expect("row 0 is visited");
        // The two positions in row 0 are a row move p_{2t}, p_{2t+1}.
        let (even, odd) = if s % 2 == 0 { (pos[s], pos[s + 1]) } else { (pos[s - 1], pos[s]) };
        if even.1 < odd.1 { c.clone() } else { c.reversed() }
    };
    let s = oriented.positions().iter().position(|p| p.0 == 0).expect("row 0 is visited");
    Ok(oriented.rotated(s / 2))
}

/// `(π, σ)` with `π` read off the even positions and `σ` off the odd
/// positions of the normalized cycle; `M(π) + M(σ)` is the cycle's support.
pub fn cycle_to_permutation_pair(c: &OrthogonalCycle) -> Result<(Permutation, Permutation)> {
    parity_pair(&normalize_cycle(c)?)
}

/// Even-position and odd-position permutations in the given orientation.
fn parity_pair(c: &OrthogonalCycle) -> Result<(Permutation, Permutation)> {
    let n = check_two_regular(c)?;
    let mut pi = vec![0; n];
    let mut sigma = vec![0; n];
    for (s, &(i, j)) in c.positions().iter().enumerate() {
        if s % 2 == 0 {
            pi[i] = j + 1;
        } else {
            sigma[i] = j + 1;
        }
    }
    Ok((Permutation::new(pi)?, Permutation::new(sigma)?))
}

/// Two-regular cycle whose even positions are `M(π)` and odd positions
/// `M(σ)`, or `None` when `π(i) = σ(i)` for some `i` or the union of the
/// two matrices splits into several cycles.
pub fn cycle_from_permutation_pair(pi: &Permutation, sigma: &Permutation) -> Option<OrthogonalCycle> {
    let n = pi.len();
    if sigma.len() != n || (0..n).any(|i| pi.at(i) == sigma.at(i)) {
        return None;
    }
    let mut row_of_pi_col = vec![0; n];
    for i in 0..n {
        row_of_pi_col[pi.at(i)] = i;
    }
    let mut positions = Vec::with_capacity(2 * n);
    let mut row = 0;
    loop {
        positions.push((row, pi.at(row)));
        positions.push((row, sigma.at(row)));
        row = row_of_pi_col[sigma.at(row)];
        if row == 0 {
            break;
        }
    }
    if positions.len() != 2 * n {
        return None;
    }
    OrthogonalCycle::new(n, n, positions).ok()
}

/// Both sides of the cycle criterion: `(positive, π ≤ σ)`. They agree.
///
/// Here `π` and `σ` are read off the even and odd positions of `c` as given,
/// without the reflection [`cycle_to_permutation_pair`] applies. For a cycle
/// already in normal form the two readings coincide. Reversing a cycle swaps
/// `π` and `σ`; in the reversed orientation the first row alone gives
/// `𝔉(1, j) = −1` and breaks `π ≤ σ`, so both sides are false.
pub fn cycle_positive_iff_bruhat(c: &OrthogonalCycle) -> Result<(bool, bool)> {
    let (pi, sigma) = parity_pair(c)?;
    let positive = collection_is_positive(&CycleCollection::single(c.clone()));
    Ok((positive, bruhat_leq_perm(&pi, &sigma)?))
}

/// Even and odd position matrices of a collection, with both sides of the
/// collection criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollectionComparison {
    /// Ones at the even positions.
    pub m2: BinaryConfiguration,
    /// Ones at the odd positions.
    pub m1: BinaryConfiguration,
    pub positive: bool,
    /// `M2 ≤ M1` in the Bruhat order of their common class, with at least one
    /// strict corner inequality.
    pub m2_below_m1: bool,
}

pub fn collection_to_matrix_pair(o: &CycleCollection) -> Result<CollectionComparison> {
    let (rows, cols) = (o.rows(), o.cols());
    let mut even_ones = Vec::new();
    let mut odd_ones = Vec::new();
    for c in o.cycles() {
        for (s, &p) in c.positions().iter().enumerate() {
            let (bucket, kind) = if s % 2 == 0 { (&mut even_ones, "even") } else { (&mut odd_ones, "odd") };
            if bucket.contains(&p) {
                return Err(Error::input(format!(
                    "position ({},{}) occurs twice among the {kind} positions",
                    p.0 + 1,
                    p.1 + 1
                )));
            }
            bucket.push(p);
        }
    }
    let even = BinaryConfiguration::from_positions(rows, cols, even_ones)?;
    let odd = BinaryConfiguration::from_positions(rows, cols, odd_ones)?;
    let cls = RSClass::of(&even);
    let leq = bruhat_leq_ars(&even, &odd, &cls)?;
    let strict = corner_counts(&even) != corner_counts(&odd);
    Ok(CollectionComparison {
        positive: collection_is_positive(o),
        m2_below_m1: leq && strict,
        m2: even,
        m1: odd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cycle_1based(n: usize, pos: &[(usize, usize)]) -> OrthogonalCycle {
        OrthogonalCycle::new(n, n, pos.iter().map(|&(i, j)| (i - 1, j - 1)).collect()).unwrap()
    }

    fn example_cycle() -> OrthogonalCycle {
        cycle_1based(4, &[(1, 2), (1, 4), (2, 4), (2, 3), (4, 3), (4, 1), (3, 1), (3, 2)])
    }

    #[test]
    fn permutation_matrices() {
        let m = permutation_matrix(&perm("3412"));
        assert_eq!(m.ones().collect::<Vec<_>>(), vec![(0, 2), (1, 3), (2, 0), (3, 1)]);
        assert_eq!(permutation_matrix(&Permutation::identity(3)), BinaryConfiguration::identity(3));
        assert!("3312".parse::<Permutation>().is_err());
        assert_eq!(perm("10,1,2,3,4,5,6,7,8,9").to_string(), "10,1,2,3,4,5,6,7,8,9");
    }

    #[test]
    fn bruhat_on_permutations() {
        assert!(bruhat_leq_perm(&perm("1324"), &perm("3412")).unwrap());
        assert!(!bruhat_leq_perm(&perm("3412"), &perm("1324")).unwrap());
        assert!(bruhat_leq_perm(&perm("2413"), &perm("2413")).unwrap());
        assert!(bruhat_leq_perm(&perm("12"), &perm("123")).is_err());
    }

    #[test]
    fn example_cycle_pair() {
        let c = example_cycle();
        let (pi, sigma) = cycle_to_permutation_pair(&c).unwrap();
        assert_eq!((pi.to_string(), sigma.to_string()), ("2413".into(), "4321".into()));
        let support = BinaryConfiguration::parse_text("0101\n0011\n1100\n1010").unwrap();
        let sum = BinaryConfiguration::from_fn(4, 4, |i, j| {
            permutation_matrix(&pi).get(i, j) || permutation_matrix(&sigma).get(i, j)
        });
        assert_eq!(sum, support);
        assert_eq!(cycle_positive_iff_bruhat(&c).unwrap(), (true, true));
        assert_eq!(cycle_positive_iff_bruhat(&c.reversed()).unwrap(), (false, false));
        assert_eq!(cycle_to_permutation_pair(&c.reversed()).unwrap(), (pi, sigma));
    }

    #[test]
    fn small_pairs() {
        let c = cycle_1based(2, &[(1, 1), (1, 2), (2, 2), (2, 1)]);
        let (pi, sigma) = cycle_to_permutation_pair(&c).unwrap();
        assert_eq!((pi, sigma), (perm("12"), perm("21")));
        let chain = cycle_1based(4, &[(1, 1), (1, 3), (2, 3), (2, 4), (4, 4), (4, 2), (3, 2), (3, 1)]);
        let (pi, sigma) = cycle_to_permutation_pair(&chain).unwrap();
        assert_eq!((pi, sigma), (perm("1324"), perm("3412")));
        assert_eq!(cycle_positive_iff_bruhat(&chain).unwrap(), (true, true));
        let once = OrthogonalCycle::new(3, 3, vec![(0, 0), (0, 1), (1, 1), (1, 0)]).unwrap();
        assert!(cycle_to_permutation_pair(&once).is_err());
    }

    #[test]
    fn pair_to_cycle_round_trip() {
        let c = cycle_from_permutation_pair(&perm("1324"), &perm("3412")).unwrap();
        assert_eq!(cycle_to_permutation_pair(&c).unwrap(), (perm("1324"), perm("3412")));
        assert!(cycle_from_permutation_pair(&perm("12"), &perm("12")).is_none());
        // 2143 with 1234 splits into two 2-cycles.
        assert!(cycle_from_permutation_pair(&perm("2143"), &perm("1234")).is_none());
    }

    #[test]
    fn ars_order() {
        let a = permutation_matrix(&perm("1324"));
        let b = permutation_matrix(&perm("3412"));
        let cls = RSClass::new(vec![1; 4], vec![1; 4]).unwrap();
        assert!(bruhat_leq_ars(&a, &a, &cls).unwrap());
        assert!(bruhat_leq_ars(&a, &b, &cls).unwrap());
        assert!(!bruhat_leq_ars(&b, &a, &cls).unwrap());
        let other = BinaryConfiguration::parse_text("1100\n0000\n0010\n0001").unwrap();
        assert!(bruhat_leq_ars(&a, &other, &cls).is_err());
    }

    #[test]
    fn collections() {
        let c = example_cycle();
        let single = collection_to_matrix_pair(&CycleCollection::single(c.clone())).unwrap();
        assert!(single.positive && single.m2_below_m1);
        let both = CycleCollection::new(vec![c.clone(), c.reversed()]).unwrap();
        let cmp = collection_to_matrix_pair(&both).unwrap();
        assert_eq!(cmp.m1, cmp.m2);
        assert!(!cmp.positive && !cmp.m2_below_m1);
        let twice = CycleCollection::new(vec![c.clone(), c]).unwrap();
        assert!(collection_to_matrix_pair(&twice).is_err());
    }
}
