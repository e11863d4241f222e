//! Independent oracles used by the integration and acceptance tests. None of
//! them call into the library's arithmetic, so agreement is meaningful.
#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Cofactor expansion along the first row.
pub fn laplace(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    match n {
        0 => Q::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Q::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Q>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &m[0][j] * laplace(&sub);
                if j % 2 == 0 { acc += term } else { acc -= term }
            }
            acc
        }
    }
}

pub fn all_minors(m: &[Vec<Q>], mut keep: impl FnMut(&Q) -> bool) -> bool {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    for k in 1..=r.min(c) {
        for rows in (0..r).combinations(k) {
            for cols in (0..c).combinations(k) {
                let sub: Vec<Vec<Q>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect();
                if !keep(&laplace(&sub)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn tp_by_laplace(m: &[Vec<Q>]) -> bool {
    all_minors(m, |d| d.is_positive())
}

pub fn tns_by_laplace(m: &[Vec<Q>]) -> bool {
    all_minors(m, |d| !d.is_zero())
}

/// `{r > i, c > j}` quadrant count with 1-based positions: even-indexed
/// positions count +1, odd-indexed −1.
pub fn frak(cycle: &[(usize, usize)], i: usize, j: usize) -> i64 {
    cycle
        .iter()
        .enumerate()
        .filter(|(_, &(r, c))| r > i && c > j)
        .map(|(t, _)| if t % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// Values of the weight function over the interior grid `1 ≤ i < m`, `1 ≤ j < n`.
pub fn frak_table(cycle: &[(usize, usize)], m: usize, n: usize) -> Vec<i64> {
    (1..m).flat_map(|i| (1..n).map(move |j| (i, j))).map(|(i, j)| frak(cycle, i, j)).collect()
}

pub fn is_positive_vector(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
}

/// All orthogonal cycles on the ones of `m` whose positions are pairwise
/// distinct, as 1-based open position lists starting with a row move.
/// Rotations by an even offset are identified.
pub fn simple_cycles(m: &[Vec<bool>]) -> Vec<Vec<(usize, usize)>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let ones: Vec<(usize, usize)> =
        (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).filter(|&(i, j)| m[i][j]).collect();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for &start in &ones {
        let mut path = vec![start];
        extend(m, &mut path, start, &mut out, &mut seen);
    }
    out
}

fn extend(
    m: &[Vec<bool>],
    path: &mut Vec<(usize, usize)>,
    start: (usize, usize),
    out: &mut Vec<Vec<(usize, usize)>>,
    seen: &mut HashSet<Vec<(usize, usize)>>,
) {
    let last = *path.last().unwrap();
    let row_move = path.len() % 2 == 1;
    let (rows, cols) = (m.len(), m[0].len());
    let candidates: Vec<(usize, usize)> = if row_move {
        (0..cols).filter(|&j| j != last.1).map(|j| (last.0, j)).collect()
    } else {
        (0..rows).filter(|&i| i != last.0).map(|i| (i, last.1)).collect()
    };
    for p in candidates {
        if !m[p.0][p.1] {
            continue;
        }
        if p == start && !row_move && path.len() >= 4 {
            let canon = canonical(path);
            if seen.insert(canon.clone()) {
                out.push(canon.iter().map(|&(i, j)| (i + 1, j + 1)).collect());
            }
            continue;
        }
        if path.contains(&p) {
            continue;
        }
        path.push(p);
        extend(m, path, start, out, seen);
        path.pop();
    }
}

fn canonical(path: &[(usize, usize)]) -> Vec<(usize, usize)> {
    (0..path.len() / 2)
        .map(|s| path[2 * s..].iter().chain(&path[..2 * s]).copied().collect::<Vec<_>>())
        .min()
        .unwrap()
}

/// Searches nonnegative integer combinations of the cycles of `m`, each
/// weight vector used at most `max_mult` times and partial sums clipped to
/// `[-bound, bound]`, for a positive total.
pub fn brute_force_positive_collection(m: &[Vec<bool>], max_mult: i64, bound: i64) -> bool {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if rows < 2 || cols < 2 {
        return false;
    }
    let vectors: Vec<Vec<i64>> = simple_cycles(m)
        .iter()
        .map(|c| frak_table(c, rows, cols))
        .filter(|v| v.iter().any(|&x| x != 0))
        .unique()
        .collect();
    if vectors.iter().any(|v| is_positive_vector(v)) {
        return true;
    }
    let zero = vec![0i64; (rows - 1) * (cols - 1)];
    let mut reach: HashSet<Vec<i64>> = HashSet::from([zero]);
    for v in &vectors {
        let mut next = reach.clone();
        for base in &reach {
            let mut cur = base.clone();
            for _ in 0..max_mult {
                for (c, x) in cur.iter_mut().zip(v) {
                    *c += x;
                }
                if cur.iter().any(|c| c.abs() > bound) {
                    break;
                }
                if is_positive_vector(&cur) {
                    return true;
                }
                next.insert(cur.clone());
            }
        }
        reach = next;
    }
    false
}

/// Every two-regular cycle on an `n × n` frame, as `(cycle, π, σ)` with
/// `π` on the even positions and `σ` on the odd ones (1-based images).
/// The cycle starts at `(1, π(1))`; both orientations occur.
pub type TwoRegular = (Vec<(usize, usize)>, Vec<usize>, Vec<usize>);

pub fn two_regular_cycles(n: usize) -> Vec<TwoRegular> {
    let mut out = Vec::new();
    for pi in (1..=n).permutations(n) {
        for sigma in (1..=n).permutations(n) {
            if (0..n).any(|i| pi[i] == sigma[i]) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut row = 1;
            loop {
                cycle.push((row, pi[row - 1]));
                let col = sigma[row - 1];
                cycle.push((row, col));
                row = pi.iter().position(|&c| c == col).unwrap() + 1;
                if row == 1 {
                    break;
                }
            }
            if cycle.len() == 2 * n {
                out.push((cycle, pi.clone(), sigma.clone()));
            }
        }
    }
    out
}

/// Bruhat order through the tableau criterion: `π ≤ σ` iff for every `i`
/// the sorted prefix `π(1..i)` is entrywise at most the sorted prefix of `σ`.
pub fn bruhat_by_tableau(pi: &[usize], sigma: &[usize]) -> bool {
    (1..=pi.len()).all(|i| {
        let a = pi[..i].iter().sorted();
        let b = sigma[..i].iter().sorted();
        a.zip(b).all(|(x, y)| x <= y)
    })
}

/// Whether the graph on `0..n` has a circular vertex order in which no two
/// edges cross.
pub fn has_noncrossing_circle_order(n: usize, edges: &[(usize, usize)]) -> bool {
    (0..n).permutations(n).any(|order| {
        let mut at = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            at[v] = p;
        }
        let spans: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (at[u].min(at[v]), at[u].max(at[v])))
            .collect();
        !spans.iter().tuple_combinations().any(|(&(a, b), &(c, d))| {
            (a < c && c < b && b < d) || (c < a && a < d && d < b)
        })
    })
}
