use std::collections::BTreeSet;

use num_traits::Signed;

use super::outerplanar::{triangulate_outerplanar, OuterplanarInput};
use crate::error::{Error, Result};
use crate::exact::{frac, int, ExactMatrix, Rational};

type Column = [Rational; 2];

/// A 2×n TP matrix whose column pairs at the graph's edges all have 2×2
/// minor `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub matrix: ExactMatrix,
    pub alpha: Rational,
    /// `labeling[c]` is the vertex placed on column `c`; columns follow the
    /// outer face clockwise from `labeling[0]`.
    pub labeling: Vec<usize>,
    /// The maximal outerplanar graph that was realized.
    pub triangulation: OuterplanarInput,
}

impl Realization {
    /// 1-based column of vertex `v`.
    pub fn column_of(&self, v: usize) -> Option<usize> {
        self.labeling.iter().position(|&x| x == v).map(|c| c + 1)
    }

    /// Edge `(u, v)` as a sorted 1-based column pair.
    pub fn column_pair(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        let (a, b) = (self.column_of(u)?, self.column_of(v)?);
        Some((a.min(b), a.max(b)))
    }
}

fn det(a: &Column, b: &Column) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn base_columns(n: usize) -> Vec<Column> {
    let cols: &[(i64, i64)] = if n == 2 { &[(1, 6), (2, 18)] } else { &[(1, 6), (2, 18), (1, 12)] };
    cols.iter().map(|&(x, y)| [int(x), int(y)]).collect()
}

/// One rescaling step: with `p` the first and `q` the last column, writes
/// every column as `k·p + l·q` and replaces it with `k·(2p) + l·(q/2)`.
/// Every 2×2 minor is unchanged because `det(2p, q/2) = det(p, q)`.
pub(crate) fn rescale_step(cols: &[Column]) -> Vec<Column> {
    let p = cols[0].clone();
    let q = cols[cols.len() - 1].clone();
    let d = det(&p, &q);
    let two = int(2);
    let half = frac(1, 2);
    cols.iter()
        .map(|c| {
            let k = det(c, &q) / &d;
            let l = det(&p, c) / &d;
            let kp = &k * &two;
            let lq = &l * &half;
            [&kp * &p[0] + &lq * &q[0], &kp * &p[1] + &lq * &q[1]]
        })
        .collect()
}

/// Realizes a maximal outerplanar graph given by its clockwise outer order
/// and edge set. Returns the columns and the index into `order` of the vertex
/// on the first column.
fn realize_rec(order: &[usize], edges: &BTreeSet<(usize, usize)>) -> Result<(Vec<Column>, usize)> {
    let n = order.len();
    if n <= 3 {
        return Ok((base_columns(n), 0));
    }
    let degree = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
    let s = order
        .iter()
        .position(|&v| degree(v) == 2)
        .ok_or_else(|| Error::input("graph is not maximal outerplanar: no vertex of degree 2"))?;
    let v = order[s];
    let u = order[(s + n - 1) % n];
    let w = order[(s + 1) % n];
    if !edges.contains(&(u.min(w), u.max(w))) {
        return Err(Error::input(format!("ear {v} does not close a triangle with {u} and {w}")));
    }
    let rest: Vec<usize> = order.iter().copied().filter(|&x| x != v).collect();
    let rest_edges = edges.iter().copied().filter(|&(a, b)| a != v && b != v).collect();
    let (mut cols, start) = realize_rec(&rest, &rest_edges)?;
    let m = n - 1;
    let u_index = if s == 0 { m - 1 } else { s - 1 };
    let cu = (u_index + m - start) % m;
    let first_vertex = rest[start];
    if cu + 1 < m {
        // u and w sit on adjacent columns cu, cu + 1: insert their sum between them.
        let sum = [&cols[cu][0] + &cols[cu + 1][0], &cols[cu][1] + &cols[cu + 1][1]];
        cols.insert(cu + 1, sum);
        let new_start = order.iter().position(|&x| x == first_vertex).expect("vertex kept");
        Ok((cols, new_start))
    } else {
        // u is on the last column and w on the first: v becomes the new first column.
        while !(cols[0][0] > cols[m - 1][0] && cols[0][1] > cols[m - 1][1]) {
            let next = rescale_step(&cols);
            debug_assert!(all_minors_equal(&cols, &next));
            cols = next;
        }
        let diff = [&cols[0][0] - &cols[m - 1][0], &cols[0][1] - &cols[m - 1][1]];
        cols.insert(0, diff);
        Ok((cols, s))
    }
}

fn all_minors_equal(a: &[Column], b: &[Column]) -> bool {
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| det(&a[i], &a[j]) == det(&b[i], &b[j])))
}

/// Realizes an outerplanar graph: the input is triangulated, then a 2×n TP
/// matrix is built by removing ears one at a time, with every edge of the
/// triangulation landing on a column pair with minor 6.
///
/// The ear removed at each step is the degree-2 vertex that comes first in
/// the given outer order.
pub fn realize_outerplanar(g: &OuterplanarInput) -> Result<Realization> {
    let triangulation = triangulate_outerplanar(g)?;
    let (cols, start) = realize_rec(triangulation.outer(), &triangulation.edges())?;
    let n = cols.len();
    let matrix = ExactMatrix::from_fn(2, n, |r, c| cols[c][r].clone());
    debug_assert!(matrix.entries().iter().all(Signed::is_positive));
    let outer = triangulation.outer();
    let labeling = (0..n).map(|c| outer[(start + c) % n]).collect();
    Ok(Realization { matrix, alpha: int(6), labeling, triangulation })
}
