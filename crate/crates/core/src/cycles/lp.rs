//! Dense exact simplex for `max cᵀx` subject to `Ax ≤ b`, `x ≥ 0` with `b ≥ 0`.
//!
//! The origin is feasible, so there is no phase one. Bland's rule picks both
//! the entering and the leaving variable, which rules out cycling.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub x: Vec<Rational>,
    pub objective: Rational,
    /// Optimal dual prices, one per constraint row. They are nonnegative,
    /// satisfy `Aᵀy ≥ c` and `bᵀy = objective`.
    pub duals: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Unbounded,
}

pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> Result<LpOutcome> {
    let n = c.len();
    let m = a.len();
    if b.len() != m || a.iter().any(|row| row.len() != n) {
        return Err(Error::input("inconsistent LP dimensions"));
    }
    if b.iter().any(Signed::is_negative) {
        return Err(Error::input("LP right-hand side must be nonnegative"));
    }
    let width = n + m;
    // Tableau rows: [A | I | b]; objective row holds reduced costs and -z.
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            let mut t = row.clone();
            t.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
            t.push(bi.clone());
            t
        })
        .collect();
    let mut obj: Vec<Rational> = c.iter().map(|v| -v).collect();
    obj.extend(std::iter::repeat_n(Rational::zero(), m + 1));
    let mut basis: Vec<usize> = (n..width).collect();

    while let Some(enter) = (0..width).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in rows.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            return Ok(LpOutcome::Unbounded);
        };
        let pivot = rows[pr][enter].clone();
        for v in rows[pr].iter_mut() {
            *v /= &pivot;
        }
        let pivot_row = rows[pr].clone();
        let eliminate = |target: &mut Vec<Rational>| {
            let factor = target[enter].clone();
            if !factor.is_zero() {
                for (t, p) in target.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *t -= &factor * p;
                    }
                }
            }
        };
        for (i, row) in rows.iter_mut().enumerate() {
            if i != pr {
                eliminate(row);
            }
        }
        eliminate(&mut obj);
        basis[pr] = enter;
    }

    let mut x = vec![Rational::zero(); n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            x[var] = rows[i][width].clone();
        }
    }
    let duals = obj[n..width].to_vec();
    Ok(LpOutcome::Optimal(LpSolution { x, objective: obj[width].clone(), duals }))
}
