use num_traits::{One, Signed, Zero};

use super::lp::{maximize, LpOutcome};
use crate::config::BinaryConfiguration;
use crate::exact::{ExactMatrix, Rational};

/// Outcome of the LP deciding whether some collection of orthogonal cycles on
/// the ones of a configuration is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityCertificate {
    /// No positive collection exists. `e` vanishes exactly on the ones and
    /// every second difference `d_ij = e_{i+1,j+1} − e_{i+1,j} − e_{i,j+1} + e_ij`
    /// is at least `margin > 0`.
    Feasible { e: ExactMatrix, margin: Rational },
    /// A positive collection exists. `weights[i][j] ≥ 0` multiplies the
    /// constraint on `d_ij`; the weights are not all zero and the combined
    /// form `Σ weights[i][j] · d_ij` involves no entry at a zero of the
    /// configuration, so no `E` can make every `d_ij` positive.
    Infeasible { weights: Vec<Vec<Rational>> },
}

impl FeasibilityCertificate {
    /// Independently re-checks the certificate against `m`.
    pub fn verify(&self, m: &BinaryConfiguration) -> bool {
        let (rows, cols) = (m.rows(), m.cols());
        match self {
            FeasibilityCertificate::Feasible { e, margin } => {
                if (e.rows(), e.cols()) != (rows, cols) || !margin.is_positive() {
                    return false;
                }
                let zeros_ok = (0..rows)
                    .all(|i| (0..cols).all(|j| m.get(i, j) == e.get(i, j).is_zero()));
                zeros_ok
                    && second_differences(e).iter().flatten().all(|d| d >= margin)
            }
            FeasibilityCertificate::Infeasible { weights } => {
                if weights.len() != rows.saturating_sub(1)
                    || weights.iter().any(|w| w.len() != cols.saturating_sub(1))
                {
                    return false;
                }
                let flat = || weights.iter().flatten();
                if flat().any(Signed::is_negative) || flat().all(Zero::is_zero) {
                    return false;
                }
                let coefficient = combined_coefficients(weights, rows, cols);
                (0..rows).all(|i| (0..cols).all(|j| m.get(i, j) || coefficient[i][j].is_zero()))
            }
        }
    }
}

/// `d_ij` for `i < rows − 1`, `j < cols − 1`.
pub fn second_differences(e: &ExactMatrix) -> Vec<Vec<Rational>> {
    (0..e.rows().saturating_sub(1))
        .map(|i| {
            (0..e.cols().saturating_sub(1))
                .map(|j| e.get(i + 1, j + 1) - e.get(i + 1, j) - e.get(i, j + 1) + e.get(i, j))
                .collect()
        })
        .collect()
}

/// Coefficient of each `e_pq` in `Σ w_ij d_ij`.
fn combined_coefficients(w: &[Vec<Rational>], rows: usize, cols: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::zero(); cols]; rows];
    for (i, row) in w.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out[i + 1][j + 1] += v;
            out[i + 1][j] -= v;
            out[i][j + 1] -= v;
            out[i][j] += v;
        }
    }
    out
}

/// Decides whether some collection of orthogonal cycles on the ones of `m` is
/// positive, via the dual LP
///
/// `max δ` s.t. `d_ij(E) ≥ δ` for all `i, j`, `δ ≤ 1`, `e_pq = 0` on the ones.
///
/// A positive optimum yields a matrix `E` (no positive collection); optimum
/// zero yields Farkas weights (a positive collection exists). Returns `true`
/// when a positive collection exists.
///
/// The LP leaves the entries of `E` at the zeros of `m` unconstrained, but the
/// certificate must have them nonzero. Any zero among them is raised to
/// `δ/8`; each `d_ij` then moves by at most `δ/4`, and the reported margin is
/// recomputed exactly from the final `E`.
pub fn exists_positive_collection(m: &BinaryConfiguration) -> (bool, FeasibilityCertificate) {
    let (rows, cols) = (m.rows(), m.cols());
    let free: Vec<(usize, usize)> =
        (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).filter(|&(i, j)| !m.get(i, j)).collect();
    let mut index = vec![vec![None; cols]; rows];
    for (k, &(i, j)) in free.iter().enumerate() {
        index[i][j] = Some(k);
    }
    // Columns: e⁺ for each free position, e⁻ for each, then δ.
    let nvars = 2 * free.len() + 1;
    let delta = nvars - 1;
    let mut a: Vec<Vec<Rational>> = Vec::new();
    let mut b: Vec<Rational> = Vec::new();
    for i in 0..rows.saturating_sub(1) {
        for j in 0..cols.saturating_sub(1) {
            // δ − d_ij(e) ≤ 0
            let mut row = vec![Rational::zero(); nvars];
            row[delta] = Rational::one();
            for (p, q, s) in [(i + 1, j + 1, 1), (i + 1, j, -1), (i, j + 1, -1), (i, j, 1)] {
                if let Some(k) = index[p][q] {
                    row[k] -= Rational::from_integer(s.into());
                    row[free.len() + k] += Rational::from_integer(s.into());
                }
            }
            a.push(row);
            b.push(Rational::zero());
        }
    }
    let mut cap = vec![Rational::zero(); nvars];
    cap[delta] = Rational::one();
    a.push(cap);
    b.push(Rational::one());
    let mut c = vec![Rational::zero(); nvars];
    c[delta] = Rational::one();

    let LpOutcome::Optimal(sol) = maximize(&c, &a, &b).expect("well-formed LP") else {
        unreachable!("δ ≤ 1 bounds the objective and the d-rows bound each e through δ");
    };
    if sol.objective.is_positive() {
        let eta = &sol.objective / Rational::from_integer(8.into());
        let e = ExactMatrix::from_fn(rows, cols, |i, j| match index[i][j] {
            None => Rational::zero(),
            Some(k) => {
                let v = &sol.x[k] - &sol.x[free.len() + k];
                if v.is_zero() { eta.clone() } else { v }
            }
        });
        let margin = second_differences(&e)
            .into_iter()
            .flatten()
            .min()
            .unwrap_or_else(|| sol.objective.clone());
        (false, FeasibilityCertificate::Feasible { e, margin })
    } else {
        let w = cols.saturating_sub(1);
        let weights = (0..rows.saturating_sub(1))
            .map(|i| sol.duals[i * w..(i + 1) * w].to_vec())
            .collect();
        (true, FeasibilityCertificate::Infeasible { weights })
    }
}
