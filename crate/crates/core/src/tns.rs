//! Filling a 0-1 mask with no all-ones 2×2 block into a totally nonsingular
//! matrix that takes a prescribed value exactly on the ones.

use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::{has_all_ones_2x2, BinaryConfiguration};
use crate::error::{Error, Result};
use crate::exact::{classify, frac, ExactMatrix, MatrixClass, Rational};

pub const DEFAULT_RETRY_BUDGET: usize = 16;

/// Lattice resolution: perturbations are `ε·j / 2^16` with `0 < |j| < 2^16`.
const LATTICE: i64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TnsFillRequest {
    pub mask: BinaryConfiguration,
    pub b: Rational,
    pub seed: u64,
    /// Perturbation radius; `|b| / 2` when `None`.
    pub eps: Option<Rational>,
    pub retry_budget: usize,
}

impl TnsFillRequest {
    pub fn new(mask: BinaryConfiguration, b: Rational, seed: u64) -> Self {
        Self { mask, b, seed, eps: None, retry_budget: DEFAULT_RETRY_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TnsFill {
    pub matrix: ExactMatrix,
    /// Draws used, counting the successful one.
    pub attempts: usize,
    pub eps: Rational,
}

/// Puts `b` on the ones of the mask and a seeded value of
/// `(b − ε, b + ε) ∖ {0, b}` on every zero, redrawing all zeros until the
/// matrix is totally nonsingular. Every draw comes from one ChaCha stream
/// seeded by `req.seed`, so equal requests give equal matrices.
///
/// Running out of retries is reported as [`Error::Exhausted`]; nonsingular
/// fills exist for every admissible mask.
pub fn fill_to_tns(req: &TnsFillRequest) -> Result<TnsFill> {
    let mask = &req.mask;
    if let Some(block) = has_all_ones_2x2(mask) {
        return Err(Error::precondition(format!(
            "mask has an all-ones 2x2 submatrix at rows {:?}, cols {:?}",
            block.rows.map(|r| r + 1),
            block.cols.map(|c| c + 1)
        )));
    }
    if req.b.is_zero() {
        return Err(Error::input("the prescribed value b must be nonzero"));
    }
    let eps = req.eps.clone().unwrap_or_else(|| req.b.abs() / frac(2, 1));
    if !eps.is_positive() {
        return Err(Error::input("the radius eps must be positive"));
    }
    if req.retry_budget == 0 {
        return Err(Error::input("the retry budget must be positive"));
    }
    if mask.rows().max(mask.cols()) > 8 {
        log::warn!(
            "verifying total nonsingularity of a {}x{} matrix enumerates every minor and may be slow",
            mask.rows(),
            mask.cols()
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
    for attempt in 1..=req.retry_budget {
        let a = ExactMatrix::from_fn(mask.rows(), mask.cols(), |i, j| {
            if mask.get(i, j) {
                return req.b.clone();
            }
            loop {
                let step = rng.gen_range(1..LATTICE) * if rng.gen_bool(0.5) { 1 } else { -1 };
                let v = &req.b + &eps * frac(step, LATTICE);
                if !v.is_zero() {
                    return v;
                }
            }
        });
        let verdict = classify(&a, MatrixClass::Tns)?;
        if verdict.member {
            return Ok(TnsFill { matrix: a, attempts: attempt, eps });
        }
        log::debug!("fill attempt {attempt} has a vanishing minor: {:?}", verdict.witness);
    }
    Err(Error::Exhausted(format!(
        "no totally nonsingular fill found in {} attempts",
        req.retry_budget
    )))
}
