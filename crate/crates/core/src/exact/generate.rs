use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::classify::is_tp;
use super::matrix::ExactMatrix;
use super::rational::{frac, Rational};

fn positive_parameter(rng: &mut impl Rng) -> Rational {
    frac(rng.gen_range(1..=9), rng.gen_range(1..=4))
}

/// Seeded random TP matrix.
///
/// With `N = max(m, n)`, builds `L · D · U` where `L` is a product of `N − 1`
/// unit lower bidiagonal factors, `U` of `N − 1` unit upper bidiagonal
/// factors, every off-diagonal parameter a positive rational, and `D` a
/// positive diagonal. Such a product is TP; the leading `m × n` block of a TP
/// matrix is TP.
pub fn random_tp(m: usize, n: usize, seed: u64) -> ExactMatrix {
    assert!(m > 0 && n > 0, "random_tp needs positive dimensions");
    let size = m.max(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = ExactMatrix::identity(size);
    // Each elementary lower factor E_i(x) adds x · row (i-1) to row i; the
    // chained factors fill the whole strict lower triangle.
    for pass in 1..size {
        for i in (pass..size).rev() {
            let x = positive_parameter(&mut rng);
            acc = lower_elementary(size, i, x).mul(&acc).expect("square factors");
        }
    }
    let d: Vec<Rational> = (0..size).map(|_| positive_parameter(&mut rng)).collect();
    acc = acc.mul(&ExactMatrix::from_fn(size, size, |i, j| {
        if i == j { d[i].clone() } else { frac(0, 1) }
    }))
    .expect("square factors");
    for pass in 1..size {
        for i in (pass..size).rev() {
            let x = positive_parameter(&mut rng);
            acc = acc.mul(&lower_elementary(size, i, x).transpose()).expect("square factors");
        }
    }
    let rows: Vec<usize> = (0..m).collect();
    let cols: Vec<usize> = (0..n).collect();
    let out = acc.submatrix(&rows, &cols);
    debug_assert!(is_tp(&out), "bidiagonal product must be TP");
    out
}

fn lower_elementary(size: usize, i: usize, x: Rational) -> ExactMatrix {
    ExactMatrix::from_fn(size, size, |r, c| {
        if r == c {
            frac(1, 1)
        } else if r == i && c + 1 == i {
            x.clone()
        } else {
            frac(0, 1)
        }
    })
}
