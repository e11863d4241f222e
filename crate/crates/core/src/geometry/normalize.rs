use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::arrangement::{incidence_matrix, Arrangement};
use crate::error::{Error, Result};
use crate::exact::{frac, int, Rational};

/// Default number of random candidate maps tried by [`normalize_general_position`].
pub const DEFAULT_NORMALIZE_BUDGET: usize = 64;

/// Projective map of the plane acting on homogeneous points `(x, y, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveMap {
    pub h: [[Rational; 3]; 3],
}

impl ProjectiveMap {
    pub fn identity() -> Self {
        let e = |i: usize, j: usize| if i == j { Rational::one() } else { Rational::zero() };
        Self { h: std::array::from_fn(|i| std::array::from_fn(|j| e(i, j))) }
    }

    /// `(x, y) ↦ ((x + u·y) / (1 + v·x), y / (1 + v·x))`: a shear that
    /// separates equal `x`, composed with a perspectivity that separates equal
    /// slopes.
    pub fn shear_perspective(u: Rational, v: Rational) -> Self {
        let mut m = Self::identity();
        m.h[0][1] = u;
        m.h[2][0] = v;
        m
    }

    /// Image of a point, or `None` if it is sent to infinity.
    pub fn map_point(&self, (x, y): &(Rational, Rational)) -> Option<(Rational, Rational)> {
        let v: [Rational; 3] = std::array::from_fn(|r| &self.h[r][0] * x + &self.h[r][1] * y + &self.h[r][2]);
        if v[2].is_zero() {
            return None;
        }
        Some((&v[0] / &v[2], &v[1] / &v[2]))
    }

    /// Image of the line `y = m·x + b`, or `None` if it becomes vertical (or
    /// the map is singular). Lines transform by the cofactor matrix, which is
    /// a multiple of `H^{-T}`.
    pub fn map_line(&self, (m, b): &(Rational, Rational)) -> Option<(Rational, Rational)> {
        let h = &self.h;
        let cof = |r: usize, c: usize| {
            let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
            let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
            &h[r1][c1] * &h[r2][c2] - &h[r1][c2] * &h[r2][c1]
        };
        let l = [m.clone(), -Rational::one(), b.clone()];
        let v: [Rational; 3] = std::array::from_fn(|r| (0..3).map(|j| cof(r, j) * &l[j]).sum());
        if v[1].is_zero() {
            return None;
        }
        Some((-&v[0] / &v[1], -&v[2] / &v[1]))
    }

    pub fn apply(&self, arr: &Arrangement) -> Option<Arrangement> {
        let points = arr.points.iter().map(|p| self.map_point(p)).collect::<Option<Vec<_>>>()?;
        let lines = arr.lines.iter().map(|l| self.map_line(l)).collect::<Option<Vec<_>>>()?;
        Some(Arrangement { points, lines })
    }
}

/// Output of [`normalize_general_position`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub arrangement: Arrangement,
    pub map: ProjectiveMap,
    /// Candidate maps examined (0 when the input was already in general position).
    pub candidates: usize,
    /// Candidates that met every requirement.
    pub accepted: usize,
    /// `range(x)·range(slope) / (gap(x)·gap(slope))` of the result, where
    /// gap is the smallest difference between consecutive sorted values. It
    /// bounds the size of the exponents the TP construction has to use.
    pub spread: Rational,
}

/// Smallest gap between consecutive distinct sorted values and the full
/// range; `(1, 0)` when there are fewer than two distinct values.
fn gap_and_range<'a>(values: impl Iterator<Item = &'a Rational>) -> (Rational, Rational) {
    let sorted: Vec<&Rational> = values.collect::<BTreeSet<_>>().into_iter().collect();
    if sorted.len() < 2 {
        return (int(1), int(0));
    }
    let gap = sorted.windows(2).map(|w| w[1] - w[0]).min().expect("two values");
    (gap, sorted[sorted.len() - 1] - sorted[0])
}

fn spread(arr: &Arrangement) -> Rational {
    let (gx, rx) = gap_and_range(arr.points.iter().map(|p| &p.0));
    let (gm, rm) = gap_and_range(arr.lines.iter().map(|l| &l.0));
    let one = Rational::one();
    (rx.max(one.clone()) * rm.max(one)) / (gx * gm)
}

fn draw_ratio(rng: &mut impl Rng) -> Rational {
    loop {
        let r = frac(rng.gen_range(1..=8), rng.gen_range(1..=8));
        if r >= frac(1, 4) && r <= int(2) {
            return r;
        }
    }
}

/// Moves an arrangement into general position (distinct `x`, distinct
/// slopes, no vertical line) by a projective map that keeps every incidence
/// and every non-incidence, so the incidence matrix is unchanged in input
/// order.
///
/// An arrangement already in general position is returned unchanged.
/// Otherwise `budget` candidate maps `shear_perspective(u, v)` are drawn from
/// `seed`, with `u` and `v` scaled to the data so that the shear and the
/// perspectivity are small compared with the existing gaps. Among the
/// candidates that pass, the one with the smallest spread is returned.
pub fn normalize_general_position(arr: &Arrangement, seed: u64, budget: usize) -> Result<Normalized> {
    let before = incidence_matrix(arr)?;
    // Projective maps are injective, so coincident points or lines stay coincident.
    if arr.points.iter().collect::<BTreeSet<_>>().len() < arr.points.len() {
        return Err(Error::input("the arrangement repeats a point"));
    }
    if arr.lines.iter().collect::<BTreeSet<_>>().len() < arr.lines.len() {
        return Err(Error::input("the arrangement repeats a line"));
    }
    if arr.general_position().holds() {
        return Ok(Normalized {
            arrangement: arr.clone(),
            map: ProjectiveMap::identity(),
            candidates: 0,
            accepted: 0,
            spread: spread(arr),
        });
    }
    let (gap_x, _) = gap_and_range(arr.points.iter().map(|p| &p.0));
    let (gap_m, _) = gap_and_range(arr.lines.iter().map(|l| &l.0));
    let (_, range_y) = gap_and_range(arr.points.iter().map(|p| &p.1));
    let (_, range_c) = gap_and_range(arr.lines.iter().map(|l| &l.1));
    let span_y = range_y + int(1);
    let span_c = range_c + int(1);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(Rational, Arrangement, ProjectiveMap)> = None;
    let mut accepted = 0;
    for _ in 0..budget {
        let u = draw_ratio(&mut rng) * &gap_x / &span_y;
        let sign = if rng.gen_bool(0.5) { int(1) } else { int(-1) };
        let v = sign * draw_ratio(&mut rng) * &gap_m / &span_c;
        let map = ProjectiveMap::shear_perspective(u, v);
        let Some(image) = map.apply(arr) else { continue };
        if !image.general_position().holds() || incidence_matrix(&image)? != before {
            continue;
        }
        accepted += 1;
        let s = spread(&image);
        if best.as_ref().is_none_or(|(b, _, _)| s < *b) {
            best = Some((s, image, map));
        }
    }
    match best {
        Some((spread, arrangement, map)) => {
            Ok(Normalized { arrangement, map, candidates: budget, accepted, spread })
        }
        None => Err(Error::Exhausted(format!(
            "none of {budget} candidate projective maps put the arrangement in general position"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::grid_arrangement;

    #[test]
    fn maps_preserve_incidence_algebraically() {
        let map = ProjectiveMap::shear_perspective(frac(1, 3), frac(-1, 5));
        let p = (int(2), int(5));
        let l = (int(1), int(3));
        let (x, y) = map.map_point(&p).unwrap();
        let (m, b) = map.map_line(&l).unwrap();
        assert_eq!(y, m * x + b);
        assert!(ProjectiveMap::shear_perspective(int(0), int(-1)).map_point(&(int(1), int(0))).is_none());
    }

    #[test]
    fn already_general_is_unchanged() {
        let arr = Arrangement::new(vec![(int(0), int(0)), (int(1), int(3))], vec![(int(1), int(0))]);
        let n = normalize_general_position(&arr, 0, 8).unwrap();
        assert_eq!(n.arrangement, arr);
        assert_eq!(n.candidates, 0);
    }

    #[test]
    fn repeated_points_are_rejected() {
        let arr = Arrangement::new(vec![(int(1), int(0)), (int(1), int(0))], vec![(int(0), int(0))]);
        assert!(matches!(normalize_general_position(&arr, 0, 8), Err(Error::Input(_))));
    }

    #[test]
    fn parallel_lines_are_separated() {
        let arr = Arrangement::new(
            vec![(int(0), int(0)), (int(1), int(1)), (int(1), int(2))],
            vec![(int(1), int(0)), (int(1), int(1))],
        );
        let n = normalize_general_position(&arr, 3, DEFAULT_NORMALIZE_BUDGET).unwrap();
        assert!(n.arrangement.general_position().holds());
        assert_eq!(n.arrangement.incidence_count(), arr.incidence_count());
    }

    #[test]
    fn grid_is_normalized_deterministically() {
        let g = grid_arrangement(2).unwrap();
        let a = normalize_general_position(&g, 1, DEFAULT_NORMALIZE_BUDGET).unwrap();
        assert!(a.arrangement.general_position().holds());
        assert_eq!(a.arrangement.incidence_count(), 16);
        assert_eq!(incidence_matrix(&a.arrangement).unwrap(), incidence_matrix(&g).unwrap());
        assert_eq!(a, normalize_general_position(&g, 1, DEFAULT_NORMALIZE_BUDGET).unwrap());
        assert!(normalize_general_position(&g, 1, 0).is_err());
    }
}
