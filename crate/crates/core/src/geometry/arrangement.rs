use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::config::BinaryConfiguration;
use crate::error::{Error, Result};
use crate::exact::{int, rational_from_json, rational_to_json, ExactMatrix, Rational};

/// Points `(x, y)` and non-vertical lines `y = m·x + b`, all exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    pub points: Vec<(Rational, Rational)>,
    /// `(slope, intercept)` pairs.
    pub lines: Vec<(Rational, Rational)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneralPositionReport {
    pub distinct_x: bool,
    pub distinct_slopes: bool,
    /// Always true for lines in slope-intercept form.
    pub no_vertical: bool,
}

impl GeneralPositionReport {
    pub fn holds(&self) -> bool {
        self.distinct_x && self.distinct_slopes && self.no_vertical
    }
}

/// Rows sorted by point `x`, columns by line slope, with `a_ij = m_j x_i + b_j − y_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerticalDistances {
    pub matrix: ExactMatrix,
    /// `point_order[r]` is the input index of the point on row `r`.
    pub point_order: Vec<usize>,
    /// `line_order[c]` is the input index of the line on column `c`.
    pub line_order: Vec<usize>,
}

fn all_distinct<'a>(values: impl Iterator<Item = &'a Rational>) -> bool {
    let mut seen = BTreeSet::new();
    values.into_iter().all(|v| seen.insert(v))
}

impl Arrangement {
    pub fn new(points: Vec<(Rational, Rational)>, lines: Vec<(Rational, Rational)>) -> Self {
        Self { points, lines }
    }

    pub fn general_position(&self) -> GeneralPositionReport {
        GeneralPositionReport {
            distinct_x: all_distinct(self.points.iter().map(|p| &p.0)),
            distinct_slopes: all_distinct(self.lines.iter().map(|l| &l.0)),
            no_vertical: true,
        }
    }

    /// Signed vertical distance: positive when the point lies below the line.
    pub fn vertical_distance(&self, point: usize, line: usize) -> Rational {
        let (x, y) = &self.points[point];
        let (m, b) = &self.lines[line];
        m * x + b - y
    }

    /// Number of point-line incidences.
    pub fn incidence_count(&self) -> usize {
        (0..self.points.len())
            .map(|i| (0..self.lines.len()).filter(|&j| self.vertical_distance(i, j).is_zero()).count())
            .sum()
    }

    /// Parses `{"points": [[x, y], …], "lines": [[m, b], …]}` with integer or
    /// `"p/q"` coordinates.
    pub fn from_json(value: &Value) -> Result<Self> {
        let pairs = |key: &str| -> Result<Vec<(Rational, Rational)>> {
            let list = value
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::input(format!("arrangement needs a {key:?} list")))?;
            list.iter()
                .map(|p| match p.as_array().map(Vec::as_slice) {
                    Some([a, b]) => Ok((rational_from_json(a)?, rational_from_json(b)?)),
                    _ => Err(Error::input(format!("expected a pair in {key:?}, got {p}"))),
                })
                .collect()
        };
        Ok(Self { points: pairs("points")?, lines: pairs("lines")? })
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("arrangement file is not valid JSON: {e}")))?;
        Self::from_json(&value)
    }

    pub fn to_json(&self) -> Value {
        let pairs = |list: &[(Rational, Rational)]| -> Value {
            list.iter().map(|(a, b)| json!([rational_to_json(a), rational_to_json(b)])).collect()
        };
        json!({ "points": pairs(&self.points), "lines": pairs(&self.lines) })
    }
}

/// Bit `(i, j)` set iff point `i` lies on line `j` (input order).
pub fn incidence_matrix(arr: &Arrangement) -> Result<BinaryConfiguration> {
    if arr.points.is_empty() || arr.lines.is_empty() {
        return Err(Error::input("arrangement needs at least one point and one line"));
    }
    Ok(BinaryConfiguration::from_fn(arr.points.len(), arr.lines.len(), |i, j| {
        arr.vertical_distance(i, j).is_zero()
    }))
}

/// Points `(a, b)` with `a ∈ 1..=k`, `b ∈ 1..=2k²` and lines `y = m·x + c`
/// with `m ∈ 1..=k`, `c ∈ 1..=k²`. Each line passes through exactly `k` of
/// the points, for `k⁴` incidences in total.
pub fn grid_arrangement(k: usize) -> Result<Arrangement> {
    if k == 0 {
        return Err(Error::input("grid size k must be positive"));
    }
    let k = k as i64;
    let points = (1..=k).flat_map(|a| (1..=2 * k * k).map(move |b| (int(a), int(b)))).collect();
    let lines = (1..=k).flat_map(|m| (1..=k * k).map(move |c| (int(m), int(c)))).collect();
    Ok(Arrangement { points, lines })
}

fn require_general_position(arr: &Arrangement) -> Result<()> {
    if arr.points.is_empty() || arr.lines.is_empty() {
        return Err(Error::input("arrangement needs at least one point and one line"));
    }
    let report = arr.general_position();
    if !report.holds() {
        return Err(Error::precondition(format!(
            "arrangement is not in general position (distinct x: {}, distinct slopes: {})",
            report.distinct_x, report.distinct_slopes
        )));
    }
    Ok(())
}

/// Vertical-distance matrix with rows in increasing `x` and columns in
/// increasing slope. Entries vanish exactly at incidences, and for rows
/// `i < k`, columns `u < j` the second difference
/// `a_iu + a_kj − a_ij − a_ku = (m_j − m_u)(x_k − x_i)` is positive.
pub fn vertical_distance_matrix(arr: &Arrangement) -> Result<VerticalDistances> {
    require_general_position(arr)?;
    let mut point_order: Vec<usize> = (0..arr.points.len()).collect();
    point_order.sort_by(|&a, &b| arr.points[a].0.cmp(&arr.points[b].0));
    let mut line_order: Vec<usize> = (0..arr.lines.len()).collect();
    line_order.sort_by(|&a, &b| arr.lines[a].0.cmp(&arr.lines[b].0));
    let matrix = ExactMatrix::from_fn(point_order.len(), line_order.len(), |r, c| {
        arr.vertical_distance(point_order[r], line_order[c])
    });
    Ok(VerticalDistances { matrix, point_order, line_order })
}

/// Point-line pair counts `(below, above, incident)`: the point lies below
/// the line when its vertical distance is positive.
pub fn above_below_counts(arr: &Arrangement) -> Result<(usize, usize, usize)> {
    require_general_position(arr)?;
    let mut counts = (0, 0, 0);
    for i in 0..arr.points.len() {
        for j in 0..arr.lines.len() {
            let a = arr.vertical_distance(i, j);
            if a.is_positive() {
                counts.0 += 1;
            } else if a.is_negative() {
                counts.1 += 1;
            } else {
                counts.2 += 1;
            }
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::second_differences;

    fn arr(points: &[(i64, i64)], lines: &[(i64, i64)]) -> Arrangement {
        Arrangement::new(
            points.iter().map(|&(x, y)| (int(x), int(y))).collect(),
            lines.iter().map(|&(m, b)| (int(m), int(b))).collect(),
        )
    }

    #[test]
    fn incidences() {
        assert!(incidence_matrix(&arr(&[(0, 0)], &[(1, 0)])).unwrap().get(0, 0));
        assert!(!incidence_matrix(&arr(&[(1, 1)], &[(1, 1)])).unwrap().get(0, 0));
        for (k, pts, lines, inc) in [(1, 2, 1, 1), (2, 16, 8, 16), (3, 54, 27, 81)] {
            let g = grid_arrangement(k).unwrap();
            assert_eq!((g.points.len(), g.lines.len(), g.incidence_count()), (pts, lines, inc));
            let m = incidence_matrix(&g).unwrap();
            assert!(m.col_sums().iter().all(|&s| s == k));
        }
    }

    #[test]
    fn vertical_distances() {
        let a = vertical_distance_matrix(&arr(&[(0, 0)], &[(1, 2)])).unwrap();
        assert_eq!(a.matrix.get(0, 0), &int(2));
        let g = arr(&[(3, 1), (-1, 0), (1, 4)], &[(2, 0), (-1, 3), (0, 0)]);
        let v = vertical_distance_matrix(&g).unwrap();
        assert_eq!(v.point_order, vec![1, 2, 0]);
        assert_eq!(v.line_order, vec![1, 2, 0]);
        assert!(second_differences(&v.matrix).iter().flatten().all(Signed::is_positive));
        assert!(vertical_distance_matrix(&grid_arrangement(2).unwrap()).is_err());
    }

    #[test]
    fn above_below() {
        assert_eq!(above_below_counts(&arr(&[(1, 1)], &[(1, 0)])).unwrap(), (0, 0, 1));
        assert_eq!(above_below_counts(&arr(&[(1, 0)], &[(1, 0)])).unwrap(), (1, 0, 0));
        assert_eq!(above_below_counts(&arr(&[(1, 5)], &[(1, 0)])).unwrap(), (0, 1, 0));
    }

    #[test]
    fn json_round_trip() {
        let a = Arrangement::parse_json(r#"{"points": [["1/2", 3]], "lines": [[-1, "2/4"]]}"#).unwrap();
        assert_eq!(a.lines[0].1, crate::exact::frac(1, 2));
        assert_eq!(Arrangement::from_json(&a.to_json()).unwrap(), a);
        assert!(Arrangement::parse_json(r#"{"points": [[1]], "lines": []}"#).is_err());
    }
}
