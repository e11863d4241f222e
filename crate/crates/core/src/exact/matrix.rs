use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::rational::{format_rational, int, parse_rational, Rational};
use crate::error::{Error, Result};

/// Dense `rows × cols` matrix of exact rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::input("matrix dimensions must be positive"));
        }
        if entries.len() != rows * cols {
            return Err(Error::input(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::input("ragged matrix rows"));
        }
        Self::new(m, n, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer matrices; panics on ragged input.
    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| int(v)).collect())
            .collect();
        Self::from_rows(rows).expect("well-formed integer matrix")
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        }))
    }

    /// Row-scaled integer copy: each row multiplied by a positive rational so
    /// that it becomes a primitive integer vector. Signs of all minors are
    /// preserved; columns are then divided by the gcd of their entries.
    pub(crate) fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        use num_integer::Integer;
        use num_traits::Signed;
        let mut out: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcd = super::rational::common_denominator(row);
                let mut ints: Vec<BigInt> =
                    row.iter().map(|v| v.numer() * (&lcd / v.denom())).collect();
                let g = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
                if !g.is_zero() && !g.is_one() {
                    for v in &mut ints {
                        *v /= &g;
                    }
                }
                ints
            })
            .collect();
        for j in 0..self.cols {
            let g = out.iter().fold(BigInt::zero(), |g, r| g.gcd(&r[j]));
            if !g.is_zero() && !g.abs().is_one() {
                for r in &mut out {
                    r[j] /= &g;
                }
            }
        }
        out
    }

    /// JSON object `{"rows": m, "cols": n, "entries": [[...], ...]}`.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|i| Value::Array(self.row(i).iter().map(rational_to_json).collect()))
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": rows })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let field = |name: &str| {
            value
                .get(name)
                .ok_or_else(|| Error::input(format!("matrix file is missing {name:?}")))
        };
        let rows = field("rows")?
            .as_u64()
            .ok_or_else(|| Error::input("\"rows\" must be a positive integer"))? as usize;
        let cols = field("cols")?
            .as_u64()
            .ok_or_else(|| Error::input("\"cols\" must be a positive integer"))? as usize;
        let data = field("entries")?
            .as_array()
            .ok_or_else(|| Error::input("\"entries\" must be an array of rows"))?;
        if data.len() != rows {
            return Err(Error::input(format!("declared {rows} rows, found {}", data.len())));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for row in data {
            let row = row
                .as_array()
                .ok_or_else(|| Error::input("each matrix row must be an array"))?;
            if row.len() != cols {
                return Err(Error::input(format!("declared {cols} columns, found {}", row.len())));
            }
            for v in row {
                entries.push(rational_from_json(v)?);
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("matrix file is not valid JSON: {e}")))?;
        Self::from_json(&value)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Integers that fit in an `i64` become JSON numbers; everything else is a
/// `"p/q"` (or big-integer) string.
pub fn rational_to_json(value: &Rational) -> Value {
    if value.is_integer() {
        if let Ok(small) = i64::try_from(value.numer()) {
            return json!(small);
        }
    }
    Value::String(format_rational(value))
}

pub fn rational_from_json(value: &Value) -> Result<Rational> {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(int(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(BigInt::from(u)))
            } else {
                Err(Error::input(format!(
                    "non-integer JSON number {n}; write fractions as \"p/q\" strings"
                )))
            }
        }
        Value::String(s) => parse_rational(s),
        other => Err(Error::input(format!("expected a rational entry, found {other}"))),
    }
}
