use serde_json::Value;

use crate::error::{Error, Result};

/// Closed sequence of positions `p_0, …, p_{2k−1}` (with `p_{2k} = p_0`
/// implied) in an `rows × cols` frame. `p_{2i}` and `p_{2i+1}` share a row,
/// `p_{2i+1}` and `p_{2i+2}` share a column. Positions are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrthogonalCycle {
    rows: usize,
    cols: usize,
    positions: Vec<(usize, usize)>,
}

impl OrthogonalCycle {
    /// Accepts the sequence either open or closed (last position repeating
    /// the first).
    pub fn new(rows: usize, cols: usize, mut positions: Vec<(usize, usize)>) -> Result<Self> {
        if positions.len() > 2 && positions.first() == positions.last() {
            positions.pop();
        }
        if positions.len() < 2 || !positions.len().is_multiple_of(2) {
            return Err(Error::input(format!(
                "an orthogonal cycle needs an even number (at least 2) of positions, got {}",
                positions.len()
            )));
        }
        if let Some(&(i, j)) = positions.iter().find(|&&(i, j)| i >= rows || j >= cols) {
            return Err(Error::input(format!("position ({i},{j}) outside {rows}x{cols} frame")));
        }
        let len = positions.len();
        for s in 0..len {
            let (a, b) = (positions[s], positions[(s + 1) % len]);
            let ok = if s % 2 == 0 { a.0 == b.0 } else { a.1 == b.1 };
            if !ok {
                let kind = if s % 2 == 0 { "row" } else { "column" };
                return Err(Error::input(format!(
                    "positions p{s} and p{} must share a {kind}",
                    (s + 1) % len
                )));
            }
        }
        Ok(Self { rows, cols, positions })
    }

    /// Frame inferred as the smallest one containing every position.
    pub fn tight(positions: Vec<(usize, usize)>) -> Result<Self> {
        let rows = positions.iter().map(|p| p.0 + 1).max().unwrap_or(0);
        let cols = positions.iter().map(|p| p.1 + 1).max().unwrap_or(0);
        Self::new(rows, cols, positions)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `p_0, …, p_{2k−1}`.
    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// Number of row moves `k`.
    pub fn half_len(&self) -> usize {
        self.positions.len() / 2
    }

    /// `(p_1, p_0, p_{2k−1}, …, p_2)`: the same closed walk traversed backwards,
    /// which swaps even and odd positions.
    pub fn reversed(&self) -> Self {
        let mut positions = Vec::with_capacity(self.positions.len());
        positions.push(self.positions[1]);
        positions.push(self.positions[0]);
        positions.extend(self.positions[2..].iter().rev());
        Self { rows: self.rows, cols: self.cols, positions }
    }

    /// Rotation by an even number of steps, so parity classes are unchanged.
    pub fn rotated(&self, even_offset: usize) -> Self {
        let len = self.positions.len();
        let s = (2 * even_offset) % len;
        let positions = (0..len).map(|t| self.positions[(s + t) % len]).collect();
        Self { rows: self.rows, cols: self.cols, positions }
    }

    /// Same positions in a larger frame.
    pub fn with_frame(&self, rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, self.positions.clone())
    }

    /// `𝔉(i,j)`: signed count of positions in the open quadrant strictly below
    /// row `i` and right of column `j`, counting rows and columns from 1, so
    /// `0 ≤ i ≤ rows`, `0 ≤ j ≤ cols`. Even positions count `+1`, odd `−1`.
    pub fn weight(&self, i: usize, j: usize) -> i64 {
        self.positions
            .iter()
            .enumerate()
            .filter(|(_, p)| p.0 >= i && p.1 >= j)
            .map(|(s, _)| if s % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// `𝔉(i,j)` for `i ∈ 1..rows`, `j ∈ 1..cols`, stored at `[i−1][j−1]`.
    /// Outside that range 𝔉 vanishes identically.
    pub fn weight_table(&self) -> Vec<Vec<i64>> {
        (1..self.rows)
            .map(|i| (1..self.cols).map(|j| self.weight(i, j)).collect())
            .collect()
    }

    /// Parses a JSON list of 1-based `[row, col]` pairs.
    pub fn from_json(value: &Value, frame: Option<(usize, usize)>) -> Result<Self> {
        let positions = positions_from_json(value)?;
        match frame {
            Some((r, c)) => Self::new(r, c, positions),
            None => Self::tight(positions),
        }
    }

    /// JSON list of 1-based `[row, col]` pairs, closed (first position repeated).
    pub fn to_json(&self) -> Value {
        let mut list: Vec<Value> =
            self.positions.iter().map(|&(i, j)| serde_json::json!([i + 1, j + 1])).collect();
        list.push(list[0].clone());
        Value::Array(list)
    }
}

pub(crate) fn positions_from_json(value: &Value) -> Result<Vec<(usize, usize)>> {
    let list = value.as_array().ok_or_else(|| Error::input("a cycle must be a JSON list"))?;
    list.iter()
        .map(|p| {
            let pair = p.as_array().filter(|a| a.len() == 2);
            let coords = pair.and_then(|a| Some((a[0].as_u64()?, a[1].as_u64()?)));
            match coords {
                Some((r, c)) if r >= 1 && c >= 1 => Ok((r as usize - 1, c as usize - 1)),
                _ => Err(Error::input(format!("expected a 1-based [row, col] pair, got {p}"))),
            }
        })
        .collect()
}

/// Nonempty family of cycles on a common frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCollection {
    rows: usize,
    cols: usize,
    cycles: Vec<OrthogonalCycle>,
}

impl CycleCollection {
    pub fn new(cycles: Vec<OrthogonalCycle>) -> Result<Self> {
        let Some(first) = cycles.first() else {
            return Err(Error::input("a cycle collection must be nonempty"));
        };
        let (rows, cols) = (first.rows(), first.cols());
        if cycles.iter().any(|c| c.rows() != rows || c.cols() != cols) {
            return Err(Error::input("all cycles in a collection must share one frame"));
        }
        Ok(Self { rows, cols, cycles })
    }

    pub fn single(cycle: OrthogonalCycle) -> Self {
        Self { rows: cycle.rows(), cols: cycle.cols(), cycles: vec![cycle] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cycles(&self) -> &[OrthogonalCycle] {
        &self.cycles
    }

    /// Pointwise sum of the members' weight tables.
    pub fn weight_table(&self) -> Vec<Vec<i64>> {
        let mut total = vec![vec![0i64; self.cols.saturating_sub(1)]; self.rows.saturating_sub(1)];
        for c in &self.cycles {
            for (acc, row) in total.iter_mut().zip(c.weight_table()) {
                for (a, v) in acc.iter_mut().zip(row) {
                    *a += v;
                }
            }
        }
        total
    }

    /// Accepts a single cycle (list of pairs) or a list of cycles. The frame
    /// is the smallest one containing every position.
    pub fn from_json(value: &Value) -> Result<Self> {
        let list = value.as_array().ok_or_else(|| Error::input("cycle input must be a JSON list"))?;
        let nested = list.first().and_then(|p| p.as_array()).and_then(|p| p.first()).is_some_and(Value::is_array);
        let groups: Vec<Vec<(usize, usize)>> = if nested {
            list.iter().map(positions_from_json).collect::<Result<_>>()?
        } else {
            vec![positions_from_json(value)?]
        };
        let rows = groups.iter().flatten().map(|p| p.0 + 1).max().unwrap_or(0);
        let cols = groups.iter().flatten().map(|p| p.1 + 1).max().unwrap_or(0);
        let cycles = groups
            .into_iter()
            .map(|g| OrthogonalCycle::new(rows, cols, g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(cycles)
    }
}

/// True iff the summed weight table is nonnegative everywhere and positive
/// somewhere.
pub fn collection_is_positive(o: &CycleCollection) -> bool {
    table_is_positive(&o.weight_table())
}

pub(crate) fn table_is_positive(table: &[Vec<i64>]) -> bool {
    let flat = || table.iter().flatten();
    flat().all(|&v| v >= 0) && flat().any(|&v| v > 0)
}
