use std::fmt;

use super::feasibility::{exists_positive_collection, FeasibilityCertificate};
use crate::config::{has_all_ones_2x2, BinaryConfiguration};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Unspecified,
    /// Specified entry, with its value when one is given.
    Specified(Option<Rational>),
}

/// Partial matrix: a grid of specified and unspecified cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialPattern {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
}

impl PartialPattern {
    pub fn new(rows: usize, cols: usize, cells: Vec<Cell>) -> Result<Self> {
        if rows == 0 || cols == 0 || cells.len() != rows * cols {
            return Err(Error::input(format!(
                "a {rows}x{cols} pattern needs {} cells, got {}",
                rows * cols,
                cells.len()
            )));
        }
        Ok(Self { rows, cols, cells })
    }

    /// Specified (value unset) exactly where `mask` has ones.
    pub fn from_mask(mask: &BinaryConfiguration) -> Self {
        let cells = (0..mask.rows())
            .flat_map(|i| (0..mask.cols()).map(move |j| (i, j)))
            .map(|(i, j)| if mask.get(i, j) { Cell::Specified(None) } else { Cell::Unspecified })
            .collect();
        Self { rows: mask.rows(), cols: mask.cols(), cells }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cell(&self, i: usize, j: usize) -> &Cell {
        &self.cells[i * self.cols + j]
    }

    /// Copy with cell `(i, j)` made unspecified.
    pub fn without(&self, i: usize, j: usize) -> Self {
        let mut out = self.clone();
        out.cells[i * self.cols + j] = Cell::Unspecified;
        out
    }

    /// Ones exactly at the specified cells.
    pub fn indicator(&self) -> BinaryConfiguration {
        BinaryConfiguration::from_fn(self.rows, self.cols, |i, j| {
            matches!(self.cell(i, j), Cell::Specified(_))
        })
    }

    /// Parses `m` lines of whitespace-separated tokens: `?` (unspecified),
    /// `x` (specified, no value) or a rational literal.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut rows = 0;
        let mut cols = None;
        let mut cells = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if *cols.get_or_insert(tokens.len()) != tokens.len() {
                return Err(Error::input(format!("pattern line {} has the wrong length", rows + 1)));
            }
            for t in tokens {
                cells.push(match t {
                    "?" => Cell::Unspecified,
                    "x" | "X" => Cell::Specified(None),
                    lit => Cell::Specified(Some(parse_rational(lit)?)),
                });
            }
            rows += 1;
        }
        Self::new(rows, cols.unwrap_or(0), cells)
    }
}

impl fmt::Display for PartialPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let tokens: Vec<String> = (0..self.cols)
                .map(|j| match self.cell(i, j) {
                    Cell::Unspecified => "?".to_string(),
                    Cell::Specified(None) => "x".to_string(),
                    Cell::Specified(Some(v)) => format_rational(v),
                })
                .collect();
            writeln!(f, "{}", tokens.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternVerdict {
    /// Some collection of orthogonal cycles on the specified cells is
    /// positive, so the pattern is not TP₂ completable (hence not TP
    /// completable).
    Obstructed,
    /// No positive collection exists; this does not certify completability.
    NoObstruction,
}

impl fmt::Display for PatternVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternVerdict::Obstructed => "Obstructed",
            PatternVerdict::NoObstruction => "NoObstruction",
        })
    }
}

/// Cycle obstruction to TP₂ completion. The pattern must not contain a fully
/// specified 2×2 submatrix.
pub fn pattern_obstruction(p: &PartialPattern) -> Result<(PatternVerdict, FeasibilityCertificate)> {
    let indicator = p.indicator();
    if let Some(block) = has_all_ones_2x2(&indicator) {
        return Err(Error::precondition(format!(
            "rows {} and {} with columns {} and {} form a fully specified 2x2 submatrix",
            block.rows[0] + 1,
            block.rows[1] + 1,
            block.cols[0] + 1,
            block.cols[1] + 1
        )));
    }
    let (exists, cert) = exists_positive_collection(&indicator);
    let verdict = if exists { PatternVerdict::Obstructed } else { PatternVerdict::NoObstruction };
    Ok((verdict, cert))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "? x ? x\n? ? x x\nx x ? ?\nx ? x ?\n";

    #[test]
    fn example_pattern_is_obstructed() {
        let p = PartialPattern::parse_text(EXAMPLE).unwrap();
        assert_eq!(p.to_string(), EXAMPLE);
        assert_eq!(pattern_obstruction(&p).unwrap().0, PatternVerdict::Obstructed);
    }

    #[test]
    fn trivial_patterns() {
        let single = PartialPattern::parse_text("? ?\n3/2 ?").unwrap();
        assert_eq!(pattern_obstruction(&single).unwrap().0, PatternVerdict::NoObstruction);
        let empty = PartialPattern::parse_text("? ? ?\n? ? ?").unwrap();
        assert_eq!(pattern_obstruction(&empty).unwrap().0, PatternVerdict::NoObstruction);
    }

    #[test]
    fn full_block_is_rejected() {
        let p = PartialPattern::parse_text("1 2\nx ?\n3 4").unwrap();
        assert!(matches!(pattern_obstruction(&p), Err(Error::Precondition(_))));
        assert!(PartialPattern::parse_text("? ?\n?").is_err());
        assert!(PartialPattern::parse_text("? 1/0").is_err());
    }
}
