//! Finite lower-triangular number arrays: the concrete, displayable form of
//! the infinite arrays this crate manipulates. Row `n` carries entries for
//! columns `0..=n`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix;
use crate::rational::{parse_rat, rat_to_string, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<Rat>>,
}

impl Triangle {
    /// Build from ragged rows; row `n` must have exactly `n + 1` entries.
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::ShapeMismatch {
                    left: row.len(),
                    right: n + 1,
                });
            }
        }
        Ok(Triangle { rows })
    }

    /// Convenience constructor from integer literals (panics on bad shape;
    /// intended for fixed test data and built-in examples).
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Triangle::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rat::from_integer(v.into())).collect())
                .collect(),
        )
        .expect("literal triangle rows must have lengths 1, 2, 3, ...")
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Entry at row `n`, column `k`; zero above the diagonal, error past the
    /// stored rows.
    pub fn entry(&self, n: usize, k: usize) -> Result<Rat> {
        let row = self.rows.get(n).ok_or(Error::SizeExceeded {
            requested: n,
            size: self.num_rows(),
        })?;
        Ok(row.get(k).cloned().unwrap_or_else(Rat::zero))
    }

    pub fn is_integer(&self) -> bool {
        self.rows.iter().flatten().all(Rat::is_integer)
    }

    /// Keep only the first `n` rows.
    pub fn truncate(&self, n: usize) -> Triangle {
        Triangle {
            rows: self.rows[..n.min(self.rows.len())].to_vec(),
        }
    }

    fn to_square(&self) -> Vec<Vec<Rat>> {
        let n = self.num_rows();
        let mut m = vec![vec![Rat::zero(); n]; n];
        for (i, row) in self.rows.iter().enumerate() {
            m[i][..=i].clone_from_slice(row);
        }
        m
    }

    fn from_square(m: Vec<Vec<Rat>>) -> Triangle {
        let rows = m
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.truncate(i + 1);
                row
            })
            .collect();
        Triangle { rows }
    }

    /// Matrix product of two triangles with the same number of rows.
    pub fn mul(&self, other: &Triangle) -> Result<Triangle> {
        if self.num_rows() != other.num_rows() {
            return Err(Error::ShapeMismatch {
                left: self.num_rows(),
                right: other.num_rows(),
            });
        }
        Ok(Triangle::from_square(matrix::mat_mul(
            &self.to_square(),
            &other.to_square(),
        )))
    }

    /// Matrix inverse; requires every diagonal entry to be 1.
    pub fn inverse(&self) -> Result<Triangle> {
        Ok(Triangle::from_square(matrix::invert_unit_lower(
            &self.to_square(),
        )?))
    }

    /// Plain-text table with right-aligned columns.
    pub fn to_text(&self) -> String {
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(rat_to_string).collect())
            .collect();
        let cols = self.num_rows();
        let mut widths = vec![0usize; cols];
        for row in &rendered {
            for (k, cell) in row.iter().enumerate() {
                widths[k] = widths[k].max(cell.len());
            }
        }
        let mut out = String::new();
        for row in &rendered {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(k, cell)| format!("{cell:>width$}", width = widths[k]))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    /// One CSV line per row (ragged; exact rational entries).
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(rat_to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// JSON array of rows, each an array of exact decimal/fraction strings.
    /// Strings keep arbitrary-precision entries lossless.
    pub fn to_json(&self) -> String {
        let value: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(rat_to_string).collect())
            .collect();
        serde_json::to_string(&value).expect("string matrix always serializes")
    }

    pub fn from_json(text: &str) -> Result<Triangle> {
        let value: Vec<Vec<String>> = serde_json::from_str(text)
            .map_err(|e| Error::Syntax {
                offset: 0,
                expected: vec!["JSON array of rows of numeric strings".into()],
                found: e.to_string(),
            })?;
        let mut rows = Vec::with_capacity(value.len());
        for row in value {
            let parsed: Result<Vec<Rat>> = row
                .iter()
                .map(|s| {
                    parse_rat(s).ok_or_else(|| Error::Syntax {
                        offset: 0,
                        expected: vec!["integer or fraction".into()],
                        found: s.clone(),
                    })
                })
                .collect();
            rows.push(parsed?);
        }
        Triangle::new(rows)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f)?;
        write!(f, "{}", self.to_text())
    }
}
