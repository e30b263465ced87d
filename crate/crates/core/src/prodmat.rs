//! Production matrices: the square Hessenberg matrix `P` that grows a
//! triangle row by row via `row[n+1] = row[n] * P`, its extraction from a
//! given triangle, and the bidiagonal inverse construction that produces
//! triangles with interleaved sub-array structure from a single weight
//! sequence.

use std::fmt;

use num_traits::{One, Zero};

use crate::epseq::EpSeq;
use crate::error::{Error, Result};
use crate::matrix;
use crate::rational::{parse_rat, rat_to_string, Rat};
use crate::triangle::Triangle;

/// A square matrix with zeros above the superdiagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct ProductionMatrix {
    rows: Vec<Vec<Rat>>,
}

impl ProductionMatrix {
    /// Build from square rows; entries above the superdiagonal must vanish
    /// (otherwise iteration would not stay triangular).
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch {
                    left: row.len(),
                    right: n,
                });
            }
            for (j, v) in row.iter().enumerate() {
                if j > i + 1 && !v.is_zero() {
                    return Err(Error::NotGenerative { row: i, col: j });
                }
            }
        }
        Ok(ProductionMatrix { rows })
    }

    /// Tridiagonal matrix with the given diagonal, the given subdiagonal,
    /// and 1 on the superdiagonal.
    pub fn tridiagonal(diag: &[Rat], sub: &[Rat]) -> Result<Self> {
        let n = diag.len();
        if sub.len() + 1 != n {
            return Err(Error::ShapeMismatch {
                left: sub.len(),
                right: n.saturating_sub(1),
            });
        }
        let mut rows = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            rows[i][i] = diag[i].clone();
            if i + 1 < n {
                rows[i][i + 1] = Rat::one();
                rows[i + 1][i] = sub[i].clone();
            }
        }
        Ok(ProductionMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<Rat> {
        let row = self.rows.get(i).ok_or(Error::SizeExceeded {
            requested: i,
            size: self.size(),
        })?;
        row.get(j).cloned().ok_or(Error::SizeExceeded {
            requested: j,
            size: self.size(),
        })
    }

    /// Drop the last `k` rows and columns.
    pub fn shrink(&self, size: usize) -> ProductionMatrix {
        let size = size.min(self.size());
        ProductionMatrix {
            rows: self.rows[..size]
                .iter()
                .map(|r| r[..size].to_vec())
                .collect(),
        }
    }

    /// Iterate `row[n+1] = row[n] * P` from `row[0] = (1, 0, 0, ...)`.
    /// A matrix of size `s` determines the first `s` rows.
    pub fn generate(&self, rows: usize) -> Result<Triangle> {
        if rows > self.size() {
            return Err(Error::SizeExceeded {
                requested: rows,
                size: self.size(),
            });
        }
        let mut out: Vec<Vec<Rat>> = Vec::with_capacity(rows);
        if rows == 0 {
            return Triangle::new(out);
        }
        let mut cur = vec![Rat::one()];
        out.push(cur.clone());
        for n in 1..rows {
            let mut next = vec![Rat::zero(); n + 1];
            for (i, v) in cur.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                for (j, slot) in next.iter_mut().enumerate().take((i + 2).min(n + 1)) {
                    let p = &self.rows[i][j];
                    if !p.is_zero() {
                        *slot += v * p;
                    }
                }
            }
            out.push(next.clone());
            cur = next;
        }
        Triangle::new(out)
    }

    /// A production matrix generates a triangle of the `(g, f)` kind exactly
    /// when each column from the 2nd on repeats column 1 shifted down one
    /// more step (the first column is unconstrained).
    pub fn is_riordan_production(&self) -> bool {
        let n = self.size();
        for j in 2..n {
            for i in 0..n {
                let expected = if i + 1 >= j {
                    self.rows[i + 1 - j][1].clone()
                } else {
                    Rat::zero()
                };
                if self.rows[i][j] != expected {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_text(&self) -> String {
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(rat_to_string).collect())
            .collect();
        let n = self.size();
        let mut widths = vec![0usize; n];
        for row in &rendered {
            for (j, cell) in row.iter().enumerate() {
                widths[j] = widths[j].max(cell.len());
            }
        }
        let mut out = String::new();
        for row in &rendered {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, cell)| format!("{cell:>width$}", width = widths[j]))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(rat_to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let value: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(rat_to_string).collect())
            .collect();
        serde_json::to_string(&value).expect("string matrix always serializes")
    }

    pub fn from_json(text: &str) -> Result<ProductionMatrix> {
        let value: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| Error::Syntax {
            offset: 0,
            expected: vec!["JSON square matrix of numeric strings".into()],
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
        ProductionMatrix::new(rows)
    }
}

impl fmt::Display for ProductionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for ProductionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f)?;
        write!(f, "{}", self.to_text())
    }
}

/// Recover the production matrix of a triangle `M`: the unique `P` with
/// `M-with-first-row-removed = M * P`, computed as `M^-1 * M'` on the
/// leading `(r-1) x (r-1)` window. Requires a unit diagonal.
pub fn production_of(t: &Triangle) -> Result<ProductionMatrix> {
    let r = t.num_rows();
    if r < 2 {
        return Err(Error::SizeExceeded {
            requested: 2,
            size: r,
        });
    }
    let n = r - 1;
    let mut m = vec![vec![Rat::zero(); n]; n];
    let mut shifted = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = t.entry(i, j)?;
            shifted[i][j] = t.entry(i + 1, j)?;
        }
    }
    let inv = matrix::invert_unit_lower(&m)?;
    ProductionMatrix::new(matrix::mat_mul(&inv, &shifted))
}

/// A weight sequence `a_1, a_2, ...` feeding the bidiagonal inverse
/// construction. Zero weights are rejected: they collapse the inverse's
/// columns and the matching continued fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidiagonalSpec {
    entries: EpSeq<Rat>,
}

impl BidiagonalSpec {
    pub fn new(entries: EpSeq<Rat>) -> Result<Self> {
        for (index, v) in entries.take(entries.pre().len() + entries.period().len())
            .iter()
            .enumerate()
        {
            if v.is_zero() {
                return Err(Error::ZeroSpecEntry { index });
            }
        }
        Ok(BidiagonalSpec { entries })
    }

    /// Shorthand for an integer weight cycle with no pre-period.
    pub fn from_cycle(period: &[i64]) -> Result<Self> {
        BidiagonalSpec::new(EpSeq::cycle(
            period.iter().map(|&v| Rat::from_integer(v.into())).collect(),
        )?)
    }

    pub fn entries(&self) -> &EpSeq<Rat> {
        &self.entries
    }

    /// The weight with 1-based index `i` (`a_i`).
    fn weight(&self, i: usize) -> &Rat {
        self.entries.get(i - 1)
    }

    /// The unit-lower bidiagonal matrix with `-a_i` below the diagonal.
    pub fn lower(&self, rows: usize) -> Triangle {
        let mut out = Vec::with_capacity(rows);
        for i in 0..rows {
            let mut row = vec![Rat::zero(); i + 1];
            row[i] = Rat::one();
            if i > 0 {
                row[i - 1] = -self.weight(i);
            }
            out.push(row);
        }
        Triangle::new(out).expect("rows built with lengths 1, 2, 3, ...")
    }

    /// Inverse of [`Self::lower`]: entry `(i, j)` is the product
    /// `a_{j+1} * a_{j+2} * ... * a_i`.
    pub fn inverse_lower(&self, rows: usize) -> Triangle {
        let mut out: Vec<Vec<Rat>> = Vec::with_capacity(rows);
        for i in 0..rows {
            let mut row = Vec::with_capacity(i + 1);
            if i > 0 {
                let a = self.weight(i);
                for j in 0..i {
                    row.push(&out[i - 1][j] * a);
                }
            }
            row.push(Rat::one());
            out.push(row);
        }
        Triangle::new(out).expect("rows built with lengths 1, 2, 3, ...")
    }

    /// Production matrix: the inverse bidiagonal with its first row removed.
    pub fn production(&self, size: usize) -> Result<ProductionMatrix> {
        let u = self.inverse_lower(size + 1);
        let mut rows = vec![vec![Rat::zero(); size]; size];
        for i in 0..size {
            for (j, slot) in rows[i].iter_mut().enumerate().take((i + 2).min(size)) {
                *slot = u.entry(i + 1, j)?;
            }
        }
        ProductionMatrix::new(rows)
    }

    /// The triangle grown from [`Self::production`].
    pub fn array(&self, rows: usize) -> Result<Triangle> {
        self.production(rows)?.generate(rows)
    }
}

/// Run the whole construction: the production matrix sized to match
/// [`production_of`] on the result, together with the generated triangle.
pub fn bidiagonal_construction(
    spec: &BidiagonalSpec,
    rows: usize,
) -> Result<(ProductionMatrix, Triangle)> {
    let p = spec.production(rows.saturating_sub(1))?;
    let t = spec.array(rows)?;
    Ok((p, t))
}
