//! Small dense exact-rational matrix helpers shared by the triangular-array
//! modules. Matrices are `Vec<Vec<Rat>>` in row-major order, always square
//! here.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rat;

pub(crate) fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    assert!(b.len() == n && (n == 0 || b[0].len() == n));
    let mut out = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

pub(crate) fn identity(n: usize) -> Vec<Vec<Rat>> {
    let mut m = vec![vec![Rat::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rat::one();
    }
    m
}

#[cfg(test)]
pub(crate) fn is_identity(m: &[Vec<Rat>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
    })
}

/// Invert a lower-triangular matrix with all diagonal entries 1, by forward
/// substitution. Errors if some row breaks that shape.
pub(crate) fn invert_unit_lower(m: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        let unit_diag = row.len() == n && row[i].is_one();
        let zero_above = row[i + 1..].iter().all(Rat::is_zero);
        if !unit_diag || !zero_above {
            return Err(Error::NotUnitTriangular { row: i });
        }
    }
    let mut inv = identity(n);
    for i in 0..n {
        for j in 0..i {
            // inv[i][j] = -(sum_{j <= k < i} m[i][k] * inv[k][j])
            let mut acc = Rat::zero();
            for k in j..i {
                if !m[i][k].is_zero() && !inv[k][j].is_zero() {
                    acc += &m[i][k] * &inv[k][j];
                }
            }
            inv[i][j] = -acc;
        }
    }
    Ok(inv)
}
