//! Splitting a triangle `(g, f)` into the two sub-arrays sitting inside it
//! at even and odd column positions, and reassembling or reversing that
//! split.
//!
//! For `R = (g, f)` the even-column sub-array is `A = (g, f^2/x)` and the
//! odd-column one is `B = (g*f/x, f^2/x)`; entrywise `A[n][k] = R[n+k][2k]`
//! and `B[n][k] = R[n+k+1][2k+1]`. Conversely an array `(u, v)` sits inside
//! `(u, x*sqrt(v/x))` exactly when that square root has integer
//! coefficients.

use crate::error::{Error, Result};
use crate::fps::Series;
use crate::riordan::RiordanArray;
use crate::triangle::Triangle;

/// The two interleaved sub-arrays of a triangle.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Even-column sub-array `(g, f^2/x)`.
    pub a: RiordanArray,
    /// Odd-column sub-array `(g*f/x, f^2/x)`.
    pub b: RiordanArray,
}

/// One level of the repeated even-branch split.
#[derive(Clone, Debug)]
pub struct CascadeNode {
    /// 1 for the first split, 2 for the split of that level's `a`, ...
    pub depth: usize,
    pub a: RiordanArray,
    pub b: RiordanArray,
}

/// Split `r = (g, f)` into its even- and odd-column sub-arrays. The result
/// is known to one order less than `r`.
pub fn decompose(r: &RiordanArray) -> Result<Decomposition> {
    let g = r.g();
    let f = r.f();
    let kernel = f.mul(f).div_xpow(1)?;
    let f_over_x = f.div_xpow(1)?;
    let a = RiordanArray::new(g.truncate(kernel.order()), kernel.clone())?;
    let b = RiordanArray::new(g.mul(&f_over_x), kernel)?;
    Ok(Decomposition { a, b })
}

/// Check `a[n][k] == r[n+k][2k]` and `b[n][k] == r[n+k+1][2k+1]` for every
/// entry of the first `rows` rows. Requires `r.order() >= 2 * rows`.
pub fn entry_identities_hold(r: &RiordanArray, rows: usize) -> Result<bool> {
    if r.order() < 2 * rows {
        return Err(Error::OrderExceeded {
            requested: 2 * rows,
            order: r.order(),
        });
    }
    let parts = decompose(r)?;
    for n in 0..rows {
        for k in 0..=n {
            if parts.a.entry(n, k)? != r.entry(n + k, 2 * k)? {
                return Ok(false);
            }
            if parts.b.entry(n, k)? != r.entry(n + k + 1, 2 * k + 1)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reassemble a triangle from its two sub-arrays: entry `(m, 2k)` comes
/// from `a[m-k][k]`, entry `(m, 2k+1)` from `b[m-k-1][k]`. Both inputs must
/// have the same number of rows `r`; exactly the first `r` reassembled rows
/// are fully determined, so that is what is returned.
pub fn interleave(a: &Triangle, b: &Triangle) -> Result<Triangle> {
    if a.num_rows() != b.num_rows() {
        return Err(Error::ShapeMismatch {
            left: a.num_rows(),
            right: b.num_rows(),
        });
    }
    let rows = a.num_rows();
    let mut out = Vec::with_capacity(rows);
    for m in 0..rows {
        let mut row = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let k = j / 2;
            let v = if j % 2 == 0 {
                a.entry(m - k, k)?
            } else {
                b.entry(m - k - 1, k)?
            };
            row.push(v);
        }
        out.push(row);
    }
    Triangle::new(out)
}

/// Find the triangle that `a = (u, v)` embeds into as its even-column
/// sub-array: `(u, x * s)` where `s = sqrt(v/x)`. Fails with
/// [`Error::NotEmbeddable`] if `s` has a non-integer coefficient, since no
/// integer triangle then contains `a` this way.
pub fn embed(a: &RiordanArray) -> Result<RiordanArray> {
    let s = a.f().div_xpow(1)?.sqrt()?;
    if let Some(index) = s.coeffs().iter().position(|c| !c.is_integer()) {
        return Err(Error::NotEmbeddable {
            index,
            coefficient: s.coeffs()[index].clone(),
            order_checked: s.order(),
        });
    }
    RiordanArray::new(a.g().clone(), s.mul_xpow(1))
}

/// Split repeatedly along the even branch: level 1 splits `r`, level `i+1`
/// splits level `i`'s `a`. Each level costs one order of precision.
pub fn cascade(r: &RiordanArray, depth: usize) -> Result<Vec<CascadeNode>> {
    let mut nodes = Vec::with_capacity(depth);
    let mut current = r.clone();
    for level in 1..=depth {
        let parts = decompose(&current)?;
        current = parts.a.clone();
        nodes.push(CascadeNode {
            depth: level,
            a: parts.a,
            b: parts.b,
        });
    }
    Ok(nodes)
}

/// The left factor in `b = (f/x, x) * a`: multiplying the even sub-array on
/// the left by this sequence array gives the odd sub-array.
pub fn odd_from_even_factor(r: &RiordanArray) -> Result<RiordanArray> {
    let f_over_x = r.f().div_xpow(1)?;
    let order = f_over_x.order();
    RiordanArray::new(f_over_x, Series::x(order))
}
