//! Monic polynomial families from three-term recurrences, their coefficient
//! arrays and moment matrices, and the interleaved family whose moment
//! matrix carries two embedded moment matrices.

use num_traits::{One, Zero};

use crate::cfrac::JFraction;
use crate::epseq::EpSeq;
use crate::error::Result;
use crate::rational::Rat;
use crate::triangle::Triangle;

/// Data for `P_0 = 1`, `P_1 = x + p1_constant`,
/// `P_n = (x - b_{n-1}) P_{n-1} - c_{n-1} P_{n-2}` for `n >= 2`.
///
/// `b` holds `b_0, b_1, ...` and `c` holds `c_1, c_2, ...` — the same
/// layout as [`JFraction`]. The recurrence itself never reads `b_0`; it is
/// kept because `p1_constant = -b_0` is the classical initial condition,
/// and because the pair `(b, c)` then matches the fraction whose series is
/// the moment sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    b: EpSeq<Rat>,
    c: EpSeq<Rat>,
    p1_constant: Rat,
}

impl Recurrence {
    pub fn new(b: EpSeq<Rat>, c: EpSeq<Rat>, p1_constant: Rat) -> Self {
        Recurrence { b, c, p1_constant }
    }

    /// The classical initial condition for a fraction's coefficient data:
    /// `P_1 = x - b_0`.
    pub fn jacobi(j: &JFraction) -> Self {
        Recurrence {
            b: j.b().clone(),
            c: j.c().clone(),
            p1_constant: -j.b().get(0),
        }
    }

    pub fn b(&self) -> &EpSeq<Rat> {
        &self.b
    }

    pub fn c(&self) -> &EpSeq<Rat> {
        &self.c
    }

    pub fn p1_constant(&self) -> &Rat {
        &self.p1_constant
    }

    /// True when `P_1 = x - b_0`, so the production matrix of the moment
    /// matrix is exactly tridiagonal in `(b, c)`.
    pub fn is_jacobi(&self) -> bool {
        self.p1_constant == -self.b.get(0)
    }

    /// Row `n` holds the coefficients of `P_n`, ascending in degree.
    pub fn polynomials(&self, count: usize) -> Triangle {
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(count);
        if count >= 1 {
            rows.push(vec![Rat::one()]);
        }
        if count >= 2 {
            rows.push(vec![self.p1_constant.clone(), Rat::one()]);
        }
        for n in 2..count {
            let b = self.b.get(n - 1);
            let c = self.c.get(n - 2);
            let mut row = vec![Rat::zero(); n + 1];
            for (k, v) in rows[n - 1].iter().enumerate() {
                row[k + 1] += v;
                row[k] -= v * b;
            }
            for (k, v) in rows[n - 2].iter().enumerate() {
                row[k] -= v * c;
            }
            rows.push(row);
        }
        Triangle::new(rows).expect("monic rows have lengths 1, 2, 3, ...")
    }

    /// Inverse of the coefficient array; column 0 is the moment sequence.
    pub fn moment_matrix(&self, rows: usize) -> Result<Triangle> {
        self.polynomials(rows).inverse()
    }
}

/// True iff column 0 of the recurrence's moment matrix agrees with the
/// fraction's series for `order` terms.
pub fn check_moment_cf(rec: &Recurrence, j: &JFraction, order: usize) -> Result<bool> {
    let mm = rec.moment_matrix(order)?;
    let g = j.series(order);
    for n in 0..order {
        if &mm.entry(n, 0)? != g.coeff(n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Two recurrences combined into the single family
/// `R_n = Q_{n/2} x^{n/2}` (even `n`) / `R_n = P_{(n+1)/2} x^{(n-1)/2}`
/// (odd `n`). Its moment matrix interleaves the two members' moment
/// matrices column by column.
#[derive(Clone, Debug)]
pub struct InterleavedFamily {
    p: Recurrence,
    q: Recurrence,
}

impl InterleavedFamily {
    pub fn new(p: Recurrence, q: Recurrence) -> Self {
        InterleavedFamily { p, q }
    }

    pub fn p(&self) -> &Recurrence {
        &self.p
    }

    pub fn q(&self) -> &Recurrence {
        &self.q
    }

    /// True when the two recurrences agree in every shift `b_1, b_2, ...`
    /// and every multiplier `c_1, c_2, ...` — the shape of all the
    /// motivating examples. Callers may warn (not fail) otherwise.
    pub fn shares_tail(&self) -> bool {
        self.p.b.shift(1).normalize() == self.q.b.shift(1).normalize()
            && self.p.c.normalize() == self.q.c.normalize()
    }

    /// Row `n` holds the coefficients of `R_n`, ascending in degree.
    pub fn coefficient_array(&self, rows: usize) -> Triangle {
        let p_rows = self.p.polynomials(rows / 2 + 1);
        let q_rows = self.q.polynomials((rows + 1) / 2);
        let mut out: Vec<Vec<Rat>> = Vec::with_capacity(rows);
        for n in 0..rows {
            let m = n / 2;
            let poly = if n % 2 == 0 {
                &q_rows.rows()[m]
            } else {
                &p_rows.rows()[m + 1]
            };
            let mut row = vec![Rat::zero(); m];
            row.extend_from_slice(poly);
            out.push(row);
        }
        Triangle::new(out).expect("degree n rows have lengths 1, 2, 3, ...")
    }

    /// Inverse of [`Self::coefficient_array`].
    pub fn moment_matrix(&self, rows: usize) -> Result<Triangle> {
        self.coefficient_array(rows).inverse()
    }
}
