//! Lower-triangular arrays defined by a pair of power series `(g, f)`:
//! entry `(n, k)` is the coefficient of `x^n` in `g * f^k`. The pairs form
//! a group under `(g, f) * (h, l) = (g * h(f), l(f))`, and that product
//! matches matrix multiplication of the associated triangles.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fps::Series;
use crate::rational::Rat;
use crate::triangle::Triangle;

#[derive(Clone, PartialEq, Eq)]
pub struct RiordanArray {
    g: Series,
    f: Series,
}

impl RiordanArray {
    /// Build from a unit series `g` (nonzero constant term) and a proper
    /// composition kernel `f` (`f(0) = 0`, `f'(0) != 0`).
    pub fn new(g: Series, f: Series) -> Result<Self> {
        if g.coeff(0)?.is_zero() {
            return Err(Error::InvalidRiordanPair(
                "first series must have a nonzero constant term".into(),
            ));
        }
        if !f.coeff(0)?.is_zero() {
            return Err(Error::InvalidRiordanPair(
                "second series must vanish at 0".into(),
            ));
        }
        if f.order() < 2 || f.coeff(1)?.is_zero() {
            return Err(Error::InvalidRiordanPair(
                "second series must have a nonzero linear term".into(),
            ));
        }
        Ok(RiordanArray { g, f })
    }

    /// The identity element `(1, x)`.
    pub fn identity(order: usize) -> Self {
        RiordanArray {
            g: Series::one(order),
            f: Series::x(order),
        }
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    /// Number of leading rows that are fully determined.
    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    /// Entry at row `n`, column `k`; requires `n < order`.
    pub fn entry(&self, n: usize, k: usize) -> Result<Rat> {
        if n >= self.order() {
            return Err(Error::OrderExceeded {
                requested: n,
                order: self.order(),
            });
        }
        if k > n {
            return Ok(Rat::zero());
        }
        // f^k has valuation k, so only the series prefix matters.
        let col = self.g.mul(&self.f.pow(k as u32));
        Ok(col.coeff(n)?.clone())
    }

    /// The first `rows` rows as a concrete triangle; requires
    /// `rows <= order`.
    pub fn triangle(&self, rows: usize) -> Result<Triangle> {
        if rows > self.order() {
            return Err(Error::OrderExceeded {
                requested: rows,
                order: self.order(),
            });
        }
        let mut out: Vec<Vec<Rat>> = vec![Vec::with_capacity(1); rows];
        let mut col = self.g.truncate(self.order());
        for k in 0..rows {
            for (n, row) in out.iter_mut().enumerate().take(rows).skip(k) {
                row.push(col.coeff(n)?.clone());
            }
            if k + 1 < rows {
                col = col.mul(&self.f);
            }
        }
        Triangle::new(out)
    }

    /// Group product `(g, f) * (h, l) = (g * h(f), l(f))`. As matrices this
    /// is `self * other` (self applied first on the left).
    pub fn multiply(&self, other: &RiordanArray) -> Result<RiordanArray> {
        let g = self.g.mul(&other.g.compose(&self.f)?);
        let f = other.f.compose(&self.f)?;
        RiordanArray::new(g, f)
    }

    /// Group inverse `(1 / g(rev(f)), rev(f))`.
    pub fn inverse(&self) -> Result<RiordanArray> {
        let f_rev = self.f.reversion()?;
        let g = self.g.compose(&f_rev)?.invert()?;
        RiordanArray::new(g, f_rev)
    }
}

impl fmt::Display for RiordanArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.f)
    }
}

impl fmt::Debug for RiordanArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    pub(crate) fn pascal(order: usize) -> RiordanArray {
        let one_minus_x = Series::from_ints(&[1, -1], order);
        RiordanArray::new(
            Series::one(order).div(&one_minus_x).unwrap(),
            Series::x(order).div(&one_minus_x).unwrap(),
        )
        .unwrap()
    }

    fn catalan_triangle(order: usize) -> RiordanArray {
        let c = Series::catalan(order);
        RiordanArray::new(c.clone(), c.mul_xpow(1).truncate(order)).unwrap()
    }

    #[test]
    fn pascal_rows_are_binomials() {
        let t = pascal(8).triangle(6).unwrap();
        let expected = Triangle::from_ints(&[
            &[1],
            &[1, 1],
            &[1, 2, 1],
            &[1, 3, 3, 1],
            &[1, 4, 6, 4, 1],
            &[1, 5, 10, 10, 5, 1],
        ]);
        assert_eq!(t, expected);
    }

    #[test]
    fn catalan_pair_rows() {
        let t = catalan_triangle(8).triangle(5).unwrap();
        let expected = Triangle::from_ints(&[
            &[1],
            &[1, 1],
            &[2, 2, 1],
            &[5, 5, 3, 1],
            &[14, 14, 9, 4, 1],
        ]);
        assert_eq!(t, expected);
    }

    #[test]
    fn entry_matches_triangle_and_bounds() {
        let r = pascal(10);
        assert_eq!(r.entry(6, 2).unwrap(), rat_int(15));
        assert_eq!(r.entry(3, 5).unwrap(), rat_int(0));
        assert!(matches!(r.entry(10, 0), Err(Error::OrderExceeded { .. })));
        assert!(matches!(r.triangle(11), Err(Error::OrderExceeded { .. })));
    }

    #[test]
    fn product_is_matrix_product() {
        let a = pascal(10);
        let b = catalan_triangle(10);
        let ab = a.multiply(&b).unwrap();
        let lhs = ab.triangle(9).unwrap();
        let rhs = a.triangle(9).unwrap().mul(&b.triangle(9).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn identity_is_neutral() {
        let r = catalan_triangle(9);
        let id = RiordanArray::identity(9);
        assert_eq!(id.multiply(&r).unwrap().triangle(8).unwrap(), r.triangle(8).unwrap());
        assert_eq!(r.multiply(&id).unwrap().triangle(8).unwrap(), r.triangle(8).unwrap());
        let idt = id.triangle(5).unwrap();
        assert_eq!(idt.entry(3, 3).unwrap(), rat_int(1));
        assert_eq!(idt.entry(3, 1).unwrap(), rat_int(0));
    }

    #[test]
    fn inverse_of_pascal_has_signed_binomials() {
        let inv = pascal(9).inverse().unwrap();
        let t = inv.triangle(5).unwrap();
        let expected = Triangle::from_ints(&[
            &[1],
            &[-1, 1],
            &[1, -2, 1],
            &[-1, 3, -3, 1],
            &[1, -4, 6, -4, 1],
        ]);
        assert_eq!(t, expected);
        let prod = pascal(9).multiply(&inv).unwrap();
        assert_eq!(prod.triangle(8).unwrap(), RiordanArray::identity(9).triangle(8).unwrap());
    }

    #[test]
    fn constructor_rejects_improper_pairs() {
        assert!(RiordanArray::new(Series::x(4), Series::x(4)).is_err());
        assert!(RiordanArray::new(Series::one(4), Series::one(4)).is_err());
        assert!(RiordanArray::new(Series::one(4), Series::from_ints(&[0, 0, 1], 4)).is_err());
    }
}
