//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] stores its first `order` coefficients; everything at or
//! above `x^order` is unknown, not zero. Binary operations truncate to the
//! minimum order of their inputs. Dividing by `x` loses one order,
//! multiplying by `x` gains one (the new low coefficient is known exactly).

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat_to_string, rational_sqrt, Int, Rat};

/// Default truncation order used by constructors that do not take one.
pub const DEFAULT_ORDER: usize = 32;

/// A formal power series known modulo `x^order`.
///
/// Invariant: `coeffs.len() == order` and `order >= 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Build a series from explicit coefficients. The order is the length.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Series { coeffs }
    }

    /// Convenience constructor from small integers, padded with zeros up to
    /// `order`.
    pub fn from_ints(prefix: &[i64], order: usize) -> Self {
        assert!(order >= prefix.len() && order >= 1);
        let mut coeffs: Vec<Rat> = prefix
            .iter()
            .map(|&n| Rat::from_integer(Int::from(n)))
            .collect();
        coeffs.resize(order, Rat::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_ints(&[], order)
    }

    pub fn one(order: usize) -> Self {
        Series::from_ints(&[1], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Series::from_ints(&[0, 1], order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order];
        coeffs[0] = c;
        Series { coeffs }
    }

    /// The Catalan number generating function `c(x) = (1 - sqrt(1-4x))/(2x)`,
    /// computed by the convolution recurrence.
    pub fn catalan(order: usize) -> Self {
        let mut c = vec![Rat::zero(); order];
        c[0] = Rat::one();
        for n in 1..order {
            let mut sum = Rat::zero();
            for i in 0..n {
                sum += &c[i] * &c[n - 1 - i];
            }
            c[n] = sum;
        }
        Series { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^n`; errors if `n` is at or beyond the order.
    pub fn coeff(&self, n: usize) -> Result<&Rat> {
        self.coeffs.get(n).ok_or(Error::OrderExceeded {
            requested: n,
            order: self.order(),
        })
    }

    /// Restrict to a (smaller or equal) order.
    pub fn truncate(&self, order: usize) -> Series {
        let order = order.min(self.order()).max(1);
        Series {
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Index of the first nonzero coefficient, if any is stored.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True iff every stored coefficient has denominator 1.
    pub fn is_integer_series(&self) -> bool {
        self.coeffs.iter().all(Rat::is_integer)
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let coeffs = (0..order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let coeffs = (0..order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        Series { coeffs }
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Cauchy product truncated to the minimum order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }

    /// Integer power by repeated squaring. `a^0 = 1` at the same order.
    pub fn pow(&self, e: u32) -> Series {
        let mut result = Series::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Quotient `q` with `q * other == self` to the common order.
    /// Requires `other(0) != 0`.
    pub fn div(&self, other: &Series) -> Result<Series> {
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let order = self.order().min(other.order());
        let mut q = vec![Rat::zero(); order];
        for n in 0..order {
            let mut acc = self.coeffs[n].clone();
            for k in 0..n {
                let bi = &other.coeffs[n - k];
                if !bi.is_zero() && !q[k].is_zero() {
                    acc -= &q[k] * bi;
                }
            }
            q[n] = acc / b0;
        }
        Ok(Series { coeffs: q })
    }

    /// Multiplicative inverse `1/self`; requires a unit constant term.
    pub fn invert(&self) -> Result<Series> {
        Series::one(self.order()).div(self)
    }

    /// Multiply by `x^k`. Exact: the order grows by `k`.
    pub fn mul_xpow(&self, k: usize) -> Series {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Series { coeffs }
    }

    /// Divide by `x^k`. Requires the first `k` coefficients to vanish;
    /// the order shrinks by `k`.
    pub fn div_xpow(&self, k: usize) -> Result<Series> {
        if k >= self.order() {
            return Err(Error::OrderExceeded {
                requested: k,
                order: self.order(),
            });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisionByNonUnit);
        }
        Ok(Series {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Substitute `other` into `self`; requires `other(0) = 0`.
    pub fn compose(&self, other: &Series) -> Result<Series> {
        if !other.coeffs[0].is_zero() {
            return Err(Error::CompositionByUnit);
        }
        let order = self.order().min(other.order());
        let inner = other.truncate(order);
        // Horner evaluation from the highest stored coefficient down.
        let mut result = Series::constant(self.coeffs[order - 1].clone(), order);
        for i in (0..order - 1).rev() {
            result = result.mul(&inner);
            result.coeffs[0] += &self.coeffs[i];
        }
        Ok(result)
    }

    /// Formal derivative. Loses one order.
    pub fn derivative(&self) -> Series {
        if self.order() == 1 {
            return Series::zero(1);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(Int::from(i as u64)))
            .collect();
        Series { coeffs }
    }

    /// Compositional inverse of `f` with `f(0) = 0`, `f'(0) != 0`, via the
    /// Lagrange inversion formula `[x^n] rev(f) = (1/n) [x^(n-1)] (x/f)^n`.
    /// The result satisfies `f(rev(f)) == rev(f)(f) == x` to the available
    /// order (which is preserved).
    pub fn reversion(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotReversible);
        }
        if self.order() < 2 || self.coeffs[1].is_zero() {
            return Err(Error::NotReversible);
        }
        let order = self.order();
        // h = x/f, a unit series of order one less.
        let h = Series::one(order - 1).div(&self.div_xpow(1)?)?;
        let mut g = vec![Rat::zero(); order];
        let mut h_pow = h.clone();
        for n in 1..order {
            g[n] = &h_pow.coeffs[n - 1] / Rat::from_integer(Int::from(n as u64));
            if n + 1 < order {
                h_pow = h_pow.mul(&h);
            }
        }
        Ok(Series { coeffs: g })
    }

    /// Square root with positive branch, i.e. `s(0) = +sqrt(a(0))`.
    /// Requires the constant term to be the square of a rational.
    pub fn sqrt(&self) -> Result<Series> {
        let s0 = rational_sqrt(&self.coeffs[0]).ok_or_else(|| Error::NoSquareRoot {
            constant_term: self.coeffs[0].clone(),
        })?;
        if s0.is_zero() {
            // Only the constant-term-1 (more generally, unit) case is
            // needed; roots of series vanishing at 0 are out of scope.
            return Err(Error::NoSquareRoot {
                constant_term: self.coeffs[0].clone(),
            });
        }
        let order = self.order();
        let two_s0 = &s0 + &s0;
        let mut s = vec![Rat::zero(); order];
        s[0] = s0;
        for n in 1..order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &s[k] * &s[n - k];
            }
            s[n] = acc / &two_s0;
        }
        Ok(Series { coeffs: s })
    }

    /// True when the first `n` coefficients agree. `n` may exceed either
    /// order only if the caller accepts the shorter comparison.
    pub fn eq_prefix(&self, other: &Series, n: usize) -> bool {
        let n = n.min(self.order()).min(other.order());
        self.coeffs[..n] == other.coeffs[..n]
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = rat_to_string(&c.abs());
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
