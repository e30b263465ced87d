//! Two classical continued-fraction shapes for power series, with the
//! parity contractions that connect them:
//!
//! * single-level: `1/(1 - a_1 x/(1 - a_2 x/(1 - ...)))`, coefficients
//!   `a_1, a_2, ...`;
//! * two-level: `1/(1 - b_0 x - c_1 x^2/(1 - b_1 x - c_2 x^2/(1 - ...)))`,
//!   coefficients `b_0, b_1, ...` and `c_1, c_2, ...`.
//!
//! Grouping a single-level fraction two levels at a time yields a two-level
//! one; starting the grouping at the first or the second level gives the
//! even and odd contraction respectively.

use std::fmt;

use num_traits::Zero;

use crate::epseq::EpSeq;
use crate::error::{Error, Result};
use crate::fps::Series;
use crate::prodmat::{BidiagonalSpec, ProductionMatrix};
use crate::rational::Rat;

/// Coefficients `a_1, a_2, ...` of a single-level fraction, eventually
/// periodic. Zero coefficients are rejected: they truncate the fraction and
/// break the contraction formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SFraction {
    coeffs: EpSeq<Rat>,
}

impl SFraction {
    pub fn new(coeffs: EpSeq<Rat>) -> Result<Self> {
        let window = coeffs.pre().len() + coeffs.period().len();
        for (index, v) in coeffs.take(window).iter().enumerate() {
            if v.is_zero() {
                return Err(Error::ZeroSpecEntry { index });
            }
        }
        Ok(SFraction { coeffs })
    }

    /// Integer coefficient cycle with no pre-period.
    pub fn from_cycle(period: &[i64]) -> Result<Self> {
        SFraction::new(EpSeq::cycle(
            period.iter().map(|&v| Rat::from_integer(v.into())).collect(),
        )?)
    }

    pub fn coeffs(&self) -> &EpSeq<Rat> {
        &self.coeffs
    }

    /// Expand to a power series. The coefficient of `x^n` only involves
    /// `a_1..a_n`, so a finite tower of depth `order` is exact.
    pub fn series(&self, order: usize) -> Series {
        let mut t = Series::one(order);
        for k in (1..=order).rev() {
            let a = self.coeffs.get(k - 1);
            let denom = Series::one(order).sub(&t.mul_xpow(1).truncate(order).scale(a));
            t = Series::one(order)
                .div(&denom)
                .expect("denominator has constant term 1");
        }
        t
    }

    /// The same coefficients viewed as subdiagonal weights for the
    /// bidiagonal inverse construction; that construction's first column
    /// reproduces [`Self::series`].
    pub fn bidiagonal_spec(&self) -> Result<BidiagonalSpec> {
        BidiagonalSpec::new(self.coeffs.clone())
    }
}

impl fmt::Display for SFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a: {}", self.coeffs)
    }
}

/// Coefficients of a two-level fraction: `b` holds `b_0, b_1, ...`, `c`
/// holds `c_1, c_2, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFraction {
    b: EpSeq<Rat>,
    c: EpSeq<Rat>,
}

impl JFraction {
    pub fn new(b: EpSeq<Rat>, c: EpSeq<Rat>) -> Self {
        JFraction { b, c }
    }

    pub fn b(&self) -> &EpSeq<Rat> {
        &self.b
    }

    pub fn c(&self) -> &EpSeq<Rat> {
        &self.c
    }

    /// Expand to a power series; depth `order` is exact as above.
    pub fn series(&self, order: usize) -> Series {
        let mut t = Series::one(order);
        for k in (0..=order).rev() {
            let line = Series::x(order).scale(self.b.get(k));
            let tail = t.mul_xpow(2).truncate(order).scale(self.c.get(k));
            let denom = Series::one(order).sub(&line).sub(&tail);
            t = Series::one(order)
                .div(&denom)
                .expect("denominator has constant term 1");
        }
        t
    }

    /// The tridiagonal production matrix whose triangle has this fraction's
    /// series as first column: diagonal `b_0..`, subdiagonal `c_1..`,
    /// superdiagonal 1.
    pub fn tridiagonal(&self, size: usize) -> Result<ProductionMatrix> {
        let diag = self.b.take(size);
        let sub = self.c.take(size.saturating_sub(1));
        ProductionMatrix::tridiagonal(&diag, &sub)
    }
}

impl fmt::Display for JFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b: {}; c: {}", self.b, self.c)
    }
}

/// Smallest shift that maps the cycle onto itself when indices move in
/// steps of two.
fn contracted_period(len: usize) -> usize {
    len / num_integer::gcd(2, len)
}

/// Group the levels in pairs starting at level 1: `b_0 = a_1`,
/// `b_n = a_{2n} + a_{2n+1}`, `c_n = a_{2n-1} a_{2n}`. The result has the
/// same series.
pub fn contract_even(s: &SFraction) -> JFraction {
    let a = s.coeffs();
    let pre_len = a.pre().len() + 2;
    let period = contracted_period(a.period().len());
    let b_at = |n: usize| {
        if n == 0 {
            a.get(0).clone()
        } else {
            a.get(2 * n - 1) + a.get(2 * n)
        }
    };
    let c_at = |i: usize| a.get(2 * i) * a.get(2 * i + 1);
    JFraction {
        b: seq_from(b_at, pre_len, period),
        c: seq_from(c_at, pre_len, period),
    }
}

/// Group the levels in pairs starting at level 2: `b_n = a_{2n+1} + a_{2n+2}`,
/// `c_n = a_{2n} a_{2n+1}`. The resulting series `h` satisfies
/// `s.series() = 1 + a_1 x h(x)`.
pub fn contract_odd(s: &SFraction) -> JFraction {
    let a = s.coeffs();
    let pre_len = a.pre().len() + 2;
    let period = contracted_period(a.period().len());
    let b_at = |n: usize| a.get(2 * n) + a.get(2 * n + 1);
    let c_at = |i: usize| a.get(2 * i + 1) * a.get(2 * i + 2);
    JFraction {
        b: seq_from(b_at, pre_len, period),
        c: seq_from(c_at, pre_len, period),
    }
}

fn seq_from(f: impl Fn(usize) -> Rat, pre_len: usize, period: usize) -> EpSeq<Rat> {
    let pre = (0..pre_len).map(&f).collect();
    let cycle = (pre_len..pre_len + period).map(&f).collect();
    EpSeq::new(pre, cycle)
        .expect("period length is at least 1")
        .normalize()
}
