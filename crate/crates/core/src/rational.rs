//! Exact number types and small helpers shared across the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer used for all matrix entries.
pub type Int = BigInt;

/// Arbitrary-precision rational used for all series coefficients.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Exact square root of a rational, if it is the square of a rational.
/// The positive root is returned.
pub fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_zero() {
        return Some(Rat::zero());
    }
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Render a rational the way a person would write it: `3`, `-7`, `1/2`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `-3`, `42` or `5/2` into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: Int = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Parse a comma-separated list of rationals: `2,3,5` or `1/2, -3`.
pub fn parse_rat_list(s: &str) -> Option<Vec<Rat>> {
    let s = s.trim();
    if s.is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(parse_rat).collect()
}

/// Parse a comma-separated list of integers.
pub fn parse_int_list(s: &str) -> Option<Vec<Int>> {
    let s = s.trim();
    if s.is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse().ok()).collect()
}

/// True if every rational in the slice has denominator 1.
pub fn all_integers(coeffs: &[Rat]) -> bool {
    coeffs.iter().all(Rat::is_integer)
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn zero() -> Rat {
    Rat::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_perfect_squares() {
        assert_eq!(rational_sqrt(&rat_int(1)), Some(rat_int(1)));
        assert_eq!(rational_sqrt(&rat_int(4)), Some(rat_int(2)));
        assert_eq!(rational_sqrt(&rat(9, 49)), Some(rat(3, 7)));
        assert_eq!(rational_sqrt(&rat_int(0)), Some(rat_int(0)));
    }

    #[test]
    fn sqrt_rejects_non_squares() {
        assert_eq!(rational_sqrt(&rat_int(2)), None);
        assert_eq!(rational_sqrt(&rat(1, 2)), None);
        assert_eq!(rational_sqrt(&rat_int(-4)), None);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rat("5/2"), Some(rat(5, 2)));
        assert_eq!(parse_rat("-3"), Some(rat_int(-3)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat_list("2, 3,5"), Some(vec![rat_int(2), rat_int(3), rat_int(5)]));
        assert_eq!(parse_rat_list(""), Some(vec![]));
        assert_eq!(parse_rat_list("2,,3"), None);
    }
}
