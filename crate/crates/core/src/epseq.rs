//! Eventually periodic sequences: a finite pre-period followed by a cycle.
//!
//! Continued-fraction coefficient lists and production-matrix diagonals are
//! often of this shape ("3, 4, 3, 4, ..." or "1 then 2, 2, 2, ...").

use std::fmt;

use crate::error::{Error, Result};

/// An infinite sequence `pre[0], .., pre[p-1], period[0], .., period[l-1],
/// period[0], ..` with a nonempty period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpSeq<T> {
    pre: Vec<T>,
    period: Vec<T>,
}

impl<T: Clone> EpSeq<T> {
    pub fn new(pre: Vec<T>, period: Vec<T>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(EpSeq { pre, period })
    }

    /// A purely periodic sequence (empty pre-period).
    pub fn cycle(period: Vec<T>) -> Result<Self> {
        EpSeq::new(Vec::new(), period)
    }

    /// A constant sequence.
    pub fn constant(value: T) -> Self {
        EpSeq {
            pre: Vec::new(),
            period: vec![value],
        }
    }

    pub fn pre(&self) -> &[T] {
        &self.pre
    }

    pub fn period(&self) -> &[T] {
        &self.period
    }

    pub fn get(&self, n: usize) -> &T {
        if n < self.pre.len() {
            &self.pre[n]
        } else {
            &self.period[(n - self.pre.len()) % self.period.len()]
        }
    }

    /// The first `n` terms, materialized.
    pub fn take(&self, n: usize) -> Vec<T> {
        (0..n).map(|i| self.get(i).clone()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> + '_ {
        (0..).map(move |i| self.get(i))
    }

    /// Drop the first `k` terms.
    pub fn shift(&self, k: usize) -> EpSeq<T> {
        if k <= self.pre.len() {
            EpSeq {
                pre: self.pre[k..].to_vec(),
                period: self.period.clone(),
            }
        } else {
            let r = (k - self.pre.len()) % self.period.len();
            let mut period = self.period.clone();
            period.rotate_left(r);
            EpSeq {
                pre: Vec::new(),
                period,
            }
        }
    }
}

impl<T: Clone + PartialEq> EpSeq<T> {
    /// Canonical form: shrink the period to its primitive length and pull
    /// trailing pre-period elements into the cycle when they match it.
    pub fn normalize(&self) -> EpSeq<T> {
        // Primitive period: smallest divisor d of len such that the cycle
        // is d-periodic.
        let len = self.period.len();
        let mut d = len;
        for cand in 1..=len / 2 {
            if len % cand != 0 {
                continue;
            }
            if (cand..len).all(|i| self.period[i] == self.period[i % cand]) {
                d = cand;
                break;
            }
        }
        let mut pre = self.pre.clone();
        let mut period: Vec<T> = self.period[..d].to_vec();
        // Rotate the last pre element into the cycle while it equals the
        // cycle's last element.
        while let Some(last) = pre.last() {
            if *last == period[d - 1] {
                pre.pop();
                period.rotate_right(1);
            } else {
                break;
            }
        }
        EpSeq { pre, period }
    }
}

impl<T: fmt::Display> fmt::Display for EpSeq<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |items: &[T]| {
            items
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        if self.pre.is_empty() {
            write!(f, "({})*", join(&self.period))
        } else {
            write!(f, "{}, ({})*", join(&self.pre), join(&self.period))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_walks_pre_then_cycle() {
        let s = EpSeq::new(vec![9], vec![2, 3, 5]).unwrap();
        assert_eq!(s.take(8), vec![9, 2, 3, 5, 2, 3, 5, 2]);
        assert_eq!(*s.get(0), 9);
        assert_eq!(*s.get(100), *s.get(100 + 3));
    }

    #[test]
    fn pure_cycle_and_constant() {
        let c = EpSeq::cycle(vec![3, 4]).unwrap();
        assert_eq!(c.take(5), vec![3, 4, 3, 4, 3]);
        assert_eq!(EpSeq::constant(7).take(3), vec![7, 7, 7]);
        assert_eq!(EpSeq::<i64>::cycle(vec![]), Err(Error::EmptyPeriod));
    }

    #[test]
    fn normalize_shrinks_and_absorbs() {
        let s = EpSeq::new(vec![1, 2], vec![2, 2]).unwrap().normalize();
        assert_eq!(s.pre(), &[1]);
        assert_eq!(s.period(), &[2]);
        let t = EpSeq::cycle(vec![3, 4, 3, 4]).unwrap().normalize();
        assert_eq!(t.period(), &[3, 4]);
        // Absorbing rotates the cycle presentation but not the sequence.
        let u = EpSeq::new(vec![5, 3], vec![4, 3]).unwrap();
        let n = u.normalize();
        assert_eq!(n.take(7), u.take(7));
        assert_eq!(n.pre(), &[5]);
    }

    #[test]
    fn shift_drops_leading_terms() {
        let s = EpSeq::new(vec![9, 8], vec![1, 2, 3]).unwrap();
        assert_eq!(s.shift(1).take(6), vec![8, 1, 2, 3, 1, 2]);
        assert_eq!(s.shift(4).take(4), vec![3, 1, 2, 3]);
        assert_eq!(s.shift(2 + 3 * 10).take(3), vec![1, 2, 3]);
    }

    #[test]
    fn display_round_trips_visually() {
        let s = EpSeq::new(vec![1], vec![2, 3]).unwrap();
        assert_eq!(s.to_string(), "1, (2, 3)*");
        assert_eq!(EpSeq::cycle(vec![4]).unwrap().to_string(), "(4)*");
    }
}
