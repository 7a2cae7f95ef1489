//! Integer partitions with explicit length.
//!
//! Highest weights of `GL(N)` are weakly decreasing integer vectors of length
//! `N`. Parts may be negative: twisting by the `c`-th power of the
//! determinant character shifts every part by `c`, and duals show up as
//! reversed negated vectors. Length is significant — `(3, 1)` and `(3, 1, 0)`
//! index modules of different groups — so cross-length comparison goes
//! through [`Partition::eq_padded`] at a caller-chosen length.
//!
//! For non-negative vectors the combinatorial operations (conjugate shape,
//! Frobenius hook coordinates) are available as well; those reject negative
//! parts.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing vector of integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<i32>,
}

impl Partition {
    /// Wraps `parts`, rejecting vectors that are not weakly decreasing.
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn new_unchecked(parts: Vec<i32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition { parts }
    }

    /// The zero weight of the given length.
    pub fn zeros(len: usize) -> Self {
        Partition { parts: vec![0; len] }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `row`, reading 0 past the stored length.
    pub fn part(&self, row: usize) -> i32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// First part, or 0 when empty.
    pub fn first(&self) -> i32 {
        self.part(0)
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().map(|&p| i64::from(p)).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.parts.last().is_none_or(|&p| p >= 0)
    }

    /// Number of strictly positive parts.
    pub fn positive_rows(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// Copy with trailing zero parts dropped.
    pub fn trimmed(&self) -> Partition {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Copy extended with zeros to length `len`.
    ///
    /// Fails when the vector carries more than `len` nonzero parts, or ends in
    /// a negative part (appending zeros would break monotonicity).
    pub fn padded(&self, len: usize) -> Result<Partition> {
        if self.parts.len() > len {
            if self.parts[len..].iter().all(|&p| p == 0) {
                return Ok(Partition {
                    parts: self.parts[..len].to_vec(),
                });
            }
            return Err(Error::RankMismatch(format!(
                "{self} does not fit in {len} rows"
            )));
        }
        if self.parts.len() < len && !self.is_nonnegative() {
            return Err(Error::InvalidPartition(format!(
                "cannot zero-pad {self}: last part is negative"
            )));
        }
        let mut parts = self.parts.clone();
        parts.resize(len, 0);
        Ok(Partition { parts })
    }

    /// Equality after padding both sides to length `len`.
    pub fn eq_padded(&self, other: &Partition, len: usize) -> Result<bool> {
        Ok(self.padded(len)? == other.padded(len)?)
    }

    /// Adds `c` to every part (tensoring with `det^c`).
    pub fn det_twist(&self, c: i32) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| p + c).collect(),
        }
    }

    /// Conjugate (transposed) shape. Requires non-negative parts; trailing
    /// zeros do not survive transposition.
    pub fn conjugate(&self) -> Result<Partition> {
        if !self.is_nonnegative() {
            return Err(Error::InvalidPartition(format!(
                "conjugate needs non-negative parts, got {self}"
            )));
        }
        let cols = self.first() as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as i32)
            .collect();
        Ok(Partition { parts })
    }

    /// Frobenius coordinates: with `t` diagonal boxes, `arms[i] = p[i] -
    /// (i+1)` and `legs[i] = conjugate(p)[i] - (i+1)` for `i < t`. Both
    /// vectors are strictly decreasing and non-negative.
    pub fn frobenius(&self) -> Result<Frobenius> {
        let conj = self.conjugate()?;
        let diag = self
            .parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i as i32)
            .count();
        let arms = (0..diag).map(|i| self.parts[i] - (i as i32 + 1)).collect();
        let legs = (0..diag).map(|i| conj.parts[i] - (i as i32 + 1)).collect();
        Ok(Frobenius { arms, legs })
    }

    /// Rebuilds the unique shape with the given hook coordinates.
    pub fn from_frobenius(arms: &[i32], legs: &[i32]) -> Result<Partition> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidPartition(format!(
                "hook coordinate lengths differ: {} arms, {} legs",
                arms.len(),
                legs.len()
            )));
        }
        for v in [arms, legs] {
            if v.windows(2).any(|w| w[0] <= w[1]) || v.last().is_some_and(|&p| p < 0) {
                return Err(Error::InvalidPartition(format!(
                    "hook coordinates must be strictly decreasing and non-negative, got {v:?}"
                )));
            }
        }
        let t = arms.len();
        if t == 0 {
            return Ok(Partition::empty());
        }
        let rows = legs[0] as usize + 1;
        let mut parts = vec![0i32; rows];
        for i in 0..t {
            parts[i] = arms[i] + i as i32 + 1;
        }
        for (i, part) in parts.iter_mut().enumerate().take(rows).skip(t) {
            *part = (0..t).filter(|&j| legs[j] as usize + j >= i).count() as i32;
        }
        let shape = Partition::new(parts)?;
        debug_assert_eq!(
            shape.frobenius().map(|f| (f.arms, f.legs)).ok(),
            Some((arms.to_vec(), legs.to_vec()))
        );
        Ok(shape)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses a comma-separated list such as `3,1` or `0,-2`. Empty or
    /// all-whitespace input is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i32>()
                    .map_err(|e| Error::Parse(format!("bad part {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Frobenius hook coordinates of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Frobenius {
    pub arms: Vec<i32>,
    pub legs: Vec<i32>,
}

impl Frobenius {
    /// Number of diagonal boxes.
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn reconstruct(&self) -> Result<Partition> {
        Partition::from_frobenius(&self.arms, &self.legs)
    }
}

/// All weakly decreasing vectors of length `len` with parts in `lo..=hi`.
/// Ordered lexicographically from all-`hi` downward.
pub fn weakly_decreasing(len: usize, lo: i32, hi: i32) -> Vec<Partition> {
    fn rec(len: usize, lo: i32, hi: i32, cur: &mut Vec<i32>, out: &mut Vec<Partition>) {
        if cur.len() == len {
            out.push(Partition::new_unchecked(cur.clone()));
            return;
        }
        let top = cur.last().copied().unwrap_or(hi);
        for p in (lo..=top).rev() {
            cur.push(p);
            rec(len, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        rec(len, lo, hi, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions of `weight` with at most `max_rows` parts, each at most
/// `max_part`. Trailing zeros are trimmed.
pub fn partitions_of(weight: u32, max_rows: usize, max_part: u32) -> Vec<Partition> {
    fn rec(rem: u32, rows_left: usize, cap: u32, cur: &mut Vec<i32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::new_unchecked(cur.clone()));
            return;
        }
        if rows_left == 0 || cap == 0 {
            return;
        }
        let top = cap.min(rem);
        for p in (1..=top).rev() {
            cur.push(p as i32);
            rec(rem - p, rows_left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, max_rows, max_part, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![3, 3, 4]).is_err());
        assert!(Partition::new(vec![0, -1, 0]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate().unwrap(), p(&[2, 1, 1]));
        assert_eq!(p(&[4, 4]).conjugate().unwrap(), p(&[2, 2, 2, 2]));
        assert_eq!(p(&[1, 1, 1]).conjugate().unwrap(), p(&[3]));
        assert_eq!(Partition::empty().conjugate().unwrap(), Partition::empty());
        assert_eq!(Partition::zeros(4).conjugate().unwrap(), Partition::empty());
        assert!(p(&[0, -2]).conjugate().is_err());
    }

    #[test]
    fn conjugate_is_an_involution() {
        for w in 0..=9u32 {
            for lam in partitions_of(w, 5, w.max(1)) {
                let back = lam.conjugate().unwrap().conjugate().unwrap();
                assert_eq!(back, lam, "w={w}");
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let f = p(&[3, 3]).frobenius().unwrap();
        assert_eq!(f.arms, vec![2, 1]);
        assert_eq!(f.legs, vec![1, 0]);
        let f = p(&[3, 1]).frobenius().unwrap();
        assert_eq!(f.arms, vec![2]);
        assert_eq!(f.legs, vec![1]);
        assert_eq!(Partition::empty().frobenius().unwrap().rank(), 0);
    }

    #[test]
    fn frobenius_roundtrip() {
        for w in 0..=10u32 {
            for lam in partitions_of(w, 6, 10) {
                let f = lam.frobenius().unwrap();
                assert_eq!(f.reconstruct().unwrap(), lam);
            }
        }
    }

    #[test]
    fn from_frobenius_rejects_bad_coordinates() {
        assert!(Partition::from_frobenius(&[2, 2], &[1, 0]).is_err());
        assert!(Partition::from_frobenius(&[2], &[1, 0]).is_err());
        assert!(Partition::from_frobenius(&[2, -1], &[1, 0]).is_err());
    }

    #[test]
    fn det_twist_shifts_every_part() {
        assert_eq!(p(&[3, 1]).det_twist(-2), p(&[1, -1]));
        assert_eq!(p(&[1, -1]).det_twist(2), p(&[3, 1]));
        assert_eq!(p(&[2, 0]).det_twist(1).weight(), 4);
    }

    #[test]
    fn padding_and_equality() {
        assert!(p(&[3, 1]).eq_padded(&p(&[3, 1, 0]), 3).unwrap());
        assert!(!p(&[3, 1]).eq_padded(&p(&[3, 1, 1]), 3).unwrap());
        assert_eq!(p(&[3, 1, 0, 0]).padded(2).unwrap(), p(&[3, 1]));
        assert!(p(&[3, 1, 1]).padded(2).is_err());
        assert!(p(&[0, -2]).padded(4).is_err());
        assert_eq!(p(&[0, -2]).padded(2).unwrap(), p(&[0, -2]));
    }

    #[test]
    fn parse_and_display() {
        let lam: Partition = "3,1".parse().unwrap();
        assert_eq!(lam, p(&[3, 1]));
        assert_eq!(lam.to_string(), "3,1");
        let neg: Partition = "0, -2".parse().unwrap();
        assert_eq!(neg, p(&[0, -2]));
        let empty: Partition = "".parse().unwrap();
        assert!(empty.is_empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_helpers() {
        // weakly decreasing length-2 vectors in [-1, 1]: 6 of them
        let all = weakly_decreasing(2, -1, 1);
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|q| q.parts().windows(2).all(|w| w[0] >= w[1])));
        // partitions of 5 with at most 2 rows: (5), (4,1), (3,2)
        let of5 = partitions_of(5, 2, 5);
        assert_eq!(of5.len(), 3);
        // partitions of 6, parts <= 3, any rows: (3,3), (3,2,1), (3,1,1,1),
        // (2,2,2), (2,2,1,1), (2,1,1,1,1), (1^6)
        assert_eq!(partitions_of(6, 6, 3).len(), 7);
    }

    #[test]
    fn weight_and_rows() {
        assert_eq!(p(&[3, 1]).weight(), 4);
        assert_eq!(p(&[0, -2]).weight(), -2);
        assert_eq!(p(&[3, 1, 0]).positive_rows(), 2);
        assert_eq!(p(&[3, 1, 0]).trimmed(), p(&[3, 1]));
    }
}
