//! Integer intervals `[a, b]` with equal-parity endpoints, the relations between
//! them, and admissible sequences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A closed interval `[left, right]` of positive integers.
///
/// Intervals are ordered lexicographically by `(left, right)`; every ordered
/// collection in this crate relies on that.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u32; 2]", into = "[u32; 2]")]
pub struct Interval {
    left: u32,
    right: u32,
}

impl Interval {
    /// Any interval with `1 <= left <= right`. Parity is not checked here.
    pub fn new(left: u32, right: u32) -> Result<Self> {
        if left == 0 {
            return Err(Error::InvalidInterval {
                left,
                right,
                reason: "left endpoint must be at least 1",
            });
        }
        if left > right {
            return Err(Error::InvalidInterval {
                left,
                right,
                reason: "left endpoint exceeds right endpoint",
            });
        }
        Ok(Interval { left, right })
    }

    /// An interval whose endpoints share a parity.
    pub fn parity(left: u32, right: u32) -> Result<Self> {
        let iv = Interval::new(left, right)?;
        if !iv.is_equal_parity() {
            return Err(Error::InvalidInterval {
                left,
                right,
                reason: "endpoints have different parity",
            });
        }
        Ok(iv)
    }

    /// `[u, u]`.
    pub fn singleton(u: u32) -> Result<Self> {
        Interval::new(u, u)
    }

    pub fn left(self) -> u32 {
        self.left
    }

    pub fn right(self) -> u32 {
        self.right
    }

    /// Number of points.
    pub fn width(self) -> u32 {
        self.right - self.left + 1
    }

    pub fn is_singleton(self) -> bool {
        self.left == self.right
    }

    pub fn is_equal_parity(self) -> bool {
        self.left % 2 == self.right % 2
    }

    pub fn contains_point(self, x: u32) -> bool {
        self.left <= x && x <= self.right
    }

    /// Set inclusion `self ⊆ other`.
    pub fn is_subset_of(self, other: Interval) -> bool {
        other.left <= self.left && self.right <= other.right
    }

    /// Strict nesting: `other.left < self.left` and `self.right < other.right`.
    pub fn is_nested_in(self, other: Interval) -> bool {
        other.left < self.left && self.right < other.right
    }

    /// At least one integer lies strictly between the two intervals.
    pub fn is_apart(self, other: Interval) -> bool {
        other.left >= self.right + 2 || self.left >= other.right + 2
    }

    /// Checks membership in the equal-parity intervals of `[1, d]`.
    pub fn check_within(self, d: u32) -> Result<()> {
        if self.right > d {
            return Err(Error::InvalidInterval {
                left: self.left,
                right: self.right,
                reason: "right endpoint exceeds D",
            });
        }
        if !self.is_equal_parity() {
            return Err(Error::InvalidInterval {
                left: self.left,
                right: self.right,
                reason: "endpoints have different parity",
            });
        }
        Ok(())
    }

    /// Points of the interval with parity opposite to its endpoints:
    /// `left+1, left+3, ..., right-1`. Empty for singletons and for
    /// mixed-parity intervals.
    pub fn even_interior(self) -> impl Iterator<Item = u32> {
        let end = if self.is_equal_parity() {
            self.right
        } else {
            self.left
        };
        (self.left + 1..end).step_by(2)
    }

    /// The points of the interval as a `u64` mask, bit `i - 1` for point `i`.
    pub(crate) fn mask(self) -> u64 {
        let width = self.width();
        let ones = if width >= 64 {
            u64::MAX
        } else {
            (1u64 << width) - 1
        };
        ones << (self.left - 1)
    }

    /// Table rendering: all points written out without separators,
    /// so `[2,4]` becomes `234`.
    pub fn digits(self) -> String {
        (self.left..=self.right).map(|x| x.to_string()).collect()
    }
}

/// Parity class of an equal-parity interval: 1 for odd endpoints, 0 for even.
pub fn kappa(iv: Interval) -> Result<u8> {
    if !iv.is_equal_parity() {
        return Err(Error::InvalidInterval {
            left: iv.left,
            right: iv.right,
            reason: "endpoints have different parity",
        });
    }
    Ok((iv.left % 2) as u8)
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.left, self.right)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.left, self.right)
    }
}

impl TryFrom<[u32; 2]> for Interval {
    type Error = Error;

    fn try_from([a, b]: [u32; 2]) -> Result<Self> {
        Interval::new(a, b)
    }
}

impl From<Interval> for [u32; 2] {
    fn from(iv: Interval) -> Self {
        [iv.left, iv.right]
    }
}

/// How two intervals sit relative to each other. Exactly one tag applies to
/// any ordered pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Equal,
    /// The first interval is strictly nested in the second.
    NestedIn,
    /// The second interval is strictly nested in the first.
    Contains,
    /// Separated by a gap of at least one integer.
    Apart,
    /// Overlapping or adjacent without strict nesting.
    Entangled,
}

pub fn relate(i: Interval, j: Interval) -> Relation {
    if i == j {
        Relation::Equal
    } else if i.is_nested_in(j) {
        Relation::NestedIn
    } else if j.is_nested_in(i) {
        Relation::Contains
    } else if i.is_apart(j) {
        Relation::Apart
    } else {
        Relation::Entangled
    }
}

/// The pairwise compatibility condition on members of a basis set: equal,
/// apart, or strictly nested one way or the other.
pub fn compatible(i: Interval, j: Interval) -> bool {
    relate(i, j) != Relation::Entangled
}

/// Returns the common parity class of `seq` if it is admissible: nonempty,
/// all endpoints of one parity, and each interval starting exactly two after
/// the previous one ends.
pub fn admissible_kappa(seq: &[Interval]) -> Option<u8> {
    let first = seq.first()?;
    let parity = first.left % 2;
    if seq
        .iter()
        .any(|iv| iv.left % 2 != parity || iv.right % 2 != parity)
    {
        return None;
    }
    if seq.windows(2).any(|w| w[1].left != w[0].right + 2) {
        return None;
    }
    Some(parity as u8)
}

/// A run of intervals `[a1,b1], ..., [ar,br]` with `a(i+1) - b(i) = 2` and a
/// shared endpoint parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct AdmissibleSequence(Vec<Interval>);

impl AdmissibleSequence {
    pub fn new(items: Vec<Interval>) -> Result<Self> {
        match admissible_kappa(&items) {
            Some(_) => Ok(AdmissibleSequence(items)),
            None => Err(Error::InvalidInput(format!(
                "{items:?} is not an admissible sequence"
            ))),
        }
    }

    pub fn kappa(&self) -> u8 {
        (self.0[0].left % 2) as u8
    }

    pub fn items(&self) -> &[Interval] {
        &self.0
    }

    pub fn first(&self) -> Interval {
        self.0[0]
    }

    pub fn last(&self) -> Interval {
        self.0[self.0.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `[first.left - 1, last.right + 1]`.
    pub fn hull_widened(&self) -> Option<Interval> {
        let left = self.first().left.checked_sub(1)?;
        Interval::new(left, self.last().right + 1).ok()
    }

    pub fn into_inner(self) -> Vec<Interval> {
        self.0
    }
}

/// All equal-parity intervals in `[1, d]`, in lexicographic order.
pub fn parity_intervals(d: u32) -> Vec<Interval> {
    let mut out = Vec::new();
    for a in 1..=d {
        for b in (a..=d).step_by(2) {
            out.push(Interval { left: a, right: b });
        }
    }
    out
}

/// The odd-endpoint intervals in `[1, d]`, in lexicographic order.
pub fn odd_intervals(d: u32) -> Vec<Interval> {
    parity_intervals(d)
        .into_iter()
        .filter(|iv| iv.left % 2 == 1)
        .collect()
}
