//! Sets of equal-parity intervals satisfying the nesting axiom (P0) and the
//! covering axiom (P1), together with their reduction, saturation and
//! enumeration.
//!
//! A set `B` of equal-parity intervals in `[1, D]` is a *basis set* when
//!
//! * (P0) any two members are equal, apart, or strictly nested, and
//! * (P1) for every member `I` and every point `x` of its even interior
//!   there is a member `I'` strictly nested in `I` with `x ∈ I'`.
//!
//! The *reduced* basis sets are those whose maximal members all have odd
//! endpoints; the *half* basis sets are those of the largest possible size
//! `D/2`. Both families are counted by `Cat((D+2)/2)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::intervals::{
    admissible_kappa, compatible, parity_intervals, AdmissibleSequence, Interval,
};
use crate::MAX_D;

/// Largest `D` the enumerators accept unless told otherwise.
pub const DEFAULT_CEILING: u32 = 16;

/// Largest `D` for which the power-set oracle runs (`2^20` subsets).
pub const BRUTE_FORCE_LIMIT: u32 = 8;

/// A finite set of equal-parity intervals inside `[1, D]`, `D` even.
///
/// Membership in the basis sets is *not* implied by construction; use
/// [`validate`] or [`is_basis_set`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawIntervalSet", into = "RawIntervalSet")]
pub struct IntervalSet {
    d: u32,
    intervals: Vec<Interval>,
}

#[derive(Serialize, Deserialize)]
struct RawIntervalSet {
    #[serde(rename = "D")]
    d: u32,
    intervals: Vec<Interval>,
}

impl TryFrom<RawIntervalSet> for IntervalSet {
    type Error = Error;

    fn try_from(raw: RawIntervalSet) -> Result<Self> {
        IntervalSet::new(raw.d, raw.intervals)
    }
}

impl From<IntervalSet> for RawIntervalSet {
    fn from(set: IntervalSet) -> Self {
        RawIntervalSet {
            d: set.d,
            intervals: set.intervals,
        }
    }
}

pub(crate) fn check_ambient(d: u32) -> Result<()> {
    if !d.is_multiple_of(2) {
        return Err(invalid(format!("D = {d} must be even")));
    }
    if d > MAX_D {
        return Err(invalid(format!("D = {d} exceeds the hard limit {MAX_D}")));
    }
    Ok(())
}

impl IntervalSet {
    /// Sorts and deduplicates `intervals`; fails if `d` is odd or any member
    /// is not an equal-parity interval of `[1, d]`.
    pub fn new(d: u32, intervals: impl IntoIterator<Item = Interval>) -> Result<Self> {
        check_ambient(d)?;
        let mut intervals: Vec<Interval> = intervals.into_iter().collect();
        for iv in &intervals {
            iv.check_within(d)?;
        }
        intervals.sort_unstable();
        intervals.dedup();
        Ok(IntervalSet { d, intervals })
    }

    /// Convenience constructor from `(left, right)` pairs.
    pub fn from_pairs(d: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        let ivs = pairs
            .iter()
            .map(|&(a, b)| Interval::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        IntervalSet::new(d, ivs)
    }

    pub fn empty(d: u32) -> Result<Self> {
        IntervalSet::new(d, [])
    }

    /// Internal constructor for intervals already known to be valid.
    pub(crate) fn from_sorted_unchecked(d: u32, mut intervals: Vec<Interval>) -> Self {
        intervals.sort_unstable();
        intervals.dedup();
        IntervalSet { d, intervals }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Members in lexicographic order.
    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, iv: Interval) -> bool {
        self.intervals.binary_search(&iv).is_ok()
    }

    /// Disjoint union with `extra`.
    pub fn with(&self, extra: &[Interval]) -> IntervalSet {
        let mut all = self.intervals.clone();
        all.extend_from_slice(extra);
        IntervalSet::from_sorted_unchecked(self.d, all)
    }

    /// Number of members containing `iv` (including `iv` itself).
    fn multiplicity_unchecked(&self, iv: Interval) -> usize {
        self.intervals
            .iter()
            .filter(|m| iv.is_subset_of(**m))
            .count()
    }

    /// Members ordered by right endpoint, the order used in the printed
    /// tables. Right endpoints of a basis set are pairwise distinct.
    pub fn by_right_endpoint(&self) -> Vec<Interval> {
        let mut v = self.intervals.clone();
        v.sort_by_key(|iv| (iv.right(), iv.left()));
        v
    }
}

/// `{3,234}` style: members by right endpoint, each as its digit string;
/// the empty set prints as `{∅}`.
impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("{∅}");
        }
        let parts: Vec<String> = self
            .by_right_endpoint()
            .iter()
            .map(|iv| iv.digits())
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}{:?}", self.d, self.intervals)
    }
}

/// Outcome of checking the two basis-set axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    /// A pair of members that is neither equal, apart, nor nested.
    ViolatesP0(Interval, Interval),
    /// A member and an even-interior point with no nested member covering it.
    ViolatesP1(Interval, u32),
}

impl Verdict {
    pub fn is_ok(self) -> bool {
        self == Verdict::Ok
    }
}

/// Checks (P0) then (P1), reporting the lexicographically least witness of
/// the first axiom that fails.
pub fn validate(set: &IntervalSet) -> Verdict {
    let ivs = &set.intervals;
    for (i, &x) in ivs.iter().enumerate() {
        for &y in &ivs[i + 1..] {
            if !compatible(x, y) {
                return Verdict::ViolatesP0(x, y);
            }
        }
    }
    for &iv in ivs {
        for x in iv.even_interior() {
            let covered = ivs
                .iter()
                .any(|other| other.contains_point(x) && other.is_nested_in(iv));
            if !covered {
                return Verdict::ViolatesP1(iv, x);
            }
        }
    }
    Verdict::Ok
}

pub fn is_basis_set(set: &IntervalSet) -> bool {
    validate(set).is_ok()
}

pub(crate) fn require_basis_set(set: &IntervalSet) -> Result<()> {
    match validate(set) {
        Verdict::Ok => Ok(()),
        Verdict::ViolatesP0(x, y) => Err(invalid(format!(
            "{set:?} is not a basis set: {x} and {y} are entangled"
        ))),
        Verdict::ViolatesP1(iv, x) => Err(invalid(format!(
            "{set:?} is not a basis set: point {x} of {iv} has no nested cover"
        ))),
    }
}

/// True for basis sets whose maximal members all have odd endpoints.
pub fn is_reduced(set: &IntervalSet) -> bool {
    is_basis_set(set)
        && set
            .intervals
            .iter()
            .all(|&iv| iv.left() % 2 == 1 || set.multiplicity_unchecked(iv) > 1)
}

pub(crate) fn require_reduced(set: &IntervalSet) -> Result<()> {
    require_basis_set(set)?;
    if !is_reduced(set) {
        return Err(invalid(format!(
            "{set:?} has a maximal member with even endpoints"
        )));
    }
    Ok(())
}

/// Number of members of `set` that contain `iv`.
pub fn multiplicity(iv: Interval, set: &IntervalSet) -> Result<usize> {
    if !set.contains(iv) {
        return Err(Error::NotAMember(iv));
    }
    require_basis_set(set)?;
    Ok(set.multiplicity_unchecked(iv))
}

/// The members one level below `iv`: strictly nested in it, with
/// multiplicity one higher. They always form an admissible sequence running
/// from `left + 1` to `right - 1`, of the opposite parity class.
pub fn descent_chain(iv: Interval, set: &IntervalSet) -> Result<AdmissibleSequence> {
    if !set.contains(iv) {
        return Err(Error::NotAMember(iv));
    }
    if iv.is_singleton() {
        return Err(Error::EmptyInterior(iv));
    }
    require_basis_set(set)?;
    let level = set.multiplicity_unchecked(iv) + 1;
    let children: Vec<Interval> = set
        .intervals
        .iter()
        .copied()
        .filter(|c| c.is_nested_in(iv) && set.multiplicity_unchecked(*c) == level)
        .collect();
    AdmissibleSequence::new(children)
        .map_err(|e| Error::InternalConsistency(format!("descent chain of {iv}: {e}")))
}

/// Removes the maximal members with even endpoints.
pub fn reduce(set: &IntervalSet) -> Result<IntervalSet> {
    require_basis_set(set)?;
    Ok(reduce_unchecked(set))
}

pub(crate) fn reduce_unchecked(set: &IntervalSet) -> IntervalSet {
    let kept = set
        .intervals
        .iter()
        .copied()
        .filter(|&iv| iv.left() % 2 == 1 || set.multiplicity_unchecked(iv) > 1)
        .collect();
    IntervalSet::from_sorted_unchecked(set.d, kept)
}

/// Odd-endpoint intervals that are pairwise apart, grouped into maximal
/// admissible runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunDecomposition {
    runs: Vec<AdmissibleSequence>,
    gaps: Vec<u32>,
}

impl RunDecomposition {
    pub fn runs(&self) -> &[AdmissibleSequence] {
        &self.runs
    }

    /// `first.left` of each run minus `last.right` of the previous one; each
    /// is at least 4.
    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// The number of runs.
    pub fn count(&self) -> usize {
        self.runs.len()
    }

    /// Intervals filling the space strictly between `lo` and `hi` around the
    /// runs: each run widened by one on both sides (when that stays `>= 1`),
    /// plus every even singleton not touching a run.
    pub(crate) fn completion(&self, lo: u32, hi: u32) -> Vec<Interval> {
        fn push_singletons(from: u32, to: u32, out: &mut Vec<Interval>) {
            out.extend(
                (from + 1..to)
                    .filter(|u| u % 2 == 0)
                    .map(|u| Interval::new(u, u).expect("positive singleton")),
            );
        }
        let mut out = Vec::new();
        let mut cursor = lo;
        for run in &self.runs {
            let start = run.first().left();
            push_singletons(cursor, start.saturating_sub(1), &mut out);
            if let Some(hull) = run.hull_widened() {
                out.push(hull);
            }
            cursor = run.last().right() + 1;
        }
        push_singletons(cursor, hi, &mut out);
        out.sort_unstable();
        out
    }
}

/// Greedy left-to-right grouping: a gap of exactly 2 continues a run, a
/// larger gap starts a new one.
pub fn maximal_runs(intervals: &[Interval]) -> Result<RunDecomposition> {
    let mut sorted = intervals.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &iv in &sorted {
        if !iv.is_equal_parity() || iv.left() % 2 == 0 {
            return Err(invalid(format!("{iv} does not have odd endpoints")));
        }
    }
    for w in sorted.windows(2) {
        if !w[0].is_apart(w[1]) {
            return Err(invalid(format!("{} and {} are not apart", w[0], w[1])));
        }
    }
    let mut runs = Vec::new();
    let mut gaps = Vec::new();
    let mut current: Vec<Interval> = Vec::new();
    for iv in sorted {
        match current.last() {
            Some(prev) if iv.left() == prev.right() + 2 => current.push(iv),
            Some(prev) => {
                gaps.push(iv.left() - prev.right());
                runs.push(AdmissibleSequence::new(std::mem::take(&mut current))?);
                current.push(iv);
            }
            None => current.push(iv),
        }
    }
    if !current.is_empty() {
        runs.push(AdmissibleSequence::new(current)?);
    }
    Ok(RunDecomposition { runs, gaps })
}

fn maximal_members(set: &IntervalSet) -> Vec<Interval> {
    set.intervals
        .iter()
        .copied()
        .filter(|&iv| set.multiplicity_unchecked(iv) == 1)
        .collect()
}

/// The even-parity intervals that can be added to a reduced set without
/// leaving its fibre under [`reduce`].
pub fn growth_set(set: &IntervalSet) -> Result<Vec<Interval>> {
    require_reduced(set)?;
    Ok(growth_set_unchecked(set))
}

pub(crate) fn growth_set_unchecked(set: &IntervalSet) -> Vec<Interval> {
    let runs = maximal_runs(&maximal_members(set))
        .expect("maximal members of a reduced set are odd and apart");
    runs.completion(1, set.d + 1)
}

/// All sets reducing to `set`: `set ∪ U` for every subset `U` of the growth
/// set, in canonical order.
pub fn fibre(set: &IntervalSet) -> Result<Vec<IntervalSet>> {
    require_reduced(set)?;
    Ok(fibre_unchecked(set))
}

pub(crate) fn fibre_unchecked(set: &IntervalSet) -> Vec<IntervalSet> {
    let z = growth_set_unchecked(set);
    let mut out: Vec<IntervalSet> = (0u64..1 << z.len())
        .map(|mask| {
            let extra: Vec<Interval> = z
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, iv)| *iv)
                .collect();
            set.with(&extra)
        })
        .collect();
    out.sort();
    out
}

/// The largest set in the fibre over `set`: `set ∪ Z(set)`, of size `D/2`.
pub fn saturate(set: &IntervalSet) -> Result<IntervalSet> {
    require_reduced(set)?;
    Ok(set.with(&growth_set_unchecked(set)))
}

/// The size test for `|B| = D/2`, evaluated from the shape of the maximal
/// members alone: all gaps between consecutive maximal members equal 2,
/// except that either one gap is 3 and the members span `[1, D]`, or all
/// gaps are 2 and the span is `[1, D-1]` or `[2, D]`.
pub fn has_half_shape(set: &IntervalSet) -> bool {
    let mut tops = maximal_members(set);
    tops.sort_unstable();
    let (Some(first), Some(last)) = (tops.first(), tops.last()) else {
        return set.d == 0;
    };
    let gaps: Vec<u32> = tops
        .windows(2)
        .map(|w| w[1].left() - w[0].right())
        .collect();
    let twos = gaps.iter().filter(|&&g| g == 2).count();
    let threes = gaps.iter().filter(|&&g| g == 3).count();
    let (a1, br, d) = (first.left(), last.right(), set.d);
    let all_two = twos == gaps.len();
    let one_three = threes == 1 && twos + 1 == gaps.len();
    (one_three && a1 == 1 && br == d)
        || (all_two && a1 == 1 && br + 1 == d)
        || (all_two && a1 == 2 && br == d)
}

/// Which part of the basis sets to list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    /// Every basis set.
    All,
    /// Basis sets of size `D/2`.
    Half,
    /// Basis sets with no even maximal member.
    Reduced,
}

impl std::str::FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Filter::All),
            "half" => Ok(Filter::Half),
            "reduced" => Ok(Filter::Reduced),
            other => Err(invalid(format!("unknown filter {other:?}"))),
        }
    }
}

fn check_ceiling(d: u32, ceiling: u32) -> Result<()> {
    check_ambient(d)?;
    if d > ceiling {
        return Err(Error::ResourceLimit { d, ceiling });
    }
    Ok(())
}

/// [`enumerate_capped`] with the default ceiling.
pub fn enumerate(d: u32, filter: Filter) -> Result<Vec<IntervalSet>> {
    enumerate_capped(d, filter, DEFAULT_CEILING)
}

/// Lists the chosen family for ambient size `d`, sorted canonically.
///
/// The reduced sets come from the odd-interval forests via
/// [`crate::tableaux::undot`]; half sets are their saturations and the full
/// family is the union of all fibres.
pub fn enumerate_capped(d: u32, filter: Filter, ceiling: u32) -> Result<Vec<IntervalSet>> {
    check_ceiling(d, ceiling)?;
    let reduced: Vec<IntervalSet> = crate::tableaux::enumerate_dotted_unchecked(d)
        .iter()
        .map(crate::tableaux::undot_unchecked)
        .collect();
    let mut out: Vec<IntervalSet> = match filter {
        Filter::Reduced => reduced,
        Filter::Half => reduced
            .iter()
            .map(|b| b.with(&growth_set_unchecked(b)))
            .collect(),
        Filter::All => reduced.iter().flat_map(fibre_unchecked).collect(),
    };
    out.sort();
    out.dedup();
    Ok(out)
}

/// Depth-first search over the equal-parity intervals in lexicographic order,
/// pruning on (P0) and checking (P1) at the leaves. Independent of the
/// forest route in [`enumerate`]; used to cross-check it.
pub fn enumerate_by_search(d: u32, ceiling: u32) -> Result<Vec<IntervalSet>> {
    check_ceiling(d, ceiling)?;
    let candidates = parity_intervals(d);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    search(d, &candidates, 0, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn search(
    d: u32,
    candidates: &[Interval],
    next: usize,
    chosen: &mut Vec<Interval>,
    out: &mut Vec<IntervalSet>,
) {
    if next == candidates.len() {
        let set = IntervalSet::from_sorted_unchecked(d, chosen.clone());
        if is_basis_set(&set) {
            out.push(set);
        }
        return;
    }
    let iv = candidates[next];
    search(d, candidates, next + 1, chosen, out);
    if chosen.iter().all(|&c| compatible(c, iv)) {
        chosen.push(iv);
        search(d, candidates, next + 1, chosen, out);
        chosen.pop();
    }
}

/// Every subset of the equal-parity intervals of `[1, d]`, filtered through
/// [`validate`]. Only feasible for `d <= 8`.
pub fn brute_force_enumerate(d: u32) -> Result<Vec<IntervalSet>> {
    check_ceiling(d, BRUTE_FORCE_LIMIT)?;
    let all = parity_intervals(d);
    let mut out = Vec::new();
    for mask in 0u64..1 << all.len() {
        let members: Vec<Interval> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, iv)| *iv)
            .collect();
        let set = IntervalSet::from_sorted_unchecked(d, members);
        if is_basis_set(&set) {
            out.push(set);
        }
    }
    out.sort();
    Ok(out)
}

/// Interval sets as a `BTreeSet`, for order-insensitive comparisons.
pub fn as_set(list: &[IntervalSet]) -> BTreeSet<IntervalSet> {
    list.iter().cloned().collect()
}

/// True if `seq` is admissible with the endpoints expected of a descent
/// chain under `parent`.
pub fn is_descent_shaped(parent: Interval, seq: &[Interval]) -> bool {
    match (admissible_kappa(seq), seq.first(), seq.last()) {
        (Some(k), Some(first), Some(last)) => {
            first.left() == parent.left() + 1
                && last.right() + 1 == parent.right()
                && k as u32 == 1 - parent.left() % 2
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: u32, b: u32) -> Interval {
        Interval::new(a, b).unwrap()
    }

    fn set(d: u32, pairs: &[(u32, u32)]) -> IntervalSet {
        IntervalSet::from_pairs(d, pairs).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(validate(&set(4, &[(3, 3), (2, 4)])), Verdict::Ok);
        assert_eq!(validate(&set(6, &[])), Verdict::Ok);
        assert_eq!(
            validate(&set(4, &[(2, 4)])),
            Verdict::ViolatesP1(iv(2, 4), 3)
        );
        assert_eq!(
            validate(&set(4, &[(1, 1), (2, 2), (1, 3)])),
            Verdict::ViolatesP0(iv(1, 1), iv(1, 3))
        );
    }

    #[test]
    fn constructor_rejects_bad_members() {
        assert!(IntervalSet::from_pairs(4, &[(1, 2)]).is_err());
        assert!(IntervalSet::from_pairs(4, &[(5, 5)]).is_err());
        assert!(IntervalSet::from_pairs(3, &[]).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        let b = set(4, &[(3, 3), (2, 4)]);
        assert_eq!(multiplicity(iv(3, 3), &b), Ok(2));
        assert_eq!(multiplicity(iv(2, 4), &b), Ok(1));
        assert_eq!(multiplicity(iv(5, 5), &set(6, &[(5, 5)])), Ok(1));
        assert_eq!(multiplicity(iv(1, 1), &b), Err(Error::NotAMember(iv(1, 1))));
    }

    #[test]
    fn descent_chain_examples() {
        let chain = descent_chain(iv(2, 4), &set(4, &[(3, 3), (2, 4)])).unwrap();
        assert_eq!(chain.items(), &[iv(3, 3)]);
        let chain = descent_chain(iv(1, 5), &set(6, &[(1, 5), (2, 2), (4, 4)])).unwrap();
        assert_eq!(chain.items(), &[iv(2, 2), iv(4, 4)]);
        assert_eq!(chain.kappa(), 0);
        let chain = descent_chain(iv(1, 3), &set(4, &[(1, 3), (2, 2)])).unwrap();
        assert_eq!(chain.items(), &[iv(2, 2)]);
        assert_eq!(
            descent_chain(iv(3, 3), &set(4, &[(3, 3), (2, 4)])),
            Err(Error::EmptyInterior(iv(3, 3)))
        );
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(
            reduce(&set(4, &[(3, 3), (2, 4)])).unwrap(),
            set(4, &[(3, 3)])
        );
        assert_eq!(reduce(&set(4, &[(2, 2), (4, 4)])).unwrap(), set(4, &[]));
        assert_eq!(
            reduce(&set(4, &[(1, 1), (3, 3)])).unwrap(),
            set(4, &[(1, 1), (3, 3)])
        );
        assert!(reduce(&set(4, &[(2, 4)])).is_err());
    }

    #[test]
    fn runs_examples() {
        let r = maximal_runs(&[iv(1, 1), iv(3, 3)]).unwrap();
        assert_eq!(r.count(), 1);
        assert_eq!(r.runs()[0].items(), &[iv(1, 1), iv(3, 3)]);
        let r = maximal_runs(&[iv(5, 5), iv(1, 1)]).unwrap();
        assert_eq!(r.count(), 2);
        assert_eq!(r.gaps(), &[4]);
        assert_eq!(maximal_runs(&[]).unwrap().count(), 0);
        assert!(maximal_runs(&[iv(2, 2)]).is_err());
        assert!(maximal_runs(&[iv(1, 3), iv(3, 3)]).is_err());
    }

    #[test]
    fn growth_set_examples() {
        assert_eq!(growth_set(&set(4, &[])).unwrap(), vec![iv(2, 2), iv(4, 4)]);
        assert_eq!(growth_set(&set(4, &[(3, 3)])).unwrap(), vec![iv(2, 4)]);
        assert_eq!(growth_set(&set(4, &[(1, 1)])).unwrap(), vec![iv(4, 4)]);
        assert!(growth_set(&set(4, &[(2, 2)])).is_err());
    }

    #[test]
    fn fibre_examples() {
        assert_eq!(
            fibre(&set(2, &[])).unwrap(),
            vec![set(2, &[]), set(2, &[(2, 2)])]
        );
        assert_eq!(fibre(&set(2, &[(1, 1)])).unwrap(), vec![set(2, &[(1, 1)])]);
        assert_eq!(
            fibre(&set(4, &[(3, 3)])).unwrap(),
            vec![set(4, &[(2, 4), (3, 3)]), set(4, &[(3, 3)])]
        );
    }

    #[test]
    fn saturate_examples() {
        assert_eq!(
            saturate(&set(6, &[])).unwrap(),
            set(6, &[(2, 2), (4, 4), (6, 6)])
        );
        assert_eq!(
            saturate(&set(6, &[(1, 1), (5, 5)])).unwrap(),
            set(6, &[(1, 1), (5, 5), (4, 6)])
        );
        assert_eq!(
            saturate(&set(6, &[(4, 4), (3, 5)])).unwrap(),
            set(6, &[(4, 4), (3, 5), (2, 6)])
        );
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(
            enumerate(2, Filter::All).unwrap(),
            vec![set(2, &[]), set(2, &[(1, 1)]), set(2, &[(2, 2)])]
        );
        let half = as_set(&enumerate(4, Filter::Half).unwrap());
        let expected = as_set(&[
            set(4, &[(2, 2), (4, 4)]),
            set(4, &[(1, 1), (4, 4)]),
            set(4, &[(3, 3), (2, 4)]),
            set(4, &[(1, 1), (3, 3)]),
            set(4, &[(2, 2), (1, 3)]),
        ]);
        assert_eq!(half, expected);
        assert_eq!(enumerate(6, Filter::Reduced).unwrap().len(), 14);
        assert_eq!(enumerate(0, Filter::All).unwrap(), vec![set(0, &[])]);
    }

    #[test]
    fn enumerate_errors() {
        assert!(matches!(
            enumerate(3, Filter::All),
            Err(Error::InvalidInput(_))
        ));
        assert_eq!(
            enumerate(18, Filter::All),
            Err(Error::ResourceLimit { d: 18, ceiling: 16 })
        );
        assert!(matches!(
            brute_force_enumerate(10),
            Err(Error::ResourceLimit { d: 10, ceiling: 8 })
        ));
    }

    #[test]
    fn brute_force_small() {
        assert_eq!(brute_force_enumerate(0).unwrap(), vec![set(0, &[])]);
        assert_eq!(brute_force_enumerate(2).unwrap().len(), 3);
        // hand count: the empty set, four singletons, {1,3}, {1,4}, {2,4},
        // {2,123}, {3,234}
        let four = brute_force_enumerate(4).unwrap();
        assert_eq!(four.len(), 10);
        for h in enumerate(4, Filter::Half).unwrap() {
            assert!(four.contains(&h));
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(set(4, &[(3, 3), (2, 4)]).to_string(), "{3,234}");
        assert_eq!(set(6, &[(2, 2), (1, 3), (6, 6)]).to_string(), "{2,123,6}");
        assert_eq!(set(4, &[]).to_string(), "{∅}");
    }

    #[test]
    fn json_schema() {
        let b = set(6, &[(3, 5), (1, 1), (4, 4)]);
        let text = serde_json::to_string(&b).unwrap();
        assert_eq!(text, r#"{"D":6,"intervals":[[1,1],[3,5],[4,4]]}"#);
        let back: IntervalSet = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<IntervalSet>(r#"{"D":5,"intervals":[]}"#).is_err());
    }

    #[test]
    fn half_shape_small() {
        assert!(has_half_shape(&set(4, &[(2, 2), (4, 4)])));
        assert!(has_half_shape(&set(4, &[(1, 1), (4, 4)])));
        assert!(has_half_shape(&set(4, &[(1, 1), (3, 3)])));
        assert!(!has_half_shape(&set(4, &[(1, 1)])));
        assert!(has_half_shape(&set(0, &[])));
        assert!(!has_half_shape(&set(2, &[])));
    }
}
