//! The chain of bijections from reduced basis sets to two-row symbols:
//!
//! ```text
//! reduced sets  --dot-->  odd forests  --shift-->  shifted tableaux
//!               --pairs-->  pair tableaux  --symbol-->  distinguished symbols
//! ```
//!
//! Tableaux are stored as lists of row intervals. The column/row grid is only
//! materialised by the entry-moving reference implementations
//! ([`shift_by_moving_entries`], [`unshift`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basis_sets::{
    check_ambient, maximal_runs, require_reduced, IntervalSet, DEFAULT_CEILING,
};
use crate::error::{invalid, Error, Result};
use crate::intervals::{compatible, odd_intervals, Interval};

/// A set of odd-endpoint intervals, pairwise equal, apart, or nested.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DottedSet {
    d: u32,
    intervals: Vec<Interval>,
}

impl DottedSet {
    pub fn new(d: u32, intervals: impl IntoIterator<Item = Interval>) -> Result<Self> {
        let set = IntervalSet::new(d, intervals)?;
        let intervals = set.intervals().to_vec();
        if let Some(iv) = intervals.iter().find(|iv| iv.left() % 2 == 0) {
            return Err(invalid(format!("{iv} does not have odd endpoints")));
        }
        for (i, &x) in intervals.iter().enumerate() {
            for &y in &intervals[i + 1..] {
                if !compatible(x, y) {
                    return Err(invalid(format!("{x} and {y} are entangled")));
                }
            }
        }
        Ok(DottedSet { d, intervals })
    }

    pub fn from_pairs(d: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        let ivs = pairs
            .iter()
            .map(|&(a, b)| Interval::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        DottedSet::new(d, ivs)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Depth of `iv` in the forest: the number of members containing it.
    pub fn depth(&self, iv: Interval) -> usize {
        self.intervals
            .iter()
            .filter(|m| iv.is_subset_of(**m))
            .count()
    }

    /// `levels()[k - 1]` holds the members of depth `k`.
    pub fn levels(&self) -> Vec<Vec<Interval>> {
        let mut levels: Vec<Vec<Interval>> = Vec::new();
        for &iv in &self.intervals {
            let k = self.depth(iv);
            if levels.len() < k {
                levels.resize(k, Vec::new());
            }
            levels[k - 1].push(iv);
        }
        levels
    }

    /// The tableau grid: row `k` as a bitmask of the columns covered by the
    /// depth-`k` members (bit `s - 1` for column `s`).
    pub fn grid(&self) -> Vec<u64> {
        self.levels()
            .iter()
            .map(|lvl| lvl.iter().fold(0, |m, iv| m | iv.mask()))
            .collect()
    }
}

impl fmt::Debug for DottedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}{:?}", self.d, self.intervals)
    }
}

impl fmt::Display for DottedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(
            &IntervalSet::from_sorted_unchecked(self.d, self.intervals.clone()),
            f,
        )
    }
}

/// Keeps the odd-endpoint members of a reduced set.
pub fn dot(set: &IntervalSet) -> Result<DottedSet> {
    require_reduced(set)?;
    Ok(DottedSet {
        d: set.d(),
        intervals: set
            .intervals()
            .iter()
            .copied()
            .filter(|iv| iv.left() % 2 == 1)
            .collect(),
    })
}

/// Rebuilds the unique reduced set whose odd part is `forest`: below each
/// member, the runs of its children are widened by one, and every even
/// point between them becomes a singleton.
pub fn undot(forest: &DottedSet) -> IntervalSet {
    undot_unchecked(forest)
}

pub(crate) fn undot_unchecked(forest: &DottedSet) -> IntervalSet {
    let mut out = forest.intervals.clone();
    for &parent in &forest.intervals {
        let level = forest.depth(parent) + 1;
        let children: Vec<Interval> = forest
            .intervals
            .iter()
            .copied()
            .filter(|c| c.is_nested_in(parent) && forest.depth(*c) == level)
            .collect();
        let runs = maximal_runs(&children).expect("children in a forest are odd and apart");
        out.extend(runs.completion(parent.left(), parent.right()));
    }
    IntervalSet::from_sorted_unchecked(forest.d, out)
}

/// All odd forests in `[1, d]`, in canonical order.
pub fn enumerate_dotted(d: u32) -> Result<Vec<DottedSet>> {
    check_ambient(d)?;
    if d > DEFAULT_CEILING {
        return Err(Error::ResourceLimit {
            d,
            ceiling: DEFAULT_CEILING,
        });
    }
    Ok(enumerate_dotted_unchecked(d))
}

pub(crate) fn enumerate_dotted_unchecked(d: u32) -> Vec<DottedSet> {
    fn grow(
        d: u32,
        candidates: &[Interval],
        next: usize,
        chosen: &mut Vec<Interval>,
        out: &mut Vec<DottedSet>,
    ) {
        if next == candidates.len() {
            out.push(DottedSet {
                d,
                intervals: chosen.clone(),
            });
            return;
        }
        grow(d, candidates, next + 1, chosen, out);
        let iv = candidates[next];
        if chosen.iter().all(|&c| compatible(c, iv)) {
            chosen.push(iv);
            grow(d, candidates, next + 1, chosen, out);
            chosen.pop();
        }
    }
    let candidates = odd_intervals(d);
    let mut out = Vec::new();
    grow(d, &candidates, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Rows `[c_k, d_k]` with odd endpoints and both `c` and `d` strictly
/// increasing down the rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedTableau {
    d: u32,
    rows: Vec<Interval>,
}

impl ShiftedTableau {
    pub fn new(d: u32, rows: Vec<Interval>) -> Result<Self> {
        check_ambient(d)?;
        for iv in &rows {
            iv.check_within(d)?;
            if iv.left() % 2 == 0 {
                return Err(invalid(format!("row {iv} does not have odd endpoints")));
            }
        }
        if rows
            .windows(2)
            .any(|w| w[0].left() >= w[1].left() || w[0].right() >= w[1].right())
        {
            return Err(invalid(format!(
                "row endpoints must strictly increase: {rows:?}"
            )));
        }
        Ok(ShiftedTableau { d, rows })
    }

    pub fn from_pairs(d: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        let rows = pairs
            .iter()
            .map(|&(a, b)| Interval::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        ShiftedTableau::new(d, rows)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn rows(&self) -> &[Interval] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn grid(&self) -> Vec<u64> {
        self.rows.iter().map(|iv| iv.mask()).collect()
    }
}

impl fmt::Debug for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}{:?}", self.d, self.rows)
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("(∅)");
        }
        let rows: Vec<String> = self.rows.iter().map(|iv| iv.digits()).collect();
        write!(f, "({})", rows.join(" / "))
    }
}

/// Row `j` of the shifted tableau is `[j-th smallest left endpoint, j-th
/// smallest right endpoint]`.
pub fn shift(forest: &DottedSet) -> ShiftedTableau {
    let mut lefts: Vec<u32> = forest.intervals.iter().map(|iv| iv.left()).collect();
    let mut rights: Vec<u32> = forest.intervals.iter().map(|iv| iv.right()).collect();
    lefts.sort_unstable();
    rights.sort_unstable();
    let rows = lefts
        .into_iter()
        .zip(rights)
        .map(|(c, d)| Interval::new(c, d).expect("j-th left endpoint precedes j-th right endpoint"))
        .collect();
    ShiftedTableau { d: forest.d, rows }
}

/// Moves every entry of `grid` in column `s`, row `k` to row `k + j` (or
/// `k - j` when `down` is false), where `j` counts the `bounds` below `s`.
fn move_entries(grid: &[u64], bounds: &[u32], down: bool) -> Result<Vec<u64>> {
    let mut out: Vec<u64> = Vec::new();
    for (k, &row) in grid.iter().enumerate() {
        let mut bits = row;
        while bits != 0 {
            let s = bits.trailing_zeros() + 1;
            bits &= bits - 1;
            let j = bounds.iter().filter(|&&b| b < s).count();
            let target = if down {
                k + j
            } else {
                k.checked_sub(j).ok_or_else(|| {
                    Error::InternalConsistency(format!(
                        "entry {s} in row {} cannot move up {j} rows",
                        k + 1
                    ))
                })?
            };
            if out.len() <= target {
                out.resize(target + 1, 0);
            }
            out[target] |= 1 << (s - 1);
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}

/// Maximal runs of consecutive set bits as intervals.
fn segments(mut bits: u64) -> Vec<Interval> {
    let mut out = Vec::new();
    while bits != 0 {
        let start = bits.trailing_zeros();
        let len = (bits >> start).trailing_ones();
        out.push(Interval::new(start + 1, start + len).expect("nonempty segment"));
        bits &= !(((1u64 << len) - 1) << start);
    }
    out
}

/// Reference implementation of [`shift`] that moves entries cell by cell.
pub fn shift_by_moving_entries(forest: &DottedSet) -> Result<ShiftedTableau> {
    let mut rights: Vec<u32> = forest.intervals.iter().map(|iv| iv.right()).collect();
    rights.sort_unstable();
    let grid = move_entries(&forest.grid(), &rights, true)?;
    let rows = grid
        .into_iter()
        .map(|row| match segments(row).as_slice() {
            [iv] => Ok(*iv),
            other => Err(Error::InternalConsistency(format!(
                "shifted row is not one interval: {other:?}"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    ShiftedTableau::new(forest.d, rows)
}

/// Inverse of [`shift`]: entries in column `s`, row `k` move up by the number
/// of row right endpoints below `s`; each resulting row splits into the
/// forest members of that depth.
pub fn unshift(tableau: &ShiftedTableau) -> Result<DottedSet> {
    let rights: Vec<u32> = tableau.rows.iter().map(|iv| iv.right()).collect();
    let grid = move_entries(&tableau.grid(), &rights, false)?;
    let forest = DottedSet::new(tableau.d, grid.into_iter().flat_map(segments))?;
    Ok(forest)
}

/// Top row odd, bottom row even, `top[k] < bottom[k]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PairTableau {
    d: u32,
    top: Vec<u32>,
    bottom: Vec<u32>,
}

fn strictly_increasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl PairTableau {
    pub fn new(d: u32, top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        check_ambient(d)?;
        if top.len() != bottom.len() {
            return Err(invalid("pair tableau rows differ in length"));
        }
        if top.iter().any(|&c| c % 2 == 0 || c > d)
            || bottom.iter().any(|&e| e % 2 == 1 || e == 0 || e > d)
        {
            return Err(invalid(format!(
                "pair tableau entries out of range for D = {d}: {top:?} / {bottom:?}"
            )));
        }
        if !strictly_increasing(&top) || !strictly_increasing(&bottom) {
            return Err(invalid("pair tableau rows must strictly increase"));
        }
        if top.iter().zip(&bottom).any(|(c, e)| c >= e) {
            return Err(invalid("pair tableau needs top[k] < bottom[k]"));
        }
        Ok(PairTableau { d, top, bottom })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    /// `Σ (bottom[k] - top[k] - 1) / 2`: how far the tableau is from the
    /// all-singleton one with the same top row.
    pub fn excess(&self) -> u32 {
        self.top
            .iter()
            .zip(&self.bottom)
            .map(|(c, e)| (e - c - 1) / 2)
            .sum()
    }
}

impl fmt::Display for PairTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.top.is_empty() {
            return f.write_str("(∅)");
        }
        write!(f, "({} / {})", join(&self.top), join(&self.bottom))
    }
}

/// `[c, d]` rows become columns `(c, d + 1)`.
pub fn tableau_to_pairs(tableau: &ShiftedTableau) -> PairTableau {
    PairTableau {
        d: tableau.d,
        top: tableau.rows.iter().map(|iv| iv.left()).collect(),
        bottom: tableau.rows.iter().map(|iv| iv.right() + 1).collect(),
    }
}

pub fn pairs_to_tableau(pairs: &PairTableau) -> ShiftedTableau {
    let rows = pairs
        .top
        .iter()
        .zip(&pairs.bottom)
        .map(|(&c, &e)| Interval::new(c, e - 1).expect("top[k] < bottom[k]"))
        .collect();
    ShiftedTableau { d: pairs.d, rows }
}

/// Two increasing rows partitioning `[0, D+1]`, each of length `(D+2)/2`,
/// with `top[k] < bottom[k]` for every column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawSymbol", into = "RawSymbol")]
pub struct DistinguishedSymbol {
    d: u32,
    top: Vec<u32>,
    bottom: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawSymbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl TryFrom<RawSymbol> for DistinguishedSymbol {
    type Error = Error;

    fn try_from(raw: RawSymbol) -> Result<Self> {
        let total = (raw.top.len() + raw.bottom.len()) as u32;
        if total < 2 {
            return Err(invalid("symbol has fewer than two entries"));
        }
        DistinguishedSymbol::new(total - 2, raw.top, raw.bottom)
    }
}

impl From<DistinguishedSymbol> for RawSymbol {
    fn from(s: DistinguishedSymbol) -> Self {
        RawSymbol {
            top: s.top,
            bottom: s.bottom,
        }
    }
}

impl DistinguishedSymbol {
    pub fn new(d: u32, top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        check_ambient(d)?;
        let n = (d as usize + 2) / 2;
        if top.len() != n || bottom.len() != n {
            return Err(invalid(format!("symbol rows must have length {n}")));
        }
        if !strictly_increasing(&top) || !strictly_increasing(&bottom) {
            return Err(invalid("symbol rows must strictly increase"));
        }
        let mut all: Vec<u32> = top.iter().chain(&bottom).copied().collect();
        all.sort_unstable();
        if all != (0..=d + 1).collect::<Vec<_>>() {
            return Err(invalid(format!(
                "symbol rows must partition [0, {}]",
                d + 1
            )));
        }
        if top.iter().zip(&bottom).any(|(i, j)| i >= j) {
            return Err(invalid("symbol needs top[k] < bottom[k]"));
        }
        Ok(DistinguishedSymbol { d, top, bottom })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// One-line form `0 1 3 6 / 2 4 5 7`.
    pub fn inline(&self) -> String {
        format!("{} / {}", join(&self.top), join(&self.bottom))
    }
}

/// Two lines, entries separated by single spaces.
impl fmt::Display for DistinguishedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n{}", join(&self.top), join(&self.bottom))
    }
}

pub(crate) fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// Odd entries of the top row over even entries of the bottom row.
pub fn symbol_to_pairs(symbol: &DistinguishedSymbol) -> PairTableau {
    PairTableau {
        d: symbol.d,
        top: symbol.top.iter().copied().filter(|x| x % 2 == 1).collect(),
        bottom: symbol
            .bottom
            .iter()
            .copied()
            .filter(|x| x % 2 == 0)
            .collect(),
    }
}

/// Top row: the pair tableau's top entries together with the even numbers of
/// `[0, D]` missing from its bottom row. Bottom row: the bottom entries
/// together with the odd numbers of `[1, D+1]` missing from the top row.
pub fn pairs_to_symbol(pairs: &PairTableau) -> DistinguishedSymbol {
    let d = pairs.d;
    let mut top: Vec<u32> = pairs.top.clone();
    top.extend((0..=d).step_by(2).filter(|x| !pairs.bottom.contains(x)));
    top.sort_unstable();
    let mut bottom: Vec<u32> = pairs.bottom.clone();
    bottom.extend((1..=d + 1).step_by(2).filter(|x| !pairs.top.contains(x)));
    bottom.sort_unstable();
    DistinguishedSymbol { d, top, bottom }
}

/// Every distinguished symbol for `d`, generated as a ballot sequence over
/// `0, 1, ..., D+1`, in canonical order.
pub fn enumerate_distinguished_symbols(d: u32) -> Result<Vec<DistinguishedSymbol>> {
    check_ambient(d)?;
    if d > DEFAULT_CEILING {
        return Err(Error::ResourceLimit {
            d,
            ceiling: DEFAULT_CEILING,
        });
    }
    fn place(
        x: u32,
        d: u32,
        n: usize,
        top: &mut Vec<u32>,
        bottom: &mut Vec<u32>,
        out: &mut Vec<DistinguishedSymbol>,
    ) {
        if x > d + 1 {
            out.push(DistinguishedSymbol {
                d,
                top: top.clone(),
                bottom: bottom.clone(),
            });
            return;
        }
        if top.len() < n {
            top.push(x);
            place(x + 1, d, n, top, bottom, out);
            top.pop();
        }
        if bottom.len() < top.len() {
            bottom.push(x);
            place(x + 1, d, n, top, bottom, out);
            bottom.pop();
        }
    }
    let mut out = Vec::new();
    place(
        0,
        d,
        (d as usize + 2) / 2,
        &mut Vec::new(),
        &mut Vec::new(),
        &mut out,
    );
    out.sort();
    Ok(out)
}

/// Full chain from one reduced set to its symbol.
pub fn reduced_to_symbol(set: &IntervalSet) -> Result<DistinguishedSymbol> {
    let forest = dot(set)?;
    Ok(pairs_to_symbol(&tableau_to_pairs(&shift(&forest))))
}

/// The image of all reduced sets under the chain, in canonical order.
pub fn almost_special_symbols(d: u32) -> Result<Vec<DistinguishedSymbol>> {
    let reduced = crate::basis_sets::enumerate(d, crate::basis_sets::Filter::Reduced)?;
    let mut out = reduced
        .iter()
        .map(reduced_to_symbol)
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// The reduced set with the given symbol, by running the chain backwards.
pub fn symbol_to_reduced(symbol: &DistinguishedSymbol) -> Result<IntervalSet> {
    let tableau = pairs_to_tableau(&symbol_to_pairs(symbol));
    Ok(undot(&unshift(&tableau)?))
}

/// `Cat(n) = (2n)! / (n! (n+1)!)`.
pub fn catalan(n: u32) -> u64 {
    (0..n).fold(1u64, |c, k| c * 2 * (2 * k as u64 + 1) / (k as u64 + 2))
}
