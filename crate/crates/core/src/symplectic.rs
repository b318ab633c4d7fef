//! The vector space `V_D = F_2^D` with the adjacency form
//! `(e_i, e_j) = 1` iff `|i - j| = 1`, the embeddings of basis sets into it,
//! the symbol map `f`, and the subspace lattice built from basis sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::basis_sets::{
    check_ambient, enumerate_capped, fibre_unchecked, growth_set_unchecked, reduce_unchecked,
    require_basis_set, Filter, IntervalSet, DEFAULT_CEILING,
};
use crate::error::{invalid, Error, Result};
use crate::intervals::Interval;
use crate::tableaux::{DistinguishedSymbol, DottedSet, ShiftedTableau};

fn full_mask(len: u32) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Coordinates `1, 3, 5, ...` (parity 1) or `2, 4, 6, ...` (parity 0).
fn parity_mask(len: u32, parity: u8) -> u64 {
    let pattern = if parity == 1 {
        0x5555_5555_5555_5555
    } else {
        0xAAAA_AAAA_AAAA_AAAA
    };
    pattern & full_mask(len)
}

/// A vector of `F_2^len`; coordinate `i` (1-based) is bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct F2Vector {
    len: u32,
    bits: u64,
}

impl F2Vector {
    pub fn zero(len: u32) -> Self {
        F2Vector { len, bits: 0 }
    }

    pub fn from_bits(len: u32, bits: u64) -> Result<Self> {
        if len > 64 || bits & !full_mask(len) != 0 {
            return Err(invalid(format!("bits {bits:#x} do not fit length {len}")));
        }
        Ok(F2Vector { len, bits })
    }

    /// `e_J`, the indicator vector of `indices ⊆ [1, len]`.
    pub fn from_indices(len: u32, indices: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut bits = 0u64;
        for i in indices {
            if i == 0 || i > len {
                return Err(invalid(format!("coordinate {i} outside [1, {len}]")));
            }
            bits ^= 1 << (i - 1);
        }
        Ok(F2Vector { len, bits })
    }

    /// `e_I` for an interval inside `[1, len]`.
    pub fn of_interval(len: u32, iv: Interval) -> Self {
        F2Vector {
            len,
            bits: iv.mask() & full_mask(len),
        }
    }

    pub fn len(self) -> u32 {
        self.len
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn get(self, i: u32) -> bool {
        i >= 1 && i <= self.len && self.bits >> (i - 1) & 1 == 1
    }

    /// Coordinates equal to 1, ascending.
    pub fn support(self) -> Vec<u32> {
        (1..=self.len).filter(|&i| self.get(i)).collect()
    }

    /// Image under the adjacency operator: `(x, y) = x · adjacent(y)`.
    fn adjacent(self) -> u64 {
        ((self.bits << 1) ^ (self.bits >> 1)) & full_mask(self.len)
    }
}

impl Add for F2Vector {
    type Output = F2Vector;

    fn add(self, rhs: F2Vector) -> F2Vector {
        debug_assert_eq!(self.len, rhs.len);
        F2Vector {
            len: self.len,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl AddAssign for F2Vector {
    fn add_assign(&mut self, rhs: F2Vector) {
        *self = *self + rhs;
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{self}")
    }
}

impl FromStr for F2Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > 64 {
            return Err(invalid("bit string longer than 64"));
        }
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << i,
                other => {
                    return Err(invalid(format!(
                        "unexpected character {other:?} in bit string"
                    )))
                }
            }
        }
        Ok(F2Vector {
            len: s.len() as u32,
            bits,
        })
    }
}

impl TryFrom<String> for F2Vector {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<F2Vector> for String {
    fn from(v: F2Vector) -> Self {
        v.to_string()
    }
}

/// The adjacency form. It is alternating: `form(x, x) = 0`.
pub fn form(x: F2Vector, y: F2Vector) -> Result<u8> {
    if x.len != y.len {
        return Err(Error::LengthMismatch(x.len as usize, y.len as usize));
    }
    Ok((x.bits & y.adjacent()).count_ones() as u8 & 1)
}

/// A subspace of `F_2^len`, held as its reduced echelon basis: each basis
/// vector's lowest set coordinate is a pivot absent from every other basis
/// vector, and the basis is sorted by pivot. Equal subspaces are equal
/// values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Subspace {
    len: u32,
    basis: Vec<u64>,
}

impl F2Subspace {
    pub fn zero(len: u32) -> Self {
        F2Subspace {
            len,
            basis: Vec::new(),
        }
    }

    pub fn whole(len: u32) -> Self {
        F2Subspace {
            len,
            basis: (0..len).map(|i| 1u64 << i).collect(),
        }
    }

    /// The coordinate subspace spanned by `e_i` with `i ≡ parity (mod 2)`.
    pub fn parity_part(len: u32, parity: u8) -> Self {
        let mask = parity_mask(len, parity);
        F2Subspace {
            len,
            basis: (0..len)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| 1u64 << i)
                .collect(),
        }
    }

    pub fn span(len: u32, vectors: impl IntoIterator<Item = F2Vector>) -> Self {
        Self::span_bits(len, vectors.into_iter().map(|v| v.bits))
    }

    fn span_bits(len: u32, vectors: impl IntoIterator<Item = u64>) -> Self {
        let mut basis: Vec<u64> = Vec::new();
        for v in vectors {
            let mut v = v & full_mask(len);
            for &b in &basis {
                if v >> b.trailing_zeros() & 1 == 1 {
                    v ^= b;
                }
            }
            if v == 0 {
                continue;
            }
            let pivot = v.trailing_zeros();
            for b in basis.iter_mut() {
                if *b >> pivot & 1 == 1 {
                    *b ^= v;
                }
            }
            basis.push(v);
        }
        basis.sort_by_key(|b| b.trailing_zeros());
        F2Subspace { len, basis }
    }

    /// Dimension of the ambient space.
    pub fn ambient_dim(&self) -> u32 {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> Vec<F2Vector> {
        self.basis
            .iter()
            .map(|&bits| F2Vector {
                len: self.len,
                bits,
            })
            .collect()
    }

    fn reduce_bits(&self, mut v: u64) -> u64 {
        for &b in &self.basis {
            if v >> b.trailing_zeros() & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    pub fn contains(&self, v: F2Vector) -> bool {
        v.len == self.len && self.reduce_bits(v.bits) == 0
    }

    pub fn is_subspace_of(&self, other: &F2Subspace) -> bool {
        self.len == other.len && self.basis.iter().all(|&b| other.reduce_bits(b) == 0)
    }

    pub fn sum(&self, other: &F2Subspace) -> F2Subspace {
        F2Subspace::span_bits(self.len, self.basis.iter().chain(&other.basis).copied())
    }

    /// Complement under the standard dot product `Σ x_i y_i`.
    pub fn dot_complement(&self) -> F2Subspace {
        let pivots: u64 = self
            .basis
            .iter()
            .map(|b| 1u64 << b.trailing_zeros())
            .fold(0, |a, b| a | b);
        let mut out = Vec::new();
        for free in 0..self.len {
            if pivots >> free & 1 == 1 {
                continue;
            }
            let mut v = 1u64 << free;
            for &b in &self.basis {
                if b >> free & 1 == 1 {
                    v |= 1 << b.trailing_zeros();
                }
            }
            out.push(v);
        }
        F2Subspace::span_bits(self.len, out)
    }

    pub fn intersect(&self, other: &F2Subspace) -> F2Subspace {
        self.dot_complement()
            .sum(&other.dot_complement())
            .dot_complement()
    }

    /// Number of elements, `2^dim`.
    pub fn size(&self) -> u128 {
        1u128 << self.dim()
    }

    /// Every element, for small dimensions.
    pub fn elements(&self) -> Vec<F2Vector> {
        (0u64..1 << self.basis.len())
            .map(|mask| {
                let bits = self
                    .basis
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0, |acc, (_, b)| acc ^ b);
                F2Vector {
                    len: self.len,
                    bits,
                }
            })
            .collect()
    }

    /// Basis vectors as bit strings, sorted.
    pub fn to_bit_strings(&self) -> Vec<String> {
        let mut v: Vec<String> = self.basis().iter().map(F2Vector::to_string).collect();
        v.sort();
        v
    }
}

impl fmt::Debug for F2Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?}", self.to_bit_strings())
    }
}

impl fmt::Display for F2Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return f.write_str("0");
        }
        write!(f, "span{{{}}}", self.to_bit_strings().join(", "))
    }
}

impl Serialize for F2Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_bit_strings().serialize(s)
    }
}

/// The annihilator of `l ⊆ V^parity` inside the opposite parity part.
pub fn shriek(l: &F2Subspace, parity: u8) -> Result<F2Subspace> {
    let len = l.len;
    if !l.is_subspace_of(&F2Subspace::parity_part(len, parity)) {
        return Err(invalid(format!(
            "{l:?} is not inside the parity-{parity} coordinates"
        )));
    }
    let images = F2Subspace::span_bits(len, l.basis().iter().map(|v| v.adjacent()));
    Ok(images
        .dot_complement()
        .intersect(&F2Subspace::parity_part(len, 1 - parity)))
}

/// `ε(B) = Σ_j ε_j(B) e_j` with `ε_j(B) = |B_j|(|B_j|+1)/2 mod 2`, where
/// `B_j` is the set of members containing `j`.
pub fn epsilon(set: &IntervalSet) -> Result<F2Vector> {
    require_basis_set(set)?;
    Ok(epsilon_unchecked(set))
}

pub(crate) fn epsilon_unchecked(set: &IntervalSet) -> F2Vector {
    let mut bits = 0u64;
    for j in 1..=set.d() {
        let n = set
            .intervals()
            .iter()
            .filter(|iv| iv.contains_point(j))
            .count();
        if (n * (n + 1) / 2) % 2 == 1 {
            bits |= 1 << (j - 1);
        }
    }
    F2Vector { len: set.d(), bits }
}

/// The same vector computed as `Σ e_I` over members of odd multiplicity.
pub fn epsilon_by_multiplicity(set: &IntervalSet) -> Result<F2Vector> {
    require_basis_set(set)?;
    let mut v = F2Vector::zero(set.d());
    for &iv in set.intervals() {
        let m = set
            .intervals()
            .iter()
            .filter(|o| iv.is_subset_of(**o))
            .count();
        if m % 2 == 1 {
            v += F2Vector::of_interval(set.d(), iv);
        }
    }
    Ok(v)
}

/// `Σ e_I` over the members of a forest.
pub fn epsilon_dotted(forest: &DottedSet) -> F2Vector {
    forest
        .intervals()
        .iter()
        .fold(F2Vector::zero(forest.d()), |acc, &iv| {
            acc + F2Vector::of_interval(forest.d(), iv)
        })
}

/// `Σ e_[c,d]` over the rows of a shifted tableau.
pub fn epsilon_rows(tableau: &ShiftedTableau) -> F2Vector {
    tableau
        .rows()
        .iter()
        .fold(F2Vector::zero(tableau.d()), |acc, &iv| {
            acc + F2Vector::of_interval(tableau.d(), iv)
        })
}

/// An unordered partition `{A, B}` of `[0, D+1]` with `|A| ≡ |B| (mod 4)`.
/// The part containing 0 is stored first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnorderedSymbol {
    d: u32,
    first: u64,
    second: u64,
}

impl UnorderedSymbol {
    pub fn new(d: u32, a: &[u32], b: &[u32]) -> Result<Self> {
        check_ambient(d)?;
        let to_mask = |xs: &[u32]| -> Result<u64> {
            xs.iter().try_fold(0u64, |m, &x| {
                if x > d + 1 || m >> x & 1 == 1 {
                    Err(invalid(format!(
                        "symbol entry {x} repeated or outside [0, {}]",
                        d + 1
                    )))
                } else {
                    Ok(m | 1 << x)
                }
            })
        };
        let (ma, mb) = (to_mask(a)?, to_mask(b)?);
        Self::from_masks(d, ma, mb)
    }

    fn from_masks(d: u32, a: u64, b: u64) -> Result<Self> {
        let all = full_mask(d + 2);
        if a & b != 0 || a | b != all {
            return Err(invalid(format!("parts do not partition [0, {}]", d + 1)));
        }
        let diff = a.count_ones() as i64 - b.count_ones() as i64;
        if diff.rem_euclid(4) != 0 {
            return Err(invalid("part sizes are not congruent mod 4"));
        }
        let (first, second) = if a & 1 == 1 { (a, b) } else { (b, a) };
        Ok(UnorderedSymbol { d, first, second })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// The part containing 0.
    pub fn first(&self) -> Vec<u32> {
        (0..=self.d + 1)
            .filter(|x| self.first >> x & 1 == 1)
            .collect()
    }

    pub fn second(&self) -> Vec<u32> {
        (0..=self.d + 1)
            .filter(|x| self.second >> x & 1 == 1)
            .collect()
    }
}

impl From<&DistinguishedSymbol> for UnorderedSymbol {
    fn from(s: &DistinguishedSymbol) -> Self {
        UnorderedSymbol::new(s.d(), s.top(), s.bottom())
            .expect("distinguished symbols have equal row lengths")
    }
}

impl fmt::Display for UnorderedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} / {}",
            crate::tableaux::join(&self.first()),
            crate::tableaux::join(&self.second())
        )
    }
}

impl fmt::Debug for UnorderedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Serialize for UnorderedSymbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            top: Vec<u32>,
            bottom: Vec<u32>,
        }
        Raw {
            top: self.first(),
            bottom: self.second(),
        }
        .serialize(s)
    }
}

/// Starts from `{0, 2, ..., D} / {1, 3, ..., D+1}` and, for every coordinate
/// `i` set in `x`, toggles `i` and `i + 1` in both parts.
pub fn f_map(x: F2Vector) -> UnorderedSymbol {
    let d = x.len;
    let all = full_mask(d + 2);
    let mut a = 0xAAAA_AAAA_AAAA_AAAA_u64.rotate_right(1) & all;
    for i in x.support() {
        a ^= 0b11 << i;
    }
    UnorderedSymbol::from_masks(d, a, all & !a)
        .expect("toggling a pair preserves the mod-4 condition")
}

/// Every unordered symbol for `d`, enumerated from the definition.
pub fn enumerate_unordered_symbols(d: u32) -> Result<Vec<UnorderedSymbol>> {
    check_ambient(d)?;
    if d > 20 {
        return Err(Error::ResourceLimit { d, ceiling: 20 });
    }
    let all = full_mask(d + 2);
    let mut out: Vec<UnorderedSymbol> = (0..=all)
        .filter(|a| a & 1 == 1)
        .filter_map(|a| UnorderedSymbol::from_masks(d, a, all & !a).ok())
        .collect();
    out.sort();
    Ok(out)
}

/// `<B>` together with its even-coordinate and odd-coordinate parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpanParts {
    pub whole: F2Subspace,
    pub even: F2Subspace,
    pub odd: F2Subspace,
}

/// `<B>` spanned by the `e_I`; its even part spanned by the even points of
/// the even-endpoint members, its odd part by the odd points of the
/// odd-endpoint members.
pub fn span_parts(set: &IntervalSet) -> Result<SpanParts> {
    require_basis_set(set)?;
    Ok(span_parts_unchecked(set))
}

pub(crate) fn span_parts_unchecked(set: &IntervalSet) -> SpanParts {
    let d = set.d();
    let whole = F2Subspace::span(
        d,
        set.intervals()
            .iter()
            .map(|&iv| F2Vector::of_interval(d, iv)),
    );
    let part = |parity: u8| {
        let mask = parity_mask(d, parity);
        F2Subspace::span_bits(
            d,
            set.intervals()
                .iter()
                .filter(|iv| iv.left() % 2 == parity as u32)
                .map(|iv| iv.mask() & mask),
        )
    };
    SpanParts {
        whole,
        even: part(0),
        odd: part(1),
    }
}

/// The parts computed as `<B> ∩ V^0` and `<B> ∩ V^1` instead.
pub fn span_parts_by_intersection(set: &IntervalSet) -> Result<SpanParts> {
    require_basis_set(set)?;
    let d = set.d();
    let whole = F2Subspace::span(
        d,
        set.intervals()
            .iter()
            .map(|&iv| F2Vector::of_interval(d, iv)),
    );
    let even = whole.intersect(&F2Subspace::parity_part(d, 0));
    let odd = whole.intersect(&F2Subspace::parity_part(d, 1));
    Ok(SpanParts { whole, even, odd })
}

/// `B ↦ (<B>_1, <B>_0^!)`.
pub fn phi(set: &IntervalSet) -> Result<(F2Subspace, F2Subspace)> {
    require_basis_set(set)?;
    Ok(phi_unchecked(set))
}

fn phi_unchecked(set: &IntervalSet) -> (F2Subspace, F2Subspace) {
    let parts = span_parts_unchecked(set);
    let upper = shriek(&parts.even, 0).expect("even part lies in the even coordinates");
    (parts.odd, upper)
}

/// Pair of subspaces of the odd part, as produced by [`phi`].
pub type SubspacePair = (F2Subspace, F2Subspace);

/// The subspace families generated by all basis sets of one `D`.
#[derive(Debug, Clone)]
pub struct Lattice {
    d: u32,
    sets: Vec<IntervalSet>,
    spans: BTreeSet<F2Subspace>,
    odd_parts: BTreeSet<F2Subspace>,
    even_parts: BTreeSet<F2Subspace>,
}

impl Lattice {
    pub fn build(d: u32) -> Result<Self> {
        Self::build_capped(d, DEFAULT_CEILING)
    }

    pub fn build_capped(d: u32, ceiling: u32) -> Result<Self> {
        let sets = enumerate_capped(d, Filter::All, ceiling)?;
        let mut spans = BTreeSet::new();
        let mut odd_parts = BTreeSet::new();
        let mut even_parts = BTreeSet::new();
        for b in &sets {
            let p = span_parts_unchecked(b);
            spans.insert(p.whole);
            odd_parts.insert(p.odd);
            even_parts.insert(p.even);
        }
        Ok(Lattice {
            d,
            sets,
            spans,
            odd_parts,
            even_parts,
        })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn sets(&self) -> &[IntervalSet] {
        &self.sets
    }

    /// `cc(V^parity)`: the parity parts `<B>_parity` over all basis sets.
    pub fn cc(&self, parity: u8) -> &BTreeSet<F2Subspace> {
        if parity == 1 {
            &self.odd_parts
        } else {
            &self.even_parts
        }
    }

    /// Whether `<B> = span` for some basis set `B`.
    pub fn is_span(&self, span: &F2Subspace) -> bool {
        self.spans.contains(span)
    }

    /// `ca(V^1)` from its definition: pairs `L ⊆ L'` in `cc(V^1)` with
    /// `L ⊕ L'^!` equal to some `<B>`.
    pub fn ca(&self) -> BTreeSet<SubspacePair> {
        let mut out = BTreeSet::new();
        for l in &self.odd_parts {
            for upper in &self.odd_parts {
                if !l.is_subspace_of(upper) {
                    continue;
                }
                let sum = l.sum(&shriek(upper, 1).expect("odd part"));
                if self.spans.contains(&sum) {
                    out.insert((l.clone(), upper.clone()));
                }
            }
        }
        out
    }

    /// `ca_*(V^1)`: the diagonal pairs `(L, L)`.
    pub fn ca_lower_star(&self) -> BTreeSet<SubspacePair> {
        self.odd_parts
            .iter()
            .map(|l| (l.clone(), l.clone()))
            .collect()
    }

    /// `ca^*(V^1)`: pairs `(L, L^max)`.
    pub fn ca_upper_star(&self) -> Result<BTreeSet<SubspacePair>> {
        self.odd_parts
            .iter()
            .map(|l| Ok((l.clone(), self.l_max(l)?)))
            .collect()
    }

    /// The largest `L'` with `(L, L') ∈ ca(V^1)`, found among the `<B'>_0^!`
    /// over basis sets with `<B'>_1 = L`. Fails if `L` is not realised or
    /// the maximiser is not unique.
    pub fn l_max(&self, l: &F2Subspace) -> Result<F2Subspace> {
        let mut uppers: BTreeMap<usize, BTreeSet<F2Subspace>> = BTreeMap::new();
        let mut reduced_witness = None;
        for b in &self.sets {
            let (odd, upper) = phi_unchecked(b);
            if &odd != l {
                continue;
            }
            if crate::basis_sets::is_reduced(b) {
                reduced_witness = Some(b.clone());
            }
            uppers.entry(upper.dim()).or_default().insert(upper);
        }
        let Some((_, best)) = uppers.last_key_value() else {
            return Err(Error::NotRealizable { d: self.d });
        };
        if best.len() != 1 {
            return Err(Error::InternalConsistency(format!(
                "{} distinct maximal subspaces over {l:?}",
                best.len()
            )));
        }
        let best = best.iter().next().expect("one element").clone();
        let witness = reduced_witness.ok_or_else(|| {
            Error::InternalConsistency(format!("no reduced basis set realises {l:?}"))
        })?;
        if phi_unchecked(&witness).1 != best {
            return Err(Error::InternalConsistency(format!(
                "maximum over {l:?} is not attained at the reduced set {witness:?}"
            )));
        }
        Ok(best)
    }
}

/// [`Lattice::l_max`] for a one-off query.
pub fn l_max(d: u32, l: &F2Subspace) -> Result<F2Subspace> {
    if l.ambient_dim() != d {
        return Err(Error::LengthMismatch(l.ambient_dim() as usize, d as usize));
    }
    Lattice::build(d)?.l_max(l)
}

/// For every set in the fibre over a reduced `set`, `dim <B_U>_0 -
/// dim <set>_0` paired with `|U|`.
pub fn fibre_dimension_growth(set: &IntervalSet) -> Result<Vec<(usize, usize)>> {
    crate::basis_sets::require_reduced(set)?;
    let base = span_parts_unchecked(set).even.dim();
    let z = growth_set_unchecked(set);
    Ok(fibre_unchecked(set)
        .iter()
        .map(|b| {
            debug_assert_eq!(reduce_unchecked(b), *set);
            let added = b.len() - set.len();
            debug_assert!(added <= z.len());
            (span_parts_unchecked(b).even.dim() - base, added)
        })
        .collect())
}
