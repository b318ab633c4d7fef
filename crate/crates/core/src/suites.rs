//! Property suites over every basis set of a given `D`. Each suite returns
//! named checks rather than panicking, so callers can report them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::basis_sets::{
    as_set, brute_force_enumerate, enumerate_by_search, enumerate_capped, fibre, has_half_shape,
    is_reduced, reduce, saturate, Filter, IntervalSet, BRUTE_FORCE_LIMIT,
};
use crate::error::{invalid, Error, Result};
use crate::symplectic::{
    enumerate_unordered_symbols, epsilon, epsilon_by_multiplicity, epsilon_dotted, epsilon_rows,
    f_map, fibre_dimension_growth, phi, shriek, span_parts, span_parts_by_intersection, F2Vector,
    Lattice, UnorderedSymbol,
};
use crate::tableaux::{
    catalan, dot, enumerate_distinguished_symbols, pairs_to_symbol, pairs_to_tableau, shift,
    shift_by_moving_entries, symbol_to_pairs, symbol_to_reduced, tableau_to_pairs, undot, unshift,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Counts,
    Roundtrip,
    Epsilon,
    Lattice,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Counts,
        Suite::Roundtrip,
        Suite::Epsilon,
        Suite::Lattice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Roundtrip => "roundtrip",
            Suite::Epsilon => "epsilon",
            Suite::Lattice => "lattice",
        }
    }

    /// Runs this suite for one `D`.
    pub fn run(self, d: u32, ceiling: u32) -> Result<Vec<Check>> {
        let mut report = Recorder {
            suite: self,
            d,
            checks: Vec::new(),
        };
        match self {
            Suite::Counts => counts(&mut report, ceiling)?,
            Suite::Roundtrip => roundtrip(&mut report, ceiling)?,
            Suite::Epsilon => epsilon_suite(&mut report, ceiling)?,
            Suite::Lattice => lattice(&mut report, ceiling)?,
        }
        Ok(report.checks)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub d: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {} D={} {}", self.suite, self.d, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

struct Recorder {
    suite: Suite,
    d: u32,
    checks: Vec<Check>,
}

impl Recorder {
    fn check(&mut self, name: &'static str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            suite: self.suite,
            d: self.d,
            name,
            pass,
            detail: detail.into(),
        });
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, name: &'static str, got: T, want: T) {
        let detail = if got == want {
            format!("{got:?}")
        } else {
            format!("got {got:?}, expected {want:?}")
        };
        self.check(name, got == want, detail);
    }

    /// Records the first counterexample, if any.
    fn all<T: fmt::Debug>(
        &mut self,
        name: &'static str,
        items: impl IntoIterator<Item = T>,
        ok: impl Fn(&T) -> bool,
    ) {
        let mut count = 0usize;
        for item in items {
            count += 1;
            if !ok(&item) {
                self.check(name, false, format!("fails at {item:?}"));
                return;
            }
        }
        self.check(name, true, format!("{count} cases"));
    }
}

fn distinct<T: Ord>(items: impl IntoIterator<Item = T>) -> (usize, usize) {
    let v: Vec<T> = items.into_iter().collect();
    let n = v.len();
    (n, v.into_iter().collect::<BTreeSet<T>>().len())
}

/// Runs several suites over `0, 2, ..., d_max`, in a fixed order.
pub fn run_all(suites: &[Suite], d_max: u32, ceiling: u32) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &suite in suites {
        for d in (0..=d_max).step_by(2) {
            out.extend(suite.run(d, ceiling)?);
        }
    }
    Ok(out)
}

fn counts(r: &mut Recorder, ceiling: u32) -> Result<()> {
    let d = r.d;
    let cat = catalan((d + 2) / 2) as usize;
    let half = enumerate_capped(d, Filter::Half, ceiling)?;
    let reduced = enumerate_capped(d, Filter::Reduced, ceiling)?;
    let symbols = enumerate_distinguished_symbols(d)?;
    r.eq("half sets are Catalan-counted", half.len(), cat);
    r.eq("reduced sets are Catalan-counted", reduced.len(), cat);
    r.eq(
        "distinguished symbols are Catalan-counted",
        symbols.len(),
        cat,
    );

    let all = enumerate_capped(d, Filter::All, ceiling)?;
    let searched = enumerate_by_search(d, ceiling)?;
    r.eq(
        "forest route agrees with pruned search",
        as_set(&all),
        as_set(&searched),
    );
    if d <= BRUTE_FORCE_LIMIT {
        r.eq(
            "forest route agrees with brute force",
            as_set(&all),
            as_set(&brute_force_enumerate(d)?),
        );
    }
    let n = d as usize / 2;
    r.all("no set exceeds D/2 members", &all, |b| b.len() <= n);
    let by_size: BTreeSet<IntervalSet> =
        searched.iter().filter(|b| b.len() == n).cloned().collect();
    r.eq("half filter is the size-D/2 slice", as_set(&half), by_size);
    let by_shape: BTreeSet<IntervalSet> = searched
        .iter()
        .filter(|b| has_half_shape(b))
        .cloned()
        .collect();
    r.eq("size D/2 matches the shape test", as_set(&half), by_shape);
    let by_def: BTreeSet<IntervalSet> =
        searched.iter().filter(|b| is_reduced(b)).cloned().collect();
    r.eq(
        "reduced filter is the reduced slice",
        as_set(&reduced),
        by_def,
    );
    r.all("members contain (b-a+2)/2 members", &all, |b| {
        b.intervals().iter().all(|iv| {
            let inside = b.intervals().iter().filter(|o| o.is_subset_of(*iv)).count() as u32;
            inside * 2 == iv.right() - iv.left() + 2
        })
    });
    Ok(())
}

fn roundtrip(r: &mut Recorder, ceiling: u32) -> Result<()> {
    let d = r.d;
    let reduced = enumerate_capped(d, Filter::Reduced, ceiling)?;
    let half = enumerate_capped(d, Filter::Half, ceiling)?;
    let all = enumerate_capped(d, Filter::All, ceiling)?;

    r.all("undot(dot(B)) = B", &reduced, |b| {
        dot(b).map(|f| undot(&f) == **b).unwrap_or(false)
    });
    r.all(
        "closed-form shift agrees with moving entries",
        &reduced,
        |b| {
            let f = dot(b).expect("reduced");
            shift_by_moving_entries(&f)
                .map(|t| t == shift(&f))
                .unwrap_or(false)
        },
    );
    r.all("unshift(shift(F)) = F", &reduced, |b| {
        let f = dot(b).expect("reduced");
        unshift(&shift(&f)).map(|g| g == f).unwrap_or(false)
    });
    r.all("pairs round trip", &reduced, |b| {
        let t = shift(&dot(b).expect("reduced"));
        pairs_to_tableau(&tableau_to_pairs(&t)) == t
    });
    r.all("symbol round trip", &reduced, |b| {
        let p = tableau_to_pairs(&shift(&dot(b).expect("reduced")));
        symbol_to_pairs(&pairs_to_symbol(&p)) == p
    });
    let images: Vec<_> = reduced
        .iter()
        .map(|b| pairs_to_symbol(&tableau_to_pairs(&shift(&dot(b).expect("reduced")))))
        .collect();
    let (n, k) = distinct(images.iter().cloned());
    r.check(
        "chain is injective",
        n == k,
        format!("{n} sets, {k} symbols"),
    );
    r.eq(
        "chain is onto the distinguished symbols",
        images.iter().cloned().collect::<BTreeSet<_>>(),
        enumerate_distinguished_symbols(d)?.into_iter().collect(),
    );
    r.all(
        "symbol_to_reduced inverts the chain",
        reduced.iter().zip(&images),
        |(b, s)| symbol_to_reduced(s).map(|x| x == **b).unwrap_or(false),
    );
    r.all("reduce(saturate(B)) = B", &reduced, |b| {
        saturate(b)
            .and_then(|h| reduce(&h))
            .map(|x| x == **b)
            .unwrap_or(false)
    });
    r.all("saturate(reduce(H)) = H", &half, |h| {
        reduce(h)
            .and_then(|b| saturate(&b))
            .map(|x| x == **h)
            .unwrap_or(false)
    });
    let mut covered = BTreeMap::new();
    for b in &reduced {
        for member in fibre(b)? {
            *covered.entry(member).or_insert(0usize) += 1;
        }
    }
    r.check(
        "fibres partition all basis sets",
        covered.values().all(|&c| c == 1)
            && covered.keys().cloned().collect::<BTreeSet<_>>() == as_set(&all),
        format!("{} sets in {} fibres", covered.len(), reduced.len()),
    );
    r.all("every fibre member reduces to its base", &reduced, |b| {
        fibre(b)
            .map(|f| f.iter().all(|m| reduce(m).as_ref() == Ok(*b)))
            .unwrap_or(false)
    });
    Ok(())
}

fn epsilon_suite(r: &mut Recorder, ceiling: u32) -> Result<()> {
    let d = r.d;
    let all = enumerate_capped(d, Filter::All, ceiling)?;
    let reduced = enumerate_capped(d, Filter::Reduced, ceiling)?;

    r.all("both evaluations of epsilon agree", &all, |b| {
        epsilon(b) == epsilon_by_multiplicity(b)
    });
    let (n, k) = distinct(all.iter().map(|b| epsilon(b).expect("basis set")));
    r.check(
        "epsilon is injective",
        n == k,
        format!("{n} sets, {k} vectors"),
    );
    r.all(
        "epsilon of a reduced set equals its forest and row sums",
        &reduced,
        |b| {
            let f = dot(b).expect("reduced");
            let e = epsilon(b).expect("basis set");
            epsilon_dotted(&f) == e && epsilon_rows(&shift(&f)) == e
        },
    );

    let symbols: Vec<UnorderedSymbol> = reduced
        .iter()
        .map(|b| {
            let t = shift(&dot(b).expect("reduced"));
            f_map(epsilon_rows(&t))
        })
        .collect();
    r.all(
        "f(row sum) agrees with the pair route",
        reduced.iter().zip(&symbols),
        |(b, s)| {
            let t = shift(&dot(b).expect("reduced"));
            UnorderedSymbol::from(&pairs_to_symbol(&tableau_to_pairs(&t))) == **s
        },
    );
    let distinguished: BTreeSet<UnorderedSymbol> = enumerate_distinguished_symbols(d)?
        .iter()
        .map(UnorderedSymbol::from)
        .collect();
    r.all("f(row sum) is a distinguished symbol", &symbols, |s| {
        distinguished.contains(s)
    });
    r.eq(
        "f(row sum) is onto the distinguished symbols",
        symbols.iter().copied().collect::<BTreeSet<_>>(),
        distinguished,
    );

    if d <= BRUTE_FORCE_LIMIT {
        let images: BTreeSet<UnorderedSymbol> = (0u64..1 << d)
            .map(|bits| f_map(F2Vector::from_bits(d, bits).expect("fits")))
            .collect();
        r.eq("f is injective on V_D", images.len(), 1usize << d);
        let direct = enumerate_unordered_symbols(d)?;
        r.eq("unordered symbols number 2^D", direct.len(), 1usize << d);
        r.eq(
            "f is onto the unordered symbols",
            images,
            direct.into_iter().collect(),
        );
    }
    Ok(())
}

fn lattice(r: &mut Recorder, ceiling: u32) -> Result<()> {
    let d = r.d;
    let lat = Lattice::build_capped(d, ceiling)?;
    let all = lat.sets().to_vec();
    let reduced = enumerate_capped(d, Filter::Reduced, ceiling)?;
    let half = enumerate_capped(d, Filter::Half, ceiling)?;

    r.all("dim <B> = |B|", &all, |b| {
        span_parts(b)
            .map(|p| p.whole.dim() == b.len())
            .unwrap_or(false)
    });
    r.all("parity parts equal the intersections", &all, |b| {
        span_parts(b) == span_parts_by_intersection(b)
    });
    r.all("<B> splits into its parity parts", &all, |b| {
        let p = span_parts(b).expect("basis set");
        p.even.sum(&p.odd) == p.whole && p.even.dim() + p.odd.dim() == p.whole.dim()
    });
    r.all(
        "dim L + dim L^! = D/2",
        lat.cc(0)
            .iter()
            .map(|l| (l, 0u8))
            .chain(lat.cc(1).iter().map(|l| (l, 1))),
        |(l, p)| {
            shriek(l, *p)
                .map(|s| s.dim() + l.dim() == d as usize / 2)
                .unwrap_or(false)
        },
    );

    let phis: Vec<_> = all.iter().map(|b| phi(b).expect("basis set")).collect();
    let (n, k) = distinct(phis.iter().cloned());
    r.check("phi is injective", n == k, format!("{n} sets, {k} pairs"));
    let ca = lat.ca();
    r.eq(
        "phi is onto ca",
        phis.iter().cloned().collect::<BTreeSet<_>>(),
        ca.clone(),
    );
    r.all(
        "phi(B) = (L, L') has L <= L' and L + L'^! = <B>",
        all.iter().zip(&phis),
        |(b, (l, u))| {
            let whole = span_parts(b).expect("basis set").whole;
            l.is_subspace_of(u) && shriek(u, 1).map(|s| l.sum(&s) == whole).unwrap_or(false)
        },
    );

    let cc1 = lat.cc(1).clone();
    for (name, family) in [
        ("<B>_1 bijects reduced sets onto cc", &reduced),
        ("<B>_1 bijects half sets onto cc", &half),
    ] {
        let odd: Vec<_> = family
            .iter()
            .map(|b| span_parts(b).expect("basis set").odd)
            .collect();
        let (n, k) = distinct(odd.iter().cloned());
        let onto = odd.into_iter().collect::<BTreeSet<_>>() == cc1;
        r.check(
            name,
            n == k && onto,
            format!("{n} sets, {k} subspaces, {} in cc", cc1.len()),
        );
    }
    r.all("<B>_1 = <reduce(B)>_1", &all, |b| {
        let base = reduce(b).expect("basis set");
        span_parts(b).map(|p| p.odd) == span_parts(&base).map(|p| p.odd)
    });

    let mut maxima = Vec::new();
    let mut failure = None;
    for l in &cc1 {
        match lat.l_max(l) {
            Ok(m) => maxima.push((l.clone(), m)),
            Err(e) => {
                failure = Some(format!("{l:?}: {e}"));
                break;
            }
        }
    }
    r.check(
        "l_max is unique for every L in cc",
        failure.is_none(),
        failure.unwrap_or_else(|| format!("{} subspaces", cc1.len())),
    );
    let ca_upper: BTreeSet<_> = maxima.into_iter().collect();
    r.all("ca^* lies in ca", &ca_upper, |p| ca.contains(p));
    r.all("every pair in ca is dominated by ca^*", &ca, |(l, u)| {
        ca_upper
            .iter()
            .any(|(l2, m)| l2 == l && u.is_subspace_of(m))
    });
    let reduced_phis: Vec<_> = reduced.iter().map(|b| phi(b).expect("basis set")).collect();
    let (n, k) = distinct(reduced_phis.iter().cloned());
    let onto = reduced_phis.into_iter().collect::<BTreeSet<_>>() == ca_upper;
    r.check(
        "phi bijects reduced sets onto ca^*",
        n == k && onto,
        format!("{n} sets, {} pairs", ca_upper.len()),
    );
    r.all("ca_* lies in ca", lat.ca_lower_star(), |p| ca.contains(p));

    r.all("dim <B_U>_0 = dim <reduce(B)>_0 + |U|", &reduced, |b| {
        fibre_dimension_growth(b)
            .map(|v| v.iter().all(|(grown, added)| grown == added))
            .unwrap_or(false)
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis_sets::DEFAULT_CEILING;

    #[test]
    fn suites_pass_small() {
        for suite in Suite::ALL {
            for d in [0, 2, 4, 6] {
                for c in suite.run(d, DEFAULT_CEILING).unwrap() {
                    assert!(c.pass, "{c}");
                }
            }
        }
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn failing_check_is_reported() {
        let mut r = Recorder {
            suite: Suite::Counts,
            d: 2,
            checks: Vec::new(),
        };
        r.eq("deliberately wrong", 1, 2);
        assert!(!r.checks[0].pass);
        assert!(r.checks[0].to_string().starts_with("FAIL counts D=2"));
    }
}
