use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use asr_core::basis_sets::{
    descent_chain, enumerate, fibre, growth_set, is_basis_set, is_reduced, multiplicity, reduce,
    saturate, validate, Filter, IntervalSet, Verdict,
};
use asr_core::intervals::{admissible_kappa, kappa, relate, Interval, Relation};
use asr_core::symplectic::{
    epsilon, epsilon_by_multiplicity, f_map, form, F2Subspace, F2Vector, UnorderedSymbol,
};
use asr_core::tableaux::{enumerate_dotted, shift, unshift, DottedSet};

fn all_sets() -> &'static Vec<IntervalSet> {
    static SETS: OnceLock<Vec<IntervalSet>> = OnceLock::new();
    SETS.get_or_init(|| {
        (0..=10)
            .step_by(2)
            .flat_map(|d| enumerate(d, Filter::All).unwrap())
            .collect()
    })
}

fn all_forests() -> &'static Vec<DottedSet> {
    static FORESTS: OnceLock<Vec<DottedSet>> = OnceLock::new();
    FORESTS.get_or_init(|| {
        (0..=12)
            .step_by(2)
            .flat_map(|d| enumerate_dotted(d).unwrap())
            .collect()
    })
}

fn interval() -> impl Strategy<Value = Interval> {
    (1u32..30, 0u32..30).prop_map(|(a, w)| Interval::new(a, a + w).unwrap())
}

fn parity_interval() -> impl Strategy<Value = Interval> {
    (1u32..30, 0u32..15).prop_map(|(a, w)| Interval::new(a, a + 2 * w).unwrap())
}

fn vector(len: u32) -> impl Strategy<Value = F2Vector> {
    any::<u64>().prop_map(move |bits| {
        let mask = if len == 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        };
        F2Vector::from_bits(len, bits & mask).unwrap()
    })
}

fn sized_vectors() -> impl Strategy<Value = (F2Vector, F2Vector, F2Vector)> {
    (0u32..=30).prop_flat_map(|h| {
        let len = 2 * h;
        (vector(len), vector(len), vector(len))
    })
}

fn basis_set() -> impl Strategy<Value = IntervalSet> {
    (0..all_sets().len()).prop_map(|i| all_sets()[i].clone())
}

fn forest() -> impl Strategy<Value = DottedSet> {
    (0..all_forests().len()).prop_map(|i| all_forests()[i].clone())
}

fn subspace(len: u32) -> impl Strategy<Value = Vec<F2Vector>> {
    prop::collection::vec(vector(len), 0..6)
}

proptest! {
    #[test]
    fn exactly_one_relation(i in interval(), j in interval()) {
        let tags = [
            i == j,
            i.is_nested_in(j),
            j.is_nested_in(i),
            i != j && i.is_apart(j),
        ];
        let hits = tags.iter().filter(|&&t| t).count();
        prop_assert!(hits <= 1);
        prop_assert_eq!(hits == 0, relate(i, j) == Relation::Entangled);
    }

    #[test]
    fn relation_symmetry(i in interval(), j in interval()) {
        let flipped = match relate(i, j) {
            Relation::NestedIn => Relation::Contains,
            Relation::Contains => Relation::NestedIn,
            other => other,
        };
        prop_assert_eq!(relate(j, i), flipped);
    }

    #[test]
    fn even_interior_size(i in parity_interval()) {
        let pts: Vec<u32> = i.even_interior().collect();
        prop_assert_eq!(pts.len() as u32, (i.right() - i.left()) / 2);
        prop_assert!(pts.iter().all(|x| (x + i.left()) % 2 == 1 && i.contains_point(*x)));
    }

    #[test]
    fn admissible_kappa_matches_ends(start in 1u32..20, widths in prop::collection::vec(0u32..4, 1..6)) {
        let mut seq = Vec::new();
        let mut a = start;
        for w in widths {
            let iv = Interval::new(a, a + 2 * w).unwrap();
            seq.push(iv);
            a = iv.right() + 2;
        }
        let k = admissible_kappa(&seq);
        prop_assert_eq!(k, Some(kappa(seq[0]).unwrap()));
        prop_assert_eq!(k, Some(kappa(*seq.last().unwrap()).unwrap()));
    }

    #[test]
    fn form_is_alternating_and_bilinear((x, y, z) in sized_vectors()) {
        prop_assert_eq!(form(x, x), Ok(0));
        prop_assert_eq!(form(x, y), form(y, x));
        prop_assert_eq!(form(x + y, z).unwrap(), form(x, z).unwrap() ^ form(y, z).unwrap());
    }

    #[test]
    fn f_map_steps_keep_mod_four((x, _, _) in sized_vectors(), i in 1u32..=60) {
        let d = x.len();
        prop_assume!(d > 0);
        let i = (i - 1) % d + 1;
        let step = x + F2Vector::from_indices(d, [i]).unwrap();
        let (a, b) = (f_map(x), f_map(step));
        let diff = |s: &UnorderedSymbol| s.first().len() as i64 - s.second().len() as i64;
        // 0 never moves, so the part containing it stays first
        prop_assert!([0, 4, -4].contains(&(diff(&b) - diff(&a))));
        prop_assert_eq!(diff(&b).rem_euclid(4), 0);
    }

    #[test]
    fn f_map_toggles_in_any_order((x, _, _) in sized_vectors(), seed in any::<u64>()) {
        let d = x.len();
        let mut order = x.support();
        let n = order.len();
        for k in 0..n {
            let j = k + (seed.rotate_left(k as u32) as usize) % (n - k);
            order.swap(k, j);
        }
        let mut y = F2Vector::zero(d);
        let mut steps = vec![f_map(y)];
        for i in order {
            y += F2Vector::from_indices(d, [i]).unwrap();
            steps.push(f_map(y));
        }
        prop_assert_eq!(y, x);
        prop_assert_eq!(steps.last().copied(), Some(f_map(x)));
    }

    #[test]
    fn subspace_is_canonical(len in (1u32..=8).prop_map(|h| 2 * h), seed in any::<u64>()) {
        let gens: Vec<F2Vector> = (0..5)
            .map(|k| F2Vector::from_bits(len, seed.rotate_left(k * 13) & ((1 << len) - 1)).unwrap())
            .collect();
        let mut rev = gens.clone();
        rev.reverse();
        let doubled: Vec<F2Vector> = gens.iter().zip(rev.iter()).map(|(a, b)| *a + *b).chain(gens.iter().copied()).collect();
        prop_assert_eq!(F2Subspace::span(len, gens.clone()), F2Subspace::span(len, rev));
        prop_assert_eq!(F2Subspace::span(len, gens), F2Subspace::span(len, doubled));
    }

    #[test]
    fn subspace_operations_match_elements(u in subspace(6), w in subspace(6)) {
        let (u, w) = (F2Subspace::span(6, u), F2Subspace::span(6, w));
        let eu: BTreeSet<F2Vector> = u.elements().into_iter().collect();
        let ew: BTreeSet<F2Vector> = w.elements().into_iter().collect();
        let meet: BTreeSet<F2Vector> = eu.intersection(&ew).copied().collect();
        prop_assert_eq!(u.intersect(&w).elements().into_iter().collect::<BTreeSet<_>>(), meet);
        prop_assert_eq!(u.dim() + u.dot_complement().dim(), 6);
        prop_assert_eq!(u.dot_complement().dot_complement(), u.clone());
        prop_assert!(u.is_subspace_of(&u.sum(&w)) && w.is_subspace_of(&u.sum(&w)));
        prop_assert_eq!(u.sum(&w).dim() + u.intersect(&w).dim(), u.dim() + w.dim());
    }

    #[test]
    fn enumerated_sets_are_basis_sets(b in basis_set()) {
        prop_assert_eq!(validate(&b), Verdict::Ok);
        prop_assert!(b.len() <= b.d() as usize / 2);
    }

    #[test]
    fn descent_chains_are_admissible(b in basis_set()) {
        for &iv in b.intervals() {
            if iv.is_singleton() {
                continue;
            }
            let chain = descent_chain(iv, &b).unwrap();
            prop_assert_eq!(chain.first().left(), iv.left() + 1);
            prop_assert_eq!(chain.last().right(), iv.right() - 1);
            prop_assert_eq!(chain.kappa(), 1 - kappa(iv).unwrap());
            let m = multiplicity(iv, &b).unwrap();
            prop_assert!(chain.items().iter().all(|c| multiplicity(*c, &b).unwrap() == m + 1));
        }
    }

    #[test]
    fn reduction_and_fibres(b in basis_set()) {
        let base = reduce(&b).unwrap();
        prop_assert!(is_reduced(&base));
        prop_assert_eq!(reduce(&base).unwrap(), base.clone());
        prop_assert!(fibre(&base).unwrap().contains(&b));
        let top = saturate(&base).unwrap();
        prop_assert_eq!(top.len(), b.d() as usize / 2);
        prop_assert_eq!(top.len(), base.len() + growth_set(&base).unwrap().len());
        prop_assert!(b.intervals().iter().all(|iv| top.contains(*iv)));
    }

    #[test]
    fn epsilon_routes_agree(b in basis_set()) {
        prop_assert_eq!(epsilon(&b), epsilon_by_multiplicity(&b));
    }

    #[test]
    fn removing_a_member_breaks_or_keeps_axioms(b in basis_set(), k in any::<prop::sample::Index>()) {
        prop_assume!(!b.is_empty());
        let drop = b.intervals()[k.index(b.len())];
        let rest = IntervalSet::new(b.d(), b.intervals().iter().copied().filter(|&iv| iv != drop)).unwrap();
        // dropping a maximal member never breaks the axioms
        let maximal = b.intervals().iter().all(|o| !drop.is_nested_in(*o));
        if maximal {
            prop_assert!(is_basis_set(&rest));
        }
    }

    #[test]
    fn shift_round_trip(f in forest()) {
        prop_assert_eq!(unshift(&shift(&f)).unwrap(), f);
    }

    #[test]
    fn interval_set_json(b in basis_set()) {
        let text = serde_json::to_string(&b).unwrap();
        let back: IntervalSet = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, b);
    }

    #[test]
    fn vector_bit_strings((x, _, _) in sized_vectors()) {
        let back: F2Vector = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }
}
