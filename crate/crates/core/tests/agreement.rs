//! The elementwise and compositional evaluations of each axiom must agree
//! on every candidate, not only on the ones that pass.

use std::sync::Arc;

use proptest::prelude::*;
use rayon::prelude::*;
use relcat_core::census::{all_tables, carrier};
use relcat_core::frobenius::{
    check_frobenius, check_hstar, compositional, elementwise, FrobCandidate, HStarCandidate, StarMap,
};
use relcat_core::relcore::{Carrier, FinSet, PtSubset, Rel};
use relcat_core::report::Verdict;

fn candidate(n: usize, bits: &[bool]) -> FrobCandidate {
    let x = FinSet::numbered("X", n).into_arc();
    let pairs = bits
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| (i / n.max(1), i % n.max(1)));
    let m = Rel::from_pairs(Carrier::power(&x, 2), Carrier::of(&x), pairs).unwrap();
    FrobCandidate::new(x, m).unwrap()
}

fn subsets(x: &Arc<FinSet>) -> Vec<PtSubset> {
    (0..1u64 << x.len()).map(|m| PtSubset::from_mask(x, m)).collect()
}

/// `None` when every route agrees, else the first disagreeing axiom.
fn disagreement(c: &FrobCandidate) -> Option<String> {
    if elementwise::m_witness(c).is_none() != compositional::m_holds(c) {
        return Some("M".into());
    }
    if elementwise::f_witness(c).is_none() != compositional::f_holds(c) {
        return Some("F".into());
    }
    if elementwise::a_witness(c).is_none() != compositional::a_holds(c) {
        return Some("A".into());
    }
    for u in subsets(c.carrier()) {
        if elementwise::is_unit_subset(c, &u) != compositional::unit_holds(c, &u) {
            return Some(format!("U at {}", u.display()));
        }
    }
    None
}

fn h_disagreement(c: &FrobCandidate, star: &[u64]) -> Option<String> {
    let subs = subsets(c.carrier());
    for (x, &s) in subs.iter().zip(star) {
        let xs = &subs[s as usize];
        if elementwise::h_mismatch(c, x, xs).is_none() != compositional::h_holds(c, x, xs) {
            return Some(format!("H at {} ↦ {}", x.display(), xs.display()));
        }
    }
    None
}

fn relation() -> impl Strategy<Value = (usize, Vec<bool>)> {
    (0usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec(prop::bool::weighted(0.3), n * n * n)))
}

/// A random involution on the `2^n` subsets, as a mask-to-mask table.
fn involution(n: usize, seed: Vec<u64>) -> Vec<u64> {
    let total = 1usize << n;
    let mut star: Vec<u64> = (0..total as u64).collect();
    let mut free: Vec<usize> = (0..total).collect();
    let mut k = 0;
    while free.len() >= 2 {
        let r = seed[k % seed.len()] as usize;
        k += 1;
        let a = free.swap_remove(r % free.len());
        if r.is_multiple_of(3) {
            continue; // fixed point
        }
        let b = free.swap_remove((r / 3) % free.len());
        star[a] = b as u64;
        star[b] = a as u64;
    }
    star
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn random_relations_agree((n, bits) in relation(), seed in prop::collection::vec(any::<u64>(), 1..8)) {
        let c = candidate(n, &bits);
        prop_assert_eq!(disagreement(&c), None);
        for r in check_frobenius(&c) {
            prop_assert_ne!(r.verdict, Verdict::Internal, "{}", r);
        }

        let star = involution(n, seed);
        prop_assert_eq!(h_disagreement(&c, &star), None);
        let subs = subsets(c.carrier());
        let mut map = StarMap::new();
        for (x, &s) in subs.iter().zip(&star) {
            map.insert(x, &subs[s as usize]);
        }
        let h = HStarCandidate::from(c.clone()).with_star(map);
        for r in check_hstar(&h).unwrap() {
            prop_assert_ne!(r.verdict, Verdict::Internal, "{}", r);
        }
    }
}

/// Every partial table of size at most three, including the canonical
/// star route.
#[test]
fn all_small_tables_agree() {
    for n in 0..=3 {
        let x = carrier(n);
        let bad = all_tables(n).into_par_iter().find_map_any(|t| {
            let c = FrobCandidate::from_table(&x, &t).unwrap();
            if let Some(d) = disagreement(&c) {
                return Some(format!("{t:?}: {d}"));
            }
            let internal = check_frobenius(&c).into_iter().any(|r| r.verdict == Verdict::Internal)
                || check_hstar(&c.into())
                    .map(|rs| rs.iter().any(|r| r.verdict == Verdict::Internal))
                    .unwrap_or(false);
            internal.then(|| format!("{t:?}: internal verdict"))
        });
        assert_eq!(bad, None, "n = {n}");
    }
}
