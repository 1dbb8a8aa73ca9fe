//! Set-of-pairs evaluation of relational operations.
//!
//! This is the reference backend that the dense matrix kernels in
//! [`Rel`](super::Rel) are cross-checked against. It is deliberately naive.

use std::collections::{BTreeMap, BTreeSet};

pub type PairSet = BTreeSet<(usize, usize)>;

/// `{(a, c) | ∃b: (a, b) ∈ f ∧ (b, c) ∈ g}`.
pub fn compose(f: &PairSet, g: &PairSet) -> PairSet {
    let mut by_source: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(b, c) in g {
        by_source.entry(b).or_default().push(c);
    }
    let mut out = PairSet::new();
    for &(a, b) in f {
        if let Some(cs) = by_source.get(&b) {
            out.extend(cs.iter().map(|&c| (a, c)));
        }
    }
    out
}

pub fn dagger(r: &PairSet) -> PairSet {
    r.iter().map(|&(a, b)| (b, a)).collect()
}

/// Monoidal product with flattened indices; `c_len`/`d_len` are the
/// cardinalities of the second factor's source and target.
pub fn product(r: &PairSet, s: &PairSet, c_len: usize, d_len: usize) -> PairSet {
    let mut out = PairSet::new();
    for &(a, b) in r {
        for &(c, d) in s {
            out.insert((a * c_len + c, b * d_len + d));
        }
    }
    out
}
