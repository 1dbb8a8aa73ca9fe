//! Enumeration over partial multiplication tables `X×X ⇀ X`.
//!
//! Single-valued relations are exactly partial tables, so enumerating
//! tables already restricts to candidates that can satisfy (M). A cheap
//! prefilter (every element is a product, table associativity) then
//! discards most of the space before the full checkers run.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use super::{require_cap, CensusError, CensusResult, Kind};
use crate::frobenius::{check_frobenius, check_hstar, FrobCandidate, HStarCandidate};
use crate::relcore::FinSet;
use crate::report::all_pass;

/// `X = {0, …, n-1}`.
pub fn carrier(n: usize) -> Arc<FinSet> {
    FinSet::numbered("X", n).into_arc()
}

/// `(n+1)^(n²)`.
pub fn table_count(n: usize) -> u64 {
    (n as u64 + 1).pow((n * n) as u32)
}

/// The table with the given index; cell 0 is the most significant digit
/// base `n+1`, digit 0 meaning undefined.
pub fn decode_table(n: usize, mut index: u64) -> Vec<Option<usize>> {
    let base = n as u64 + 1;
    let mut t = vec![None; n * n];
    for cell in t.iter_mut().rev() {
        let d = (index % base) as usize;
        index /= base;
        *cell = d.checked_sub(1);
    }
    t
}

/// Necessary conditions for (M) and (A) on a partial table: every element
/// is a product, and `(ab)c = a(bc)` with both sides undefined together.
pub fn passes_prefilter(n: usize, t: &[Option<usize>]) -> bool {
    let mut hit = vec![false; n];
    for v in t.iter().flatten() {
        hit[*v] = true;
    }
    if !hit.iter().all(|&h| h) {
        return false;
    }
    let m = |a: usize, b: usize| t[a * n + b];
    for a in 0..n {
        for b in 0..n {
            let ab = m(a, b);
            for c in 0..n {
                let left = ab.and_then(|x| m(x, c));
                let right = m(b, c).and_then(|y| m(a, y));
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// Every table index passing `keep`, in index order. Partitioned by the
/// first row.
fn scan(n: usize, keep: impl Fn(&[Option<usize>]) -> bool + Sync) -> Vec<Vec<Option<usize>>> {
    if n == 0 {
        return if keep(&[]) { vec![vec![]] } else { vec![] };
    }
    let rows = (n as u64 + 1).pow(n as u32);
    let rest = (n as u64 + 1).pow((n * n - n) as u32);
    (0..rows)
        .into_par_iter()
        .map(|r| {
            let mut out = Vec::new();
            for q in 0..rest {
                let t = decode_table(n, r * rest + q);
                if keep(&t) {
                    out.push(t);
                }
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// All tables on `n` elements, unfiltered. Only sensible for `n ≤ 3`.
pub fn all_tables(n: usize) -> Vec<Vec<Option<usize>>> {
    scan(n, |_| true)
}

fn candidate(x: &Arc<FinSet>, t: &[Option<usize>]) -> FrobCandidate {
    FrobCandidate::from_table(x, t).expect("tables are well typed")
}

/// Every relation on `X` passing (M), (F), (A), (U).
pub fn enumerate_frobenius(n: usize) -> Result<CensusResult<FrobCandidate>, CensusError> {
    enumerate_frobenius_with(n, None)
}

pub fn enumerate_frobenius_with(n: usize, cap: Option<usize>) -> Result<CensusResult<FrobCandidate>, CensusError> {
    require_cap(Kind::Frobenius, n, cap)?;
    let start = Instant::now();
    let x = carrier(n);
    let tables = scan(n, |t| {
        passes_prefilter(n, t) && all_pass(&check_frobenius(&candidate(&x, t)))
    });
    let found = tables.iter().map(|t| candidate(&x, t)).collect();
    Ok(CensusResult::timed(Kind::Frobenius, n, start, found))
}

/// Every relation on `X` passing (M), (A), (H) with the canonical star.
pub fn enumerate_hstar(n: usize) -> Result<CensusResult<HStarCandidate>, CensusError> {
    enumerate_hstar_with(n, None)
}

pub fn enumerate_hstar_with(n: usize, cap: Option<usize>) -> Result<CensusResult<HStarCandidate>, CensusError> {
    require_cap(Kind::HStar, n, cap)?;
    let start = Instant::now();
    let x = carrier(n);
    let passes = |t: &[Option<usize>]| {
        let c: HStarCandidate = candidate(&x, t).into();
        check_hstar(&c).is_ok_and(|r| all_pass(&r))
    };
    let tables = scan(n, |t| passes_prefilter(n, t) && passes(t));
    let found = tables.iter().map(|t| candidate(&x, t).into()).collect();
    Ok(CensusResult::timed(Kind::HStar, n, start, found))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Number of isomorphism classes among the given tables, by brute-force
/// orbit computation under relabelling of `X`.
pub fn iso_class_count(n: usize, tables: &[Vec<Option<usize>>]) -> usize {
    let perms = permutations(n);
    let canon = |t: &[Option<usize>]| {
        perms
            .iter()
            .map(|p| {
                let mut u = vec![None; n * n];
                for a in 0..n {
                    for b in 0..n {
                        u[p[a] * n + p[b]] = t[a * n + b].map(|v| p[v]);
                    }
                }
                u
            })
            .min()
            .unwrap_or_default()
    };
    let classes: std::collections::BTreeSet<_> = tables.iter().map(|t| canon(t)).collect();
    classes.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::check_frobenius;

    #[test]
    fn decode_is_base_n_plus_one() {
        assert_eq!(decode_table(2, 0), [None; 4]);
        assert_eq!(decode_table(2, 1), [None, None, None, Some(0)]);
        assert_eq!(decode_table(2, 80), [Some(1); 4]);
        assert_eq!(table_count(3), 262_144);
    }

    #[test]
    fn frobenius_small_counts() {
        assert_eq!(enumerate_frobenius(0).unwrap().count(), 1);
        assert_eq!(enumerate_frobenius(1).unwrap().count(), 1);
        assert_eq!(enumerate_frobenius(2).unwrap().count(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_frobenius_with(4, Some(3)),
            Err(CensusError::CapExceeded { n: 4, cap: 3, .. })
        ));
    }

    /// Every table the prefilter rejects is also rejected by the full
    /// checker; sampled at one in a hundred for n = 3, exhaustive below.
    #[test]
    fn prefilter_is_sound() {
        for n in 0..=3usize {
            let x = carrier(n);
            let step = if n == 3 { 100 } else { 1 };
            let rejected: Vec<u64> = (0..table_count(n))
                .step_by(step)
                .filter(|&i| !passes_prefilter(n, &decode_table(n, i)))
                .collect();
            let wrongly_pruned = rejected.par_iter().find_any(|&&i| {
                let c = candidate(&x, &decode_table(n, i));
                let frob = all_pass(&check_frobenius(&c));
                let hstar = check_hstar(&c.clone().into()).is_ok_and(|r| all_pass(&r));
                frob || hstar
            });
            assert_eq!(wrongly_pruned, None, "n = {n}");
        }
    }

    #[test]
    fn iso_classes_of_small_frobenius() {
        let r = enumerate_frobenius(2).unwrap();
        let tables: Vec<_> = r.structures.iter().map(|c| c.table().unwrap()).collect();
        // D2 and Z2
        assert_eq!(iso_class_count(2, &tables), 2);
    }
}
