//! Re-evaluates a failure witness through the composite relations of the
//! equation it cites. A replay returns `true` only if the violation is
//! reproduced.

use super::{compositional, star_of, FrobCandidate, HStarCandidate};
use crate::relcore::{Carrier, PtSubset};
use crate::report::{parse_subset_label, CheckReport, Law, Witness};

fn idx(c: &FrobCandidate, w: &Witness) -> Option<Vec<usize>> {
    w.elements.iter().map(|l| c.carrier().index_of(l)).collect()
}

fn subset(c: &FrobCandidate, label: &str) -> Option<PtSubset> {
    let labels = parse_subset_label(label)?;
    PtSubset::from_labels(c.carrier(), &labels).ok()
}

fn pair_index(c: &FrobCandidate, a: usize, b: usize) -> usize {
    Carrier::power(c.carrier(), 2).index(&[a, b])
}

fn replay_m(c: &FrobCandidate, w: &Witness) -> Option<bool> {
    let e = idx(c, w)?;
    let side = compositional::m_side(c);
    match (w.clause.as_str(), e.as_slice()) {
        ("multi-valued", &[h, g, f1, f2]) => {
            Some(f1 != f2 && c.relates(h, g, f1) && c.relates(h, g, f2) && side.contains(f1, f2))
        }
        ("not-a-product", &[f]) => Some(!side.contains(f, f)),
        _ => None,
    }
}

fn replay_f(c: &FrobCandidate, w: &Witness) -> Option<bool> {
    let e = idx(c, w)?;
    let &[a, b, cc, d] = e.as_slice() else {
        return None;
    };
    let (left, middle, right) = compositional::f_sides(c);
    let (s, t) = (pair_index(c, a, b), pair_index(c, cc, d));
    match w.clause.as_str() {
        "left" => Some(left.contains(s, t) != middle.contains(s, t)),
        "right" => Some(right.contains(s, t) != middle.contains(s, t)),
        _ => None,
    }
}

fn replay_a(c: &FrobCandidate, w: &Witness) -> Option<bool> {
    let e = idx(c, w)?;
    let &[f, g, h, z] = e.as_slice() else {
        return None;
    };
    let (left, right) = compositional::a_sides(c);
    let s = Carrier::power(c.carrier(), 3).index(&[f, g, h]);
    match w.clause.as_str() {
        "left-only" => Some(left.contains(s, z) && !right.contains(s, z)),
        "right-only" => Some(right.contains(s, z) && !left.contains(s, z)),
        _ => None,
    }
}

/// A (U) failure at `f` is reproduced when every `u` that would supply the
/// missing unit fails to act as an identity somewhere. Both facts are read
/// off `m∘(1×{u})` and `m∘({u}×1)`.
fn replay_u(c: &FrobCandidate, w: &Witness) -> Option<bool> {
    let e = idx(c, w)?;
    let &[f] = e.as_slice() else {
        return None;
    };
    let right_side = match w.clause.as_str() {
        "no-right-unit" => true,
        "no-left-unit" => false,
        _ => return None,
    };
    let n = c.len();
    let ok = (0..n).all(|u| {
        let single = PtSubset::new(c.carrier(), [u]).expect("in range");
        let (r, l) = compositional::unit_sides(c, &single);
        let supplies = if right_side { r.contains(f, f) } else { l.contains(f, f) };
        let admissible = r.pairs().all(|(p, q)| p == q) && l.pairs().all(|(p, q)| p == q);
        !(supplies && admissible)
    });
    Some(ok)
}

/// Replays a failing (M), (F), (A) or (U) report.
pub fn replay_frobenius(c: &FrobCandidate, report: &CheckReport) -> bool {
    let Some(w) = &report.witness else {
        return false;
    };
    let result = match report.law {
        Law::M => replay_m(c, w),
        Law::F => replay_f(c, w),
        Law::A => replay_a(c, w),
        Law::U => replay_u(c, w),
        _ => None,
    };
    result.unwrap_or(false)
}

fn replay_h(c: &HStarCandidate, w: &Witness) -> Option<bool> {
    let base = c.base();
    match w.clause.as_str() {
        "right" | "left" => {
            let [x, xs, p, q] = w.elements.as_slice() else {
                return None;
            };
            let x = subset(base, x)?;
            let xs = subset(base, xs)?;
            if star_of(c, &x).ok()? != xs {
                return Some(false);
            }
            let p = base.carrier().index_of(p)?;
            let q = base.carrier().index_of(q)?;
            let ((rl, rr), (ll, lr)) = compositional::h_sides(base, &x, &xs);
            Some(if w.clause == "right" {
                rl.contains(p, q) != rr.contains(p, q)
            } else {
                ll.contains(p, q) != lr.contains(p, q)
            })
        }
        "star-not-involutive" => {
            let [x, xs, xss] = w.elements.as_slice() else {
                return None;
            };
            let (x, xs, xss) = (subset(base, x)?, subset(base, xs)?, subset(base, xss)?);
            Some(star_of(c, &x).ok()? == xs && star_of(c, &xs).ok()? == xss && xss != x)
        }
        "star-undefined" => {
            let x = subset(base, w.elements.first()?)?;
            Some(star_of(c, &x).is_err())
        }
        "multi-valued" => {
            let e = idx(base, w)?;
            let &[h, g, f1, f2] = e.as_slice() else {
                return None;
            };
            Some(f1 != f2 && base.relates(h, g, f1) && base.relates(h, g, f2))
        }
        "nonassociative" => {
            let e = idx(base, w)?;
            let &[a, b, cc] = e.as_slice() else {
                return None;
            };
            let left = base.mult(a, b).ok()?.and_then(|ab| base.mult(ab, cc).ok().flatten());
            let right = base.mult(b, cc).ok()?.and_then(|bc| base.mult(a, bc).ok().flatten());
            Some(left != right)
        }
        _ => None,
    }
}

/// Replays a failing (M), (A) or (H) report of an H* candidate.
pub fn replay_hstar(c: &HStarCandidate, report: &CheckReport) -> bool {
    match report.law {
        Law::H => report.witness.as_ref().and_then(|w| replay_h(c, w)).unwrap_or(false),
        _ => replay_frobenius(c.base(), report),
    }
}
