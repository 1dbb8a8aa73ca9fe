//! Replays weak-monoid family witnesses by evaluating the cited equation
//! elementwise at the witness, without building composite relations.

use super::{CyclicCandidate, WeakMonoidCandidate, WeakStarCandidate};
use crate::relcore::{Carrier, FinSet, Rel};
use crate::report::{CheckReport, Law};

fn indices(x: &FinSet, labels: &[String]) -> Option<Vec<usize>> {
    labels.iter().map(|l| x.index_of(l)).collect()
}

/// `L1` as a membership vector and `L3` as a ternary predicate.
struct Data<'a> {
    n: usize,
    l1: Vec<bool>,
    l3: &'a Rel,
}

impl Data<'_> {
    fn l3(&self, a: usize, b: usize, c: usize) -> bool {
        self.l3.contains(a * self.n + b, c)
    }

    fn l2_left(&self, x: usize, y: usize) -> bool {
        (0..self.n).any(|u| self.l1[u] && self.l3(u, x, y))
    }

    fn l2_right(&self, x: usize, y: usize) -> bool {
        (0..self.n).any(|u| self.l1[u] && self.l3(x, u, y))
    }
}

fn replay_with(x: &FinSet, l1: Vec<bool>, l3: &Rel, report: &CheckReport) -> bool {
    let Some(w) = &report.witness else {
        return false;
    };
    let Some(e) = indices(x, &w.elements) else {
        return false;
    };
    let d = Data { n: x.len(), l1, l3 };
    let differs = |l: bool, r: bool| match w.clause.as_str() {
        "left-only" => l && !r,
        "right-only" => r && !l,
        _ => false,
    };
    let n = d.n;
    match (report.law, e.as_slice()) {
        (Law::WeakAssociativity, &[f, g, h, z]) => {
            let l = (0..n).any(|y| d.l3(f, g, y) && d.l3(y, h, z));
            let r = (0..n).any(|y| d.l3(g, h, y) && d.l3(f, y, z));
            differs(l, r)
        }
        (Law::WeakUnitality, &[x, y]) => differs(d.l2_left(x, y), d.l2_right(x, y)),
        (Law::ProjectorIdempotence, &[x, y]) => {
            let sq = (0..n).any(|z| d.l2_left(x, z) && d.l2_left(z, y));
            differs(sq, d.l2_left(x, y))
        }
        _ => false,
    }
}

pub fn replay_weak_monoid(c: &WeakMonoidCandidate, report: &CheckReport) -> bool {
    let x = c.carrier();
    let l1 = (0..x.len()).map(|i| c.l1().contains(i)).collect();
    replay_with(x, l1, c.l3(), report)
}

/// `L1 = {z | ((a, b), z) ∈ L3 for some (a, b) ∈ ψ}`.
fn l1_of(psi: &Rel, l3: &Rel) -> Vec<bool> {
    let n = psi.target().len();
    (0..n)
        .map(|z| psi.pairs().any(|(a, b)| l3.contains(a * n + b, z)))
        .collect()
}

fn replay_involutivity(psi: &Rel, x: &FinSet, report: &CheckReport, converse: bool) -> bool {
    let Some(w) = &report.witness else {
        return false;
    };
    let Some(e) = indices(x, &w.elements) else {
        return false;
    };
    let &[a, b] = e.as_slice() else {
        return false;
    };
    let n = x.len();
    let composite = if converse {
        (0..n).any(|z| psi.contains(z, a) && psi.contains(z, b))
    } else {
        (0..n).any(|z| psi.contains(a, z) && psi.contains(b, z))
    };
    match w.clause.as_str() {
        "left-only" => composite && a != b,
        "right-only" => !composite && a == b,
        _ => false,
    }
}

pub fn replay_weak_star(c: &WeakStarCandidate, report: &CheckReport) -> bool {
    match report.law {
        Law::Involutivity => replay_involutivity(c.psi(), c.carrier(), report, false),
        Law::InvolutivityConverse => replay_involutivity(c.psi(), c.carrier(), report, true),
        _ => replay_with(c.carrier(), l1_of(c.psi(), c.l3()), c.l3(), report),
    }
}

pub fn replay_cyclic(c: &CyclicCandidate, report: &CheckReport) -> bool {
    if report.law != Law::Cyclicity {
        let n = c.carrier().len();
        // L3 = ψ†∘L: ((a, b), z) with ((a, b), d) ∈ L and (z, d) ∈ ψ
        let xx = Carrier::power(c.carrier(), 2);
        let pairs: Vec<(usize, usize)> = (0..xx.len())
            .flat_map(|ab| (0..n).map(move |z| (ab, z)))
            .filter(|&(ab, z)| (0..n).any(|d| c.l().contains(ab, d) && c.psi().contains(z, d)))
            .collect();
        let l3 = Rel::from_pairs(xx, Carrier::of(c.carrier()), pairs).expect("in range");
        let star = WeakStarCandidate::new(c.carrier().clone(), c.psi().clone(), l3).expect("typed");
        return replay_weak_star(&star, report);
    }
    let Some(w) = &report.witness else {
        return false;
    };
    let Some(e) = indices(c.carrier(), &w.elements) else {
        return false;
    };
    let &[a, b, z] = e.as_slice() else {
        return false;
    };
    let n = c.carrier().len();
    let in_l = |p: usize, q: usize, r: usize| c.l().contains(p * n + q, r);
    // (σ^k ∘ L_R) contains t iff σ^{-k}(t) ∈ L_R; σ^{-1}(a,b,c) = (b,c,a)
    let rotated = if w.clause.starts_with("sigma-squared") {
        in_l(z, a, b)
    } else {
        in_l(b, z, a)
    };
    in_l(a, b, z) != rotated
}
