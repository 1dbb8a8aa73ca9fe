use rayon::prelude::*;

use super::{compositional, elementwise, FrobCandidate, FrobError, HStarCandidate};
use crate::relcore::PtSubset;
use crate::report::{subset_label, CheckReport, Law, Witness};

/// Largest carrier for which (H) is checked by default; the check quantifies
/// over all `2^|X|` subsets.
pub const DEFAULT_H_CAP: usize = 12;

/// `xyz` bracketed both ways. Errors when exactly one bracketing is defined
/// or the two values differ.
fn triple(c: &FrobCandidate, x: usize, y: usize, z: usize) -> Result<Option<usize>, FrobError> {
    let left = match c.mult(x, y)? {
        Some(xy) => c.mult(xy, z)?,
        None => None,
    };
    let right = match c.mult(y, z)? {
        Some(yz) => c.mult(x, yz)?,
        None => None,
    };
    if left != right {
        return Err(FrobError::AssociativityDisagreement {
            a: c.label(x).into(),
            b: c.label(y).into(),
            c: c.label(z).into(),
        });
    }
    Ok(left)
}

/// Whether `b` is a pseudoinverse of `a`: `bab = b` and `aba = a`.
pub fn is_pseudoinverse(c: &FrobCandidate, a: usize, b: usize) -> Result<bool, FrobError> {
    Ok(triple(c, b, a, b)? == Some(b) && triple(c, a, b, a)? == Some(a))
}

/// The canonical involution on subsets: `A* = {b | bab = b and aba = a for
/// some a ∈ A}`, the pseudoinverses of members of `A`.
pub fn canonical_star(c: &FrobCandidate, a: &PtSubset) -> Result<PtSubset, FrobError> {
    let mut members = Vec::new();
    for b in 0..c.len() {
        for &x in a.members() {
            if is_pseudoinverse(c, x, b)? {
                members.push(b);
                break;
            }
        }
    }
    Ok(PtSubset::new(c.carrier(), members)?)
}

/// `x*` under the candidate's supplied involution, or the canonical one.
pub fn star_of(c: &HStarCandidate, x: &PtSubset) -> Result<PtSubset, FrobError> {
    match c.star_map() {
        Some(map) => map
            .get(x)
            .ok_or_else(|| FrobError::StarUndefined { subset: x.display() }),
        None => canonical_star(c.base(), x),
    }
}

fn error_witness(e: FrobError) -> Witness {
    match e {
        FrobError::MultiValued { h, g, values } => {
            let eq = format!("{h}{g} has several values {values:?}");
            let mut elements = vec![h, g];
            elements.extend(values.into_iter().take(2));
            Witness::new("multi-valued", elements, eq)
        }
        FrobError::AssociativityDisagreement { a, b, c } => {
            let eq = format!("({a}{b}){c} ≠ {a}({b}{c})");
            Witness::new("nonassociative", vec![a, b, c], eq)
        }
        FrobError::StarUndefined { subset } => {
            let eq = format!("the supplied involution has no entry for {subset}");
            Witness::new("star-undefined", vec![subset], eq)
        }
        other => Witness::new("error", vec![], other.to_string()),
    }
}

fn check_subset(c: &HStarCandidate, mask: u64) -> Option<CheckReport> {
    let x = PtSubset::from_mask(c.carrier(), mask);
    let xs = match star_of(c, &x) {
        Ok(s) => s,
        Err(e) => return Some(CheckReport::fail(Law::H, error_witness(e))),
    };
    let xss = match star_of(c, &xs) {
        Ok(s) => s,
        Err(e) => return Some(CheckReport::fail(Law::H, error_witness(e))),
    };
    if xss != x {
        let eq = format!(
            "{}* = {} but {}* = {}",
            x.display(),
            xs.display(),
            xs.display(),
            xss.display()
        );
        return Some(CheckReport::fail(
            Law::H,
            Witness::new(
                "star-not-involutive",
                vec![subset_label(&x), subset_label(&xs), subset_label(&xss)],
                eq,
            ),
        ));
    }
    let base = c.base();
    let mismatch = elementwise::h_mismatch(base, &x, &xs);
    if mismatch.is_none() != compositional::h_holds(base, &x, &xs) {
        return Some(CheckReport::internal(
            Law::H,
            format!("elementwise and compositional (H) disagree at x = {}", x.display()),
        ));
    }
    mismatch.map(|(clause, p, q)| {
        let (pl, ql) = (base.label(p), base.label(q));
        let eq = if clause == "right" {
            format!(
                "m∘(1×x*) relates {pl} to {ql} iff {ql} ∈ {pl}·{xs}, (1×x†)∘m† iff {pl} ∈ {ql}·{x}; these differ",
                xs = xs.display(),
                x = x.display()
            )
        } else {
            format!(
                "m∘(x*×1) relates {pl} to {ql} iff {ql} ∈ {xs}·{pl}, (x†×1)∘m† iff {pl} ∈ {x}·{ql}; these differ",
                xs = xs.display(),
                x = x.display()
            )
        };
        CheckReport::fail(
            Law::H,
            Witness::new(
                clause,
                vec![subset_label(&x), subset_label(&xs), pl.to_owned(), ql.to_owned()],
                eq,
            ),
        )
    })
}

/// (H) with the default cap.
pub fn check_h(c: &HStarCandidate) -> Result<CheckReport, FrobError> {
    check_h_with(c, DEFAULT_H_CAP)
}

/// (H): for every subset `x ⊆ X`, `m∘(1×x*) = (1×x†)∘m†` and
/// `m∘(x*×1) = (x†×1)∘m†`, with `*` required to be an involution on the
/// subsets it is queried on. Subsets are scanned in parallel; the witness is
/// always the one for the smallest subset mask.
pub fn check_h_with(c: &HStarCandidate, cap: usize) -> Result<CheckReport, FrobError> {
    let n = c.carrier().len();
    if n > cap || n >= 64 {
        return Err(FrobError::CapExceeded { size: n, cap });
    }
    let total: u64 = 1 << n;
    let first = (0..total)
        .into_par_iter()
        .filter_map(|mask| check_subset(c, mask))
        .find_first(|_| true);
    Ok(first.unwrap_or_else(|| CheckReport::pass(Law::H)))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{check_hstar, replay_hstar, StarMap};
    use super::*;
    use crate::report::{all_pass, Verdict};

    fn sub(c: &FrobCandidate, labels: &[&str]) -> PtSubset {
        PtSubset::from_labels(c.carrier(), labels).unwrap()
    }

    #[test]
    fn canonical_star_examples() {
        let z2 = z2();
        assert_eq!(canonical_star(&z2, &sub(&z2, &["a"])).unwrap().labels(), ["a"]);
        let sl2 = sl2();
        assert_eq!(canonical_star(&sl2, &sub(&sl2, &["a"])).unwrap().labels(), ["a"]);
        assert!(canonical_star(&z2, &sub(&z2, &[])).unwrap().is_empty());
        assert_eq!(
            canonical_star(&z2, &sub(&z2, &["e", "a"])).unwrap().labels(),
            ["e", "a"]
        );
    }

    #[test]
    fn star_reports_multivalued_products() {
        let bad = cand(&["e", "a"], &[("e", "e", "e"), ("e", "e", "a")]);
        let err = canonical_star(&bad, &sub(&bad, &["e"])).unwrap_err();
        assert!(matches!(err, FrobError::MultiValued { .. }));
    }

    #[test]
    fn star_reports_bracketing_disagreement() {
        // ee = a, ea defined, ae undefined: (ee)a = aa? undefined, e(ea) defined
        let c = cand(&["e", "a"], &[("e", "e", "a"), ("e", "a", "e")]);
        let err = canonical_star(&c, &sub(&c, &["e"])).unwrap_err();
        assert!(matches!(err, FrobError::AssociativityDisagreement { .. }));
    }

    #[test]
    fn h_examples() {
        assert!(check_h(&z2().into()).unwrap().passed());
        let sl2: HStarCandidate = sl2().into();
        let r = check_h(&sl2).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let w = r.witness.as_ref().unwrap();
        assert_eq!(w.clause, "right");
        assert_eq!(w.elements, ["{a}", "{a}", "e", "a"]);
        assert!(replay_hstar(&sl2, &r));
        let empty = cand(&[], &[]);
        assert!(check_h(&empty.into()).unwrap().passed());
    }

    #[test]
    fn hstar_examples() {
        assert!(all_pass(&check_hstar(&z2().into()).unwrap()));
        let reports = check_hstar(&sl2().into()).unwrap();
        assert!(reports[0].passed() && reports[1].passed() && !reports[2].passed());
    }

    #[test]
    fn cap_is_enforced() {
        let labels: Vec<String> = (0..13).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let c = cand(&refs, &[]);
        assert!(matches!(
            check_h(&c.into()),
            Err(FrobError::CapExceeded { size: 13, cap: 12 })
        ));
    }

    #[test]
    fn supplied_star_is_used_and_must_be_total() {
        let z2 = z2();
        let mut star = StarMap::new();
        for labels in [&[][..], &["e"], &["a"], &["e", "a"]] {
            let s = sub(&z2, labels);
            star.insert(&s, &s);
        }
        let c = HStarCandidate::from(z2.clone()).with_star(star.clone());
        assert!(check_h(&c).unwrap().passed());

        let mut partial = StarMap::new();
        partial.insert(&sub(&z2, &[]), &sub(&z2, &[]));
        let c = HStarCandidate::from(z2.clone()).with_star(partial);
        let r = check_h(&c).unwrap();
        assert_eq!(r.witness.as_ref().unwrap().clause, "star-undefined");
        assert!(replay_hstar(&c, &r));

        // an involution that breaks (H): swap {e} and {a}
        let mut swapped = star;
        swapped.insert(&sub(&z2, &["e"]), &sub(&z2, &["a"]));
        swapped.insert(&sub(&z2, &["a"]), &sub(&z2, &["e"]));
        let c = HStarCandidate::from(z2).with_star(swapped);
        let r = check_h(&c).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(replay_hstar(&c, &r));
    }
}
