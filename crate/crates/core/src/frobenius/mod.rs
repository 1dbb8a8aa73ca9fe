//! Candidate multiplications `m : X×X ⇒ X` in **Rel** and checkers for the
//! relative Frobenius axioms (F), (M), (A), (U) and the relative H* axiom (H).
//!
//! Every axiom is evaluated twice: once as an equation between composite
//! relations (see [`compositional`]) and once through its elementwise
//! reading (see [`elementwise`]). The checkers report a witness from the
//! elementwise route and mark the report [`Verdict::Internal`] if the two
//! routes ever disagree.
//!
//! Notation: `hg` is the product `m(h, g)`, i.e. `((h, g), f) ∈ m` is written
//! `f = hg`, and `h`, `g` are *composable* when some such `f` exists.

pub mod compositional;
pub mod elementwise;
mod hstar;
mod replay;

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::relcore::{Carrier, FinSet, PtSubset, Rel, RelError};
use crate::report::{CheckReport, Law, Verdict};

pub use hstar::{canonical_star, check_h, check_h_with, is_pseudoinverse, star_of, DEFAULT_H_CAP};
pub use replay::{replay_frobenius, replay_hstar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobError {
    #[error("multiplication must be a relation X × X -> X, found {0}")]
    Shape(String),
    #[error("m({h}, {g}) is multi-valued: {values:?}")]
    MultiValued { h: String, g: String, values: Vec<String> },
    #[error("({a}{b}){c} and {a}({b}{c}) disagree")]
    AssociativityDisagreement { a: String, b: String, c: String },
    #[error("carrier of size {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("star is not defined on {subset}")]
    StarUndefined { subset: String },
    #[error(transparent)]
    Rel(#[from] RelError),
}

/// A carrier `X` with a relation `m : X×X ⇒ X`, to be tested against the
/// relative Frobenius axioms.
#[derive(Clone, PartialEq, Eq)]
pub struct FrobCandidate {
    carrier: Arc<FinSet>,
    mult: Rel,
}

impl FrobCandidate {
    pub fn new(carrier: Arc<FinSet>, mult: Rel) -> Result<Self, FrobError> {
        if mult.source() != &Carrier::power(&carrier, 2) || mult.target() != &Carrier::of(&carrier) {
            return Err(FrobError::Shape(format!("{} -> {}", mult.source(), mult.target())));
        }
        Ok(Self { carrier, mult })
    }

    /// Builds `m` as the graph of a partial table indexed `h * n + g`.
    pub fn from_table(carrier: &Arc<FinSet>, table: &[Option<usize>]) -> Result<Self, FrobError> {
        let mult = Rel::graph_of_partial(Carrier::power(carrier, 2), Carrier::of(carrier), table)?;
        Self::new(Arc::clone(carrier), mult)
    }

    pub fn carrier(&self) -> &Arc<FinSet> {
        &self.carrier
    }

    pub fn mult_rel(&self) -> &Rel {
        &self.mult
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        self.carrier.label(i)
    }

    #[inline]
    pub(crate) fn cell(&self, h: usize, g: usize) -> usize {
        h * self.carrier.len() + g
    }

    /// Whether `f ∈ hg`.
    #[inline]
    pub fn relates(&self, h: usize, g: usize, f: usize) -> bool {
        self.mult.contains(self.cell(h, g), f)
    }

    /// Every `f` with `((h, g), f) ∈ m`.
    pub fn products(&self, h: usize, g: usize) -> impl Iterator<Item = usize> + '_ {
        self.mult.image(self.cell(h, g))
    }

    pub fn composable(&self, h: usize, g: usize) -> bool {
        self.mult.image_len(self.cell(h, g)) > 0
    }

    /// The product `hg` if defined. Errors when `m` relates `(h, g)` to more
    /// than one element.
    pub fn mult(&self, h: usize, g: usize) -> Result<Option<usize>, FrobError> {
        let mut it = self.products(h, g);
        let first = it.next();
        match it.next() {
            None => Ok(first),
            Some(second) => {
                let mut values = vec![first.unwrap(), second];
                values.extend(it);
                Err(FrobError::MultiValued {
                    h: self.label(h).into(),
                    g: self.label(g).into(),
                    values: values.iter().map(|&v| self.label(v).into()).collect(),
                })
            }
        }
    }

    /// The multiplication as a partial table indexed `h * n + g`.
    pub fn table(&self) -> Result<Vec<Option<usize>>, FrobError> {
        let n = self.len();
        let mut out = Vec::with_capacity(n * n);
        for h in 0..n {
            for g in 0..n {
                out.push(self.mult(h, g)?);
            }
        }
        Ok(out)
    }

    pub(crate) fn labels(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.label(i).to_owned()).collect()
    }
}

impl std::fmt::Debug for FrobCandidate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FrobCandidate")
            .field("carrier", &self.carrier)
            .field("mult", &self.mult)
            .finish()
    }
}

/// An explicitly supplied involution on subsets of `X`, keyed by sorted
/// member indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StarMap {
    entries: BTreeMap<Vec<usize>, Vec<usize>>,
}

impl StarMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, from: &PtSubset, to: &PtSubset) {
        self.entries.insert(from.members().to_vec(), to.members().to_vec());
    }

    pub fn get(&self, from: &PtSubset) -> Option<PtSubset> {
        self.entries
            .get(from.members())
            .map(|m| PtSubset::new(from.carrier(), m.iter().copied()).expect("validated on insert"))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &[usize])> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v.as_slice()))
    }
}

/// A candidate relative H*-algebra: `m` plus an optional involution on
/// subsets. Without one, the canonical involution [`canonical_star`] is used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HStarCandidate {
    base: FrobCandidate,
    star: Option<StarMap>,
}

impl HStarCandidate {
    pub fn new(carrier: Arc<FinSet>, mult: Rel) -> Result<Self, FrobError> {
        Ok(FrobCandidate::new(carrier, mult)?.into())
    }

    pub fn with_star(mut self, star: StarMap) -> Self {
        self.star = Some(star);
        self
    }

    pub fn base(&self) -> &FrobCandidate {
        &self.base
    }

    pub fn star_map(&self) -> Option<&StarMap> {
        self.star.as_ref()
    }

    pub fn carrier(&self) -> &Arc<FinSet> {
        self.base.carrier()
    }

    pub fn mult_rel(&self) -> &Rel {
        self.base.mult_rel()
    }

    pub fn mult(&self, h: usize, g: usize) -> Result<Option<usize>, FrobError> {
        self.base.mult(h, g)
    }

    pub fn composable(&self, h: usize, g: usize) -> bool {
        self.base.composable(h, g)
    }
}

impl From<FrobCandidate> for HStarCandidate {
    fn from(base: FrobCandidate) -> Self {
        Self { base, star: None }
    }
}

fn agree(law: Law, witness: Option<crate::report::Witness>, compositional_holds: bool) -> CheckReport {
    if witness.is_none() != compositional_holds {
        return CheckReport::internal(
            law,
            format!(
                "elementwise and compositional evaluations disagree (elementwise {}, compositional {})",
                if witness.is_none() { "holds" } else { "fails" },
                if compositional_holds { "holds" } else { "fails" },
            ),
        );
    }
    CheckReport::from_witness(law, witness)
}

/// (M) `m ∘ m† = 1_X`: `m` is single valued and every element is a product.
pub fn check_m(c: &FrobCandidate) -> CheckReport {
    agree(Law::M, elementwise::m_witness(c), compositional::m_holds(c))
}

/// (F) `(1×m)∘(m†×1) = m†∘m = (m×1)∘(1×m†)`.
pub fn check_f(c: &FrobCandidate) -> CheckReport {
    agree(Law::F, elementwise::f_witness(c), compositional::f_holds(c))
}

/// (A) `m∘(1×m) = m∘(m×1)`.
pub fn check_a(c: &FrobCandidate) -> CheckReport {
    agree(Law::A, elementwise::a_witness(c), compositional::a_holds(c))
}

/// (U) existence of `u : 1 ⇒ X` with `m∘(u×1) = 1 = m∘(1×u)`.
///
/// Elementwise, a subset `U` works iff every `u ∈ U` acts as the identity
/// wherever it composes (a downward-closed condition) and every `f` has a
/// right and a left unit in `U` (an upward-closed condition). So a unit
/// exists iff the largest admissible set works, and it is unique iff no
/// single element can be dropped from that set.
///
/// With `assert_unique`, more than one qualifying subset is reported as an
/// internal error: under (F), (M), (A) the unit must be unique.
pub fn check_u(c: &FrobCandidate, assert_unique: bool) -> CheckReport {
    let search = elementwise::unit_search(c);
    let compositional_holds = compositional::unit_holds(c, &search.maximal);
    let mut report = agree(Law::U, search.witness.clone(), compositional_holds);
    if report.verdict != Verdict::Pass {
        return report;
    }
    if assert_unique && !search.unique {
        return CheckReport::internal(
            Law::U,
            format!(
                "unit is not unique although (F), (M), (A) hold; maximal unit {}",
                search.maximal.display()
            ),
        );
    }
    report.unit = Some(search.maximal);
    if !search.unique {
        report.note = Some("several unit subsets qualify; reporting the largest".into());
    }
    report
}

/// Runs (M), (F), (A), (U) in that order.
pub fn check_frobenius(c: &FrobCandidate) -> Vec<CheckReport> {
    let m = check_m(c);
    let f = check_f(c);
    let a = check_a(c);
    let u = check_u(c, m.passed() && f.passed() && a.passed());
    vec![m, f, a, u]
}

/// The unit subset of a candidate that passes (U), if any.
pub fn unit_of(c: &FrobCandidate) -> Option<PtSubset> {
    check_u(c, false).unit
}

/// Runs (M), (A), (H) with the default subset cap.
pub fn check_hstar(c: &HStarCandidate) -> Result<Vec<CheckReport>, FrobError> {
    check_hstar_with(c, DEFAULT_H_CAP)
}

pub fn check_hstar_with(c: &HStarCandidate, cap: usize) -> Result<Vec<CheckReport>, FrobError> {
    let h = check_h_with(c, cap)?;
    Ok(vec![check_m(c.base()), check_a(c.base()), h])
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::report::all_pass;

    fn w(r: &CheckReport) -> Vec<String> {
        r.witness.as_ref().unwrap().elements.clone()
    }

    #[test]
    fn mult_examples() {
        let z2 = z2();
        assert_eq!(z2.mult(1, 1).unwrap(), Some(0));
        let d2 = d2();
        assert!(!d2.composable(0, 1));
        let sl2 = sl2();
        assert_eq!(sl2.mult(0, 1).unwrap(), Some(1));
        let bad = cand(&["e", "a"], &[("e", "e", "e"), ("e", "e", "a")]);
        assert!(matches!(bad.mult(0, 0), Err(FrobError::MultiValued { .. })));
    }

    #[test]
    fn m_examples() {
        assert!(check_m(&z2()).passed());
        let multi = check_m(&cand(&["e", "a"], &[("e", "e", "e"), ("e", "e", "a")]));
        assert_eq!(multi.verdict, Verdict::Fail);
        assert_eq!(multi.witness.as_ref().unwrap().clause, "multi-valued");
        assert_eq!(w(&multi), ["e", "e", "e", "a"]);
        let missing = check_m(&cand(&["e", "a"], &[("e", "e", "e")]));
        assert_eq!(missing.witness.as_ref().unwrap().clause, "not-a-product");
        assert_eq!(w(&missing), ["a"]);
    }

    #[test]
    fn f_examples() {
        assert!(check_f(&z2()).passed());
        assert!(check_f(&z1()).passed());
        let r = check_f(&sl2());
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(replay_frobenius(&sl2(), &r));
    }

    #[test]
    fn sl2_mediator_witness_replays() {
        // aa = ea, yet no e' with a = e'a and e = ae'
        let sl2 = sl2();
        let report = CheckReport::fail(
            Law::F,
            crate::report::Witness::new("right", ["a", "a", "e", "a"].map(String::from).to_vec(), String::new()),
        );
        assert!(replay_frobenius(&sl2, &report));
    }

    #[test]
    fn a_examples() {
        assert!(check_a(&z2()).passed());
        let bad = cand(
            &["a", "b"],
            &[("a", "a", "b"), ("a", "b", "b"), ("b", "a", "b"), ("b", "b", "a")],
        );
        let r = check_a(&bad);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(&w(&r)[..3], ["a", "a", "b"]);
        let empty = cand(&["a", "b"], &[]);
        assert!(check_a(&empty).passed());
    }

    #[test]
    fn u_examples() {
        let r = check_u(&z2(), true);
        assert!(r.passed());
        assert_eq!(r.unit.unwrap().labels(), ["e"]);
        let r = check_u(&d2(), true);
        assert_eq!(r.unit.unwrap().labels(), ["u", "v"]);
        let bad = cand(&["a", "b"], &[("a", "a", "a"), ("a", "b", "b")]);
        let r = check_u(&bad, false);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(w(&r), ["b"]);
        assert_eq!(r.witness.as_ref().unwrap().clause, "no-right-unit");
        assert!(replay_frobenius(&bad, &r));
    }

    #[test]
    fn frobenius_examples() {
        assert!(all_pass(&check_frobenius(&z2())));
        let sl2 = check_frobenius(&sl2());
        let verdicts: Vec<_> = sl2.iter().map(|r| (r.law, r.passed())).collect();
        assert_eq!(
            verdicts,
            [(Law::M, true), (Law::F, false), (Law::A, true), (Law::U, true)]
        );
        assert_eq!(sl2[3].unit.as_ref().unwrap().labels(), ["e"]);
        assert!(all_pass(&check_frobenius(&p2())));
        assert_eq!(p2().mult_rel().len(), 8);
    }

    #[test]
    fn empty_structure_is_frobenius() {
        let c = cand(&[], &[]);
        let reports = check_frobenius(&c);
        assert!(all_pass(&reports));
        assert!(reports[3].unit.as_ref().unwrap().is_empty());
    }

    #[test]
    fn shape_is_validated() {
        let x = set("X", &["e"]);
        let r = Rel::identity(&Carrier::of(&x));
        assert!(matches!(FrobCandidate::new(x, r), Err(FrobError::Shape(_))));
    }
}
