//! Explicit finite groupoids and semigroupoids.
//!
//! Composition is `m(g, f)`, "g after f", defined exactly when
//! `s(g) = t(f)`; tables are indexed `g * |G1| + f`.
//!
//! Laws with partial products are tested only where every product they
//! mention is defined; an equation with one side defined and the other not
//! counts as unequal.

use std::sync::Arc;

use thiserror::Error;

use crate::relcore::FinSet;
use crate::report::{CheckReport, FailedChecks, Law, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("malformed structure: {0}")]
    Shape(String),
    #[error("precondition failed: {0}")]
    Precondition(FailedChecks),
}

/// Objects, arrows, source and target maps, and composition on the pullback
/// `G1 ×_{G0} G1 = {(g, f) | s(g) = t(f)}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Semigroupoid {
    objects: Arc<FinSet>,
    arrows: Arc<FinSet>,
    source: Vec<usize>,
    target: Vec<usize>,
    comp: Vec<Option<usize>>,
}

impl Semigroupoid {
    pub fn new(
        objects: Arc<FinSet>,
        arrows: Arc<FinSet>,
        source: Vec<usize>,
        target: Vec<usize>,
        comp: Vec<Option<usize>>,
    ) -> Result<Self, GroupoidError> {
        let (n0, n1) = (objects.len(), arrows.len());
        if source.len() != n1 || target.len() != n1 {
            return Err(GroupoidError::Shape("s and t must be total on arrows".into()));
        }
        if source.iter().chain(&target).any(|&x| x >= n0) {
            return Err(GroupoidError::Shape("s or t names an unknown object".into()));
        }
        if comp.len() != n1 * n1 {
            return Err(GroupoidError::Shape(format!(
                "composition table has {} cells, expected {}",
                comp.len(),
                n1 * n1
            )));
        }
        if comp.iter().flatten().any(|&v| v >= n1) {
            return Err(GroupoidError::Shape("composition names an unknown arrow".into()));
        }
        Ok(Self {
            objects,
            arrows,
            source,
            target,
            comp,
        })
    }

    pub fn objects(&self) -> &Arc<FinSet> {
        &self.objects
    }

    pub fn arrows(&self) -> &Arc<FinSet> {
        &self.arrows
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn source(&self, f: usize) -> usize {
        self.source[f]
    }

    pub fn target(&self, f: usize) -> usize {
        self.target[f]
    }

    pub fn sources(&self) -> &[usize] {
        &self.source
    }

    pub fn targets(&self) -> &[usize] {
        &self.target
    }

    /// `m(g, f)`, "g after f".
    #[inline]
    pub fn comp(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g * self.arrows.len() + f]
    }

    pub fn comp_table(&self) -> &[Option<usize>] {
        &self.comp
    }

    pub fn composable(&self, g: usize, f: usize) -> bool {
        self.source[g] == self.target[f]
    }

    fn arrow_labels(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.arrows.label(i).to_owned()).collect()
    }

    fn a(&self, i: usize) -> &str {
        self.arrows.label(i)
    }

    fn o(&self, i: usize) -> &str {
        self.objects.label(i)
    }

    fn opt(&self, v: Option<usize>) -> String {
        v.map_or_else(|| "undefined".to_owned(), |v| self.a(v).to_owned())
    }
}

impl std::fmt::Debug for Semigroupoid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Semigroupoid")
            .field("objects", &self.objects)
            .field("arrows", &self.arrows)
            .field("source", &self.source)
            .field("target", &self.target)
            .field("comp", &self.comp)
            .finish()
    }
}

/// A semigroupoid with units `ε : G0 → G1` and inverses `ι : G1 → G1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    base: Semigroupoid,
    unit: Vec<usize>,
    inv: Vec<usize>,
}

impl Groupoid {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        objects: Arc<FinSet>,
        arrows: Arc<FinSet>,
        source: Vec<usize>,
        target: Vec<usize>,
        unit: Vec<usize>,
        inv: Vec<usize>,
        comp: Vec<Option<usize>>,
    ) -> Result<Self, GroupoidError> {
        let base = Semigroupoid::new(objects, arrows, source, target, comp)?;
        let (n0, n1) = (base.objects.len(), base.arrows.len());
        if unit.len() != n0 || unit.iter().any(|&u| u >= n1) {
            return Err(GroupoidError::Shape("unit must map every object to an arrow".into()));
        }
        if inv.len() != n1 || inv.iter().any(|&i| i >= n1) {
            return Err(GroupoidError::Shape("inverse must map every arrow to an arrow".into()));
        }
        Ok(Self { base, unit, inv })
    }

    /// The structure with units and inverses forgotten, without checking
    /// the groupoid laws.
    pub fn base(&self) -> &Semigroupoid {
        &self.base
    }

    pub fn objects(&self) -> &Arc<FinSet> {
        &self.base.objects
    }

    pub fn arrows(&self) -> &Arc<FinSet> {
        &self.base.arrows
    }

    pub fn source(&self, f: usize) -> usize {
        self.base.source(f)
    }

    pub fn target(&self, f: usize) -> usize {
        self.base.target(f)
    }

    pub fn comp(&self, g: usize, f: usize) -> Option<usize> {
        self.base.comp(g, f)
    }

    pub fn unit(&self, x: usize) -> usize {
        self.unit[x]
    }

    pub fn units(&self) -> &[usize] {
        &self.unit
    }

    pub fn inv(&self, f: usize) -> usize {
        self.inv[f]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }
}

// ---------------------------------------------------------------------------
// law evaluation, shared by checkers and replay

fn domain_violation(sg: &Semigroupoid, g: usize, f: usize) -> Option<&'static str> {
    match (sg.comp(g, f).is_some(), sg.composable(g, f)) {
        (false, true) => Some("undefined-on-pullback"),
        (true, false) => Some("defined-off-pullback"),
        _ => None,
    }
}

fn endpoint_violation(sg: &Semigroupoid, g: usize, f: usize) -> Option<&'static str> {
    let v = sg.comp(g, f)?;
    if sg.source(v) != sg.source(f) {
        Some("source")
    } else if sg.target(v) != sg.target(g) {
        Some("target")
    } else {
        None
    }
}

fn assoc_violation(sg: &Semigroupoid, h: usize, g: usize, f: usize) -> bool {
    if !(sg.composable(h, g) && sg.composable(g, f)) {
        return false;
    }
    let left = sg.comp(h, g).and_then(|hg| sg.comp(hg, f));
    let right = sg.comp(g, f).and_then(|gf| sg.comp(h, gf));
    left.is_none() || left != right
}

fn unit_endpoint_violation(g: &Groupoid, x: usize) -> bool {
    let u = g.unit(x);
    g.source(u) != x || g.target(u) != x
}

fn unit_law_violation(g: &Groupoid, f: usize) -> Option<&'static str> {
    if g.comp(g.unit(g.target(f)), f) != Some(f) {
        Some("left")
    } else if g.comp(f, g.unit(g.source(f))) != Some(f) {
        Some("right")
    } else {
        None
    }
}

fn inverse_violation(g: &Groupoid, f: usize) -> Option<&'static str> {
    let i = g.inv(f);
    if g.source(i) != g.target(f) {
        Some("source")
    } else if g.target(i) != g.source(f) {
        Some("target")
    } else if g.comp(i, f) != Some(g.unit(g.source(f))) {
        Some("left")
    } else if g.comp(f, i) != Some(g.unit(g.target(f))) {
        Some("right")
    } else {
        None
    }
}

fn first_pair<T>(n: usize, mut check: impl FnMut(usize, usize) -> Option<T>) -> Option<(usize, usize, T)> {
    for g in 0..n {
        for f in 0..n {
            if let Some(t) = check(g, f) {
                return Some((g, f, t));
            }
        }
    }
    None
}

fn check_domain(sg: &Semigroupoid) -> CheckReport {
    let w = first_pair(sg.arrow_count(), |g, f| domain_violation(sg, g, f)).map(|(g, f, clause)| {
        let eq = format!(
            "m({g}, {f}) is {} while s({g}) = {} and t({f}) = {}",
            sg.opt(sg.comp(g, f)),
            sg.o(sg.source(g)),
            sg.o(sg.target(f)),
            g = sg.a(g),
            f = sg.a(f)
        );
        Witness::new(clause, sg.arrow_labels(&[g, f]), eq)
    });
    CheckReport::from_witness(Law::CompositionDomain, w)
}

fn check_endpoints(sg: &Semigroupoid) -> CheckReport {
    let w = first_pair(sg.arrow_count(), |g, f| endpoint_violation(sg, g, f)).map(|(g, f, clause)| {
        let v = sg.comp(g, f).expect("violation implies defined");
        let eq = if clause == "source" {
            format!(
                "s(m({g}, {f})) = {} ≠ s({f}) = {}",
                sg.o(sg.source(v)),
                sg.o(sg.source(f)),
                g = sg.a(g),
                f = sg.a(f)
            )
        } else {
            format!(
                "t(m({g}, {f})) = {} ≠ t({g}) = {}",
                sg.o(sg.target(v)),
                sg.o(sg.target(g)),
                g = sg.a(g),
                f = sg.a(f)
            )
        };
        Witness::new(clause, sg.arrow_labels(&[g, f, v]), eq)
    });
    CheckReport::from_witness(Law::CompositionEndpoints, w)
}

fn check_assoc(sg: &Semigroupoid) -> CheckReport {
    let n = sg.arrow_count();
    for h in 0..n {
        for g in 0..n {
            for f in 0..n {
                if assoc_violation(sg, h, g, f) {
                    let left = sg.comp(h, g).and_then(|hg| sg.comp(hg, f));
                    let right = sg.comp(g, f).and_then(|gf| sg.comp(h, gf));
                    let eq = format!(
                        "m(m({h}, {g}), {f}) = {} but m({h}, m({g}, {f})) = {}",
                        sg.opt(left),
                        sg.opt(right),
                        h = sg.a(h),
                        g = sg.a(g),
                        f = sg.a(f)
                    );
                    return CheckReport::fail(
                        Law::Associativity,
                        Witness::new("bracketings", sg.arrow_labels(&[h, g, f]), eq),
                    );
                }
            }
        }
    }
    CheckReport::pass(Law::Associativity)
}

/// Composition defined exactly on the pullback, composites with the right
/// endpoints, and associativity `m(m × 1) = m(1 × m)`.
pub fn check_semigroupoid(sg: &Semigroupoid) -> Vec<CheckReport> {
    vec![check_domain(sg), check_endpoints(sg), check_assoc(sg)]
}

/// All groupoid laws, one report each.
pub fn check_groupoid(g: &Groupoid) -> Vec<CheckReport> {
    let sg = &g.base;
    let n1 = sg.arrow_count();
    let unit_ends = (0..g.objects().len())
        .find(|&x| unit_endpoint_violation(g, x))
        .map(|x| {
            let u = g.unit(x);
            let eq = format!(
                "ε({x}) = {u} has s = {}, t = {}",
                sg.o(g.source(u)),
                sg.o(g.target(u)),
                x = sg.o(x),
                u = sg.a(u)
            );
            Witness::new("unit", vec![sg.o(x).to_owned()], eq)
        });
    let unit_law = (0..n1)
        .find_map(|f| unit_law_violation(g, f).map(|c| (f, c)))
        .map(|(f, clause)| {
            let eq = if clause == "left" {
                let u = g.unit(g.target(f));
                format!("m({}, {f}) = {} ≠ {f}", sg.a(u), sg.opt(g.comp(u, f)), f = sg.a(f))
            } else {
                let u = g.unit(g.source(f));
                format!("m({f}, {}) = {} ≠ {f}", sg.a(u), sg.opt(g.comp(f, u)), f = sg.a(f))
            };
            Witness::new(clause, sg.arrow_labels(&[f]), eq)
        });
    let inverse = (0..n1)
        .find_map(|f| inverse_violation(g, f).map(|c| (f, c)))
        .map(|(f, clause)| {
            let i = g.inv(f);
            let eq = match clause {
                "source" => format!(
                    "s(ι({f})) = {} ≠ t({f}) = {}",
                    sg.o(g.source(i)),
                    sg.o(g.target(f)),
                    f = sg.a(f)
                ),
                "target" => format!(
                    "t(ι({f})) = {} ≠ s({f}) = {}",
                    sg.o(g.target(i)),
                    sg.o(g.source(f)),
                    f = sg.a(f)
                ),
                "left" => format!(
                    "m(ι({f}), {f}) = {} ≠ ε(s({f})) = {}",
                    sg.opt(g.comp(i, f)),
                    sg.a(g.unit(g.source(f))),
                    f = sg.a(f)
                ),
                _ => format!(
                    "m({f}, ι({f})) = {} ≠ ε(t({f})) = {}",
                    sg.opt(g.comp(f, i)),
                    sg.a(g.unit(g.target(f))),
                    f = sg.a(f)
                ),
            };
            Witness::new(clause, sg.arrow_labels(&[f, i]), eq)
        });
    vec![
        check_domain(sg),
        check_endpoints(sg),
        CheckReport::from_witness(Law::UnitEndpoints, unit_ends),
        CheckReport::from_witness(Law::UnitLaw, unit_law),
        check_assoc(sg),
        CheckReport::from_witness(Law::InverseLaw, inverse),
    ]
}

/// Pseudoinverses of one arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoinverseSet {
    pub arrow: usize,
    pub inverses: Vec<usize>,
}

/// `b` is a pseudoinverse of `f`: reversed endpoints, `f b f = f` and
/// `b f b = b`.
pub fn is_pseudoinverse(sg: &Semigroupoid, f: usize, b: usize) -> bool {
    sg.source(f) == sg.target(b)
        && sg.target(f) == sg.source(b)
        && sg.comp(f, b).and_then(|fb| sg.comp(fb, f)) == Some(f)
        && sg.comp(b, f).and_then(|bf| sg.comp(bf, b)) == Some(b)
}

pub fn pseudoinverses(sg: &Semigroupoid, f: usize) -> PseudoinverseSet {
    PseudoinverseSet {
        arrow: f,
        inverses: (0..sg.arrow_count()).filter(|&b| is_pseudoinverse(sg, f, b)).collect(),
    }
}

/// Every arrow has a pseudoinverse.
pub fn is_regular(sg: &Semigroupoid) -> CheckReport {
    let w = (0..sg.arrow_count())
        .find(|&f| pseudoinverses(sg, f).inverses.is_empty())
        .map(|f| {
            let eq = format!("no f* with {0}f*{0} = {0} and f*{0}f* = f*", sg.a(f));
            Witness::new("no-pseudoinverse", sg.arrow_labels(&[f]), eq)
        });
    CheckReport::from_witness(Law::Regularity, w)
}

/// Which reading of local cancellativity to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cancellation {
    /// `(fh)h* = gh* ⟹ fh = g` and `h*(hf) = h*g ⟹ hf = g`.
    Corrected,
    /// `fh* = gh* ⟹ fh = g` and `(h*h)f = h*g ⟹ hf = g`, as printed.
    Literal,
}

/// The clause of local cancellativity violated at `(f, g, h, h*)`, if any.
fn cancellation_violation(
    sg: &Semigroupoid,
    reading: Cancellation,
    f: usize,
    g: usize,
    h: usize,
    hs: usize,
) -> Option<&'static str> {
    let fh = sg.comp(f, h);
    let hf = sg.comp(h, f);
    let (right_lhs, left_lhs) = match reading {
        Cancellation::Corrected => (fh.and_then(|x| sg.comp(x, hs)), hf.and_then(|x| sg.comp(hs, x))),
        Cancellation::Literal => (sg.comp(f, hs), sg.comp(hs, h).and_then(|x| sg.comp(x, f))),
    };
    let right_rhs = sg.comp(g, hs);
    let left_rhs = sg.comp(hs, g);
    if let (Some(fh), Some(l), Some(r)) = (fh, right_lhs, right_rhs) {
        if l == r && fh != g {
            return Some("right");
        }
    }
    if let (Some(hf), Some(l), Some(r)) = (hf, left_lhs, left_rhs) {
        if l == r && hf != g {
            return Some("left");
        }
    }
    None
}

/// Local cancellativity under the corrected reading.
pub fn check_local_cancellativity(sg: &Semigroupoid) -> CheckReport {
    check_local_cancellativity_with(sg, Cancellation::Corrected)
}

/// Scans `(f, g, h, h*)` lexicographically and reports the first violation.
pub fn check_local_cancellativity_with(sg: &Semigroupoid, reading: Cancellation) -> CheckReport {
    let law = match reading {
        Cancellation::Corrected => Law::LocalCancellativity,
        Cancellation::Literal => Law::LiteralLocalCancellativity,
    };
    let n = sg.arrow_count();
    let pinv: Vec<Vec<usize>> = (0..n).map(|h| pseudoinverses(sg, h).inverses).collect();
    for f in 0..n {
        for g in 0..n {
            for h in 0..n {
                for &hs in &pinv[h] {
                    if let Some(clause) = cancellation_violation(sg, reading, f, g, h, hs) {
                        let eq = cancellation_equation(sg, reading, clause, f, g, h, hs);
                        return CheckReport::fail(law, Witness::new(clause, sg.arrow_labels(&[f, g, h, hs]), eq));
                    }
                }
            }
        }
    }
    CheckReport::pass(law)
}

fn cancellation_equation(
    sg: &Semigroupoid,
    reading: Cancellation,
    clause: &str,
    f: usize,
    g: usize,
    h: usize,
    hs: usize,
) -> String {
    let (f, g, h, hs_l) = (sg.a(f), sg.a(g), sg.a(h), sg.a(hs));
    match (reading, clause) {
        (Cancellation::Corrected, "right") => {
            format!("({f}{h}){hs_l} = {g}{hs_l} but {f}{h} ≠ {g}  (h* = {hs_l})")
        }
        (Cancellation::Corrected, _) => {
            format!("{hs_l}({h}{f}) = {hs_l}{g} but {h}{f} ≠ {g}  (h* = {hs_l})")
        }
        (Cancellation::Literal, "right") => {
            format!("{f}{hs_l} = {g}{hs_l} but {f}{h} ≠ {g}  (h* = {hs_l})")
        }
        (Cancellation::Literal, _) => {
            format!("({hs_l}{h}){f} = {hs_l}{g} but {h}{f} ≠ {g}  (h* = {hs_l})")
        }
    }
}

/// Forgets units and inverses. Requires the groupoid laws to hold.
pub fn underlying_semigroupoid(g: &Groupoid) -> Result<Semigroupoid, GroupoidError> {
    let reports = check_groupoid(g);
    crate::report::require(reports).map_err(GroupoidError::Precondition)?;
    Ok(g.base.clone())
}

// ---------------------------------------------------------------------------
// replay

fn arrows_of(sg: &Semigroupoid, w: &Witness) -> Option<Vec<usize>> {
    w.elements.iter().map(|l| sg.arrows.index_of(l)).collect()
}

/// Re-evaluates a semigroupoid-side failure witness.
pub fn replay_semigroupoid(sg: &Semigroupoid, report: &CheckReport) -> bool {
    let Some(w) = &report.witness else {
        return false;
    };
    let Some(e) = arrows_of(sg, w) else {
        return false;
    };
    match (report.law, e.as_slice()) {
        (Law::CompositionDomain, &[g, f]) => domain_violation(sg, g, f) == Some(w.clause.as_str()),
        (Law::CompositionEndpoints, &[g, f, v]) => {
            sg.comp(g, f) == Some(v) && endpoint_violation(sg, g, f) == Some(w.clause.as_str())
        }
        (Law::Associativity, &[h, g, f]) => assoc_violation(sg, h, g, f),
        (Law::Regularity, &[f]) => (0..sg.arrow_count()).all(|b| !is_pseudoinverse(sg, f, b)),
        (Law::LocalCancellativity, &[f, g, h, hs]) => {
            is_pseudoinverse(sg, h, hs)
                && cancellation_violation(sg, Cancellation::Corrected, f, g, h, hs) == Some(w.clause.as_str())
        }
        (Law::LiteralLocalCancellativity, &[f, g, h, hs]) => {
            is_pseudoinverse(sg, h, hs)
                && cancellation_violation(sg, Cancellation::Literal, f, g, h, hs) == Some(w.clause.as_str())
        }
        _ => false,
    }
}

/// Re-evaluates a groupoid-law failure witness.
pub fn replay_groupoid(g: &Groupoid, report: &CheckReport) -> bool {
    let Some(w) = &report.witness else {
        return false;
    };
    match report.law {
        Law::UnitEndpoints => w
            .elements
            .first()
            .and_then(|x| g.objects().index_of(x))
            .is_some_and(|x| unit_endpoint_violation(g, x)),
        Law::UnitLaw => match arrows_of(&g.base, w).as_deref() {
            Some(&[f]) => unit_law_violation(g, f) == Some(w.clause.as_str()),
            _ => false,
        },
        Law::InverseLaw => match arrows_of(&g.base, w).as_deref() {
            Some(&[f, i]) => g.inv(f) == i && inverse_violation(g, f) == Some(w.clause.as_str()),
            _ => false,
        },
        _ => replay_semigroupoid(&g.base, report),
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::report::{all_pass, failed_laws, Verdict};

    fn witness(r: &CheckReport) -> Vec<String> {
        r.witness.as_ref().unwrap().elements.clone()
    }

    #[test]
    fn semigroupoid_examples() {
        assert!(all_pass(&check_semigroupoid(&z2_sg())));
        assert!(all_pass(&check_semigroupoid(&rb2())));
        // two objects, m(g, f) lands on the wrong target
        let arrows = set("X", &["f", "g"]);
        let objects = set("O", &["x", "y"]);
        // f: x -> y, g: y -> y, m(g, f) = g (target ok, source wrong)
        let sg = Semigroupoid::new(
            objects,
            arrows,
            vec![0, 1],
            vec![1, 1],
            vec![None, None, Some(1), Some(1)],
        )
        .unwrap();
        let reports = check_semigroupoid(&sg);
        assert_eq!(failed_laws(&reports), [Law::CompositionEndpoints]);
        assert!(replay_semigroupoid(&sg, &reports[1]));
    }

    #[test]
    fn groupoid_examples() {
        assert!(all_pass(&check_groupoid(&z2())));
        assert!(all_pass(&check_groupoid(&p2())));
        assert!(all_pass(&check_groupoid(&d2())));
        let p = p2();
        let bad = Groupoid::new(
            p.objects().clone(),
            p.arrows().clone(),
            p.base.source.clone(),
            p.base.target.clone(),
            p.unit.clone(),
            vec![0, 1, 2, 3],
            p.base.comp.clone(),
        )
        .unwrap();
        let reports = check_groupoid(&bad);
        assert_eq!(failed_laws(&reports), [Law::InverseLaw]);
        assert_eq!(witness(&reports[5])[0], "12");
        assert!(replay_groupoid(&bad, &reports[5]));
    }

    #[test]
    fn pseudoinverse_examples() {
        assert_eq!(pseudoinverses(&z2_sg(), 1).inverses, [1]);
        assert_eq!(pseudoinverses(&rb2(), 0).inverses, [0, 1, 2, 3]);
        let arrows = set("X", &["f", "g"]);
        let objects = set("O", &["x", "y"]);
        let none = Semigroupoid::new(objects, arrows, vec![0, 0], vec![1, 1], vec![None; 4]).unwrap();
        assert!(all_pass(&check_semigroupoid(&none)));
        assert!(pseudoinverses(&none, 0).inverses.is_empty());
        assert!(pseudoinverses(&none, 1).inverses.is_empty());
        let r = is_regular(&none);
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(replay_semigroupoid(&none, &r));
    }

    #[test]
    fn regularity_examples() {
        assert!(is_regular(&z2_sg()).passed());
        assert!(is_regular(&rb2()).passed());
    }

    #[test]
    fn local_cancellativity_examples() {
        assert!(check_local_cancellativity(&z2_sg()).passed());
        let r = check_local_cancellativity(&sl2_sg());
        assert_eq!(witness(&r), ["e", "e", "a", "a"]);
        assert_eq!(r.witness.as_ref().unwrap().clause, "right");
        assert!(replay_semigroupoid(&sl2_sg(), &r));
        let r = check_local_cancellativity(&rb2());
        assert_eq!(witness(&r), ["11", "11", "12", "11"]);
        assert!(replay_semigroupoid(&rb2(), &r));
    }

    #[test]
    fn literal_reading_is_available() {
        let r = check_local_cancellativity_with(&z2_sg(), Cancellation::Literal);
        assert_eq!(r.law, Law::LiteralLocalCancellativity);
        if !r.passed() {
            assert!(replay_semigroupoid(&z2_sg(), &r));
        }
    }

    #[test]
    fn underlying_examples() {
        let sg = underlying_semigroupoid(&z2()).unwrap();
        assert!(all_pass(&check_semigroupoid(&sg)));
        let sg = underlying_semigroupoid(&p2()).unwrap();
        assert!(is_regular(&sg).passed());
        assert!(check_local_cancellativity(&sg).passed());
        let sg = underlying_semigroupoid(&d2()).unwrap();
        assert_eq!(sg.objects().len(), 2);
        assert_eq!(sg.comp_table().iter().flatten().count(), 2);
        let mut bad = p2();
        bad.inv = vec![0, 1, 2, 3];
        assert!(matches!(
            underlying_semigroupoid(&bad),
            Err(GroupoidError::Precondition(_))
        ));
    }
}
