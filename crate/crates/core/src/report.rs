//! Check verdicts and counterexample witnesses.

use std::fmt;

use crate::relcore::PtSubset;

/// The law a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    // relative Frobenius / H* axioms
    M,
    F,
    A,
    U,
    H,
    // semigroupoids and groupoids
    CompositionDomain,
    CompositionEndpoints,
    Associativity,
    UnitEndpoints,
    UnitLaw,
    InverseLaw,
    Regularity,
    LocalCancellativity,
    LiteralLocalCancellativity,
    // weak monoids
    WeakAssociativity,
    WeakUnitality,
    ProjectorIdempotence,
    Involutivity,
    InvolutivityConverse,
    Cyclicity,
    // correspondences
    Subgroupoid,
    RoundTrip,
    LiteralUnitRelation,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::M => "M",
            Law::F => "F",
            Law::A => "A",
            Law::U => "U",
            Law::H => "H",
            Law::CompositionDomain => "composition-domain",
            Law::CompositionEndpoints => "composition-endpoints",
            Law::Associativity => "associativity",
            Law::UnitEndpoints => "unit-endpoints",
            Law::UnitLaw => "unit-law",
            Law::InverseLaw => "inverse-law",
            Law::Regularity => "regularity",
            Law::LocalCancellativity => "local-cancellativity",
            Law::LiteralLocalCancellativity => "literal-local-cancellativity",
            Law::WeakAssociativity => "weak-associativity",
            Law::WeakUnitality => "weak-unitality",
            Law::ProjectorIdempotence => "projector-idempotence",
            Law::Involutivity => "involutivity",
            Law::InvolutivityConverse => "involutivity-converse",
            Law::Cyclicity => "cyclicity",
            Law::Subgroupoid => "subgroupoid",
            Law::RoundTrip => "round-trip",
            Law::LiteralUnitRelation => "literal-unit-relation",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Two evaluation routes of the same law disagreed, or a uniqueness
    /// property that must hold did not. Indicates a bug, not a verdict on
    /// the input.
    Internal,
}

/// A concrete instantiation of a violated equation.
///
/// `clause` names which side or sub-equation failed; `elements` are element
/// labels (subsets are rendered `{a, b}`) in the order the law's replay
/// function expects them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub clause: String,
    pub elements: Vec<String>,
    pub equation: String,
}

impl Witness {
    pub fn new(clause: &str, elements: Vec<String>, equation: String) -> Self {
        Self {
            clause: clause.to_owned(),
            elements,
            equation,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub law: Law,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// The unit subset found by the (U) check.
    pub unit: Option<PtSubset>,
    /// Informational reports never affect the overall verdict.
    pub informational: bool,
    pub note: Option<String>,
}

impl CheckReport {
    pub fn pass(law: Law) -> Self {
        Self {
            law,
            verdict: Verdict::Pass,
            witness: None,
            unit: None,
            informational: false,
            note: None,
        }
    }

    pub fn fail(law: Law, witness: Witness) -> Self {
        Self {
            law,
            verdict: Verdict::Fail,
            witness: Some(witness),
            unit: None,
            informational: false,
            note: None,
        }
    }

    pub fn internal(law: Law, note: impl Into<String>) -> Self {
        Self {
            law,
            verdict: Verdict::Internal,
            witness: None,
            unit: None,
            informational: false,
            note: Some(note.into()),
        }
    }

    pub fn from_witness(law: Law, witness: Option<Witness>) -> Self {
        match witness {
            Some(w) => Self::fail(law, w),
            None => Self::pass(law),
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Internal => "INTERNAL",
        };
        let info = if self.informational { " (info)" } else { "" };
        write!(f, "{:<28} {verdict}{info}", self.law.name())?;
        if let Some(u) = &self.unit {
            write!(f, "  unit = {}", u.display())?;
        }
        if let Some(w) = &self.witness {
            write!(f, "  witness [{}] ({})", w.elements.join(", "), w.clause)?;
        }
        Ok(())
    }
}

/// True when every non-informational report passed.
pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().filter(|r| !r.informational).all(CheckReport::passed)
}

/// Reports that failed and count towards the verdict.
pub fn failures(reports: &[CheckReport]) -> impl Iterator<Item = &CheckReport> {
    reports.iter().filter(|r| !r.informational && !r.passed())
}

/// Laws whose checks did not pass, in report order.
pub fn failed_laws(reports: &[CheckReport]) -> Vec<Law> {
    failures(reports).map(|r| r.law).collect()
}

/// A set of failing reports carried as an error value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailedChecks(pub Vec<CheckReport>);

impl fmt::Display for FailedChecks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let laws: Vec<&str> = failures(&self.0).map(|r| r.law.name()).collect();
        write!(f, "{}", laws.join(", "))
    }
}

impl std::error::Error for FailedChecks {}

/// Ok when all reports pass, otherwise the reports as an error.
pub fn require(reports: Vec<CheckReport>) -> Result<Vec<CheckReport>, FailedChecks> {
    if all_pass(&reports) {
        Ok(reports)
    } else {
        Err(FailedChecks(reports))
    }
}

/// Renders a subset witness element.
pub(crate) fn subset_label(s: &PtSubset) -> String {
    s.display()
}

/// Parses `{a, b}` back into labels.
pub(crate) fn parse_subset_label(s: &str) -> Option<Vec<String>> {
    let inner = s.strip_prefix('{')?.strip_suffix('}')?;
    Some(
        inner
            .split(',')
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::to_owned)
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn informational_reports_do_not_count() {
        let reports = vec![
            CheckReport::pass(Law::M),
            CheckReport::fail(Law::F, Witness::new("x", vec![], String::new())).informational(),
        ];
        assert!(all_pass(&reports));
        assert!(failed_laws(&reports).is_empty());
    }

    #[test]
    fn subset_labels_round_trip() {
        assert_eq!(parse_subset_label("{}"), Some(vec![]));
        assert_eq!(parse_subset_label("{a, b}"), Some(vec!["a".to_owned(), "b".to_owned()]));
        assert_eq!(parse_subset_label("a"), None);
    }
}
