use std::collections::BTreeSet;

use super::{frob_to_groupoid, CorrespondError};
use crate::frobenius::FrobCandidate;
use crate::groupoid::Groupoid;
use crate::relcore::{Carrier, Rel};
use crate::report::{CheckReport, Law, Witness};

/// A relation `r ⊆ G1 × H1`, read as a set of arrows of `G × H`.
#[derive(Debug, Clone)]
pub struct SubgroupoidMorphism {
    pub domain: Groupoid,
    pub codomain: Groupoid,
    pub pairs: BTreeSet<(usize, usize)>,
}

impl SubgroupoidMorphism {
    fn label(&self, (f, h): (usize, usize)) -> String {
        format!(
            "({}, {})",
            self.domain.arrows().label(f),
            self.codomain.arrows().label(h)
        )
    }
}

/// Whether `r` is a subgroupoid of `G × H`: closed under componentwise
/// composition where both components compose, under componentwise inverse,
/// and containing the unit pairs at both ends of each of its arrows.
pub fn is_subgroupoid_morphism(mor: &SubgroupoidMorphism) -> CheckReport {
    let (g, h, r) = (&mor.domain, &mor.codomain, &mor.pairs);
    let fail = |clause, elements: Vec<(usize, usize)>, eq: String| {
        CheckReport::fail(
            Law::Subgroupoid,
            Witness::new(clause, elements.into_iter().map(|p| mor.label(p)).collect(), eq),
        )
    };
    for &(f1, h1) in r {
        let units = [
            (g.unit(g.source(f1)), h.unit(h.source(h1))),
            (g.unit(g.target(f1)), h.unit(h.target(h1))),
        ];
        if let Some(&missing) = units.iter().find(|p| !r.contains(p)) {
            let eq = format!(
                "{} lies in r but its unit {} does not",
                mor.label((f1, h1)),
                mor.label(missing)
            );
            return fail("unit", vec![(f1, h1), missing], eq);
        }
        let inverse = (g.inv(f1), h.inv(h1));
        if !r.contains(&inverse) {
            let eq = format!("the inverse {} is missing", mor.label(inverse));
            return fail("inverse", vec![(f1, h1), inverse], eq);
        }
        for &(f2, h2) in r {
            if let (Some(a), Some(b)) = (g.comp(f1, f2), h.comp(h1, h2)) {
                if !r.contains(&(a, b)) {
                    let eq = format!(
                        "{} after {} is {}, not in r",
                        mor.label((f1, h1)),
                        mor.label((f2, h2)),
                        mor.label((a, b))
                    );
                    return fail("composition", vec![(f1, h1), (f2, h2), (a, b)], eq);
                }
            }
        }
    }
    CheckReport::pass(Law::Subgroupoid)
}

/// A relation `r : X ⇒ Y` between relative Frobenius algebras is a morphism
/// when it is a subgroupoid morphism between the associated groupoids.
pub fn is_frobenius_morphism(c: &FrobCandidate, d: &FrobCandidate, r: &Rel) -> Result<CheckReport, CorrespondError> {
    if r.source() != &Carrier::of(c.carrier()) || r.target() != &Carrier::of(d.carrier()) {
        return Err(crate::relcore::RelError::TypeMismatch {
            left: r.source().to_string(),
            right: c.carrier().name().to_owned(),
        }
        .into());
    }
    let mor = SubgroupoidMorphism {
        domain: frob_to_groupoid(c)?,
        codomain: frob_to_groupoid(d)?,
        pairs: r.pairs().collect(),
    };
    Ok(is_subgroupoid_morphism(&mor))
}
