//! Constructions between relational algebras and (semi)groupoids: relative
//! Frobenius algebras against groupoids, relative H*-algebras against
//! locally cancellative regular semigroupoids, with round trips and the
//! morphism notion transported across.

use thiserror::Error;

use crate::frobenius::FrobError;
use crate::groupoid::GroupoidError;
use crate::relcore::RelError;
use crate::report::FailedChecks;

mod frob_groupoid;
mod morphism;
mod sgpd_hstar;

pub use frob_groupoid::{
    frob_to_groupoid, groupoid_to_frob, literal_unit_relation, roundtrip_frob, roundtrip_groupoid, verify_iso,
    GroupoidIso,
};
pub use morphism::{is_frobenius_morphism, is_subgroupoid_morphism, SubgroupoidMorphism};
pub use sgpd_hstar::{hstar_to_sgpd, roundtrip_sgpd, sgpd_to_hstar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondError {
    #[error("precondition failed: {0}")]
    Precondition(FailedChecks),
    #[error("{role} of {arrow} is not determined uniquely (candidates {found:?})")]
    NonUniqueWitness {
        arrow: String,
        role: &'static str,
        found: Vec<String>,
    },
    #[error("m({g}, {f}) definedness disagrees with s({g}) = t({f})")]
    DomainMismatch { g: String, f: String },
    #[error("{map}({arrow}) is not single valued: {values:?}")]
    NotSingleValued {
        arrow: String,
        map: &'static str,
        values: Vec<String>,
    },
    #[error("{arrow} has no pseudoinverse")]
    NoPseudoinverse { arrow: String },
    #[error("isomorphism fails to commute with {square} at {element}")]
    IsoFailure { square: &'static str, element: String },
    /// The constructed structure failed its own laws although the input
    /// passed its preconditions.
    #[error("construction produced an invalid structure: {0}")]
    Construction(FailedChecks),
    #[error(transparent)]
    Frob(#[from] FrobError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Rel(#[from] RelError),
}

/// Name of the object set built over a carrier named `x`.
pub fn object_set_name(x: &str) -> String {
    format!("{x}_obj")
}
