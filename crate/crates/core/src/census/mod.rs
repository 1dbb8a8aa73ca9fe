//! Exhaustive enumeration of every structure of a kind on a small labelled
//! carrier. Counts are labelled, not up to isomorphism; the carrier is
//! always `X = {0, …, n-1}`.
//!
//! Work is split by the first table row (or first source/target choice)
//! across rayon workers and merged back in enumeration order, so results
//! are deterministic.

use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

mod cross;
mod fixtures;
mod gpd;
mod tables;

pub use cross::{
    cross_check_theorem1, cross_check_theorem1_with, cross_check_theorems23, cross_check_theorems23_with,
    BijectionReport, LcrHstarReport,
};
pub use fixtures::{FixtureCorpus, FixtureStructure};
pub use gpd::{
    canonical_objects, enumerate_groupoids, enumerate_groupoids_with, enumerate_lcr_semigroupoids,
    enumerate_lcr_semigroupoids_with,
};
pub use tables::{
    all_tables, carrier, decode_table, enumerate_frobenius, enumerate_frobenius_with, enumerate_hstar,
    enumerate_hstar_with, iso_class_count, passes_prefilter, table_count,
};

/// Environment variable overriding every census cap.
pub const MAX_SIZE_VAR: &str = "RELCAT_MAX_SIZE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Frobenius,
    HStar,
    Groupoid,
    LcrSemigroupoid,
}

impl Kind {
    pub fn default_cap(self) -> usize {
        match self {
            Kind::Frobenius | Kind::HStar | Kind::LcrSemigroupoid => 3,
            Kind::Groupoid => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Frobenius => "frob",
            Kind::HStar => "hstar",
            Kind::Groupoid => "gpd",
            Kind::LcrSemigroupoid => "lcr-sgpd",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("{kind} census of size {n} exceeds the cap {cap} (set {MAX_SIZE_VAR} to raise it)")]
    CapExceeded { kind: Kind, n: usize, cap: usize },
    #[error("{MAX_SIZE_VAR} must be a non-negative integer, found {0:?}")]
    BadOverride(String),
}

/// The cap for `kind`: the environment override if set, else the default.
pub fn cap_for(kind: Kind) -> Result<usize, CensusError> {
    match std::env::var(MAX_SIZE_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CensusError::BadOverride(v)),
        Err(_) => Ok(kind.default_cap()),
    }
}

pub(crate) fn require_cap(kind: Kind, n: usize, cap: Option<usize>) -> Result<(), CensusError> {
    let cap = match cap {
        Some(c) => c,
        None => cap_for(kind)?,
    };
    if n > cap {
        Err(CensusError::CapExceeded { kind, n, cap })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct CensusResult<T> {
    pub kind: Kind,
    pub n: usize,
    pub structures: Vec<T>,
    pub elapsed: Duration,
}

impl<T> CensusResult<T> {
    pub(crate) fn timed(kind: Kind, n: usize, start: Instant, structures: Vec<T>) -> Self {
        Self {
            kind,
            n,
            structures,
            elapsed: start.elapsed(),
        }
    }

    pub fn count(&self) -> usize {
        self.structures.len()
    }
}
