//! Finite sets and binary relations: the category **Rel**.
//!
//! Composition is written diagrammatically: [`compose(f, g)`](compose)
//! applies `f` first and is `g ∘ f` in the usual right-to-left notation.
//! Every axiom checker in this crate is transcribed under that convention.

mod bitmatrix;
mod finset;
pub mod pairs;
mod rel;

use thiserror::Error;

pub use bitmatrix::{BitMatrix, Ones};
pub use finset::{Carrier, FinSet};
pub use rel::{compose, dagger, identity, product, subset_as_morphism, Classification, PtSubset, Rel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelError {
    #[error("cannot compose: middle sets differ ({left} vs {right})")]
    TypeMismatch { left: String, right: String },
    #[error("duplicate label `{label}` in set {set}")]
    DuplicateLabel { set: String, label: String },
    #[error("unknown label `{label}` in set {set}")]
    UnknownLabel { set: String, label: String },
    #[error("pair {pair:?} out of range for shape {shape:?}")]
    OutOfRange {
        pair: (usize, usize),
        shape: (usize, usize),
    },
    #[error("map defined on {defined} of {expected} elements")]
    NotTotal { defined: usize, expected: usize },
    #[error("tuple arity {found}, expected {expected}")]
    Arity { expected: usize, found: usize },
}
