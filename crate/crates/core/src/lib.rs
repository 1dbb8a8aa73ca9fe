//! Relations over finite sets, relative Frobenius algebras and H*-algebras,
//! groupoids and semigroupoids, the constructions relating them, and an
//! exhaustive census of small instances used to validate the
//! correspondences.

pub mod census;
pub mod correspond;
pub mod frobenius;
pub mod groupoid;
pub mod relcore;
pub mod report;
pub mod weakmonoid;
