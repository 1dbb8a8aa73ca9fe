//! Weak monoids, weak *-monoids and cyclic weak *-monoids in finite Rel, and
//! the weak monoid of a commutative monoid with a projector.
//!
//! In Rel the dagger is the identity on objects, so `X† = X` throughout.
//! The name of a relation `r : A ⇒ B` is the subset of `A × B` it consists
//! of, read as a morphism `pt ⇒ A × B`.

use std::sync::Arc;

use thiserror::Error;

use crate::relcore::{compose, dagger, product, Carrier, FinSet, PtSubset, Rel, RelError};
use crate::report::{CheckReport, Law, Witness};

mod projector;
mod replay;

pub use projector::{
    monoid_projector_literal, monoid_projector_to_weak, monoid_to_weak, quotient_by_projector, FiniteMonoid,
};
pub use replay::{replay_cyclic, replay_weak_monoid, replay_weak_star};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeakError {
    #[error("{what} must be a relation {expected}, found {found}")]
    Shape {
        what: &'static str,
        expected: String,
        found: String,
    },
    #[error("not a monoid: {0}")]
    NotMonoid(String),
    #[error("{p} is not a projector: {p}·{p} = {square}")]
    NotProjector { p: String, square: String },
    #[error("not commutative: {a}·{b} ≠ {b}·{a}")]
    NotCommutative { a: String, b: String },
    #[error("induced operation is ill defined: {a}·{b} and {a2}·{b2} land in different classes")]
    IllDefined {
        a: String,
        b: String,
        a2: String,
        b2: String,
    },
    #[error(transparent)]
    Rel(#[from] RelError),
}

fn expect_type(what: &'static str, r: &Rel, source: &Carrier, target: &Carrier) -> Result<(), WeakError> {
    if r.source() == source && r.target() == target {
        Ok(())
    } else {
        Err(WeakError::Shape {
            what,
            expected: format!("{source} -> {target}"),
            found: format!("{} -> {}", r.source(), r.target()),
        })
    }
}

/// `(X, L1, L3)` with `L1 : pt ⇒ X` and `L3 : X×X ⇒ X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakMonoidCandidate {
    carrier: Arc<FinSet>,
    l1: PtSubset,
    l3: Rel,
}

impl WeakMonoidCandidate {
    pub fn new(carrier: Arc<FinSet>, l1: PtSubset, l3: Rel) -> Result<Self, WeakError> {
        expect_type("L3", &l3, &Carrier::power(&carrier, 2), &Carrier::of(&carrier))?;
        if l1.carrier() != &carrier {
            return Err(WeakError::Shape {
                what: "L1",
                expected: format!("1 -> {}", carrier.name()),
                found: format!("1 -> {}", l1.carrier().name()),
            });
        }
        Ok(Self { carrier, l1, l3 })
    }

    pub fn carrier(&self) -> &Arc<FinSet> {
        &self.carrier
    }

    pub fn l1(&self) -> &PtSubset {
        &self.l1
    }

    pub fn l3(&self) -> &Rel {
        &self.l3
    }
}

/// `(X, ψ, L3)` with `ψ : X ⇒ X` and `L3 : X×X ⇒ X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakStarCandidate {
    carrier: Arc<FinSet>,
    psi: Rel,
    l3: Rel,
}

impl WeakStarCandidate {
    pub fn new(carrier: Arc<FinSet>, psi: Rel, l3: Rel) -> Result<Self, WeakError> {
        let x = Carrier::of(&carrier);
        expect_type("psi", &psi, &x, &x)?;
        expect_type("L3", &l3, &Carrier::power(&carrier, 2), &x)?;
        Ok(Self { carrier, psi, l3 })
    }

    pub fn carrier(&self) -> &Arc<FinSet> {
        &self.carrier
    }

    pub fn psi(&self) -> &Rel {
        &self.psi
    }

    pub fn l3(&self) -> &Rel {
        &self.l3
    }
}

/// `(X, ψ, L)` with `ψ : X ⇒ X` and `L : X×X ⇒ X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCandidate {
    carrier: Arc<FinSet>,
    psi: Rel,
    l: Rel,
}

impl CyclicCandidate {
    pub fn new(carrier: Arc<FinSet>, psi: Rel, l: Rel) -> Result<Self, WeakError> {
        let x = Carrier::of(&carrier);
        expect_type("psi", &psi, &x, &x)?;
        expect_type("L", &l, &Carrier::power(&carrier, 2), &x)?;
        Ok(Self { carrier, psi, l })
    }

    pub fn carrier(&self) -> &Arc<FinSet> {
        &self.carrier
    }

    pub fn psi(&self) -> &Rel {
        &self.psi
    }

    pub fn l(&self) -> &Rel {
        &self.l
    }
}

fn must(r: Result<Rel, RelError>) -> Rel {
    r.expect("candidate relations are well typed")
}

/// `L3∘(L1×1)` and `L3∘(1×L1)`, both `X ⇒ X` since `pt × X = X`.
pub fn derive_l2(c: &WeakMonoidCandidate) -> (Rel, Rel) {
    let one = Rel::identity(&Carrier::of(&c.carrier));
    let l1 = c.l1.to_morphism();
    let left = must(compose(&product(&l1, &one), &c.l3));
    let right = must(compose(&product(&one, &l1), &c.l3));
    (left, right)
}

/// Compares two parallel relations; the witness is the first pair in
/// exactly one of them, as source labels followed by target labels.
fn equation(law: Law, lhs: &Rel, rhs: &Rel, lhs_name: &str, rhs_name: &str) -> CheckReport {
    let diff = lhs.first_difference(rhs).expect("sides are parallel");
    let w = diff.map(|(a, b, in_lhs)| {
        let mut elements: Vec<String> = lhs.source().labels_of(a).into_iter().map(str::to_owned).collect();
        elements.extend(lhs.target().labels_of(b).into_iter().map(str::to_owned));
        let (has, lacks) = if in_lhs {
            (lhs_name, rhs_name)
        } else {
            (rhs_name, lhs_name)
        };
        let eq = format!("{has} relates {} but {lacks} does not", lhs.display_pair(a, b));
        Witness::new(if in_lhs { "left-only" } else { "right-only" }, elements, eq)
    });
    CheckReport::from_witness(law, w)
}

/// Associativity, agreement of the two `L2` composites, and `L2∘L2 = L2`
/// (tested on the left composite).
pub fn check_weak_monoid(c: &WeakMonoidCandidate) -> Vec<CheckReport> {
    let one = Rel::identity(&Carrier::of(&c.carrier));
    let l3 = &c.l3;
    let assoc_left = must(compose(&product(l3, &one), l3));
    let assoc_right = must(compose(&product(&one, l3), l3));
    let (l2_left, l2_right) = derive_l2(c);
    let squared = must(compose(&l2_left, &l2_left));
    vec![
        equation(
            Law::WeakAssociativity,
            &assoc_left,
            &assoc_right,
            "L3∘(L3×1)",
            "L3∘(1×L3)",
        ),
        equation(Law::WeakUnitality, &l2_left, &l2_right, "L3∘(L1×1)", "L3∘(1×L1)"),
        equation(Law::ProjectorIdempotence, &squared, &l2_left, "L2∘L2", "L2"),
    ]
}

/// `ψ_R : pt ⇒ X×X`, the name of `ψ`.
pub fn psi_name(c: &WeakStarCandidate) -> Rel {
    name_of(&c.psi)
}

fn name_of(r: &Rel) -> Rel {
    let whole = r.source().times(r.target());
    let cols = r.target().len();
    let pairs: Vec<(usize, usize)> = r.pairs().map(|(a, b)| (0, a * cols + b)).collect();
    Rel::from_pairs(Carrier::point(), whole, pairs).expect("indices in range")
}

/// `L1 = L3∘ψ_R`.
pub fn derived_l1(c: &WeakStarCandidate) -> PtSubset {
    let l1 = must(compose(&psi_name(c), &c.l3));
    PtSubset::from_morphism(&l1).expect("pt -> X")
}

/// Involutivity `compose(ψ, ψ†) = 1` (the converse orientation is reported
/// alongside, informationally), then the weak-monoid axioms of
/// `(X, L3∘ψ_R, L3)`.
pub fn check_weak_star(c: &WeakStarCandidate) -> Vec<CheckReport> {
    let one = Rel::identity(&Carrier::of(&c.carrier));
    let psi_dagger = dagger(&c.psi);
    let forward = must(compose(&c.psi, &psi_dagger));
    let converse = must(compose(&psi_dagger, &c.psi));
    let l1 = derived_l1(c);
    let note = format!("L1 = {}", l1.display());
    let mut reports = vec![
        equation(Law::Involutivity, &forward, &one, "ψ†∘ψ", "1"),
        equation(Law::InvolutivityConverse, &converse, &one, "ψ∘ψ†", "1").informational(),
    ];
    let weak = WeakMonoidCandidate::new(c.carrier.clone(), l1, c.l3.clone()).expect("types agree");
    reports.extend(check_weak_monoid(&weak).into_iter().map(|r| r.with_note(note.clone())));
    reports
}

/// `σ : X³ ⇒ X³`, `(a, b, c) ↦ (c, a, b)`.
pub fn sigma(carrier: &Arc<FinSet>) -> Rel {
    let x3 = Carrier::power(carrier, 3);
    let map: Vec<usize> = (0..x3.len())
        .map(|i| {
            let t = x3.tuple(i);
            x3.index(&[t[2], t[0], t[1]])
        })
        .collect();
    Rel::graph_of(x3.clone(), x3, &map).expect("permutation of X³")
}

/// `L3 = ψ†∘L`.
pub fn cyclic_l3(c: &CyclicCandidate) -> Rel {
    must(compose(&c.l, &dagger(&c.psi)))
}

/// Invariance of `L_R` under `σ` and `σ∘σ`, then the weak-*-monoid axioms
/// of `(X, ψ, ψ†∘L)`.
pub fn check_cyclic(c: &CyclicCandidate) -> Vec<CheckReport> {
    let s = sigma(&c.carrier);
    let s2 = must(compose(&s, &s));
    let s3 = must(compose(&s2, &s));
    if s3 != Rel::identity(&Carrier::power(&c.carrier, 3)) {
        return vec![CheckReport::internal(Law::Cyclicity, "σ∘σ∘σ is not the identity")];
    }
    let lr = name_of(&c.l);
    let rotated = must(compose(&lr, &s));
    let rotated2 = must(compose(&lr, &s2));
    let mut cyc = equation(Law::Cyclicity, &lr, &rotated, "L_R", "σ∘L_R");
    if cyc.passed() {
        cyc = equation(Law::Cyclicity, &lr, &rotated2, "L_R", "σ∘σ∘L_R");
        if let Some(w) = &mut cyc.witness {
            w.clause = format!("sigma-squared:{}", w.clause);
        }
    } else if let Some(w) = &mut cyc.witness {
        w.clause = format!("sigma:{}", w.clause);
    }
    let star = WeakStarCandidate::new(c.carrier.clone(), c.psi.clone(), cyclic_l3(c)).expect("types agree");
    let mut reports = vec![cyc];
    reports.extend(check_weak_star(&star));
    reports
}
