//! The axioms as equations between composite relations, built with the
//! relcore operations. `compose(f, g)` is `g ∘ f`, so the
//! composite `(1×m)∘(m†×1)` is written `compose(m†×1, 1×m)`.

use super::FrobCandidate;
use crate::relcore::{compose, dagger, product, Carrier, PtSubset, Rel};

fn id(c: &FrobCandidate) -> Rel {
    Rel::identity(&Carrier::of(c.carrier()))
}

fn must(r: Result<Rel, crate::relcore::RelError>) -> Rel {
    r.expect("candidate relations are well typed")
}

/// `m ∘ m†`, a relation `X → X`.
pub fn m_side(c: &FrobCandidate) -> Rel {
    must(compose(&dagger(c.mult_rel()), c.mult_rel()))
}

pub fn m_holds(c: &FrobCandidate) -> bool {
    m_side(c) == id(c)
}

/// The three relations `X×X → X×X` that (F) equates, in order:
/// `(1×m)∘(m†×1)`, `m†∘m`, `(m×1)∘(1×m†)`.
pub fn f_sides(c: &FrobCandidate) -> (Rel, Rel, Rel) {
    let m = c.mult_rel();
    let md = dagger(m);
    let one = id(c);
    let left = must(compose(&product(&md, &one), &product(&one, m)));
    let middle = must(compose(m, &md));
    let right = must(compose(&product(&one, &md), &product(m, &one)));
    (left, middle, right)
}

pub fn f_holds(c: &FrobCandidate) -> bool {
    let (l, mid, r) = f_sides(c);
    l == mid && mid == r
}

/// `m∘(m×1)` and `m∘(1×m)`, relations `X×X×X → X`.
pub fn a_sides(c: &FrobCandidate) -> (Rel, Rel) {
    let m = c.mult_rel();
    let one = id(c);
    let left = must(compose(&product(m, &one), m));
    let right = must(compose(&product(&one, m), m));
    (left, right)
}

pub fn a_holds(c: &FrobCandidate) -> bool {
    let (l, r) = a_sides(c);
    l == r
}

/// `m∘(1×u)` and `m∘(u×1)` as relations `X → X` (using `X×1 = X`).
pub fn unit_sides(c: &FrobCandidate, u: &PtSubset) -> (Rel, Rel) {
    let m = c.mult_rel();
    let one = id(c);
    let um = u.to_morphism();
    let right = must(compose(&product(&one, &um), m));
    let left = must(compose(&product(&um, &one), m));
    (right, left)
}

/// (U) for a given `u : 1 ⇒ X`.
pub fn unit_holds(c: &FrobCandidate, u: &PtSubset) -> bool {
    let one = id(c);
    let (right, left) = unit_sides(c, u);
    right == one && left == one
}

/// The (H) equations at `x` with `x* = xs`, as relations `X → X`:
/// `(m∘(1×x*), (1×x†)∘m†)` and `(m∘(x*×1), (x†×1)∘m†)`.
///
/// The right-hand sides are usually written `(1×x)∘m†`; with `x : 1 ⇒ X`
/// only `x†` composes after `m† : X ⇒ X×X`, and `X×1 = X`.
pub fn h_sides(c: &FrobCandidate, x: &PtSubset, xs: &PtSubset) -> ((Rel, Rel), (Rel, Rel)) {
    let m = c.mult_rel();
    let md = dagger(m);
    let one = id(c);
    let xm = x.to_morphism();
    let xsm = xs.to_morphism();
    let right = (
        must(compose(&product(&one, &xsm), m)),
        must(compose(&md, &product(&one, &dagger(&xm)))),
    );
    let left = (
        must(compose(&product(&xsm, &one), m)),
        must(compose(&md, &product(&dagger(&xm), &one))),
    );
    (right, left)
}

pub fn h_holds(c: &FrobCandidate, x: &PtSubset, xs: &PtSubset) -> bool {
    let ((rl, rr), (ll, lr)) = h_sides(c, x, xs);
    rl == rr && ll == lr
}
