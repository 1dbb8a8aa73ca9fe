use std::sync::Arc;

use super::{WeakError, WeakMonoidCandidate};
use crate::relcore::{Carrier, FinSet, PtSubset, Rel};

/// A finite monoid given by its total multiplication table, indexed
/// `a * n + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    carrier: Arc<FinSet>,
    op: Vec<usize>,
    one: usize,
}

impl FiniteMonoid {
    /// Validates totality, associativity and the unit.
    pub fn new(carrier: Arc<FinSet>, op: Vec<usize>, one: usize) -> Result<Self, WeakError> {
        let n = carrier.len();
        if op.len() != n * n || op.iter().any(|&v| v >= n) || one >= n {
            return Err(WeakError::NotMonoid("table is not a total operation".into()));
        }
        let m = Self { carrier, op, one };
        let l = |i: usize| m.carrier.label(i).to_owned();
        for a in 0..n {
            if m.mul(one, a) != a || m.mul(a, one) != a {
                return Err(WeakError::NotMonoid(format!("{} is not a unit for {}", l(one), l(a))));
            }
            for b in 0..n {
                for c in 0..n {
                    if m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)) {
                        return Err(WeakError::NotMonoid(format!(
                            "({0}{1}){2} ≠ {0}({1}{2})",
                            l(a),
                            l(b),
                            l(c)
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn carrier(&self) -> &Arc<FinSet> {
        &self.carrier
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.op[a * self.carrier.len() + b]
    }

    pub fn table(&self) -> &[usize] {
        &self.op
    }

    /// The graph of the multiplication, `X×X ⇒ X`.
    pub fn graph(&self) -> Rel {
        Rel::graph_of(Carrier::power(&self.carrier, 2), Carrier::of(&self.carrier), &self.op).expect("total table")
    }

    fn commutativity_witness(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }
}

/// A monoid as a weak monoid: `L1 = {1}`, `L3` the graph of the operation.
pub fn monoid_to_weak(m: &FiniteMonoid) -> WeakMonoidCandidate {
    let l1 = PtSubset::new(m.carrier(), [m.one()]).expect("in range");
    WeakMonoidCandidate::new(m.carrier().clone(), l1, m.graph()).expect("well typed")
}

fn require_projector(m: &FiniteMonoid, p: usize) -> Result<(), WeakError> {
    if let Some((a, b)) = m.commutativity_witness() {
        return Err(WeakError::NotCommutative {
            a: m.carrier().label(a).into(),
            b: m.carrier().label(b).into(),
        });
    }
    let square = m.mul(p, p);
    if square != m.one() {
        return Err(WeakError::NotProjector {
            p: m.carrier().label(p).into(),
            square: m.carrier().label(square).into(),
        });
    }
    Ok(())
}

/// The weak monoid of a commutative monoid with a projector `p` (`p² = 1`):
/// `L3` is the operation and `L1 = {1, p}`, so `L2` relates `x` to `x` and
/// to `px`. This `L2` is idempotent and its classes are the orbits
/// `{x, px}`.
///
/// Taking `L1 = {p}` alone makes `L2` the graph of `x ↦ px`, whose square
/// is the identity, so idempotence fails unless `p = 1`; see
/// [`monoid_projector_literal`].
pub fn monoid_projector_to_weak(m: &FiniteMonoid, p: usize) -> Result<WeakMonoidCandidate, WeakError> {
    require_projector(m, p)?;
    let l1 = PtSubset::new(m.carrier(), [m.one(), p])?;
    WeakMonoidCandidate::new(m.carrier().clone(), l1, m.graph())
}

/// The same construction with `L1 = {p}`.
pub fn monoid_projector_literal(m: &FiniteMonoid, p: usize) -> Result<WeakMonoidCandidate, WeakError> {
    require_projector(m, p)?;
    let l1 = PtSubset::new(m.carrier(), [p])?;
    WeakMonoidCandidate::new(m.carrier().clone(), l1, m.graph())
}

/// `X / L2`: classes are the orbits `{x, px}` ordered by least member and
/// labelled by joining member labels with `_`. The induced product is
/// computed from every pair of representatives and must land in one class.
pub fn quotient_by_projector(m: &FiniteMonoid, p: usize) -> Result<FiniteMonoid, WeakError> {
    require_projector(m, p)?;
    let n = m.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] == usize::MAX {
            let mut members = vec![x, m.mul(p, x)];
            members.sort_unstable();
            members.dedup();
            for &y in &members {
                class_of[y] = classes.len();
            }
            classes.push(members);
        }
    }
    let k = classes.len();
    let mut op = vec![0; k * k];
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate() {
            let first = class_of[m.mul(ci[0], cj[0])];
            for &a in ci {
                for &b in cj {
                    if class_of[m.mul(a, b)] != first {
                        let l = |v: usize| m.carrier().label(v).to_owned();
                        return Err(WeakError::IllDefined {
                            a: l(ci[0]),
                            b: l(cj[0]),
                            a2: l(a),
                            b2: l(b),
                        });
                    }
                }
            }
            op[i * k + j] = first;
        }
    }
    let labels = classes
        .iter()
        .map(|c| c.iter().map(|&x| m.carrier().label(x)).collect::<Vec<_>>().join("_"));
    let carrier = FinSet::new(format!("{}_q", m.carrier().name()), labels)?.into_arc();
    FiniteMonoid::new(carrier, op, class_of[m.one()])
}
