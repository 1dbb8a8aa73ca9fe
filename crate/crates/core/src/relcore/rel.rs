use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::bitmatrix::BitMatrix;
use super::finset::{Carrier, FinSet};
use super::RelError;

/// A binary relation between two carriers: a morphism of **Rel**.
///
/// Stored as a dense boolean matrix of shape |source| × |target|, so two
/// relations are equal exactly when their carriers and pair sets agree.
#[derive(Clone, PartialEq, Eq)]
pub struct Rel {
    source: Carrier,
    target: Carrier,
    bits: BitMatrix,
}

impl Rel {
    pub fn empty(source: Carrier, target: Carrier) -> Self {
        let bits = BitMatrix::zeros(source.len(), target.len());
        Self { source, target, bits }
    }

    pub fn from_pairs<I>(source: Carrier, target: Carrier, pairs: I) -> Result<Self, RelError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = Self::empty(source, target);
        for (a, b) in pairs {
            rel.insert(a, b)?;
        }
        Ok(rel)
    }

    pub(crate) fn from_bits(source: Carrier, target: Carrier, bits: BitMatrix) -> Self {
        debug_assert_eq!(bits.rows(), source.len());
        debug_assert_eq!(bits.cols(), target.len());
        Self { source, target, bits }
    }

    pub fn insert(&mut self, a: usize, b: usize) -> Result<(), RelError> {
        if a >= self.source.len() || b >= self.target.len() {
            return Err(RelError::OutOfRange {
                pair: (a, b),
                shape: (self.source.len(), self.target.len()),
            });
        }
        self.bits.set(a, b);
        Ok(())
    }

    /// The identity relation `1_X`.
    pub fn identity(x: &Carrier) -> Self {
        Self::from_bits(x.clone(), x.clone(), BitMatrix::identity(x.len()))
    }

    /// The graph `{(a, f(a))}` of a total map given as a lookup table.
    pub fn graph_of(source: Carrier, target: Carrier, map: &[usize]) -> Result<Self, RelError> {
        if map.len() != source.len() {
            return Err(RelError::NotTotal {
                defined: map.len(),
                expected: source.len(),
            });
        }
        Self::from_pairs(source, target, map.iter().copied().enumerate())
    }

    /// The graph of a partial map; `None` entries are simply unrelated.
    pub fn graph_of_partial(source: Carrier, target: Carrier, map: &[Option<usize>]) -> Result<Self, RelError> {
        if map.len() != source.len() {
            return Err(RelError::NotTotal {
                defined: map.len(),
                expected: source.len(),
            });
        }
        Self::from_pairs(
            source,
            target,
            map.iter().enumerate().filter_map(|(a, b)| b.map(|b| (a, b))),
        )
    }

    pub fn source(&self) -> &Carrier {
        &self.source
    }

    pub fn target(&self) -> &Carrier {
        &self.target
    }

    pub fn bits(&self) -> &BitMatrix {
        &self.bits
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits.get(a, b)
    }

    /// Targets related to `a`, ascending.
    pub fn image(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.bits.row_ones(a)
    }

    pub fn image_len(&self, a: usize) -> usize {
        self.bits.row_count(a)
    }

    /// All pairs in canonical (source index, target index) order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bits.ones()
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `self` followed by `g`, i.e. `g ∘ self` in right-to-left notation.
    pub fn then(&self, g: &Rel) -> Result<Rel, RelError> {
        if self.target != g.source {
            return Err(RelError::TypeMismatch {
                left: self.target.to_string(),
                right: g.source.to_string(),
            });
        }
        Ok(Self::from_bits(
            self.source.clone(),
            g.target.clone(),
            self.bits.mul(&g.bits),
        ))
    }

    pub fn dagger(&self) -> Rel {
        Self::from_bits(self.target.clone(), self.source.clone(), self.bits.transpose())
    }

    /// Monoidal product `self × s : A×C → B×D`.
    pub fn times(&self, s: &Rel) -> Rel {
        Self::from_bits(
            self.source.times(&s.source),
            self.target.times(&s.target),
            self.bits.kron(&s.bits),
        )
    }

    /// First pair on which `self` and `other` disagree, with the side that
    /// contains it (`true` = `self`).
    pub fn first_difference(&self, other: &Rel) -> Result<Option<(usize, usize, bool)>, RelError> {
        if self.source != other.source || self.target != other.target {
            return Err(RelError::TypeMismatch {
                left: format!("{} -> {}", self.source, self.target),
                right: format!("{} -> {}", other.source, other.target),
            });
        }
        Ok(self
            .bits
            .first_difference(&other.bits)
            .map(|(a, b)| (a, b, self.contains(a, b))))
    }

    pub fn to_pair_set(&self) -> BTreeSet<(usize, usize)> {
        self.pairs().collect()
    }

    pub fn classify(&self) -> Classification {
        let (rows, cols) = (self.source.len(), self.target.len());
        let single_valued = (0..rows).all(|a| self.image_len(a) <= 1);
        let total = (0..rows).all(|a| self.image_len(a) >= 1);
        let t = self.bits.transpose();
        let injective = (0..cols).all(|b| t.row_count(b) <= 1);
        let surjective = (0..cols).all(|b| t.row_count(b) >= 1);
        Classification {
            single_valued,
            total,
            surjective,
            injective,
        }
    }

    pub fn display_pair(&self, a: usize, b: usize) -> String {
        format!(
            "{} -> {}",
            self.source.display_element(a),
            self.target.display_element(b)
        )
    }
}

impl fmt::Debug for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs().map(|(a, b)| self.display_pair(a, b)).collect();
        write!(f, "{} -> {} {{{}}}", self.source, self.target, pairs.join("; "))
    }
}

/// `compose(f, g)` applies `f` first: the result is `g ∘ f`.
pub fn compose(f: &Rel, g: &Rel) -> Result<Rel, RelError> {
    f.then(g)
}

pub fn dagger(r: &Rel) -> Rel {
    r.dagger()
}

pub fn product(r: &Rel, s: &Rel) -> Rel {
    r.times(s)
}

pub fn identity(x: &Arc<FinSet>) -> Rel {
    Rel::identity(&Carrier::of(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub single_valued: bool,
    pub total: bool,
    pub surjective: bool,
    pub injective: bool,
}

/// A subset `U ⊆ X`, equivalently a relation `pt → X`.
#[derive(Clone, PartialEq, Eq)]
pub struct PtSubset {
    carrier: Arc<FinSet>,
    members: Vec<usize>,
}

impl PtSubset {
    pub fn new(carrier: &Arc<FinSet>, members: impl IntoIterator<Item = usize>) -> Result<Self, RelError> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&m| m >= carrier.len()) {
            return Err(RelError::OutOfRange {
                pair: (0, bad),
                shape: (1, carrier.len()),
            });
        }
        Ok(Self {
            carrier: Arc::clone(carrier),
            members: members.into_iter().collect(),
        })
    }

    pub fn from_labels<S: AsRef<str>>(carrier: &Arc<FinSet>, labels: &[S]) -> Result<Self, RelError> {
        let idx = labels
            .iter()
            .map(|l| carrier.lookup(l.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(carrier, idx)
    }

    /// Subset from the low `|X|` bits of a mask.
    pub fn from_mask(carrier: &Arc<FinSet>, mask: u64) -> Self {
        let members = (0..carrier.len()).filter(|&i| mask >> i & 1 == 1).collect();
        Self {
            carrier: Arc::clone(carrier),
            members,
        }
    }

    pub fn carrier(&self) -> &Arc<FinSet> {
        &self.carrier
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.members.iter().map(|&i| self.carrier.label(i)).collect()
    }

    /// The morphism `pt → X` relating the point to each member.
    pub fn to_morphism(&self) -> Rel {
        Rel::from_pairs(
            Carrier::point(),
            Carrier::of(&self.carrier),
            self.members.iter().map(|&m| (0, m)),
        )
        .expect("members are in range")
    }

    pub fn from_morphism(r: &Rel) -> Result<Self, RelError> {
        let carrier = match (r.source().arity(), r.target().as_set()) {
            (0, Some(set)) => set,
            _ => {
                return Err(RelError::TypeMismatch {
                    left: format!("{} -> {}", r.source(), r.target()),
                    right: "1 -> X".into(),
                })
            }
        };
        Self::new(carrier, r.image(0).collect::<Vec<_>>())
    }

    /// `{a, b}` using element labels.
    pub fn display(&self) -> String {
        format!("{{{}}}", self.labels().join(", "))
    }
}

impl fmt::Debug for PtSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊆ {}", self.display(), self.carrier.name())
    }
}

pub fn subset_as_morphism(u: &PtSubset) -> Rel {
    u.to_morphism()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(name: &str, labels: &[&str]) -> Arc<FinSet> {
        Arc::new(FinSet::new(name, labels.iter().copied()).unwrap())
    }

    fn z2() -> (Arc<FinSet>, Rel) {
        let x = set("X", &["e", "a"]);
        let xx = Carrier::power(&x, 2);
        // e=0, a=1: ee=e, ea=a, ae=a, aa=e
        let m = Rel::graph_of(xx, Carrier::of(&x), &[0, 1, 1, 0]).unwrap();
        (x, m)
    }

    #[test]
    fn compose_single_pair() {
        let a = set("A", &["1"]);
        let b = set("B", &["a"]);
        let c = set("C", &["α"]);
        let f = Rel::from_pairs(Carrier::of(&a), Carrier::of(&b), [(0, 0)]).unwrap();
        let g = Rel::from_pairs(Carrier::of(&b), Carrier::of(&c), [(0, 0)]).unwrap();
        let h = compose(&f, &g).unwrap();
        assert_eq!(h.to_pair_set(), BTreeSet::from([(0, 0)]));
        assert_eq!(h.source(), &Carrier::of(&a));
        assert_eq!(h.target(), &Carrier::of(&c));
    }

    #[test]
    fn compose_rejects_mismatched_middle() {
        let a = set("A", &["1"]);
        let b = set("B", &["a"]);
        let b2 = set("B2", &["a"]);
        let f = Rel::empty(Carrier::of(&a), Carrier::of(&b));
        let g = Rel::empty(Carrier::of(&b2), Carrier::of(&a));
        assert!(matches!(compose(&f, &g), Err(RelError::TypeMismatch { .. })));
        // same name, different elements is also a different set
        let b3 = set("B", &["a", "b"]);
        let g = Rel::empty(Carrier::of(&b3), Carrier::of(&a));
        assert!(compose(&f, &g).is_err());
    }

    #[test]
    fn identity_is_neutral() {
        let a = set("A", &["1", "2"]);
        let b = set("B", &["x", "y", "z"]);
        let r = Rel::from_pairs(Carrier::of(&a), Carrier::of(&b), [(0, 2), (1, 0), (1, 1)]).unwrap();
        assert_eq!(compose(&r, &identity(&b)).unwrap(), r);
        assert_eq!(compose(&identity(&a), &r).unwrap(), r);
    }

    #[test]
    fn z2_satisfies_m_by_composition() {
        let (x, m) = z2();
        assert_eq!(compose(&dagger(&m), &m).unwrap(), identity(&x));
    }

    #[test]
    fn dagger_examples() {
        let a = set("A", &["1", "2"]);
        let b = set("B", &["a"]);
        let r = Rel::from_pairs(Carrier::of(&a), Carrier::of(&b), [(0, 0), (1, 0)]).unwrap();
        let d = dagger(&r);
        assert_eq!(d.to_pair_set(), BTreeSet::from([(0, 0), (0, 1)]));
        assert_eq!(dagger(&d), r);
        assert_eq!(dagger(&identity(&a)), identity(&a));

        let (x, m) = z2();
        let md = dagger(&m);
        let xx = Carrier::power(&x, 2);
        let e_pre: Vec<_> = md.image(0).map(|i| xx.labels_of(i).join("")).collect();
        let a_pre: Vec<_> = md.image(1).map(|i| xx.labels_of(i).join("")).collect();
        assert_eq!(e_pre, ["ee", "aa"]);
        assert_eq!(a_pre, ["ea", "ae"]);
    }

    #[test]
    fn product_examples() {
        let x = set("X", &["e", "a"]);
        assert_eq!(
            product(&identity(&x), &identity(&x)),
            Rel::identity(&Carrier::power(&x, 2))
        );
        let a = set("A", &["1", "2"]);
        let b = set("B", &["a", "b"]);
        let r = Rel::from_pairs(Carrier::of(&a), Carrier::of(&b), [(0, 0)]).unwrap();
        let s = Rel::from_pairs(Carrier::of(&a), Carrier::of(&b), [(1, 1)]).unwrap();
        let p = product(&r, &s);
        let pairs: Vec<_> = p.pairs().map(|(i, j)| p.display_pair(i, j)).collect();
        assert_eq!(pairs, ["(1, 2) -> (a, b)"]);
    }

    #[test]
    fn identity_edge_cases() {
        let e = set("E", &["e"]);
        assert_eq!(identity(&e).to_pair_set(), BTreeSet::from([(0, 0)]));
        let empty = set("Empty", &[]);
        assert!(identity(&empty).is_empty());
        let x = set("X", &["a", "b", "c"]);
        let c = identity(&x).classify();
        assert!(c.single_valued && c.total && c.surjective && c.injective);
    }

    #[test]
    fn graph_examples() {
        let x = set("X", &["e", "a"]);
        let g = Rel::graph_of(Carrier::of(&x), Carrier::of(&x), &[0, 1]).unwrap();
        assert_eq!(g, identity(&x));
        let uv = set("UV", &["u", "v"]);
        let u = set("U", &["u"]);
        let c = Rel::graph_of(Carrier::of(&uv), Carrier::of(&u), &[0, 0]).unwrap();
        assert_eq!(c.to_pair_set(), BTreeSet::from([(0, 0), (1, 0)]));
        assert!(matches!(
            Rel::graph_of(Carrier::of(&uv), Carrier::of(&u), &[0]),
            Err(RelError::NotTotal { .. })
        ));
        assert!(matches!(
            Rel::graph_of(Carrier::of(&uv), Carrier::of(&u), &[0, 1]),
            Err(RelError::OutOfRange { .. })
        ));
    }

    #[test]
    fn subsets_and_points() {
        let (x, _) = z2();
        let empty = PtSubset::new(&x, []).unwrap();
        assert!(empty.to_morphism().is_empty());
        let e = PtSubset::from_labels(&x, &["e"]).unwrap();
        let m = e.to_morphism();
        assert_eq!(m.to_pair_set(), BTreeSet::from([(0, 0)]));
        assert_eq!(m.source().len(), 1);
        assert_eq!(PtSubset::from_morphism(&m).unwrap(), e);
    }

    #[test]
    fn classify_examples() {
        let a = set("A", &["a"]);
        let n = set("N", &["1", "2"]);
        let r = Rel::from_pairs(Carrier::of(&a), Carrier::of(&n), [(0, 0), (0, 1)]).unwrap();
        assert!(!r.classify().single_valued);
        let (_, m) = z2();
        assert_eq!(
            m.classify(),
            Classification {
                single_valued: true,
                total: true,
                surjective: true,
                injective: false
            }
        );
    }
}
