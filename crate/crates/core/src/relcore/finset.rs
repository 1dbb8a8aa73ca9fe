use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::RelError;

/// A named finite set with distinct element labels.
///
/// Element order is fixed at construction; the position of a label is its
/// index everywhere else in the crate.
#[derive(Clone)]
pub struct FinSet {
    name: String,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl FinSet {
    pub fn new<N, I, L>(name: N, labels: I) -> Result<Self, RelError>
    where
        N: Into<String>,
        I: IntoIterator<Item = L>,
        L: Into<String>,
    {
        let name = name.into();
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(RelError::DuplicateLabel {
                    set: name,
                    label: label.clone(),
                });
            }
        }
        Ok(Self { name, labels, index })
    }

    /// A set whose labels are `"0"`, `"1"`, ..., `"n-1"`.
    pub fn numbered(name: impl Into<String>, n: usize) -> Self {
        Self::new(name, (0..n).map(|i| i.to_string())).expect("numbered labels are distinct")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn lookup(&self, label: &str) -> Result<usize, RelError> {
        self.index_of(label).ok_or_else(|| RelError::UnknownLabel {
            set: self.name.clone(),
            label: label.to_owned(),
        })
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.labels == other.labels
    }
}

impl Eq for FinSet {}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {{{}}}", self.name, self.labels.join(", "))
    }
}

/// An ordered product of finite sets. Elements are tuples enumerated in
/// lexicographic order, first factor most significant.
///
/// Products flatten: `(A×B)×C` and `A×(B×C)` are the same carrier `A×B×C`,
/// and the one-point set `pt` is the empty product, so `X×pt` is `X`.
#[derive(Clone, PartialEq, Eq)]
pub struct Carrier {
    factors: Vec<Arc<FinSet>>,
}

impl Carrier {
    /// The one-point set (empty product).
    pub fn point() -> Self {
        Self { factors: Vec::new() }
    }

    pub fn of(set: &Arc<FinSet>) -> Self {
        Self {
            factors: vec![Arc::clone(set)],
        }
    }

    pub fn power(set: &Arc<FinSet>, k: usize) -> Self {
        Self {
            factors: vec![Arc::clone(set); k],
        }
    }

    pub fn from_factors(factors: Vec<Arc<FinSet>>) -> Self {
        Self { factors }
    }

    pub fn times(&self, other: &Carrier) -> Carrier {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Carrier { factors }
    }

    pub fn factors(&self) -> &[Arc<FinSet>] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    /// Number of tuples: the product of factor cardinalities.
    pub fn len(&self) -> usize {
        self.factors.iter().map(|f| f.len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The single factor, when this carrier is a plain set.
    pub fn as_set(&self) -> Option<&Arc<FinSet>> {
        match self.factors.as_slice() {
            [only] => Some(only),
            _ => None,
        }
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.factors.len());
        tuple
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&x, f)| acc * f.len() + x)
    }

    pub fn tuple(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            let n = f.len();
            *slot = index % n;
            index /= n;
        }
        out
    }

    pub fn index_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize, RelError> {
        if labels.len() != self.factors.len() {
            return Err(RelError::Arity {
                expected: self.factors.len(),
                found: labels.len(),
            });
        }
        let tuple = labels
            .iter()
            .zip(&self.factors)
            .map(|(l, f)| f.lookup(l.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.index(&tuple))
    }

    pub fn labels_of(&self, index: usize) -> Vec<&str> {
        self.tuple(index)
            .into_iter()
            .zip(&self.factors)
            .map(|(i, f)| f.label(i))
            .collect()
    }

    /// `a`, `(a, b)` or `()` depending on arity.
    pub fn display_element(&self, index: usize) -> String {
        let labels = self.labels_of(index);
        if labels.len() == 1 {
            labels[0].to_owned()
        } else {
            format!("({})", labels.join(", "))
        }
    }
}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let names: Vec<&str> = self.factors.iter().map(|s| s.name()).collect();
        f.write_str(&names.join(" * "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(name: &str, labels: &[&str]) -> Arc<FinSet> {
        Arc::new(FinSet::new(name, labels.iter().copied()).unwrap())
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = FinSet::new("X", ["a", "b", "a"]).unwrap_err();
        assert!(matches!(err, RelError::DuplicateLabel { .. }));
    }

    #[test]
    fn product_cardinality_and_flattening() {
        let a = set("A", &["1", "2"]);
        let b = set("B", &["x", "y", "z"]);
        let c = set("C", &["p", "q"]);
        let left = Carrier::of(&a).times(&Carrier::of(&b)).times(&Carrier::of(&c));
        let right = Carrier::of(&a).times(&Carrier::of(&b).times(&Carrier::of(&c)));
        assert_eq!(left, right);
        assert_eq!(left.len(), 12);
        for i in 0..left.len() {
            assert_eq!(left.index(&left.tuple(i)), i);
        }
        assert_eq!(left.tuple(0), vec![0, 0, 0]);
        assert_eq!(left.tuple(1), vec![0, 0, 1]);
        assert_eq!(left.tuple(11), vec![1, 2, 1]);
    }

    #[test]
    fn point_is_unit_for_product() {
        let x = set("X", &["e", "a"]);
        let pt = Carrier::point();
        assert_eq!(pt.len(), 1);
        assert_eq!(Carrier::of(&x).times(&pt), Carrier::of(&x));
        assert_eq!(pt.display_element(0), "()");
    }
}
