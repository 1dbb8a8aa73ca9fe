//! Named reference structures shared by tests, the acceptance suite and the
//! command-line fixture emitter.

use std::sync::Arc;

use crate::frobenius::FrobCandidate;
use crate::groupoid::Semigroupoid;
use crate::relcore::{Carrier, FinSet, Rel};
use crate::weakmonoid::FiniteMonoid;

#[derive(Debug, Clone)]
pub enum FixtureStructure {
    Frob(FrobCandidate),
    Semigroupoid(Semigroupoid),
    Monoid(FiniteMonoid),
}

/// Z1, Z2, D2, P2, SL2, RB2 and M5.
#[derive(Debug, Clone)]
pub struct FixtureCorpus {
    fixtures: Vec<(&'static str, FixtureStructure)>,
}

fn set(name: &str, labels: &[&str]) -> Arc<FinSet> {
    FinSet::new(name, labels.iter().copied())
        .expect("distinct labels")
        .into_arc()
}

fn frob(labels: &[&str], mult: impl Fn(&str, &str) -> Option<String>) -> FrobCandidate {
    let x = set("X", labels);
    let xx = Carrier::power(&x, 2);
    let mut pairs = Vec::new();
    for a in labels {
        for b in labels {
            if let Some(c) = mult(a, b) {
                let src = xx.index_of_labels(&[*a, *b]).expect("known labels");
                pairs.push((src, x.index_of(&c).expect("closed")));
            }
        }
    }
    let m = Rel::from_pairs(xx, Carrier::of(&x), pairs).expect("in range");
    FrobCandidate::new(x, m).expect("well typed")
}

/// `(i, j)(j, k) = (i, k)`; other pairs undefined.
fn pair_mult(g: &str, f: &str) -> Option<String> {
    (g.as_bytes()[1] == f.as_bytes()[0]).then(|| format!("{}{}", &g[..1], &f[1..]))
}

fn rb2() -> Semigroupoid {
    let labels = ["11", "12", "21", "22"];
    let arrows = set("X", &labels);
    let objects = set("X_obj", &["o"]);
    let comp = labels
        .iter()
        .flat_map(|g| labels.iter().map(move |f| format!("{}{}", &g[..1], &f[1..])))
        .map(|l| arrows.index_of(&l))
        .collect();
    Semigroupoid::new(objects, arrows, vec![0; 4], vec![0; 4], comp).expect("well formed")
}

fn m5() -> FiniteMonoid {
    let x = FinSet::numbered("M", 5).into_arc();
    let op = (0..25).map(|i| (i / 5) * (i % 5) % 5).collect();
    FiniteMonoid::new(x, op, 1).expect("multiplication mod 5 is a monoid")
}

impl FixtureCorpus {
    pub fn new() -> Self {
        let z2 = |a: &str, b: &str| Some(if a == b { "e" } else { "a" }.to_owned());
        let sl2 = |a: &str, b: &str| Some(if a == "e" && b == "e" { "e" } else { "a" }.to_owned());
        let fixtures = vec![
            ("Z1", FixtureStructure::Frob(frob(&["e"], |_, _| Some("e".into())))),
            ("Z2", FixtureStructure::Frob(frob(&["e", "a"], z2))),
            (
                "D2",
                FixtureStructure::Frob(frob(&["u", "v"], |a, b| (a == b).then(|| a.to_owned()))),
            ),
            ("P2", FixtureStructure::Frob(frob(&["11", "12", "21", "22"], pair_mult))),
            ("SL2", FixtureStructure::Frob(frob(&["e", "a"], sl2))),
            ("RB2", FixtureStructure::Semigroupoid(rb2())),
            ("M5", FixtureStructure::Monoid(m5())),
        ];
        Self { fixtures }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &FixtureStructure)> {
        self.fixtures.iter().map(|(n, s)| (*n, s))
    }

    pub fn get(&self, name: &str) -> Option<&FixtureStructure> {
        self.fixtures.iter().find(|(n, _)| *n == name).map(|(_, s)| s)
    }

    /// The named fixture, which must be a Frobenius-style candidate.
    pub fn frob(&self, name: &str) -> Option<&FrobCandidate> {
        match self.get(name)? {
            FixtureStructure::Frob(c) => Some(c),
            _ => None,
        }
    }
}

impl Default for FixtureCorpus {
    fn default() -> Self {
        Self::new()
    }
}
