//! Turns a parsed file into checked core structures.

use std::collections::HashMap;
use std::sync::Arc;

use relcat_core::frobenius::{FrobCandidate, HStarCandidate, StarMap};
use relcat_core::groupoid::{Groupoid, Semigroupoid};
use relcat_core::relcore::{Carrier, FinSet, PtSubset, Rel};
use relcat_core::weakmonoid::{CyclicCandidate, FiniteMonoid, WeakMonoidCandidate, WeakStarCandidate};

use crate::syntax::{parse, Block, BlockKind, Decl, Diagnostic, Entry, FieldValue, Loc, Name, StructureFile, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Frob(FrobCandidate),
    HStar(HStarCandidate),
    Groupoid(Groupoid),
    Sgpd(Semigroupoid),
    Monoid(FiniteMonoid),
    Weak(WeakMonoidCandidate),
    WeakStar(WeakStarCandidate),
    Cyclic(CyclicCandidate),
}

#[derive(Debug, Clone)]
pub struct Resolved {
    pub name: String,
    pub kind: BlockKind,
    pub loc: Loc,
    pub structure: Structure,
}

/// Every structure block of a file, in order.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub structures: Vec<Resolved>,
}

impl Document {
    pub fn of_kind(&self, kinds: &[BlockKind]) -> impl Iterator<Item = &Resolved> + '_ {
        let kinds = kinds.to_vec();
        self.structures.iter().filter(move |r| kinds.contains(&r.kind))
    }
}

pub fn load(text: &str) -> Result<Document, Diagnostic> {
    resolve(&parse(text)?)
}

enum Item {
    Set(Arc<FinSet>),
    Rel(Rel),
    Subset(PtSubset),
    Block,
}

impl Item {
    fn what(&self) -> &'static str {
        match self {
            Item::Set(_) => "a set",
            Item::Rel(_) => "a relation",
            Item::Subset(_) => "a subset",
            Item::Block => "a structure",
        }
    }
}

struct Env {
    items: HashMap<String, Item>,
}

fn err(loc: Loc, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::error(loc, msg)
}

impl Env {
    fn declare(&mut self, name: &Name, item: Item) -> Result<(), Diagnostic> {
        if name.text == "pt" {
            return Err(err(name.loc, "'pt' is reserved for the empty product"));
        }
        if self.items.contains_key(&name.text) {
            return Err(err(name.loc, format!("'{}' is already declared", name.text)));
        }
        self.items.insert(name.text.clone(), item);
        Ok(())
    }

    fn get(&self, name: &Name) -> Result<&Item, Diagnostic> {
        self.items
            .get(&name.text)
            .ok_or_else(|| err(name.loc, format!("'{}' is not declared", name.text)))
    }

    fn set(&self, name: &Name) -> Result<Arc<FinSet>, Diagnostic> {
        match self.get(name)? {
            Item::Set(s) => Ok(s.clone()),
            other => Err(err(name.loc, format!("'{}' is {}, not a set", name.text, other.what()))),
        }
    }

    fn rel(&self, name: &Name) -> Result<Rel, Diagnostic> {
        match self.get(name)? {
            Item::Rel(r) => Ok(r.clone()),
            other => Err(err(
                name.loc,
                format!("'{}' is {}, not a relation", name.text, other.what()),
            )),
        }
    }

    fn subset(&self, name: &Name) -> Result<PtSubset, Diagnostic> {
        match self.get(name)? {
            Item::Subset(s) => Ok(s.clone()),
            other => Err(err(
                name.loc,
                format!("'{}' is {}, not a subset", name.text, other.what()),
            )),
        }
    }
}

fn label(set: &FinSet, n: &Name) -> Result<usize, Diagnostic> {
    set.index_of(&n.text)
        .ok_or_else(|| err(n.loc, format!("unknown label '{}' in set {}", n.text, set.name())))
}

fn labels(set: &FinSet, names: &[Name]) -> Result<Vec<usize>, Diagnostic> {
    let mut out: Vec<usize> = Vec::new();
    for n in names {
        let i = label(set, n)?;
        if out.contains(&i) {
            return Err(err(n.loc, format!("label '{}' listed twice", n.text)));
        }
        out.push(i);
    }
    Ok(out)
}

/// The index in the product of `factors` named by `t`.
fn element(factors: &[Arc<FinSet>], t: &Term, loc: Loc) -> Result<usize, Diagnostic> {
    let names: Vec<Name> = match t {
        Term::Label(n) if factors.len() == 1 => vec![n.clone()],
        Term::Tuple(v) if v.len() == factors.len() => v.clone(),
        _ => {
            let shape = if factors.is_empty() {
                "()".to_owned()
            } else if factors.len() == 1 {
                format!("a label of {}", factors[0].name())
            } else {
                let names: Vec<&str> = factors.iter().map(|f| f.name()).collect();
                format!("a {}-tuple over {}", factors.len(), names.join(" * "))
            };
            return Err(err(t.loc(loc), format!("expected {shape}")));
        }
    };
    let idx = names
        .iter()
        .zip(factors)
        .map(|(n, f)| label(f, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Carrier::from_factors(factors.to_vec()).index(&idx))
}

fn set_term(set: &Arc<FinSet>, t: &Term, loc: Loc) -> Result<PtSubset, Diagnostic> {
    match t {
        Term::Set(v) => Ok(PtSubset::new(set, labels(set, v)?).expect("labels resolved")),
        _ => Err(err(t.loc(loc), "expected a subset '{…}'")),
    }
}

/// `from -> to` pairs of a table, rejecting repeated sources.
fn table(
    entries: &[Entry],
    from: &[Arc<FinSet>],
    to: &[Arc<FinSet>],
    what: &str,
) -> Result<HashMap<usize, (usize, Loc)>, Diagnostic> {
    let mut out = HashMap::new();
    for e in entries {
        let a = element(from, &e.from, e.loc)?;
        let b = element(to, &e.to, e.loc)?;
        if out.insert(a, (b, e.loc)).is_some() {
            return Err(err(e.loc, format!("{what} has two entries for the same input")));
        }
    }
    Ok(out)
}

fn total(map: &HashMap<usize, (usize, Loc)>, domain: &Carrier, what: &str, loc: Loc) -> Result<Vec<usize>, Diagnostic> {
    (0..domain.len())
        .map(|i| {
            map.get(&i)
                .map(|(v, _)| *v)
                .ok_or_else(|| err(loc, format!("{what} has no entry for {}", domain.display_element(i))))
        })
        .collect()
}

fn partial(map: &HashMap<usize, (usize, Loc)>, size: usize) -> Vec<Option<usize>> {
    (0..size).map(|i| map.get(&i).map(|(v, _)| *v)).collect()
}

pub fn resolve(file: &StructureFile) -> Result<Document, Diagnostic> {
    let mut env = Env { items: HashMap::new() };
    let mut doc = Document::default();
    for d in &file.decls {
        match d {
            Decl::Set { name, labels } => {
                let mut seen: Vec<&str> = Vec::new();
                for l in labels {
                    if seen.contains(&l.text.as_str()) {
                        return Err(err(
                            l.loc,
                            format!("label '{}' appears twice in set {}", l.text, name.text),
                        ));
                    }
                    seen.push(&l.text);
                }
                let set = FinSet::new(name.text.as_str(), seen).map_err(|e| err(name.loc, e.to_string()))?;
                env.declare(name, Item::Set(set.into_arc()))?;
            }
            Decl::Subset { name, of, labels: ls } => {
                let set = env.set(of)?;
                let sub = PtSubset::new(&set, labels(&set, ls)?).expect("labels resolved");
                env.declare(name, Item::Subset(sub))?;
            }
            Decl::Rel {
                name,
                source,
                target,
                entries,
            } => {
                let src: Vec<Arc<FinSet>> = source.iter().map(|n| env.set(n)).collect::<Result<_, _>>()?;
                let tgt: Vec<Arc<FinSet>> = target.iter().map(|n| env.set(n)).collect::<Result<_, _>>()?;
                let mut pairs = Vec::new();
                for e in entries {
                    let p = (element(&src, &e.from, e.loc)?, element(&tgt, &e.to, e.loc)?);
                    if pairs.contains(&p) {
                        return Err(err(e.loc, "duplicate pair"));
                    }
                    pairs.push(p);
                }
                let rel = Rel::from_pairs(Carrier::from_factors(src), Carrier::from_factors(tgt), pairs)
                    .expect("indices resolved");
                env.declare(name, Item::Rel(rel))?;
            }
            Decl::Block(b) => {
                let structure = block(&env, b)?;
                env.declare(&b.name, Item::Block)?;
                doc.structures.push(Resolved {
                    name: b.name.text.clone(),
                    kind: b.kind,
                    loc: b.loc,
                    structure,
                });
            }
        }
    }
    Ok(doc)
}

fn word<'a>(b: &'a Block, key: &str) -> &'a Name {
    match b.field(key) {
        Some(FieldValue::Word(w)) => w,
        _ => unreachable!("the parser guarantees required word fields"),
    }
}

fn entries<'a>(b: &'a Block, key: &str) -> &'a [Entry] {
    match b.field(key) {
        Some(FieldValue::Table(t)) => t,
        _ => &[],
    }
}

struct Arrows {
    objects: Arc<FinSet>,
    arrows: Arc<FinSet>,
    source: Vec<usize>,
    target: Vec<usize>,
    comp: Vec<Option<usize>>,
}

fn arrows_part(env: &Env, b: &Block) -> Result<Arrows, Diagnostic> {
    let objects = env.set(word(b, "objects"))?;
    let arrows = env.set(word(b, "arrows"))?;
    let (o, a) = (std::slice::from_ref(&objects), std::slice::from_ref(&arrows));
    let dom = Carrier::of(&arrows);
    let source = total(&table(entries(b, "s"), a, o, "s")?, &dom, "s", b.loc)?;
    let target = total(&table(entries(b, "t"), a, o, "t")?, &dom, "t", b.loc)?;
    let aa = [arrows.clone(), arrows.clone()];
    let comp = partial(&table(entries(b, "comp"), &aa, a, "comp")?, arrows.len() * arrows.len());
    Ok(Arrows {
        objects,
        arrows,
        source,
        target,
        comp,
    })
}

fn block(env: &Env, b: &Block) -> Result<Structure, Diagnostic> {
    let at = |e: &dyn std::fmt::Display| err(b.loc, format!("{} {}: {e}", b.kind, b.name.text));
    match b.kind {
        BlockKind::Frob | BlockKind::HStar => {
            let x = env.set(word(b, "carrier"))?;
            let m = env.rel(word(b, "mult"))?;
            let c = FrobCandidate::new(x.clone(), m).map_err(|e| at(&e))?;
            if b.kind == BlockKind::Frob {
                return Ok(Structure::Frob(c));
            }
            let mut h: HStarCandidate = c.into();
            if let Some(FieldValue::Table(star)) = b.field("star") {
                let mut map = StarMap::new();
                let mut seen = Vec::new();
                for e in star {
                    let from = set_term(&x, &e.from, e.loc)?;
                    if seen.contains(&from) {
                        return Err(err(e.loc, "star has two entries for the same subset"));
                    }
                    map.insert(&from, &set_term(&x, &e.to, e.loc)?);
                    seen.push(from);
                }
                h = h.with_star(map);
            }
            Ok(Structure::HStar(h))
        }
        BlockKind::Groupoid => {
            let p = arrows_part(env, b)?;
            let (o, a) = (std::slice::from_ref(&p.objects), std::slice::from_ref(&p.arrows));
            let unit = total(
                &table(entries(b, "unit"), o, a, "unit")?,
                &Carrier::of(&p.objects),
                "unit",
                b.loc,
            )?;
            let inv = total(
                &table(entries(b, "inv"), a, a, "inv")?,
                &Carrier::of(&p.arrows),
                "inv",
                b.loc,
            )?;
            Groupoid::new(p.objects, p.arrows, p.source, p.target, unit, inv, p.comp)
                .map(Structure::Groupoid)
                .map_err(|e| at(&e))
        }
        BlockKind::Sgpd => {
            let p = arrows_part(env, b)?;
            Semigroupoid::new(p.objects, p.arrows, p.source, p.target, p.comp)
                .map(Structure::Sgpd)
                .map_err(|e| at(&e))
        }
        BlockKind::Monoid => {
            let x = env.set(word(b, "carrier"))?;
            let one = label(&x, word(b, "one"))?;
            let xx = [x.clone(), x.clone()];
            let op = total(
                &table(entries(b, "op"), &xx, std::slice::from_ref(&x), "op")?,
                &Carrier::power(&x, 2),
                "op",
                b.loc,
            )?;
            FiniteMonoid::new(x, op, one).map(Structure::Monoid).map_err(|e| at(&e))
        }
        BlockKind::Weak => {
            let x = env.set(word(b, "carrier"))?;
            let l1 = env.subset(word(b, "L1"))?;
            let l3 = env.rel(word(b, "L3"))?;
            WeakMonoidCandidate::new(x, l1, l3)
                .map(Structure::Weak)
                .map_err(|e| at(&e))
        }
        BlockKind::WeakStar => {
            let x = env.set(word(b, "carrier"))?;
            let psi = env.rel(word(b, "psi"))?;
            let l3 = env.rel(word(b, "L3"))?;
            WeakStarCandidate::new(x, psi, l3)
                .map(Structure::WeakStar)
                .map_err(|e| at(&e))
        }
        BlockKind::Cyclic => {
            let x = env.set(word(b, "carrier"))?;
            let psi = env.rel(word(b, "psi"))?;
            let l = env.rel(word(b, "L"))?;
            CyclicCandidate::new(x, psi, l)
                .map(Structure::Cyclic)
                .map_err(|e| at(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_resolves() {
        let doc = load(
            "set X = { e, a }\nrel m : X * X -> X { (e,e)->e (e,a)->a (a,e)->a (a,a)->e }\nfrob Z2 { carrier = X mult = m }",
        )
        .unwrap();
        let Structure::Frob(c) = &doc.structures[0].structure else {
            panic!("a frob block")
        };
        assert_eq!(c.mult(1, 1).unwrap(), Some(0));
    }

    #[test]
    fn undeclared_set_is_reported_at_its_line() {
        let e = load("set X = { e }\nrel m : X * Y -> X { }").unwrap_err();
        assert_eq!((e.loc.line, e.loc.col), (2, 13));
        assert!(e.message.contains("'Y' is not declared"));
    }

    #[test]
    fn label_and_arity_errors() {
        let e = load("set X = { e }\nrel m : X * X -> X {\n (e, q) -> e }").unwrap_err();
        assert_eq!(e.loc.line, 3);
        assert!(e.message.contains("unknown label 'q'"));

        let e = load("set X = { e }\nrel m : X * X -> X { e -> e }").unwrap_err();
        assert!(e.message.contains("2-tuple"), "{e}");

        let e = load("set X = { e }\nrel m : X -> X { e -> e ; e -> e }").unwrap_err();
        assert!(e.message.contains("duplicate pair"));

        let e = load("set X = { e, e }").unwrap_err();
        assert!(e.message.contains("twice"));
    }

    #[test]
    fn groupoid_maps_must_be_total() {
        let e = load(
            "set O = { x }\nset A = { a }\ngroupoid G { objects = O arrows = A s { a -> x } t { } unit { x -> a } inv { a -> a } comp { (a, a) -> a } }",
        )
        .unwrap_err();
        assert!(e.message.contains("t has no entry for a"), "{e}");
    }

    #[test]
    fn mistyped_multiplication() {
        let e = load("set X = { e }\nrel m : X -> X { e -> e }\nfrob F { carrier = X mult = m }").unwrap_err();
        assert_eq!(e.loc.line, 3);
    }
}
