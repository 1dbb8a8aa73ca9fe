//! Core structures back to file syntax.

use relcat_core::frobenius::{FrobCandidate, HStarCandidate};
use relcat_core::groupoid::{Groupoid, Semigroupoid};
use relcat_core::relcore::{Carrier, FinSet, PtSubset, Rel};
use relcat_core::weakmonoid::{CyclicCandidate, FiniteMonoid, WeakMonoidCandidate, WeakStarCandidate};

use crate::resolve::Structure;
use crate::syntax::{Block, BlockKind, Decl, Entry, Field, FieldValue, Loc, Name, StructureFile, Term};

fn names<'a>(it: impl IntoIterator<Item = &'a str>) -> Vec<Name> {
    it.into_iter().map(Name::new).collect()
}

pub fn set_decl(s: &FinSet) -> Decl {
    Decl::Set {
        name: Name::new(s.name()),
        labels: names(s.labels().iter().map(String::as_str)),
    }
}

fn subset_decl(name: &str, s: &PtSubset) -> Decl {
    Decl::Subset {
        name: Name::new(name),
        of: Name::new(s.carrier().name()),
        labels: names(s.labels()),
    }
}

fn element(c: &Carrier, i: usize) -> Term {
    let ls = c.labels_of(i);
    if ls.len() == 1 {
        Term::Label(Name::new(ls[0]))
    } else {
        Term::Tuple(names(ls))
    }
}

fn entry(from: Term, to: Term) -> Entry {
    Entry {
        from,
        to,
        loc: Loc::default(),
    }
}

pub fn rel_decl(name: &str, r: &Rel) -> Decl {
    let factors = |c: &Carrier| names(c.factors().iter().map(|f| f.name()));
    Decl::Rel {
        name: Name::new(name),
        source: factors(r.source()),
        target: factors(r.target()),
        entries: r
            .pairs()
            .map(|(a, b)| entry(element(r.source(), a), element(r.target(), b)))
            .collect(),
    }
}

fn word(key: &str, value: &str) -> Field {
    Field {
        key: Name::new(key),
        value: FieldValue::Word(Name::new(value)),
    }
}

fn table(key: &str, entries: Vec<Entry>) -> Field {
    Field {
        key: Name::new(key),
        value: FieldValue::Table(entries),
    }
}

fn block(kind: BlockKind, name: &str, fields: Vec<Field>) -> Decl {
    Decl::Block(Block {
        kind,
        name: Name::new(name),
        fields,
        loc: Loc::default(),
    })
}

fn label(s: &FinSet, i: usize) -> Term {
    Term::Label(Name::new(s.label(i)))
}

fn map_entries(from: &FinSet, to: &FinSet, map: &[usize]) -> Vec<Entry> {
    map.iter()
        .enumerate()
        .map(|(i, &v)| entry(label(from, i), label(to, v)))
        .collect()
}

fn comp_entries(arrows: &FinSet, comp: &[Option<usize>]) -> Vec<Entry> {
    let n = arrows.len();
    comp.iter()
        .enumerate()
        .filter_map(|(i, v)| {
            let v = (*v)?;
            let pair = Term::Tuple(names([arrows.label(i / n), arrows.label(i % n)]));
            Some(entry(pair, label(arrows, v)))
        })
        .collect()
}

pub fn frob(name: &str, c: &FrobCandidate) -> StructureFile {
    let m = format!("{name}_m");
    StructureFile {
        decls: vec![
            set_decl(c.carrier()),
            rel_decl(&m, c.mult_rel()),
            block(
                BlockKind::Frob,
                name,
                vec![word("carrier", c.carrier().name()), word("mult", &m)],
            ),
        ],
    }
}

pub fn hstar(name: &str, c: &HStarCandidate) -> StructureFile {
    let m = format!("{name}_m");
    let mut fields = vec![word("carrier", c.carrier().name()), word("mult", &m)];
    if let Some(star) = c.star_map() {
        let x = c.carrier();
        let subset = |m: &[usize]| Term::Set(names(m.iter().map(|&i| x.label(i))));
        fields.push(table(
            "star",
            star.entries().map(|(a, b)| entry(subset(a), subset(b))).collect(),
        ));
    }
    StructureFile {
        decls: vec![
            set_decl(c.carrier()),
            rel_decl(&m, c.mult_rel()),
            block(BlockKind::HStar, name, fields),
        ],
    }
}

fn arrow_fields(sg: &Semigroupoid) -> (Vec<Field>, Field) {
    let (o, a) = (sg.objects(), sg.arrows());
    let head = vec![
        word("objects", o.name()),
        word("arrows", a.name()),
        table("s", map_entries(a, o, sg.sources())),
        table("t", map_entries(a, o, sg.targets())),
    ];
    (head, table("comp", comp_entries(a, sg.comp_table())))
}

pub fn groupoid(name: &str, g: &Groupoid) -> StructureFile {
    let (mut fields, comp) = arrow_fields(g.base());
    fields.push(table("unit", map_entries(g.objects(), g.arrows(), g.units())));
    fields.push(table("inv", map_entries(g.arrows(), g.arrows(), g.inverses())));
    fields.push(comp);
    StructureFile {
        decls: vec![
            set_decl(g.objects()),
            set_decl(g.arrows()),
            block(BlockKind::Groupoid, name, fields),
        ],
    }
}

pub fn sgpd(name: &str, sg: &Semigroupoid) -> StructureFile {
    let (mut fields, comp) = arrow_fields(sg);
    fields.push(comp);
    StructureFile {
        decls: vec![
            set_decl(sg.objects()),
            set_decl(sg.arrows()),
            block(BlockKind::Sgpd, name, fields),
        ],
    }
}

pub fn monoid(name: &str, m: &FiniteMonoid) -> StructureFile {
    let x = m.carrier();
    let comp: Vec<Option<usize>> = m.table().iter().map(|&v| Some(v)).collect();
    StructureFile {
        decls: vec![
            set_decl(x),
            block(
                BlockKind::Monoid,
                name,
                vec![
                    word("carrier", x.name()),
                    word("one", x.label(m.one())),
                    table("op", comp_entries(x, &comp)),
                ],
            ),
        ],
    }
}

pub fn weak(name: &str, w: &WeakMonoidCandidate) -> StructureFile {
    let (l1, l3) = (format!("{name}_L1"), format!("{name}_L3"));
    StructureFile {
        decls: vec![
            set_decl(w.carrier()),
            subset_decl(&l1, w.l1()),
            rel_decl(&l3, w.l3()),
            block(
                BlockKind::Weak,
                name,
                vec![word("carrier", w.carrier().name()), word("L1", &l1), word("L3", &l3)],
            ),
        ],
    }
}

pub fn weak_star(name: &str, w: &WeakStarCandidate) -> StructureFile {
    let (psi, l3) = (format!("{name}_psi"), format!("{name}_L3"));
    StructureFile {
        decls: vec![
            set_decl(w.carrier()),
            rel_decl(&psi, w.psi()),
            rel_decl(&l3, w.l3()),
            block(
                BlockKind::WeakStar,
                name,
                vec![word("carrier", w.carrier().name()), word("psi", &psi), word("L3", &l3)],
            ),
        ],
    }
}

pub fn cyclic(name: &str, w: &CyclicCandidate) -> StructureFile {
    let (psi, l) = (format!("{name}_psi"), format!("{name}_L"));
    StructureFile {
        decls: vec![
            set_decl(w.carrier()),
            rel_decl(&psi, w.psi()),
            rel_decl(&l, w.l()),
            block(
                BlockKind::Cyclic,
                name,
                vec![word("carrier", w.carrier().name()), word("psi", &psi), word("L", &l)],
            ),
        ],
    }
}

pub fn structure(name: &str, s: &Structure) -> StructureFile {
    match s {
        Structure::Frob(c) => frob(name, c),
        Structure::HStar(c) => hstar(name, c),
        Structure::Groupoid(g) => groupoid(name, g),
        Structure::Sgpd(g) => sgpd(name, g),
        Structure::Monoid(m) => monoid(name, m),
        Structure::Weak(w) => weak(name, w),
        Structure::WeakStar(w) => weak_star(name, w),
        Structure::Cyclic(w) => cyclic(name, w),
    }
}

/// Concatenates files, keeping one copy of each identical declaration.
/// Fails on two different declarations with the same name.
pub fn merge(files: impl IntoIterator<Item = StructureFile>) -> Result<StructureFile, String> {
    let mut out = StructureFile::default();
    for f in files {
        for d in f.decls {
            match out.decls.iter().find(|e| e.name().text == d.name().text) {
                Some(e) if *e == d => {}
                Some(_) => return Err(format!("two different declarations named '{}'", d.name().text)),
                None => out.decls.push(d),
            }
        }
    }
    Ok(out)
}
