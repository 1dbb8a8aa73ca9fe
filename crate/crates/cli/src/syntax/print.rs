use std::fmt::Write;

use super::{Block, Decl, Entry, FieldValue, Name, StructureFile, Term};

/// Canonical text: one blank line between declarations, relation entries one
/// per line, other tables on a single line.
pub fn print(file: &StructureFile) -> String {
    let parts: Vec<String> = file.decls.iter().map(decl).collect();
    parts.join("\n")
}

fn join(names: &[Name], sep: &str) -> String {
    names.iter().map(|n| n.text.as_str()).collect::<Vec<_>>().join(sep)
}

fn braced(names: &[Name]) -> String {
    if names.is_empty() {
        "{ }".into()
    } else {
        format!("{{ {} }}", join(names, ", "))
    }
}

fn term(t: &Term) -> String {
    match t {
        Term::Label(n) => n.text.clone(),
        Term::Tuple(v) => format!("({})", join(v, ", ")),
        Term::Set(v) => format!("{{{}}}", join(v, ", ")),
    }
}

fn entry(e: &Entry) -> String {
    format!("{} -> {}", term(&e.from), term(&e.to))
}

fn product(v: &[Name]) -> String {
    if v.is_empty() {
        "pt".into()
    } else {
        join(v, " * ")
    }
}

fn decl(d: &Decl) -> String {
    match d {
        Decl::Set { name, labels } => format!("set {} = {}\n", name.text, braced(labels)),
        Decl::Subset { name, of, labels } => {
            format!("subset {} of {} = {}\n", name.text, of.text, braced(labels))
        }
        Decl::Rel {
            name,
            source,
            target,
            entries,
        } => {
            let head = format!("rel {} : {} -> {}", name.text, product(source), product(target));
            if entries.is_empty() {
                return format!("{head} {{ }}\n");
            }
            let mut s = format!("{head} {{\n");
            for e in entries {
                let _ = writeln!(s, "  {}", entry(e));
            }
            s.push_str("}\n");
            s
        }
        Decl::Block(b) => block(b),
    }
}

fn block(b: &Block) -> String {
    let field = |f: &super::Field| match &f.value {
        FieldValue::Word(w) => format!("{} = {}", f.key.text, w.text),
        FieldValue::Table(es) if es.is_empty() => format!("{} {{ }}", f.key.text),
        FieldValue::Table(es) => {
            let items: Vec<String> = es.iter().map(entry).collect();
            format!("{} {{ {} }}", f.key.text, items.join(" ; "))
        }
    };
    let fields: Vec<String> = b.fields.iter().map(field).collect();
    let has_table = b.fields.iter().any(|f| matches!(f.value, FieldValue::Table(_)));
    if has_table {
        let mut s = format!("{} {} {{\n", b.kind, b.name.text);
        for f in fields {
            let _ = writeln!(s, "  {f}");
        }
        s.push_str("}\n");
        s
    } else {
        format!("{} {} {{ {} }}\n", b.kind, b.name.text, fields.join("  "))
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    const CANONICAL: &str = "\
set X = { e, a }

subset U of X = { e }

rel m : X * X -> X {
  (e, e) -> e
  (a, a) -> e
}

rel u : pt -> X { }

frob Z { carrier = X  mult = m }

hstar H {
  carrier = X
  mult = m
  star { {} -> {} ; {e, a} -> {e, a} }
}
";

    #[test]
    fn canonical_text_is_a_fixed_point() {
        let f = parse(CANONICAL).unwrap();
        assert_eq!(print(&f), CANONICAL);
        assert_eq!(parse(&print(&f)).unwrap(), f);
    }

    #[test]
    fn messy_input_normalises() {
        let f = parse("set X={e,a}  # two\nfrob Z{mult=m;carrier=X}").unwrap();
        assert_eq!(print(&f), "set X = { e, a }\n\nfrob Z { carrier = X  mult = m }\n");
    }
}
