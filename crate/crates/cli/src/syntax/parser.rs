use super::lexer::{lex, Tok};
use super::{Block, BlockKind, Decl, Diagnostic, Entry, Field, FieldShape, FieldValue, Loc, Name, StructureFile, Term};

/// Parses a structure file. Only the grammar is checked here; names and
/// labels are resolved by [`crate::resolve`].
pub fn parse(text: &str) -> Result<StructureFile, Diagnostic> {
    let toks = lex(text)?;
    let end = toks.last().map_or(Loc { line: 1, col: 1 }, |(_, l)| *l);
    let mut p = Parser { toks, pos: 0, end };
    let mut decls = Vec::new();
    while !p.at_end() {
        decls.push(p.decl()?);
    }
    Ok(StructureFile { decls })
}

struct Parser {
    toks: Vec<(Tok, Loc)>,
    pos: usize,
    end: Loc,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn loc(&self) -> Loc {
        self.toks.get(self.pos).map_or(self.end, |(_, l)| *l)
    }

    fn unexpected(&self, wanted: &str) -> Diagnostic {
        let found = match self.peek() {
            Some(t) => t.describe(),
            None => "end of file".into(),
        };
        Diagnostic::error(self.loc(), format!("expected {wanted}, found {found}"))
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), Diagnostic> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn word(&mut self, what: &str) -> Result<Name, Diagnostic> {
        match self.toks.get(self.pos) {
            Some((Tok::Word(w), loc)) => {
                let name = Name {
                    text: w.clone(),
                    loc: *loc,
                };
                self.pos += 1;
                Ok(name)
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), Diagnostic> {
        if self.peek() == Some(&Tok::Word(kw.into())) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{kw}'")))
        }
    }

    fn separators(&mut self) {
        while self.eat(&Tok::Comma) || self.eat(&Tok::Semi) {}
    }

    /// Words up to `close`, optionally separated.
    fn words_until(&mut self, close: Tok, what: &str) -> Result<Vec<Name>, Diagnostic> {
        let mut out = Vec::new();
        loop {
            self.separators();
            if self.eat(&close) {
                return Ok(out);
            }
            out.push(self.word(what)?);
        }
    }

    fn decl(&mut self) -> Result<Decl, Diagnostic> {
        let kw = self.word("a declaration keyword")?;
        match kw.text.as_str() {
            "set" => {
                let name = self.word("a set name")?;
                self.expect(Tok::Eq)?;
                self.expect(Tok::LBrace)?;
                let labels = self.words_until(Tok::RBrace, "a label")?;
                Ok(Decl::Set { name, labels })
            }
            "rel" => {
                let name = self.word("a relation name")?;
                self.expect(Tok::Colon)?;
                let source = self.product()?;
                self.expect(Tok::Arrow)?;
                let target = self.product()?;
                self.expect(Tok::LBrace)?;
                let entries = self.entries()?;
                Ok(Decl::Rel {
                    name,
                    source,
                    target,
                    entries,
                })
            }
            "subset" => {
                let name = self.word("a subset name")?;
                self.keyword("of")?;
                let of = self.word("a set name")?;
                self.expect(Tok::Eq)?;
                self.expect(Tok::LBrace)?;
                let labels = self.words_until(Tok::RBrace, "a label")?;
                Ok(Decl::Subset { name, of, labels })
            }
            other => match BlockKind::from_keyword(other) {
                Some(kind) => self.block(kind, kw.loc).map(Decl::Block),
                None => Err(Diagnostic::error(kw.loc, format!("unknown declaration '{other}'"))),
            },
        }
    }

    /// `S1 * S2 * …`, or `pt` for the empty product.
    fn product(&mut self) -> Result<Vec<Name>, Diagnostic> {
        let first = self.word("a set name or 'pt'")?;
        if first.text == "pt" {
            return Ok(Vec::new());
        }
        let mut out = vec![first];
        while self.eat(&Tok::Star) {
            out.push(self.word("a set name")?);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Term, Diagnostic> {
        if self.eat(&Tok::LParen) {
            let mut items = Vec::new();
            if !self.eat(&Tok::RParen) {
                loop {
                    items.push(self.word("a label")?);
                    if self.eat(&Tok::RParen) {
                        break;
                    }
                    self.expect(Tok::Comma)?;
                }
            }
            Ok(Term::Tuple(items))
        } else if self.eat(&Tok::LBrace) {
            Ok(Term::Set(self.words_until(Tok::RBrace, "a label")?))
        } else {
            Ok(Term::Label(self.word("a label, '(' or '{'")?))
        }
    }

    /// `from -> to` entries up to the closing brace.
    fn entries(&mut self) -> Result<Vec<Entry>, Diagnostic> {
        let mut out = Vec::new();
        loop {
            self.separators();
            if self.eat(&Tok::RBrace) {
                return Ok(out);
            }
            let loc = self.loc();
            let from = self.term()?;
            self.expect(Tok::Arrow)?;
            let to = self.term()?;
            out.push(Entry { from, to, loc });
        }
    }

    fn block(&mut self, kind: BlockKind, loc: Loc) -> Result<Block, Diagnostic> {
        let name = self.word(&format!("a {kind} name"))?;
        self.expect(Tok::LBrace)?;
        let specs = kind.fields();
        let mut found: Vec<Option<Field>> = vec![None; specs.len()];
        loop {
            self.separators();
            if self.eat(&Tok::RBrace) {
                break;
            }
            let key = self.word("a field name or '}'")?;
            let Some(i) = specs.iter().position(|(k, _, _)| *k == key.text) else {
                let known: Vec<&str> = specs.iter().map(|(k, _, _)| *k).collect();
                return Err(Diagnostic::error(
                    key.loc,
                    format!("{kind} has no field '{}' (fields: {})", key.text, known.join(", ")),
                ));
            };
            if found[i].is_some() {
                return Err(Diagnostic::error(key.loc, format!("field '{}' given twice", key.text)));
            }
            let value = match specs[i].1 {
                FieldShape::Word => {
                    self.expect(Tok::Eq)?;
                    FieldValue::Word(self.word("a name or label")?)
                }
                FieldShape::Table => {
                    self.expect(Tok::LBrace)?;
                    FieldValue::Table(self.entries()?)
                }
            };
            found[i] = Some(Field { key, value });
        }
        for (slot, (key, _, optional)) in found.iter().zip(specs) {
            if slot.is_none() && !optional {
                return Err(Diagnostic::error(
                    loc,
                    format!("{kind} {} is missing field '{key}'", name.text),
                ));
            }
        }
        Ok(Block {
            kind,
            name,
            fields: found.into_iter().flatten().collect(),
            loc,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2: &str = "\
# the two-element group
set X = { e, a }
rel m : X * X -> X {
  (e, e) -> e ; (e, a) -> a
  (a, e) -> a
  (a, a) -> e
}
frob Z2 { carrier = X  mult = m }
";

    #[test]
    fn z2_file() {
        let f = parse(Z2).unwrap();
        assert_eq!(f.decls.len(), 3);
        let Decl::Rel { source, entries, .. } = &f.decls[1] else {
            panic!("second declaration is the relation");
        };
        assert_eq!(source.len(), 2);
        assert_eq!(entries.len(), 4);
        let b = f.blocks().next().unwrap();
        assert_eq!(b.kind, BlockKind::Frob);
        assert_eq!(b.field("mult"), Some(&FieldValue::Word(Name::new("m"))));
    }

    #[test]
    fn fields_are_reordered_canonically() {
        let f = parse("frob F { mult = m carrier = X }").unwrap();
        let keys: Vec<&str> = f
            .blocks()
            .next()
            .unwrap()
            .fields
            .iter()
            .map(|f| f.key.text.as_str())
            .collect();
        assert_eq!(keys, ["carrier", "mult"]);
    }

    #[test]
    fn errors_are_located() {
        let e = parse("set X = { a }\nfrob F { carrier = X }").unwrap_err();
        assert_eq!(e.loc.line, 2);
        assert!(e.message.contains("missing field 'mult'"), "{e}");

        let e = parse("set X = { a }\nrel m : X -> X {\n  a -> }").unwrap_err();
        assert_eq!((e.loc.line, e.loc.col), (3, 8));

        let e = parse("frob F { carrier = X carrier = X mult = m }").unwrap_err();
        assert!(e.message.contains("twice"));

        let e = parse("group G { }").unwrap_err();
        assert!(e.message.contains("unknown declaration"));
    }

    #[test]
    fn point_and_subset_terms() {
        let f = parse("rel u : pt -> X { () -> e }\nhstar H { carrier = X mult = m star { {} -> {} {a} -> {a} } }")
            .unwrap();
        let Decl::Rel { source, entries, .. } = &f.decls[0] else {
            panic!()
        };
        assert!(source.is_empty());
        assert_eq!(entries[0].from, Term::Tuple(vec![]));
        let Some(FieldValue::Table(star)) = f.blocks().next().unwrap().field("star") else {
            panic!()
        };
        assert_eq!(star[1].to, Term::Set(vec![Name::new("a")]));
    }
}
